#include "geomqm/linalg.hpp"

#include <algorithm>

namespace geomqm {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

HermitianOperator::HermitianOperator(Matrix m, double tol)
    : matrix(std::move(m)), hermiticity_tol(tol) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("HermitianOperator: matrix must be square");
  if (!matrix.allFinite())
    throw std::invalid_argument("HermitianOperator: non-finite entries");
  if (!is_hermitian(matrix, hermiticity_tol))
    throw std::invalid_argument("HermitianOperator: not Hermitian within tolerance");
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: dimension mismatch");
  return a * b;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b,
                     Subsystem keep) {
  const Eigen::Index n = dim_a * dim_b;
  if (dim_a < 1 || dim_b < 1 || m.rows() != n || m.cols() != n)
    throw std::invalid_argument("partial_trace: size not factorizable as dim_a*dim_b");
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i)
      for (Eigen::Index j = 0; j < dim_a; ++j)
        for (Eigen::Index k = 0; k < dim_b; ++k)
          out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return out;
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Eigen::Index k = 0; k < dim_b; ++k)
    for (Eigen::Index l = 0; l < dim_b; ++l)
      for (Eigen::Index i = 0; i < dim_a; ++i)
        out(k, l) += m(i * dim_b + k, i * dim_b + l);
  return out;
}

EigResult herm_eig(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("herm_eig: eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd singular_values(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();  // Eigen returns them descending
}

double ky_fan_norm(const Matrix& m) { return singular_values(m).sum(); }

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("commutator: dimension mismatch");
  return a * b - b * a;
}

Matrix sym_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("sym_product: dimension mismatch");
  return 0.5 * (a * b + b * a);
}

const Matrix& pauli_x() {
  static const Matrix m = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  return m;
}

const Matrix& pauli_y() {
  static const Matrix m =
      (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  return m;
}

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

}  // namespace geomqm
