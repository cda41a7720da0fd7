#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace geomqm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default tolerances shared across modules.
inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kSchmidtRankTol = 1e-9;
inline constexpr double kZeroBlockTol = 1e-9;
inline constexpr double kGnsIdealRelTol = 1e-10;
inline constexpr double kMinStateNorm = 1e-12;

enum class Subsystem { A, B };

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kHermiticityTol);

/// Square matrix validated to satisfy ||A - A^dagger||_max <= hermiticity_tol
/// at construction.
struct HermitianOperator {
  Matrix matrix;
  double hermiticity_tol;

  explicit HermitianOperator(Matrix m, double tol = kHermiticityTol);

  Eigen::Index dim() const { return matrix.rows(); }
};

Matrix matmul(const Matrix& a, const Matrix& b);

/// (a (x) b)[(i*p + k), (j*q + l)] = a[i,j] * b[k,l] for b of shape p x q.
Matrix kron(const Matrix& a, const Matrix& b);

/// Trace over the discarded tensor factor of a (dim_a*dim_b) square matrix.
Matrix partial_trace(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b,
                     Subsystem keep);

struct EigResult {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // columns, orthonormal
};

EigResult herm_eig(const HermitianOperator& a);

Eigen::VectorXd singular_values(const Matrix& m);  // descending

/// Trace norm: sum of all singular values.
double ky_fan_norm(const Matrix& m);

Matrix commutator(const Matrix& a, const Matrix& b);

/// Symmetrized product 0.5*(ab + ba). The 1/2 normalization is used by every
/// symmetric-tensor coefficient in this library.
Matrix sym_product(const Matrix& a, const Matrix& b);

const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
Matrix identity(Eigen::Index n);

}  // namespace geomqm
