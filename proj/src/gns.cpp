#include "geomqm/gns.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>

namespace geomqm {

GnsResult gns_construct(const DensityState& rho) {
  Eigen::Index n = rho.dim();
  Eigen::Index m = n * n;
  const Matrix& r = rho.matrix();

  // gram[(i,j),(k,l)] = Tr(rho E_ji E_kl) = delta_ik rho_lj, units row-major.
  Matrix gram = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index l = 0; l < n; ++l) {
        gram(i * n + j, i * n + l) = r(l, j);
      }
    }
  }

  EigResult eig = herm_eig(HermitianOperator(gram));
  double lambda_max = eig.values(m - 1);
  double tol = kGnsIdealRelTol * lambda_max;
  Eigen::Index ideal_dim = 0;
  while (ideal_dim < m && eig.values(ideal_dim) < tol) {
    ++ideal_dim;
  }
  Eigen::Index hilbert_dim = m - ideal_dim;

  // Coordinates of the matrix-unit images in the quotient: rows
  // sqrt(lambda_i) v_i† over the non-null eigenpairs. Column pivoting picks a
  // maximal independent column subset.
  Matrix coords(hilbert_dim, m);
  for (Eigen::Index i = 0; i < hilbert_dim; ++i) {
    double lambda = eig.values(ideal_dim + i);
    coords.row(i) = std::sqrt(lambda) * eig.vectors.col(ideal_dim + i).adjoint();
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(coords);
  auto perm = qr.colsPermutation().indices();
  std::vector<Eigen::Index> basis(static_cast<size_t>(hilbert_dim));
  for (Eigen::Index i = 0; i < hilbert_dim; ++i) {
    basis[static_cast<size_t>(i)] = perm(i);
  }
  std::sort(basis.begin(), basis.end());

  return GnsResult{std::move(gram), ideal_dim, hilbert_dim, std::move(basis)};
}

}  // namespace geomqm
