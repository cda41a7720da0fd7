#pragma once

#include <vector>

#include "geomqm/states.hpp"

namespace geomqm {

// Representation of the full matrix algebra on the Hilbert space a density
// state induces through <a|b> = Tr(rho a†b): Gram matrix over the matrix-unit
// basis, null space (the ideal of norm-zero elements), and the dimension of
// the quotient.

struct GnsResult {
  /// gram[(i,j),(k,l)] = Tr(rho E_ij† E_kl), matrix units indexed row-major.
  Matrix gram;
  Eigen::Index ideal_dim;
  Eigen::Index hilbert_dim;
  /// Row-major matrix-unit indices of a maximal subset that stays linearly
  /// independent modulo the ideal; size hilbert_dim, ascending.
  std::vector<Eigen::Index> quotient_basis;
};

/// Eigenvalues of gram below kGnsIdealRelTol times the largest eigenvalue
/// count as null directions. hilbert_dim equals N times the rank of rho.
GnsResult gns_construct(const DensityState& rho);

}  // namespace geomqm
