#pragma once

#include "geomqm/linalg.hpp"

namespace geomqm {

/// Nonzero ket vector. Not necessarily normalized; every ray-level quantity
/// in this library divides by <psi|psi> itself.
struct PureState {
  Vector amplitudes;

  explicit PureState(Vector amps);

  Eigen::Index dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
  double norm_squared() const { return amplitudes.squaredNorm(); }
  PureState normalized() const { return PureState(amplitudes / norm()); }
};

/// Positive unit-trace operator, validated at construction (Hermitian within
/// herm_tol, eigenvalues >= -psd_tol, |Tr - 1| <= trace_tol). States failing
/// PSD by more than psd_tol are rejected, not clipped.
struct DensityState {
  HermitianOperator op;
  double psd_tol;
  double trace_tol;

  explicit DensityState(Matrix rho, double psd = kPsdTol, double trace = kTraceTol,
                        double herm_tol = kHermiticityTol);

  const Matrix& matrix() const { return op.matrix; }
  Eigen::Index dim() const { return op.dim(); }
};

struct BipartiteDims {
  Eigen::Index n_a;
  Eigen::Index n_b;

  BipartiteDims(Eigen::Index a, Eigen::Index b);

  Eigen::Index total() const { return n_a * n_b; }
};

struct SchmidtData {
  Eigen::VectorXd coefficients;  // descending, all min(n_a, n_b) of them
  int rank;                      // number of coefficients > rank_tol
};

DensityState projector(const PureState& psi);

/// rho = Y0*I + Y.sigma for a qubit state; Y_k = 0.5*Tr(rho sigma_k).
struct BlochDecomposition {
  double y0;
  Eigen::Vector3d y;
};

BlochDecomposition bloch_decompose(const DensityState& rho);

/// Singular values of the n_a x n_b amplitude matrix of psi/||psi||,
/// amplitudes ordered A-major: index = i_A*n_b + i_B.
SchmidtData schmidt(const PureState& psi, const BipartiteDims& dims,
                    double rank_tol = kSchmidtRankTol);

DensityState reduced(const DensityState& rho, const BipartiteDims& dims,
                     Subsystem keep);

/// x |phi+><phi+| + (1-x) I/4, x in [0,1].
DensityState werner(double x);

PureState bell_phi_plus();

DensityState max_mixed(Eigen::Index n);

}  // namespace geomqm
