#include "geomqm/states.hpp"

#include <cmath>

namespace geomqm {

PureState::PureState(Vector amps) : amplitudes(std::move(amps)) {
  if (amplitudes.size() == 0)
    throw std::invalid_argument("PureState: empty amplitude vector");
  if (!amplitudes.allFinite())
    throw std::invalid_argument("PureState: non-finite amplitudes");
  if (amplitudes.norm() < kMinStateNorm)
    throw std::invalid_argument("PureState: zero vector");
}

DensityState::DensityState(Matrix rho, double psd, double trace, double herm_tol)
    : op(std::move(rho), herm_tol), psd_tol(psd), trace_tol(trace) {
  if (std::abs(op.matrix.trace().real() - 1.0) > trace_tol ||
      std::abs(op.matrix.trace().imag()) > trace_tol)
    throw std::invalid_argument("DensityState: trace not 1 within tolerance");
  const EigResult eig = herm_eig(op);
  if (eig.values.minCoeff() < -psd_tol)
    throw std::invalid_argument("DensityState: not positive semidefinite");
}

BipartiteDims::BipartiteDims(Eigen::Index a, Eigen::Index b) : n_a(a), n_b(b) {
  if (n_a < 2 || n_b < 2)
    throw std::invalid_argument("BipartiteDims: factors must have dimension >= 2");
}

DensityState projector(const PureState& psi) {
  const Vector& z = psi.amplitudes;
  Matrix rho = z * z.adjoint() / z.squaredNorm();
  return DensityState(std::move(rho));
}

BlochDecomposition bloch_decompose(const DensityState& rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("bloch_decompose: requires a 2x2 density state");
  const Matrix& m = rho.matrix();
  BlochDecomposition out;
  out.y0 = 0.5 * m.trace().real();
  out.y[0] = 0.5 * (m * pauli_x()).trace().real();
  out.y[1] = 0.5 * (m * pauli_y()).trace().real();
  out.y[2] = 0.5 * (m * pauli_z()).trace().real();
  return out;
}

SchmidtData schmidt(const PureState& psi, const BipartiteDims& dims,
                    double rank_tol) {
  if (psi.dim() != dims.total())
    throw std::invalid_argument("schmidt: state dimension is not n_a*n_b");
  const Vector z = psi.amplitudes / psi.norm();
  Matrix amp(dims.n_a, dims.n_b);
  for (Eigen::Index i = 0; i < dims.n_a; ++i)
    for (Eigen::Index j = 0; j < dims.n_b; ++j) amp(i, j) = z(i * dims.n_b + j);
  SchmidtData out;
  out.coefficients = singular_values(amp);
  out.rank = static_cast<int>(
      (out.coefficients.array() > rank_tol).count());
  return out;
}

DensityState reduced(const DensityState& rho, const BipartiteDims& dims,
                     Subsystem keep) {
  if (rho.dim() != dims.total())
    throw std::invalid_argument("reduced: state dimension is not n_a*n_b");
  return DensityState(partial_trace(rho.matrix(), dims.n_a, dims.n_b, keep));
}

DensityState werner(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("werner: mixing parameter must lie in [0,1]");
  const Vector bell = bell_phi_plus().amplitudes;
  Matrix rho = x * (bell * bell.adjoint()) + (1.0 - x) * 0.25 * identity(4);
  return DensityState(std::move(rho));
}

PureState bell_phi_plus() {
  Vector v = Vector::Zero(4);
  v(0) = 1.0 / std::sqrt(2.0);
  v(3) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(v));
}

DensityState max_mixed(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("max_mixed: dimension must be positive");
  return DensityState(identity(n) / static_cast<double>(n));
}

}  // namespace geomqm
