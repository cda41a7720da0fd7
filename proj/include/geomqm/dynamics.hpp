#pragma once

#include <vector>

#include "geomqm/states.hpp"

namespace geomqm {

// Unitary evolution and its projectivized form for two-level systems. The
// homogeneous coordinate xi = z1/z2 obeys
//
//     i hbar d(xi)/dt = H12 + (H11 - H22) xi - H21 xi^2,
//
// obtained by differentiating z1/z2 along the linear flow (xi = 1 is then
// stationary for H = sigma_x, as it must be for an eigen-ray). The eta = z2/z1
// chart obeys the same equation with indices 1 and 2 swapped. Integration is
// fixed-step classic RK4 with chart switching at |value| > 2 (value -> 1/value,
// so re-entry happens below 1/2 and the charts cannot thrash).

struct HamiltonianSpec {
  HermitianOperator h;
  double hbar;

  explicit HamiltonianSpec(HermitianOperator ham, double hb = 1.0);
};

enum class Chart { Xi, Eta };

/// Xi holds z1/z2, Eta holds z2/z1.
struct RiccatiChart {
  Chart chart;
  Complex value;
};

struct StateTrajectory {
  std::vector<double> times;
  std::vector<PureState> states;
};

struct RiccatiTrajectory {
  std::vector<double> times;
  std::vector<RiccatiChart> points;
};

inline constexpr double kChartSwitchThreshold = 2.0;

/// psi(t) = exp(-iHt/hbar) psi0 through the eigendecomposition of H; exact up
/// to the eigensolver, norm preserved. Times must be strictly increasing and
/// nonnegative; psi0 sits at t = 0.
StateTrajectory schrodinger_evolve(const HamiltonianSpec& spec, const PureState& psi0,
                                   const std::vector<double>& times);

/// Fixed-step RK4 on the Riccati flow from x0 at t = 0. Each output interval
/// is covered with steps of size at most `step` (step > 0). With
/// chart_switching disabled the flow can diverge; non-finite values throw.
RiccatiTrajectory riccati_evolve(const HamiltonianSpec& spec, const RiccatiChart& x0,
                                 const std::vector<double>& times, double step,
                                 bool chart_switching = true);

/// Chart xi when |z2| >= |z1| / kChartSwitchThreshold, eta otherwise, so the
/// chosen coordinate always has modulus at most the switch threshold.
RiccatiChart project_to_chart(const PureState& psi);

/// Unit Bloch vector <sigma_x,y,z> of a 2-level state (twice the half-moment
/// vector, so pure states land on the unit sphere).
Eigen::Vector3d bloch_point(const PureState& psi);
Eigen::Vector3d bloch_point(const RiccatiChart& x);

/// Chordal distance between rays: Euclidean distance of unit Bloch vectors.
double chordal_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q);
double chordal_distance(const RiccatiChart& x, const PureState& psi);

/// Max over the time grid of the chordal distance between the RK4 Riccati
/// flow and the projected exact flow.
double consistency_check(const HamiltonianSpec& spec, const PureState& psi0,
                         const std::vector<double>& times, double step);

}  // namespace geomqm
