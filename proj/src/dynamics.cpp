#include "geomqm/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace geomqm {

namespace {

void check_times(const std::vector<double>& times) {
  if (times.empty()) {
    throw std::invalid_argument("trajectory: empty time grid");
  }
  double prev = -0.0;
  bool first = true;
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0) {
      throw std::invalid_argument("trajectory: times must be finite and nonnegative");
    }
    if (!first && t <= prev) {
      throw std::invalid_argument("trajectory: times must be strictly increasing");
    }
    prev = t;
    first = false;
  }
}

struct RiccatiCoeffs {
  // i hbar v' = c0 + c1 v + c2 v^2, in either chart.
  Complex c0;
  Complex c1;
  Complex c2;

  Complex rhs(const Complex& v, double hbar) const {
    return (c0 + c1 * v + c2 * v * v) / Complex(0, hbar);
  }
};

RiccatiCoeffs coeffs_for(const Matrix& h, Chart chart) {
  if (chart == Chart::Xi) {
    return RiccatiCoeffs{h(0, 1), h(0, 0) - h(1, 1), -h(1, 0)};
  }
  return RiccatiCoeffs{h(1, 0), h(1, 1) - h(0, 0), -h(0, 1)};
}

Complex rk4_step(const RiccatiCoeffs& c, double hbar, const Complex& v, double h) {
  Complex k1 = c.rhs(v, hbar);
  Complex k2 = c.rhs(v + 0.5 * h * k1, hbar);
  Complex k3 = c.rhs(v + 0.5 * h * k2, hbar);
  Complex k4 = c.rhs(v + h * k3, hbar);
  return v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

HamiltonianSpec::HamiltonianSpec(HermitianOperator ham, double hb)
    : h(std::move(ham)), hbar(hb) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("hamiltonian: hbar must be positive");
  }
}

StateTrajectory schrodinger_evolve(const HamiltonianSpec& spec, const PureState& psi0,
                                   const std::vector<double>& times) {
  if (spec.h.dim() != psi0.dim()) {
    throw std::invalid_argument("schrodinger_evolve: dimension mismatch");
  }
  check_times(times);
  EigResult eig = herm_eig(spec.h);
  Vector coeffs = eig.vectors.adjoint() * psi0.amplitudes;
  StateTrajectory out;
  out.times = times;
  out.states.reserve(times.size());
  for (double t : times) {
    Vector phased(coeffs.size());
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
      phased(i) = coeffs(i) * std::exp(Complex(0, -eig.values(i) * t / spec.hbar));
    }
    out.states.emplace_back(Vector(eig.vectors * phased));
  }
  return out;
}

RiccatiTrajectory riccati_evolve(const HamiltonianSpec& spec, const RiccatiChart& x0,
                                 const std::vector<double>& times, double step,
                                 bool chart_switching) {
  if (spec.h.dim() != 2) {
    throw std::invalid_argument("riccati_evolve: 2x2 Hamiltonian required");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("riccati_evolve: step must be positive");
  }
  check_times(times);

  RiccatiTrajectory out;
  out.times = times;
  out.points.reserve(times.size());

  RiccatiChart cur = x0;
  RiccatiCoeffs coeffs = coeffs_for(spec.h.matrix, cur.chart);
  double t = 0.0;
  for (double target : times) {
    double span = target - t;
    if (span > 0.0) {
      auto n = static_cast<long>(std::ceil(span / step));
      double h = span / static_cast<double>(n);
      for (long i = 0; i < n; ++i) {
        cur.value = rk4_step(coeffs, spec.hbar, cur.value, h);
        if (!std::isfinite(cur.value.real()) || !std::isfinite(cur.value.imag())) {
          throw std::runtime_error("riccati_evolve: flow left the chart");
        }
        if (chart_switching && std::abs(cur.value) > kChartSwitchThreshold) {
          cur.value = 1.0 / cur.value;
          cur.chart = cur.chart == Chart::Xi ? Chart::Eta : Chart::Xi;
          coeffs = coeffs_for(spec.h.matrix, cur.chart);
        }
      }
      t = target;
    }
    out.points.push_back(cur);
  }
  return out;
}

RiccatiChart project_to_chart(const PureState& psi) {
  if (psi.dim() != 2) {
    throw std::invalid_argument("project_to_chart: 2-level state required");
  }
  Complex z1 = psi.amplitudes(0);
  Complex z2 = psi.amplitudes(1);
  if (std::abs(z2) >= std::abs(z1) / kChartSwitchThreshold) {
    return RiccatiChart{Chart::Xi, z1 / z2};
  }
  return RiccatiChart{Chart::Eta, z2 / z1};
}

Eigen::Vector3d bloch_point(const PureState& psi) {
  if (psi.dim() != 2) {
    throw std::invalid_argument("bloch_point: 2-level state required");
  }
  BlochDecomposition d = bloch_decompose(projector(psi));
  return 2.0 * d.y;
}

Eigen::Vector3d bloch_point(const RiccatiChart& x) {
  Vector z(2);
  if (x.chart == Chart::Xi) {
    z << x.value, Complex(1, 0);
  } else {
    z << Complex(1, 0), x.value;
  }
  return bloch_point(PureState(std::move(z)));
}

double chordal_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  return (p - q).norm();
}

double chordal_distance(const RiccatiChart& x, const PureState& psi) {
  return chordal_distance(bloch_point(x), bloch_point(psi));
}

double consistency_check(const HamiltonianSpec& spec, const PureState& psi0,
                         const std::vector<double>& times, double step) {
  StateTrajectory exact = schrodinger_evolve(spec, psi0, times);
  RiccatiTrajectory approx =
      riccati_evolve(spec, project_to_chart(psi0), times, step);
  double worst = 0.0;
  for (size_t i = 0; i < times.size(); ++i) {
    worst = std::max(worst, chordal_distance(approx.points[i], exact.states[i]));
  }
  return worst;
}

}  // namespace geomqm
