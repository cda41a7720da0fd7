#include "geomqm/geometry.hpp"

#include <stdexcept>

namespace geomqm {

namespace {

Vector to_complex(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return x.cast<Complex>() + Complex(0, 1) * y.cast<Complex>();
}

// <z|M|z> for arbitrary square M.
Complex sandwich(const Matrix& m, const Vector& z) {
  return z.dot(m * z);  // Eigen's dot conjugates the left argument.
}

}  // namespace

RealifiedPoint::RealifiedPoint(Eigen::VectorXd re, Eigen::VectorXd im)
    : x(std::move(re)), y(std::move(im)) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("realified point: mismatched component sizes");
  }
  if (x.size() == 0) {
    throw std::invalid_argument("realified point: empty");
  }
  double norm_sq = x.squaredNorm() + y.squaredNorm();
  if (!(norm_sq >= kMinStateNorm * kMinStateNorm)) {
    throw std::invalid_argument("realified point: norm below threshold");
  }
}

RealifiedPoint RealifiedPoint::from_state(const PureState& psi) {
  return RealifiedPoint(psi.amplitudes.real(), psi.amplitudes.imag());
}

PureState RealifiedPoint::to_state() const {
  return PureState(to_complex(x, y));
}

double eval_quadratic(const QuadraticFunction& f, const RealifiedPoint& p) {
  Vector z = to_complex(p.x, p.y);
  return sandwich(f.op.matrix, z).real();
}

double eval_expectation(const ExpectationFunction& e, const RealifiedPoint& p) {
  Vector z = to_complex(p.x, p.y);
  double norm_sq = z.squaredNorm();
  return sandwich(e.op.matrix, z).real() / norm_sq;
}

Gradient quadratic_gradient(const QuadraticFunction& f, const RealifiedPoint& p) {
  Vector az = f.op.matrix * to_complex(p.x, p.y);
  return Gradient{2.0 * az.real(), 2.0 * az.imag()};
}

double poisson_bracket(const QuadraticFunction& f, const QuadraticFunction& g,
                       const RealifiedPoint& p) {
  Gradient df = quadratic_gradient(f, p);
  Gradient dg = quadratic_gradient(g, p);
  return df.dy.dot(dg.dx) - df.dx.dot(dg.dy);
}

double symmetric_bracket(const QuadraticFunction& f, const QuadraticFunction& g,
                         const RealifiedPoint& p) {
  Gradient df = quadratic_gradient(f, p);
  Gradient dg = quadratic_gradient(g, p);
  return df.dx.dot(dg.dx) + df.dy.dot(dg.dy);
}

OperatorPair::OperatorPair(Matrix a, Matrix b) : re(std::move(a)), im(std::move(b)) {
  if (re.rows() != re.cols() || im.rows() != im.cols() || re.rows() != im.rows()) {
    throw std::invalid_argument("operator pair: parts must be square and same size");
  }
  if (!is_hermitian(re) || !is_hermitian(im)) {
    throw std::invalid_argument("operator pair: parts must be Hermitian");
  }
}

OperatorPair star_product(const OperatorPair& f, const OperatorPair& g) {
  Matrix prod = f.combined() * g.combined();
  Matrix re = 0.5 * (prod + prod.adjoint());
  Matrix im = Complex(0, -0.5) * (prod - prod.adjoint());
  return OperatorPair(std::move(re), std::move(im));
}

OperatorPair star_conj(const OperatorPair& f) {
  return OperatorPair(f.re, -f.im);
}

OperatorPair star_unit(Eigen::Index n) {
  return OperatorPair(identity(n), Matrix::Zero(n, n));
}

double ray_poisson(const HermitianOperator& a, const HermitianOperator& b,
                   const PureState& psi) {
  Matrix k = Complex(0, 1) * commutator(a.matrix, b.matrix);
  Complex val = psi.amplitudes.dot(k * psi.amplitudes);
  return val.real() / psi.norm_squared();
}

double ray_symmetric(const HermitianOperator& a, const HermitianOperator& b,
                     const PureState& psi) {
  double norm_sq = psi.norm_squared();
  const Vector& z = psi.amplitudes;
  double sym = z.dot(sym_product(a.matrix, b.matrix) * z).real() / norm_sq;
  double ea = z.dot(a.matrix * z).real() / norm_sq;
  double eb = z.dot(b.matrix * z).real() / norm_sq;
  return sym - ea * eb;
}

Complex ray_cstar_product(const HermitianOperator& a, const HermitianOperator& b,
                          const PureState& psi) {
  double norm_sq = psi.norm_squared();
  const Vector& z = psi.amplitudes;
  double ea = z.dot(a.matrix * z).real() / norm_sq;
  double eb = z.dot(b.matrix * z).real() / norm_sq;
  double sym = ray_symmetric(a, b, psi);
  double anti = ray_poisson(a, b, psi);
  return Complex(sym + ea * eb, -0.5 * anti);
}

}  // namespace geomqm
