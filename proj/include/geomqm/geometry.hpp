#pragma once

#include "geomqm/states.hpp"

namespace geomqm {

// Kahler brackets on the realified Hilbert space and the projective-ray
// tensors evaluated on expectation-value functions.
//
// Conventions, fixed once for the whole library:
//
//  * Realification: z^j = x^j + i y^j. The quadratic function
//    f_A(psi) = <psi|A|psi> then has gradient (df/dx, df/dy) =
//    (2 Re(Az), 2 Im(Az)), and the coordinate brackets
//        {f, g} = sum_j (df/dy_j dg/dx^j - df/dx_j dg/dy^j)
//        (f, g) = sum_j (df/dx_j dg/dx^j + df/dy_j dg/dy^j)
//    evaluate on quadratic functions to
//        {f_A, f_B} = f_{2 i[A,B]}        (f_K with K = s*i[A,B], s = 2)
//        (f_A, f_B) = f_{2 (AB + BA)}.
//    The constant s = 2 is determined by the finite-difference oracle in the
//    test suite and asserted there; it is a consequence of the coordinate
//    formulas above, not a free choice.
//
//  * Ray tensors act on expectation functions e_A = <psi|A|psi>/<psi|psi>:
//        ray_poisson(A,B)   = e_{i[A,B]}
//        ray_symmetric(A,B) = 1/2 e_{AB+BA} - e_A e_B
//    Both are invariant under psi -> lambda psi.
//
//  * The ray C*-product closes on the operator product,
//        ray_cstar_product(A,B) = e_{AB}
//                               = ray_symmetric + e_A e_B
//                                 - (i/2) * ray_poisson.
//    The -i/2 coefficient on the Poisson term is forced by that closure
//    (verified against a direct e_{AB} oracle in the tests).

/// Point of the realified Hilbert space, z^j = x^j + i y^j. Never the zero
/// point.
struct RealifiedPoint {
  Eigen::VectorXd x;
  Eigen::VectorXd y;

  RealifiedPoint(Eigen::VectorXd re, Eigen::VectorXd im);

  static RealifiedPoint from_state(const PureState& psi);
  PureState to_state() const;
  Eigen::Index dim() const { return x.size(); }
};

/// f_A(psi) = <psi|A|psi>.
struct QuadraticFunction {
  HermitianOperator op;
};

/// e_A(psi) = <psi|A|psi> / <psi|psi>; well defined on rays.
struct ExpectationFunction {
  HermitianOperator op;
};

double eval_quadratic(const QuadraticFunction& f, const RealifiedPoint& p);
double eval_expectation(const ExpectationFunction& e, const RealifiedPoint& p);

/// Analytic gradient of f_A at p: (df/dx, df/dy) = (2 Re(Az), 2 Im(Az)).
struct Gradient {
  Eigen::VectorXd dx;
  Eigen::VectorXd dy;
};

Gradient quadratic_gradient(const QuadraticFunction& f, const RealifiedPoint& p);

double poisson_bracket(const QuadraticFunction& f, const QuadraticFunction& g,
                       const RealifiedPoint& p);
double symmetric_bracket(const QuadraticFunction& f, const QuadraticFunction& g,
                         const RealifiedPoint& p);

/// Complex-valued function F = f_A + i f_B, held as the Hermitian pair (A, B).
struct OperatorPair {
  Matrix re;
  Matrix im;

  OperatorPair(Matrix a, Matrix b);

  /// The operator A + iB carried by this pair.
  Matrix combined() const { return re + Complex(0, 1) * im; }
};

/// F * G = f_{(A+iB)(M+iN)}: the operator product, split back into
/// Hermitian / anti-Hermitian parts. Associative; conj(F*G) = conj(G)*conj(F).
OperatorPair star_product(const OperatorPair& f, const OperatorPair& g);

/// Complex conjugate: f_{A+iB} -> f_{A-iB}.
OperatorPair star_conj(const OperatorPair& f);

OperatorPair star_unit(Eigen::Index n);

double ray_poisson(const HermitianOperator& a, const HermitianOperator& b,
                   const PureState& psi);
double ray_symmetric(const HermitianOperator& a, const HermitianOperator& b,
                     const PureState& psi);
Complex ray_cstar_product(const HermitianOperator& a, const HermitianOperator& b,
                          const PureState& psi);

}  // namespace geomqm
