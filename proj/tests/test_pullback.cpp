#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geomqm/geometry.hpp"
#include "geomqm/pullback.hpp"
#include "testing.hpp"

using namespace geomqm;
namespace tt = geomqm::testing;

namespace {

PureState product_state(std::mt19937_64& rng, const BipartiteDims& dims) {
  Vector a = tt::rand_vector(rng, dims.n_a);
  Vector b = tt::rand_vector(rng, dims.n_b);
  Vector prod(dims.total());
  for (Eigen::Index i = 0; i < dims.n_a; ++i) {
    for (Eigen::Index j = 0; j < dims.n_b; ++j) {
      prod(i * dims.n_b + j) = a(i) * b(j);
    }
  }
  return PureState(prod);
}

/// The Werner-family coefficient matrix: unit diagonal, cross block
/// diag(x, -x, x), zero elsewhere.
Eigen::MatrixXd werner_sym_expected(double x) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(6, 6);
  m(0, 3) = x;
  m(3, 0) = x;
  m(1, 4) = -x;
  m(4, 1) = -x;
  m(2, 5) = x;
  m(5, 2) = x;
  return m;
}

}  // namespace

TEST_CASE("su basis: qubit case is the Pauli triple") {
  LieAlgebraRep rep = su_basis(2);
  REQUIRE(rep.size() == 3);
  CHECK(max_abs(rep.generators()[0].matrix - pauli_x()) == 0.0);
  CHECK(max_abs(rep.generators()[1].matrix - pauli_y()) == 0.0);
  CHECK(max_abs(rep.generators()[2].matrix - pauli_z()) == 0.0);
  CHECK_FALSE(rep.partition().has_value());
}

TEST_CASE("su basis: orthonormality and tracelessness") {
  for (Eigen::Index n : {2, 3, 4}) {
    LieAlgebraRep rep = su_basis(n);
    REQUIRE(rep.size() == n * n - 1);
    for (Eigen::Index j = 0; j < rep.size(); ++j) {
      const Matrix& lj = rep.generators()[j].matrix;
      CHECK(std::abs(lj.trace()) <= 1e-14);
      for (Eigen::Index k = 0; k < rep.size(); ++k) {
        Complex inner = (lj * rep.generators()[k].matrix).trace();
        double expected = j == k ? 2.0 : 0.0;
        CHECK(std::abs(inner - Complex(expected, 0)) <= 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(su_basis(1), std::invalid_argument);
}

TEST_CASE("local product representation layout") {
  BipartiteDims dims(2, 2);
  LieAlgebraRep rep = local_product_rep(dims);
  REQUIRE(rep.size() == 6);
  REQUIRE(rep.partition().has_value());
  const GeneratorPartition& part = *rep.partition();
  CHECK(part.a_indices == std::vector<Eigen::Index>{0, 1, 2});
  CHECK(part.b_indices == std::vector<Eigen::Index>{3, 4, 5});

  LieAlgebraRep local = su_basis(2);
  for (Eigen::Index j = 0; j < 3; ++j) {
    CHECK(max_abs(rep.generators()[j].matrix -
                  kron(local.generators()[j].matrix, identity(2))) == 0.0);
    CHECK(max_abs(rep.generators()[j + 3].matrix -
                  kron(identity(2), local.generators()[j].matrix)) == 0.0);
    CHECK(rep.labels()[j].rfind("A.", 0) == 0);
    CHECK(rep.labels()[j + 3].rfind("B.", 0) == 0);
  }

  // A-local and B-local generators commute pairwise.
  for (Eigen::Index j : part.a_indices) {
    for (Eigen::Index k : part.b_indices) {
      CHECK(max_abs(commutator(rep.generators()[j].matrix,
                               rep.generators()[k].matrix)) <= 1e-14);
    }
  }

  LieAlgebraRep qutrit = local_product_rep(BipartiteDims(3, 3));
  CHECK(qutrit.size() == 16);
  CHECK(qutrit.dim() == 9);
}

TEST_CASE("representation validation rejects mislabeled locality") {
  // sigma_x ⊗ sigma_x smuggled in as an "A-local" generator.
  std::vector<HermitianOperator> gens = {
      HermitianOperator(kron(pauli_x(), pauli_x())),
      HermitianOperator(kron(identity(2), pauli_z()))};
  GeneratorPartition part{{0}, {1}, BipartiteDims(2, 2)};
  CHECK_THROWS_AS(LieAlgebraRep(gens, {"A.x", "B.z"}, part), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebraRep({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebraRep(gens, {"only-one"}), std::invalid_argument);
}

TEST_CASE("pure pullback: structure of the stored matrices") {
  auto rng = tt::make_rng(401);
  LieAlgebraRep rep = local_product_rep(BipartiteDims(2, 2));
  for (int r = 0; r < 5; ++r) {
    CoefficientMatrix c = pure_pullback(tt::rand_state(rng, 4), rep);
    for (Eigen::Index j = 0; j < 6; ++j) {
      CHECK(c.antisym(j, j) == 0.0);
      for (Eigen::Index k = 0; k < 6; ++k) {
        CHECK(c.sym(j, k) == c.sym(k, j));          // exact, by construction
        CHECK(c.antisym(j, k) == -c.antisym(k, j));  // exact, by construction
      }
    }
  }
  CHECK_THROWS_AS(pure_pullback(tt::rand_state(rng, 3), rep), std::invalid_argument);
}

TEST_CASE("pure pullback agrees with the ray tensors entrywise") {
  auto rng = tt::make_rng(402);
  LieAlgebraRep rep = su_basis(3);
  PureState psi = tt::rand_state(rng, 3);
  CoefficientMatrix c = pure_pullback(psi, rep);
  for (Eigen::Index j = 0; j < rep.size(); ++j) {
    for (Eigen::Index k = 0; k < rep.size(); ++k) {
      double sym = ray_symmetric(rep.generators()[j], rep.generators()[k], psi);
      double anti = -ray_poisson(rep.generators()[j], rep.generators()[k], psi);
      CHECK(std::abs(c.sym(j, k) - sym) <= 1e-12);
      CHECK(std::abs(c.antisym(j, k) - anti) <= 1e-12);
    }
  }
}

TEST_CASE("pure pullback: basis state, product state, Bell state") {
  // |0> with the su(2) basis: unit covariances in x and y, none in z.
  CoefficientMatrix up = pure_pullback(PureState(Vector(Vector::Unit(2, 0))), su_basis(2));
  Eigen::MatrixXd sym_expect = Eigen::Vector3d(1, 1, 0).asDiagonal();
  CHECK(max_abs(Matrix(up.sym.cast<Complex>()) - Matrix(sym_expect.cast<Complex>())) <= 1e-14);
  Eigen::MatrixXd anti_expect = Eigen::MatrixXd::Zero(3, 3);
  anti_expect(0, 1) = 2.0;
  anti_expect(1, 0) = -2.0;
  CHECK(max_abs(Matrix(up.antisym.cast<Complex>()) - Matrix(anti_expect.cast<Complex>())) <= 1e-14);

  BipartiteDims dims(2, 2);
  LieAlgebraRep rep = local_product_rep(dims);

  // Product states have no cross-block covariance.
  auto rng = tt::make_rng(403);
  for (int r = 0; r < 5; ++r) {
    CoefficientMatrix c = pure_pullback(product_state(rng, dims), rep);
    BlockSplit sym = block_decompose(c.sym, *c.partition);
    CHECK(sym.ab.cwiseAbs().maxCoeff() <= 1e-13);
  }

  // The Bell state kills the antisymmetric tensor entirely.
  CoefficientMatrix bell = pure_pullback(bell_phi_plus(), rep);
  CHECK(bell.antisym.cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("mixed tensor: Werner family, maximally mixed, pure-state relation") {
  LieAlgebraRep rep = local_product_rep(BipartiteDims(2, 2));

  for (double x : {0.0, 0.3, 1.0}) {
    CoefficientMatrix c = mixed_tensor(werner(x), rep);
    CHECK((c.sym - werner_sym_expected(x)).cwiseAbs().maxCoeff() <= 1e-12);
  }

  CoefficientMatrix mm = mixed_tensor(DensityState(max_mixed(4).matrix()), rep);
  CHECK((mm.sym - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK(mm.antisym.cwiseAbs().maxCoeff() <= 1e-13);

  // On a projector the mixed tensor differs from the pure pullback exactly by
  // the first-moment outer product; the antisymmetric parts coincide.
  auto rng = tt::make_rng(404);
  PureState psi = tt::rand_state(rng, 4);
  CoefficientMatrix pure = pure_pullback(psi, rep);
  CoefficientMatrix mixed = mixed_tensor(projector(psi), rep);
  RealifiedPoint p = RealifiedPoint::from_state(psi);
  Eigen::VectorXd first(rep.size());
  for (Eigen::Index j = 0; j < rep.size(); ++j) {
    first(j) = eval_expectation(ExpectationFunction{rep.generators()[j]}, p);
  }
  Eigen::MatrixXd shifted = pure.sym + first * first.transpose();
  CHECK((mixed.sym - shifted).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((mixed.antisym - pure.antisym).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("block decomposition: Werner cross block and reassembly") {
  LieAlgebraRep rep = local_product_rep(BipartiteDims(2, 2));
  CoefficientMatrix c = mixed_tensor(werner(0.7), rep);
  CoefficientBlocks blocks = block_decompose(c);

  Eigen::MatrixXd expected = Eigen::Vector3d(0.7, -0.7, 0.7).asDiagonal();
  CHECK((blocks.sym.ab - expected).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((blocks.sym.a - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((blocks.sym.b - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);

  // Every entry of the full matrix is reachable through exactly one block.
  const GeneratorPartition& part = *c.partition;
  for (std::size_t ia = 0; ia < part.a_indices.size(); ++ia) {
    for (std::size_t ja = 0; ja < part.a_indices.size(); ++ja) {
      CHECK(blocks.sym.a(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ja)) ==
            c.sym(part.a_indices[ia], part.a_indices[ja]));
    }
    for (std::size_t jb = 0; jb < part.b_indices.size(); ++jb) {
      CHECK(blocks.sym.ab(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(jb)) ==
            c.sym(part.a_indices[ia], part.b_indices[jb]));
    }
  }
  for (std::size_t ib = 0; ib < part.b_indices.size(); ++ib) {
    for (std::size_t jb = 0; jb < part.b_indices.size(); ++jb) {
      CHECK(blocks.sym.b(static_cast<Eigen::Index>(ib), static_cast<Eigen::Index>(jb)) ==
            c.sym(part.b_indices[ib], part.b_indices[jb]));
    }
  }

  // No partition metadata: nothing to decompose.
  CoefficientMatrix bare = pure_pullback(PureState(Vector(Vector::Unit(2, 0))), su_basis(2));
  CHECK_THROWS_AS(block_decompose(bare), std::invalid_argument);
}

TEST_CASE("pure separability: canonical states and Schmidt-rank agreement") {
  BipartiteDims dims22(2, 2);

  SeparabilityReport basis = separability_pure(PureState(Vector(Vector::Unit(4, 0))), dims22);
  CHECK(basis.verdict == Verdict::Separable);
  REQUIRE(basis.schmidt_rank.has_value());
  CHECK(*basis.schmidt_rank == 1);
  CHECK(basis.statistic <= basis.bound);

  SeparabilityReport bell = separability_pure(bell_phi_plus(), dims22);
  CHECK(bell.verdict == Verdict::Entangled);
  CHECK(*bell.schmidt_rank == 2);
  CHECK(bell.statistic > 0.1);

  auto rng = tt::make_rng(405);
  int checked = 0;
  for (const BipartiteDims& dims : {BipartiteDims(2, 2), BipartiteDims(3, 3)}) {
    int count = dims.n_a == 2 ? 50 : 25;
    for (int r = 0; r < count; ++r) {
      PureState psi = (r % 2 == 0) ? product_state(rng, dims)
                                   : tt::rand_state(rng, dims.total());
      SeparabilityReport rep = separability_pure(psi, dims);
      int rank = schmidt(psi, dims).rank;
      CHECK(rep.verdict == (rank == 1 ? Verdict::Separable : Verdict::Entangled));
      CHECK(*rep.schmidt_rank == rank);
      ++checked;
    }
  }
  CHECK(checked == 75);
}

TEST_CASE("cross-block singular values are local-unitary invariant") {
  auto rng = tt::make_rng(406);
  BipartiteDims dims(2, 2);
  LieAlgebraRep rep = local_product_rep(dims);
  for (int r = 0; r < 5; ++r) {
    PureState psi = tt::rand_state(rng, 4);
    Matrix u = kron(tt::rand_unitary(rng, 2), tt::rand_unitary(rng, 2));
    PureState rotated(Vector(u * psi.amplitudes));

    BlockSplit before = block_decompose(pure_pullback(psi, rep).sym, *rep.partition());
    BlockSplit after = block_decompose(pure_pullback(rotated, rep).sym, *rep.partition());
    Eigen::VectorXd sv_before = singular_values(before.ab.cast<Complex>());
    Eigen::VectorXd sv_after = singular_values(after.ab.cast<Complex>());
    CHECK((sv_before - sv_after).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("maximal entanglement detection via the antisymmetric tensor") {
  BipartiteDims dims(2, 2);

  SeparabilityReport bell = max_entanglement_pure(bell_phi_plus(), dims);
  CHECK(bell.verdict == Verdict::Entangled);
  CHECK(bell.statistic <= bell.bound);

  auto rng = tt::make_rng(407);
  for (int r = 0; r < 5; ++r) {
    Matrix u = kron(tt::rand_unitary(rng, 2), identity(2));
    PureState rotated(Vector(u * bell_phi_plus().amplitudes));
    SeparabilityReport rep = max_entanglement_pure(rotated, dims);
    CHECK(rep.verdict == Verdict::Entangled);
    CHECK(rep.statistic <= rep.bound);
  }

  SeparabilityReport basis = max_entanglement_pure(PureState(Vector(Vector::Unit(4, 0))), dims);
  CHECK(basis.verdict == Verdict::Inconclusive);
  CHECK(basis.statistic > 1e-3);

  // Entangled but not maximally: sqrt(0.9)|00> + sqrt(0.1)|11>.
  Vector skew = Vector::Zero(4);
  skew(0) = std::sqrt(0.9);
  skew(3) = std::sqrt(0.1);
  SeparabilityReport partial = max_entanglement_pure(PureState(skew), dims);
  CHECK(partial.verdict == Verdict::Inconclusive);
  CHECK(partial.statistic > 1e-3);

  CHECK_THROWS_AS(max_entanglement_pure(tt::rand_state(rng, 6), BipartiteDims(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("distance to separable: proportionality on two-qubit states") {
  BipartiteDims dims(2, 2);

  auto rng = tt::make_rng(408);
  SeparableDistance prod = distance_to_separable(product_state(rng, dims), dims);
  CHECK(prod.g_ab_sq <= 1e-13);
  CHECK(prod.r_sq <= 1e-13);
  CHECK_FALSE(prod.ratio.has_value());

  SeparableDistance bell = distance_to_separable(bell_phi_plus(), dims);
  REQUIRE(bell.ratio.has_value());
  CHECK(*bell.ratio == doctest::Approx(4.0).epsilon(1e-10));

  // Basis-expansion oracle: expand R = rho - rho_A x rho_B over the Pauli
  // product basis. Cross coefficients reproduce the cross block, the
  // identity-component coefficients vanish, and the squared norms follow.
  LieAlgebraRep local = su_basis(2);
  std::vector<Matrix> basis = {identity(2), pauli_x(), pauli_y(), pauli_z()};
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  int kept = 0;
  while (kept < 30) {
    PureState psi = tt::rand_state(rng, 4);
    SeparableDistance d = distance_to_separable(psi, dims);
    if (!d.ratio.has_value() || d.r_sq < 1e-6) {
      continue;
    }
    ++kept;

    DensityState rho = projector(psi);
    Matrix r = rho.matrix() - kron(reduced(rho, dims, Subsystem::A).matrix(),
                                   reduced(rho, dims, Subsystem::B).matrix());
    double sum_sq = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        Complex coef = (r * kron(basis[static_cast<std::size_t>(mu)],
                                 basis[static_cast<std::size_t>(nu)]))
                           .trace();
        CHECK(std::abs(coef.imag()) <= 1e-12);
        if (mu == 0 || nu == 0) {
          CHECK(std::abs(coef) <= 1e-12);  // R is partial-trace free
        } else {
          sum_sq += coef.real() * coef.real();
        }
      }
    }
    CHECK(d.g_ab_sq == doctest::Approx(sum_sq).epsilon(1e-10));
    CHECK(d.r_sq == doctest::Approx(0.25 * sum_sq).epsilon(1e-10));

    min_ratio = std::min(min_ratio, *d.ratio);
    max_ratio = std::max(max_ratio, *d.ratio);
  }
  CHECK((max_ratio - min_ratio) / max_ratio <= 1e-8);
  CHECK(max_ratio == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("mixed-state cross-block criterion") {
  BipartiteDims dims(2, 2);

  // At the boundary the statistic sits within an ulp below 1, so the exact
  // comparison against the bound still reads "separable".
  SeparabilityReport boundary = devicente_check(werner(1.0 / 3.0), dims);
  CHECK(boundary.statistic == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(boundary.statistic <= 1.0);
  CHECK(boundary.verdict == Verdict::Separable);

  CHECK(devicente_check(werner(0.33), dims).verdict == Verdict::Separable);
  CHECK(devicente_check(werner(0.34), dims).verdict == Verdict::Entangled);
  CHECK(devicente_check(werner(0.34), dims).statistic ==
        doctest::Approx(1.02).epsilon(1e-12));

  SeparabilityReport mixed = devicente_check(DensityState(max_mixed(4).matrix()), dims);
  CHECK(mixed.verdict == Verdict::Separable);
  CHECK(mixed.statistic <= 1e-13);

  for (double x : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    SeparabilityReport rep = devicente_check(werner(x), dims);
    CHECK(rep.statistic == doctest::Approx(3.0 * x).epsilon(1e-12));
    CHECK(rep.bound == 1.0);
  }

  // n > 2: within-bound statistics are inconclusive, never "separable".
  BipartiteDims dims33(3, 3);
  SeparabilityReport mm9 = devicente_check(DensityState(max_mixed(9).matrix()), dims33);
  CHECK(mm9.verdict == Verdict::Inconclusive);
  CHECK(mm9.bound == 3.0);
  auto rng = tt::make_rng(409);
  for (int r = 0; r < 5; ++r) {
    SeparabilityReport rep = devicente_check(tt::rand_density(rng, 9, 4), dims33);
    CHECK(rep.verdict != Verdict::Separable);
  }

  CHECK_THROWS_AS(devicente_check(tt::rand_density(rng, 6, 2), BipartiteDims(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("werner scan") {
  std::vector<WernerRow> rows = werner_scan({0.0, 1.0 / 3.0, 1.0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].statistic == 0.0);
  CHECK(rows[1].statistic == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rows[2].statistic == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(rows[0].verdict == Verdict::Separable);
  CHECK(rows[1].verdict == Verdict::Separable);
  CHECK(rows[2].verdict == Verdict::Entangled);

  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) {
    grid.push_back(0.1 * i);
  }
  std::vector<WernerRow> scan = werner_scan(grid);
  for (std::size_t i = 0; i < scan.size(); ++i) {
    Verdict expected = grid[i] <= 1.0 / 3.0 ? Verdict::Separable : Verdict::Entangled;
    CHECK(scan[i].verdict == expected);
  }

  CHECK(werner_scan({}).empty());
  CHECK_THROWS_AS(werner_scan({-0.1}), std::invalid_argument);
  CHECK_THROWS_AS(werner_scan({1.2}), std::invalid_argument);
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Separable) == "separable");
  CHECK(to_string(Verdict::Entangled) == "entangled");
  CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
}
