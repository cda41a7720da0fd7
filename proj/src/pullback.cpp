#include "geomqm/pullback.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace geomqm {

namespace {

Matrix unit_pair_sym(Eigen::Index n, Eigen::Index j, Eigen::Index k) {
  Matrix m = Matrix::Zero(n, n);
  m(j, k) = Complex(1, 0);
  m(k, j) = Complex(1, 0);
  return m;
}

Matrix unit_pair_antisym(Eigen::Index n, Eigen::Index j, Eigen::Index k) {
  Matrix m = Matrix::Zero(n, n);
  m(j, k) = Complex(0, -1);
  m(k, j) = Complex(0, 1);
  return m;
}

Matrix unit_diag(Eigen::Index n, Eigen::Index l) {
  Matrix m = Matrix::Zero(n, n);
  double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
  for (Eigen::Index i = 0; i < l; ++i) {
    m(i, i) = Complex(scale, 0);
  }
  m(l, l) = Complex(-scale * static_cast<double>(l), 0);
  return m;
}

// R = h ⊗ 1 (or 1 ⊗ h) exactly when reconstruction from the partial trace
// over the other factor reproduces R.
bool factorizes_local(const Matrix& r, const BipartiteDims& dims, Subsystem side) {
  double scale = 1e-10 * (1.0 + max_abs(r));
  if (side == Subsystem::A) {
    Matrix h = partial_trace(r, dims.n_a, dims.n_b, Subsystem::A) /
               static_cast<double>(dims.n_b);
    return max_abs(r - kron(h, identity(dims.n_b))) <= scale;
  }
  Matrix h = partial_trace(r, dims.n_a, dims.n_b, Subsystem::B) /
             static_cast<double>(dims.n_a);
  return max_abs(r - kron(identity(dims.n_a), h)) <= scale;
}

double frob(const Eigen::MatrixXd& m) { return m.norm(); }

}  // namespace

LieAlgebraRep::LieAlgebraRep(std::vector<HermitianOperator> generators,
                             std::vector<std::string> labels,
                             std::optional<GeneratorPartition> partition)
    : gens_(std::move(generators)),
      labels_(std::move(labels)),
      partition_(std::move(partition)) {
  if (gens_.empty()) {
    throw std::invalid_argument("lie algebra rep: no generators");
  }
  if (labels_.size() != gens_.size()) {
    throw std::invalid_argument("lie algebra rep: label count mismatch");
  }
  Eigen::Index n = gens_.front().dim();
  for (const auto& g : gens_) {
    if (g.dim() != n) {
      throw std::invalid_argument("lie algebra rep: mixed generator dimensions");
    }
  }
  if (!partition_) {
    return;
  }
  const GeneratorPartition& p = *partition_;
  if (p.dims.total() != n) {
    throw std::invalid_argument("lie algebra rep: partition dims mismatch");
  }
  std::vector<char> seen(gens_.size(), 0);
  auto mark = [&](const std::vector<Eigen::Index>& idx) {
    for (Eigen::Index i : idx) {
      if (i < 0 || i >= static_cast<Eigen::Index>(gens_.size()) || seen[i]) {
        throw std::invalid_argument("lie algebra rep: bad partition index");
      }
      seen[i] = 1;
    }
  };
  mark(p.a_indices);
  mark(p.b_indices);
  if (p.a_indices.size() + p.b_indices.size() != gens_.size()) {
    throw std::invalid_argument("lie algebra rep: partition does not cover generators");
  }
  for (Eigen::Index i : p.a_indices) {
    if (!factorizes_local(gens_[i].matrix, p.dims, Subsystem::A)) {
      throw std::invalid_argument("lie algebra rep: generator not A-local");
    }
  }
  for (Eigen::Index i : p.b_indices) {
    if (!factorizes_local(gens_[i].matrix, p.dims, Subsystem::B)) {
      throw std::invalid_argument("lie algebra rep: generator not B-local");
    }
  }
}

LieAlgebraRep su_basis(Eigen::Index n) {
  if (n < 2) {
    throw std::invalid_argument("su_basis: dimension must be at least 2");
  }
  std::vector<HermitianOperator> gens;
  std::vector<std::string> labels;
  gens.reserve(n * n - 1);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      gens.emplace_back(unit_pair_sym(n, j, k));
      labels.push_back("s_" + std::to_string(j) + "_" + std::to_string(k));
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      gens.emplace_back(unit_pair_antisym(n, j, k));
      labels.push_back("a_" + std::to_string(j) + "_" + std::to_string(k));
    }
  }
  for (Eigen::Index l = 1; l < n; ++l) {
    gens.emplace_back(unit_diag(n, l));
    labels.push_back("d_" + std::to_string(l));
  }
  return LieAlgebraRep(std::move(gens), std::move(labels));
}

LieAlgebraRep local_product_rep(const BipartiteDims& dims) {
  LieAlgebraRep a = su_basis(dims.n_a);
  LieAlgebraRep b = su_basis(dims.n_b);
  std::vector<HermitianOperator> gens;
  std::vector<std::string> labels;
  GeneratorPartition part{{}, {}, dims};
  Matrix id_a = identity(dims.n_a);
  Matrix id_b = identity(dims.n_b);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    part.a_indices.push_back(static_cast<Eigen::Index>(gens.size()));
    gens.emplace_back(kron(a.generators()[i].matrix, id_b));
    labels.push_back("A." + a.labels()[i]);
  }
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    part.b_indices.push_back(static_cast<Eigen::Index>(gens.size()));
    gens.emplace_back(kron(id_a, b.generators()[i].matrix));
    labels.push_back("B." + b.labels()[i]);
  }
  return LieAlgebraRep(std::move(gens), std::move(labels), std::move(part));
}

LieAlgebraRep local_product_rep(Eigen::Index n) {
  return local_product_rep(BipartiteDims(n, n));
}

CoefficientMatrix pure_pullback(const PureState& psi, const LieAlgebraRep& rep) {
  if (psi.dim() != rep.dim()) {
    throw std::invalid_argument("pure_pullback: state/rep dimension mismatch");
  }
  Eigen::Index m = rep.size();
  double ns = psi.norm_squared();
  std::vector<Vector> rz(m);
  Eigen::VectorXd e(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    rz[j] = rep.generators()[j].matrix * psi.amplitudes;
    e(j) = psi.amplitudes.dot(rz[j]).real() / ns;
  }
  Eigen::MatrixXd sym(m, m);
  Eigen::MatrixXd antisym = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = j; k < m; ++k) {
      Complex w = rz[j].dot(rz[k]) / ns;  // <R_j R_k> in the normalized state
      sym(j, k) = w.real() - e(j) * e(k);
      sym(k, j) = sym(j, k);
      if (k > j) {
        antisym(j, k) = 2.0 * w.imag();  // <-i[R_j, R_k]>
        antisym(k, j) = -antisym(j, k);
      }
    }
  }
  return CoefficientMatrix{std::move(sym), std::move(antisym), rep.partition()};
}

CoefficientMatrix mixed_tensor(const DensityState& rho, const LieAlgebraRep& rep) {
  if (rho.dim() != rep.dim()) {
    throw std::invalid_argument("mixed_tensor: state/rep dimension mismatch");
  }
  Eigen::Index m = rep.size();
  std::vector<Matrix> rho_r(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    rho_r[j] = rho.matrix() * rep.generators()[j].matrix;
  }
  Eigen::MatrixXd sym(m, m);
  Eigen::MatrixXd antisym = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = j; k < m; ++k) {
      // Tr(rho R_j R_k); the symmetrized part is its real part.
      Complex w = (rho_r[j] * rep.generators()[k].matrix).trace();
      sym(j, k) = w.real();
      sym(k, j) = sym(j, k);
      if (k > j) {
        antisym(j, k) = 2.0 * w.imag();
        antisym(k, j) = -antisym(j, k);
      }
    }
  }
  return CoefficientMatrix{std::move(sym), std::move(antisym), rep.partition()};
}

BlockSplit block_decompose(const Eigen::MatrixXd& m, const GeneratorPartition& p) {
  Eigen::Index na = static_cast<Eigen::Index>(p.a_indices.size());
  Eigen::Index nb = static_cast<Eigen::Index>(p.b_indices.size());
  if (m.rows() != m.cols() || m.rows() != na + nb) {
    throw std::invalid_argument("block_decompose: matrix does not match partition");
  }
  BlockSplit out{Eigen::MatrixXd(na, na), Eigen::MatrixXd(nb, nb),
                 Eigen::MatrixXd(na, nb)};
  for (Eigen::Index r = 0; r < na; ++r) {
    for (Eigen::Index c = 0; c < na; ++c) {
      out.a(r, c) = m(p.a_indices[r], p.a_indices[c]);
    }
    for (Eigen::Index c = 0; c < nb; ++c) {
      out.ab(r, c) = m(p.a_indices[r], p.b_indices[c]);
    }
  }
  for (Eigen::Index r = 0; r < nb; ++r) {
    for (Eigen::Index c = 0; c < nb; ++c) {
      out.b(r, c) = m(p.b_indices[r], p.b_indices[c]);
    }
  }
  return out;
}

CoefficientBlocks block_decompose(const CoefficientMatrix& c) {
  if (!c.partition) {
    throw std::invalid_argument("block_decompose: coefficient matrix has no partition");
  }
  return CoefficientBlocks{block_decompose(c.sym, *c.partition),
                           block_decompose(c.antisym, *c.partition)};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Separable:
      return "separable";
    case Verdict::Entangled:
      return "entangled";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

BlockNorms norms_of(const BlockSplit& s) {
  return BlockNorms{frob(s.a), frob(s.b), frob(s.ab)};
}

}  // namespace

SeparabilityReport separability_pure(const PureState& psi, const BipartiteDims& dims,
                                     double zero_tol) {
  if (psi.dim() != dims.total()) {
    throw std::invalid_argument("separability_pure: state/dims mismatch");
  }
  CoefficientMatrix c = pure_pullback(psi, local_product_rep(dims));
  CoefficientBlocks blocks = block_decompose(c);
  double statistic = frob(blocks.sym.ab);
  double bound = zero_tol * (1.0 + frob(c.sym));
  SeparabilityReport report;
  report.verdict = statistic <= bound ? Verdict::Separable : Verdict::Entangled;
  report.criterion = "pure cross-block vanishing";
  report.statistic = statistic;
  report.bound = bound;
  report.sym_blocks = norms_of(blocks.sym);
  report.antisym_blocks = norms_of(blocks.antisym);
  report.schmidt_rank = schmidt(psi, dims).rank;
  return report;
}

SeparabilityReport max_entanglement_pure(const PureState& psi, const BipartiteDims& dims,
                                         double zero_tol) {
  if (dims.n_a != dims.n_b) {
    throw std::invalid_argument("max_entanglement_pure: square bipartition required");
  }
  if (psi.dim() != dims.total()) {
    throw std::invalid_argument("max_entanglement_pure: state/dims mismatch");
  }
  CoefficientMatrix c = pure_pullback(psi, local_product_rep(dims));
  CoefficientBlocks blocks = block_decompose(c);
  double statistic = frob(c.antisym);
  double bound = zero_tol * (1.0 + frob(c.sym));
  SeparabilityReport report;
  report.verdict = statistic <= bound ? Verdict::Entangled : Verdict::Inconclusive;
  report.criterion = "antisymmetric tensor vanishing (maximal entanglement)";
  report.statistic = statistic;
  report.bound = bound;
  report.sym_blocks = norms_of(blocks.sym);
  report.antisym_blocks = norms_of(blocks.antisym);
  report.schmidt_rank = schmidt(psi, dims).rank;
  return report;
}

SeparableDistance distance_to_separable(const PureState& psi, const BipartiteDims& dims) {
  if (psi.dim() != dims.total()) {
    throw std::invalid_argument("distance_to_separable: state/dims mismatch");
  }
  CoefficientMatrix c = pure_pullback(psi, local_product_rep(dims));
  CoefficientBlocks blocks = block_decompose(c);
  double g_ab_sq = blocks.sym.ab.squaredNorm();
  DensityState rho = projector(psi);
  Matrix rho_a = reduced(rho, dims, Subsystem::A).matrix();
  Matrix rho_b = reduced(rho, dims, Subsystem::B).matrix();
  double r_sq = (rho.matrix() - kron(rho_a, rho_b)).squaredNorm();
  SeparableDistance out{g_ab_sq, r_sq, std::nullopt};
  if (r_sq > 1e-14) {
    out.ratio = g_ab_sq / r_sq;
  }
  return out;
}

SeparabilityReport devicente_check(const DensityState& rho, const BipartiteDims& dims) {
  if (dims.n_a != dims.n_b) {
    throw std::invalid_argument("devicente_check: square bipartition required");
  }
  if (rho.dim() != dims.total()) {
    throw std::invalid_argument("devicente_check: state/dims mismatch");
  }
  Eigen::Index n = dims.n_a;
  CoefficientMatrix c = mixed_tensor(rho, local_product_rep(dims));
  CoefficientBlocks blocks = block_decompose(c);
  double statistic =
      (2.0 / static_cast<double>(n)) * ky_fan_norm(blocks.sym.ab.cast<Complex>());
  double bound = 0.5 * static_cast<double>(n * n - n);
  SeparabilityReport report;
  if (statistic > bound) {
    report.verdict = Verdict::Entangled;
  } else {
    report.verdict = n == 2 ? Verdict::Separable : Verdict::Inconclusive;
  }
  report.criterion = "cross-block trace-norm bound";
  report.statistic = statistic;
  report.bound = bound;
  report.sym_blocks = norms_of(blocks.sym);
  report.antisym_blocks = norms_of(blocks.antisym);
  return report;
}

std::vector<WernerRow> werner_scan(const std::vector<double>& x_grid) {
  std::vector<WernerRow> rows;
  rows.reserve(x_grid.size());
  BipartiteDims dims(2, 2);
  for (double x : x_grid) {
    SeparabilityReport r = devicente_check(werner(x), dims);
    rows.push_back(WernerRow{x, r.statistic, r.bound, r.verdict});
  }
  return rows;
}

}  // namespace geomqm
