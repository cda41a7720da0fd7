#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geomqm/states.hpp"

namespace geomqm {

// Coefficient matrices of the metric-like and symplectic-like tensors pulled
// back onto unitary-orbit manifolds, and the separability criteria built on
// their block structure.
//
// Conventions:
//  * Generator normalization Tr(L_j L_k) = 2 delta_jk throughout, so the
//    n = 2 basis is exactly (sigma_x, sigma_y, sigma_z).
//  * Generator ordering: symmetric pair matrices (row-major over j < k), then
//    antisymmetric pair matrices (same order), then diagonal matrices.
//    Deterministic output depends on this.
//  * antisym stores the real matrix <-i[R_j, R_k]> so CoefficientMatrix stays
//    real; the criteria only consume norms, which the factor does not affect.
//  * For a pure state the symmetric coefficients subtract first moments
//    (covariances); the mixed-state tensor does not. The asymmetry is
//    intentional and easy to get wrong; see mixed_tensor.

/// Split of generator indices into A-local and B-local sets for a bipartite
/// product representation.
struct GeneratorPartition {
  std::vector<Eigen::Index> a_indices;
  std::vector<Eigen::Index> b_indices;
  BipartiteDims dims;
};

/// Ordered family of Hermitian generators R(X_j), optionally carrying
/// bipartite partition metadata.
class LieAlgebraRep {
 public:
  LieAlgebraRep(std::vector<HermitianOperator> generators,
                std::vector<std::string> labels,
                std::optional<GeneratorPartition> partition = std::nullopt);

  const std::vector<HermitianOperator>& generators() const { return gens_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<GeneratorPartition>& partition() const { return partition_; }
  Eigen::Index dim() const { return gens_.front().dim(); }
  Eigen::Index size() const { return static_cast<Eigen::Index>(gens_.size()); }

 private:
  std::vector<HermitianOperator> gens_;
  std::vector<std::string> labels_;
  std::optional<GeneratorPartition> partition_;
};

/// Traceless Hermitian basis of su(n), Tr(L_j L_k) = 2 delta_jk. For n = 2
/// this is exactly (sigma_x, sigma_y, sigma_z).
LieAlgebraRep su_basis(Eigen::Index n);

/// Product representation {h ⊗ 1} ∪ {1 ⊗ h} on C^{n_a} ⊗ C^{n_b}, A-local
/// generators first, with partition metadata.
LieAlgebraRep local_product_rep(const BipartiteDims& dims);
LieAlgebraRep local_product_rep(Eigen::Index n);

/// sym_jk = <1/2[R_j,R_k]+> - <R_j><R_k>, antisym_jk = <-i[R_j,R_k]>, both in
/// the normalized projector of the state.
struct CoefficientMatrix {
  Eigen::MatrixXd sym;
  Eigen::MatrixXd antisym;
  std::optional<GeneratorPartition> partition;
};

CoefficientMatrix pure_pullback(const PureState& psi, const LieAlgebraRep& rep);

/// Mixed-state tensor: sym_jk = Tr(rho 1/2[R_j,R_k]+) with NO first-moment
/// subtraction, antisym_jk = Tr(rho (-i)[R_j,R_k]).
CoefficientMatrix mixed_tensor(const DensityState& rho, const LieAlgebraRep& rep);

/// One real coefficient matrix split along a partition; ab is the upper-right
/// rectangle (rows A, columns B).
struct BlockSplit {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  Eigen::MatrixXd ab;
};

BlockSplit block_decompose(const Eigen::MatrixXd& m, const GeneratorPartition& p);

struct CoefficientBlocks {
  BlockSplit sym;
  BlockSplit antisym;
};

CoefficientBlocks block_decompose(const CoefficientMatrix& c);

enum class Verdict { Separable, Entangled, Inconclusive };

std::string to_string(Verdict v);

struct BlockNorms {
  double a = 0;
  double b = 0;
  double ab = 0;
};

struct SeparabilityReport {
  Verdict verdict;
  std::string criterion;
  double statistic;
  double bound;
  BlockNorms sym_blocks;
  BlockNorms antisym_blocks;
  std::optional<int> schmidt_rank;  // pure-state checks only
};

/// Pure-state criterion: separable iff the AB block of the symmetric tensor
/// vanishes (Frobenius norm within zero_tol·(1 + ||sym||_F)). The report also
/// carries the Schmidt rank so callers can cross-check the equivalent rank-1
/// condition.
SeparabilityReport separability_pure(const PureState& psi, const BipartiteDims& dims,
                                     double zero_tol = kZeroBlockTol);

/// Maximal-entanglement test: the full antisymmetric tensor vanishes exactly
/// for maximally entangled states. Verdict Entangled when it vanishes (such
/// states are entangled), Inconclusive otherwise. Requires n_a = n_b.
SeparabilityReport max_entanglement_pure(const PureState& psi, const BipartiteDims& dims,
                                         double zero_tol = kZeroBlockTol);

/// ||G^AB||_F^2 compared with ||rho - rho_A ⊗ rho_B||_F^2; the two are
/// proportional on pure states, ratio defined when the denominator exceeds
/// 1e-14.
struct SeparableDistance {
  double g_ab_sq;
  double r_sq;
  std::optional<double> ratio;
};

SeparableDistance distance_to_separable(const PureState& psi, const BipartiteDims& dims);

/// Mixed-state cross-block criterion on C^n ⊗ C^n: statistic
/// (2/n)·ky_fan_norm(AB block) against bound (n^2 - n)/2. Exceeding the bound
/// proves entanglement; staying within it proves separability only for n = 2
/// and is inconclusive for n > 2.
SeparabilityReport devicente_check(const DensityState& rho, const BipartiteDims& dims);

struct WernerRow {
  double x;
  double statistic;
  double bound;
  Verdict verdict;
};

/// devicente_check across the Werner family; grid values must lie in [0, 1].
std::vector<WernerRow> werner_scan(const std::vector<double>& x_grid);

}  // namespace geomqm
