/**
 * @file repr.hpp
 * @brief Finite-dimensional weight modules over U(D_red, ℓ).
 *
 * A WeightModule stores one block per weight (a Character of Γ) with an
 * ordered basis, and one exact matrix per (generator, source weight) for the
 * E_i and F_i actions. Γ acts on a weight block by the character value, so
 * the Γ-action is never stored. Zero blocks are omitted.
 *
 * Modules keep a pointer to the AlgebraHandle they were built over; the handle
 * must outlive them.
 */
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/engine.hpp"

namespace hopfkit {

using Weight = Character;

class WeightModule {
 public:
  struct Block {
    std::size_t target = 0;
    Matrix<Scalar> matrix;  ///< dim(target) × dim(source)
  };

  explicit WeightModule(const AlgebraHandle& handle);

  const AlgebraHandle& handle() const { return *handle_; }
  bool same_handle(const WeightModule& o) const { return handle_ == o.handle_; }

  /// Appends a weight block; throws InvalidDatum if the weight is already present.
  std::size_t add_weight(const Weight& weight, std::size_t dim);
  std::size_t weight_count() const { return weights_.size(); }
  const Weight& weight(std::size_t k) const { return weights_[k]; }
  std::size_t dim(std::size_t k) const { return dims_[k]; }
  std::size_t offset(std::size_t k) const { return offsets_[k]; }
  std::size_t total_dim() const { return total_; }
  std::optional<std::size_t> find(const Weight& weight) const;

  /// Installs the action of E_i (Plus) or F_i (Minus) on weight `source`.
  /// A block that is entirely zero is dropped.
  void set_block(Side side, std::size_t i, std::size_t source, std::size_t target, Matrix<Scalar> matrix);
  /// Nullptr when the generator acts by zero on `source`.
  const Block* block(Side side, std::size_t i, std::size_t source) const;
  /// Weight index that E_i (Plus) or F_i (Minus) maps `source` into, if present.
  std::optional<std::size_t> expected_target(Side side, std::size_t i, std::size_t source) const;

  /// Applies a generator to a vector of weight `source`; empty result means zero.
  std::optional<std::pair<std::size_t, std::vector<Scalar>>> act(Side side, std::size_t i, std::size_t source,
                                                                 const std::vector<Scalar>& v) const;
  /// Applies a word (E-letters for Plus, F-letters for Minus, rightmost first).
  std::optional<std::pair<std::size_t, std::vector<Scalar>>> act_word(Side side, const Word& w, std::size_t source,
                                                                      const std::vector<Scalar>& v) const;
  /// Action on the whole module in the basis ordered by weight index.
  Matrix<Scalar> full_matrix(Side side, std::size_t i) const;

  /// Set when only layers up to this depth were built.
  std::optional<int> truncated_depth;

 private:
  const AlgebraHandle* handle_;
  std::vector<Weight> weights_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::map<Weight, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, Block> blocks_[2];  ///< keyed by (i, source)
};

enum class ModuleKind { Verma, Simple };

struct HighestWeightModule {
  WeightModule module;
  Weight highest;
  std::size_t cyclic_weight = 0;  ///< weight index of the cyclic vector (basis vector 0 there)
  ModuleKind kind = ModuleKind::Simple;
  int depth = 0;                        ///< largest height with a nonzero layer
  std::vector<DegreeVector> degrees;    ///< degrees[k]: α with weight(k) = highest·χ_α⁻¹
};

/// m with χ(K_iL_i) = q_ii^{m_i}, m ∈ N^θ, if it exists.
std::optional<std::vector<int>> is_dominant(const AlgebraHandle& handle, const Weight& chi);
/// Some χ with χ(K_iL_i) = q_ii^{m_i}; throws NoSolution if none exists.
Weight dominant_character(const AlgebraHandle& handle, const std::vector<int>& m);
/// Weight of F_α·m_χ, namely χ·χ_α⁻¹.
Weight shifted_weight(const AlgebraHandle& handle, const Weight& chi, const DegreeVector& alpha);
/// χ' ≤ χ iff χ = χ'·χ_α with α ∈ N^θ.
bool weight_leq(const AlgebraHandle& handle, const Weight& lower, const Weight& upper);

/// L(χ) = U⁻ m_χ / Σ_i U⁻ F_i^{m_i+1} m_χ built layer by layer until a layer
/// vanishes. Throws NotDominant; throws DegreeCapExceeded for data that are not
/// of finite type unless `depth` is given (the result is then truncated).
HighestWeightModule simple_module(const AlgebraHandle& handle, const Weight& chi, std::optional<int> depth = std::nullopt);
/// M(χ) in degrees |α| ≤ depth; F-blocks out of the last layer are omitted.
HighestWeightModule verma_truncated(const AlgebraHandle& handle, const Weight& chi, int depth);

/// M ⊗ N with E_i ↦ K_i ⊗ E_i + E_i ⊗ 1 and F_i ↦ 1 ⊗ F_i + F_i ⊗ L_i⁻¹.
/// Basis of (M⊗N)^φ: pairs (a, b) in order of M's weights, then N's, row-major.
/// Throws HandleMismatch.
WeightModule tensor(const WeightModule& m, const WeightModule& n);

struct RelationsAudit {
  bool ok = true;
  std::vector<std::string> failures;
};
/// Checks weight-compatibility of every block, E_iF_j − F_jE_i = δ_ij ℓ_i(K_i − L_i⁻¹)
/// and the Serre relations on both sides. For truncated modules only weights
/// whose relation outputs stay inside the built layers are checked.
RelationsAudit audit_relations(const WeightModule& m);

/// Basis of ∩_i ker E_i on each weight with a nonzero intersection.
std::map<std::size_t, std::vector<std::vector<Scalar>>> singular_vectors(const WeightModule& m);

struct Summand {
  Weight highest;
  std::size_t weight_index = 0;
  std::vector<int> m;
  std::size_t multiplicity = 0;
  std::size_t simple_dim = 0;
};

struct DecompositionReport {
  std::vector<Summand> summands;
  std::map<std::size_t, std::vector<std::vector<Scalar>>> singular;
  std::size_t module_dim = 0;
  std::size_t audited_dim = 0;  ///< Σ multiplicity · dim L(χ)
  bool direct = false;          ///< U-spans of the singular vectors form a direct sum of full rank
};

/// Throws AuditFailure when a singular weight is not dominant, when the
/// dimension audit fails, or when the spans are not direct.
DecompositionReport decompose(const AlgebraHandle& handle, const WeightModule& m);

/// U-span of a singular vector: U⁻·v, as per-weight bases in module coordinates.
std::map<std::size_t, std::vector<std::vector<Scalar>>> lowering_span(const WeightModule& m, std::size_t weight,
                                                                     const std::vector<Scalar>& v);

/// True iff every E_i and F_i acts nilpotently.
bool is_integrable(const WeightModule& m);

/// G(χ̄χ_α) = χ̄(K_αL_α)·q_α on the coset of the anchor χ̄.
class GFunction {
 public:
  /// Throws NliFails unless allow_degenerate is set.
  GFunction(const AlgebraHandle& handle, Weight anchor, bool allow_degenerate = false);
  const Weight& anchor() const { return anchor_; }
  /// Throws NotInCoset.
  UnitScalar operator()(const Weight& chi) const;
  /// q_α for α ∈ Z^θ.
  UnitScalar q_alpha(const DegreeVector& alpha) const;

 private:
  const AlgebraHandle* handle_;
  Weight anchor_;
};

inline GFunction g_function(const AlgebraHandle& handle, const Weight& anchor, bool allow_degenerate = false) {
  return GFunction(handle, anchor, allow_degenerate);
}
inline UnitScalar g_eval(const GFunction& g, const Weight& chi) { return g(chi); }

/// Ω_G on M as a full matrix (basis ordered by weight index). Throws
/// CosetMismatch if a weight is outside G's coset and AuditFailure if the
/// operator fails to commute with every E_i and F_i.
Matrix<Scalar> casimir_apply(const WeightModule& m, const GFunction& g);
/// Ω without the G-weighting.
Matrix<Scalar> casimir_plain(const WeightModule& m);

struct CasimirEigen {
  Weight highest;
  UnitScalar expected;  ///< G(highest)
  bool scalar_on_span = false;
};
/// Checks Ω_G = G(χ)·id on the U-span of every singular vector of the report.
std::vector<CasimirEigen> casimir_eigenvalues(const WeightModule& m, const DecompositionReport& report,
                                              const GFunction& g);

struct FactorizationReport {
  std::vector<std::size_t> first_component;
  std::vector<std::size_t> rest;
  std::size_t dim = 0;
  std::size_t dim_first = 0;
  std::size_t dim_rest = 0;
  bool weights_factor = false;
  bool holds() const { return dim == dim_first * dim_rest && weights_factor; }
};
/// Compares L(χ) with the simples over the first component and the remaining
/// vertices. Throws ConnectedDiagram.
FactorizationReport component_factorization_check(const AlgebraHandle& handle, const Weight& chi);

/// Copy of the datum keeping only the listed vertices (same Γ).
ReducedDatum sub_datum(const ReducedDatum& datum, const std::vector<std::size_t>& vertices);

}  // namespace hopfkit
