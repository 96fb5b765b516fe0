/**
 * @file datum.hpp
 * @brief Yetter–Drinfeld data, linking parameters, reduced data and their
 *        structural analysis.
 *
 * Vertex indices are 0-based throughout the C++ interface; file formats and
 * reports print them 1-based.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/lattice.hpp"
#include "hopfkit/scalar.hpp"

namespace hopfkit {

using BraidingMatrix = std::vector<std::vector<UnitScalar>>;
using IntegerMatrix = std::vector<std::vector<int>>;

/// Γ = Z^rank with vertices (g_i, χ_i); q_ij = χ_j(g_i).
struct YDDatum {
  ParameterSpace params;
  std::size_t group_rank = 0;
  std::vector<GroupElement> g;
  std::vector<Character> chi;

  std::size_t theta() const { return g.size(); }
  UnitScalar q(std::size_t i, std::size_t j) const { return chi[j](g[i]); }
  BraidingMatrix braiding() const;
};

/// λ_ij for i ≁ j; absent entries are zero.
using LinkingParameter = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

struct CartanData {
  IntegerMatrix a;
  std::vector<int> d;  ///< symmetrizer, d_i a_ij = d_j a_ji
  bool finite_type = false;
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::string> component_types;  ///< "A2", "B2", ... or "" if not finite

  std::size_t theta() const { return a.size(); }
  bool connected() const { return components.size() == 1; }
};

/// (Γ, K_i, L_i, χ_i, ℓ_i) with χ_j(K_i) = χ_i(L_j) and K_iL_i ≠ 1.
struct ReducedDatum {
  std::string name;
  ParameterSpace params;
  std::size_t group_rank = 0;
  std::vector<GroupElement> K, L;
  std::vector<Character> chi;
  std::vector<Scalar> ell;

  std::size_t theta() const { return K.size(); }
  /// q_ij = χ_j(K_i).
  UnitScalar q(std::size_t i, std::size_t j) const { return chi[j](K[i]); }
  BraidingMatrix braiding() const;
  /// Copy with every ℓ_i multiplied by factors[i].
  ReducedDatum with_rescaled_ell(const std::vector<Scalar>& factors) const;
};

// ----------------------------------------------------------------- reports

struct YDReport {
  bool generic = true;
  std::vector<std::vector<std::size_t>> classes;
};

struct LinkabilityReport {
  bool linkable = false;
  std::vector<std::string> reasons;  ///< one entry per failed clause
};

struct LinkingReport {
  LinkingParameter lambda;  ///< completed by antisymmetry
  std::set<std::size_t> linked;
  std::set<std::size_t> unlinked;  ///< I^s
  bool perfect = false;
  bool condition_holds = false;
  std::map<std::size_t, std::size_t> partner;  ///< i ↦ i⁰ when unique
};

struct ReducedConversion {
  ReducedDatum datum;
  std::vector<std::size_t> minus_vertices;  ///< original index of reduced vertex i (g_i = L_i)
  std::vector<std::size_t> plus_vertices;   ///< original index of its partner (g = K_i)
};

struct RestrictedDatum {
  YDDatum datum;
  LinkingParameter lambda;
  std::vector<std::size_t> kept;  ///< original index of each remaining vertex
};

struct ReductivityReport {
  bool regular = false;
  SubgroupIndex gamma2_index;
  bool gamma_reductive = true;
  bool reductive = false;
  std::optional<bool> cartan_invertible;  ///< checked when regular with finite index
};

struct TwistData {
  std::vector<UnitScalar> q_component;  ///< q_J per component (same order as CartanData::components)
  std::vector<int> d;
  BraidingMatrix q_hat;
  BraidingMatrix p;
};

struct PointedReductivityReport {
  bool perfect = false;
  std::set<std::size_t> unlinked;
  SubgroupIndex gamma2_index;
  bool gamma_reductive = false;
  bool reductive = false;
};

// -------------------------------------------------------------- operations

std::vector<std::vector<std::size_t>> equivalence_classes(const BraidingMatrix& q);
/// Throws NotGeneric naming the first vertex with q_ii ∈ {1, -1}.
YDReport validate_yd(const YDDatum& datum);
/// Throws InvalidDatum or NotGeneric.
void validate_reduced(const ReducedDatum& datum);

/// Throws NotCartan or NotSymmetrizable.
CartanData detect_cartan(const BraidingMatrix& q);
inline CartanData detect_cartan(const YDDatum& d) { return detect_cartan(d.braiding()); }
inline CartanData detect_cartan(const ReducedDatum& d) { return detect_cartan(d.braiding()); }
/// Dynkin label of a connected GCM, or nullopt if it is not of finite type.
std::optional<std::string> classify_connected(const IntegerMatrix& a);
/// Exact Sylvester test on diag(d)·a.
bool symmetrized_positive_definite(const IntegerMatrix& a, const std::vector<int>& d);

/// q_ij q_ji ≠ q_ii^2 for all i ≠ j.
bool satisfies_link_condition(const BraidingMatrix& q);

LinkabilityReport linkable(const YDDatum& datum, std::size_t i, std::size_t j);
/// Throws MultipleLinks, IllegalLink or AntisymmetryViolation.
LinkingReport validate_linking(const YDDatum& datum, const LinkingParameter& lambda);
/// Throws NotUnlinked.
RestrictedDatum restrict_datum(const YDDatum& datum, const LinkingParameter& lambda, const std::set<std::size_t>& removed);
/// Throws NotPerfect or ConditionFails.
ReducedConversion to_reduced(const YDDatum& datum, const LinkingParameter& lambda);
std::pair<YDDatum, LinkingParameter> tilde(const ReducedDatum& reduced);

ReductivityReport regularity_and_reductivity(const ReducedDatum& reduced);
std::optional<TwistData> check_dj2(const ReducedDatum& reduced);
std::optional<TwistData> check_dj2(const BraidingMatrix& q, const CartanData& cartan);
/// True iff Π q_ii^{n_i} = 1 with n ∈ N^θ forces n = 0.
bool check_nli(const ReducedDatum& reduced);
bool check_nli(const std::vector<UnitScalar>& diagonal);
/// Datum-level reductivity verdicts for U(D, λ).
PointedReductivityReport pointed_reductivity(const YDDatum& datum, const LinkingParameter& lambda);

}  // namespace hopfkit
