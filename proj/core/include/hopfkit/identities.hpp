/**
 * @file identities.hpp
 * @brief Exact self-checks of the algebra and its bilinear form.
 *
 * Each check recomputes one identity by two independent routes through the
 * engine (multiplication against derivations, one pairing recursion against
 * another, tensor-square products against dual bases) and reports the number
 * of cases compared. Random samples come from std::mt19937_64 with the given
 * seed, so reports are reproducible.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfkit/engine.hpp"

namespace hopfkit {

struct IdentityCheck {
  std::string name;
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;  ///< first failing case, or a note when skipped
  bool skipped = false;
};

struct IdentityOptions {
  std::uint64_t seed = 20240611;
  int gram_degree = 5;
  int pairing_degree = 4;
  int pairing_samples = 200;
  int rules_degree = 4;
  int power_bound = 6;
  int quasi_degree = 3;
  int associativity_degree = 3;
  int associativity_samples = 20;
  int rank_one_bound = 4;
  /// m-vectors of the simple modules used for the Casimir commutation rules;
  /// empty means every fundamental one.
  std::vector<std::vector<int>> casimir_modules;
};

/// All degrees α ∈ N^θ with lo ≤ |α| ≤ hi, by height then lexicographically.
std::vector<DegreeVector> degrees_up_to(std::size_t theta, int lo, int hi);

IdentityCheck check_basic_pairing(const AlgebraHandle& h);
IdentityCheck check_gram_nondegenerate(const AlgebraHandle& h, int max_height);
IdentityCheck check_dual_bases(const AlgebraHandle& h, int max_height);
/// Compares the peel-right-F (r-side) recursion with the peel-left-E (s-side)
/// recursion, and both with the other two, on random homogeneous pairs.
IdentityCheck check_pairing_routes(const AlgebraHandle& h, int max_height, int samples, std::uint64_t seed);
IdentityCheck check_serre_vanish(const AlgebraHandle& h);
IdentityCheck check_associativity(const AlgebraHandle& h, int max_height, int samples, std::uint64_t seed);
/// yF_i − F_iy = ℓ_i(r_i(y)K_i − L_i⁻¹r'_i(y)) for every canonical y.
IdentityCheck check_commutator_with_f(const AlgebraHandle& h, int max_height);
/// E_ix − xE_i = ℓ_i(K_is_i(x) − s'_i(x)L_i⁻¹) for every canonical x.
IdentityCheck check_commutator_with_e(const AlgebraHandle& h, int max_height);
/// E_iF_i^n and F_iE_i^n expansions for 1 ≤ n ≤ bound.
IdentityCheck check_power_commutators(const AlgebraHandle& h, int bound);
/// F_i^nF_j and E_i^nE_j lie in the span of the a_ij-bounded words for n ≥ 1 − a_ij.
IdentityCheck check_power_serre_spans(const AlgebraHandle& h, int extra);
/// Both commutation rules of θ_α with E_i and F_i in U ⊗ U.
IdentityCheck check_theta_commutation(const AlgebraHandle& h, int max_height);
/// Ω E_i = (χχ_i)(K_iL_i)⁻¹ E_i Ω and Ω F_i = χ(K_iL_i) F_i Ω on simple modules.
IdentityCheck check_casimir_commutation(const AlgebraHandle& h, const std::vector<std::vector<int>>& modules);
/// Rank one: E^rF^s = Σ_k F^{s−k} h_k(r,s) E^{r−k} with h_k scaled by (ℓ(q − q⁻¹))^k,
/// where q² = q_11. Skipped unless θ = 1 and q_11 has a square root among units.
IdentityCheck check_rank_one_expansion(const AlgebraHandle& h, int bound);

std::vector<IdentityCheck> check_identities(const AlgebraHandle& h, const IdentityOptions& options = {});

}  // namespace hopfkit
