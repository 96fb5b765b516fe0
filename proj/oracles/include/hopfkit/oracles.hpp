/**
 * @file oracles.hpp
 * @brief Classical reference values for finite-type root data.
 *
 * Integer arithmetic only, and no dependency on the symbolic core, so these
 * values cannot share a defect with the engine they are compared against.
 * Cartan matrices use the convention a_ij = <α_j, α_i^∨>.
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace hopfkit::oracle {

using IntVector = std::vector<int>;
using CartanMatrix = std::vector<std::vector<int>>;

struct RootSystem {
  CartanMatrix cartan;
  std::vector<int> d;               ///< d_i a_ij = d_j a_ji with gcd 1
  std::vector<IntVector> positive;  ///< positive roots in simple-root coordinates, by height

  std::size_t rank() const { return cartan.size(); }
  /// (x, y) for x, y in simple-root coordinates, with (α_i, α_j) = d_i a_ij.
  long form(const IntVector& x, const IntVector& y) const;
};

/// Throws std::invalid_argument when the matrix is not of finite type.
RootSystem root_system(const CartanMatrix& cartan);

/// Number of multisets of positive roots summing to alpha.
std::uint64_t kostant_partition(const RootSystem& rs, const IntVector& alpha);

/// dim L(λ) for λ = Σ m_i ω_i.
std::uint64_t weyl_dim(const RootSystem& rs, const IntVector& m);

/// Weight multiplicities of L(λ) keyed by γ with weight λ − Σ γ_i α_i.
std::map<IntVector, std::uint64_t> freudenthal(const RootSystem& rs, const IntVector& m);

/// Multiplicities of the simple summands of L(m1) ⊗ L(m2), keyed by m-vector,
/// from the product of Freudenthal characters.
std::map<IntVector, std::uint64_t> tensor_decomposition(const RootSystem& rs, const IntVector& m1, const IntVector& m2);

/// Highest weights of L(m) ⊗ L(n) for sl2, in decreasing order.
std::vector<int> clebsch_gordan_a1(int m, int n);

}  // namespace hopfkit::oracle
