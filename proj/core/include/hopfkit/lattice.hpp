/**
 * @file lattice.hpp
 * @brief Free abelian groups Z^r, their characters, degree vectors and
 *        integer Smith normal forms.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

/// Element α = Σ n_i α_i of Z^θ.
struct DegreeVector {
  std::vector<int> coords;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> c) : coords(std::move(c)) {}
  static DegreeVector zero(std::size_t theta) { return DegreeVector(std::vector<int>(theta, 0)); }
  static DegreeVector unit(std::size_t theta, std::size_t i);

  std::size_t size() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }
  /// |α| = Σ n_i.
  int height() const;
  bool is_nonnegative() const;
  bool is_zero() const;

  DegreeVector operator+(const DegreeVector& o) const;
  DegreeVector operator-(const DegreeVector& o) const;
  DegreeVector operator*(int k) const;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;

  std::string to_string() const;
};

/// Element of Γ = Z^r written multiplicatively.
struct GroupElement {
  std::vector<long> exps;

  GroupElement() = default;
  explicit GroupElement(std::vector<long> e) : exps(std::move(e)) {}
  static GroupElement identity(std::size_t rank) { return GroupElement(std::vector<long>(rank, 0)); }

  std::size_t rank() const { return exps.size(); }
  bool is_identity() const;
  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(long k) const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

  std::string to_string() const;
};

/// Homomorphism Γ → units, given by the images of the generators.
struct Character {
  std::vector<UnitScalar> values;

  Character() = default;
  explicit Character(std::vector<UnitScalar> v) : values(std::move(v)) {}
  static Character trivial(std::size_t rank) { return Character(std::vector<UnitScalar>(rank)); }

  std::size_t rank() const { return values.size(); }
  bool is_trivial() const;
  UnitScalar operator()(const GroupElement& g) const;
  Character operator*(const Character& o) const;
  Character inverse() const;
  Character pow(long k) const;
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;

  std::string to_string(const ParameterSpace& space) const;
};

/// χ(g); throws RankMismatch.
UnitScalar evaluate(const Character& chi, const GroupElement& g);

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// U·A·V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... (d_k ≥ 0).
struct SmithForm {
  IntMatrix U, D, V;
  std::size_t rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Integer solution x of A x = b (free coordinates set to zero), if any.
std::optional<std::vector<mpz_class>> solve_integer_system(const IntMatrix& a, const std::vector<mpz_class>& b);

/// Index of the subgroup generated by the given elements in Z^rank.
struct SubgroupIndex {
  std::optional<mpz_class> value;  ///< empty means infinite
  bool is_finite() const { return value.has_value(); }
};
SubgroupIndex smith_index(const std::vector<GroupElement>& generators, std::size_t rank);

/// True iff no nonzero n ∈ Z^k gives Π χ_i^{n_i} = 1.
bool z_linear_independent(const std::vector<Character>& chars);

/// The unique α ∈ Z^θ with target = base·χ_α, or nullopt if target and base
/// lie in different cosets. Throws NotRegular if the basis is dependent.
std::optional<DegreeVector> try_solve_weight_difference(const Character& target, const Character& base,
                                                        const std::vector<Character>& basis);
/// As above but throws NoSolution instead of returning nullopt.
DegreeVector solve_weight_difference(const Character& target, const Character& base, const std::vector<Character>& basis);

/// χ_α = Π χ_i^{n_i}.
Character character_power(const std::vector<Character>& basis, const DegreeVector& alpha);

/// Some character χ with χ(elements[i]) = targets[i] for all i, if one exists.
std::optional<Character> solve_character(const std::vector<GroupElement>& elements, const std::vector<UnitScalar>& targets,
                                         std::size_t rank);

}  // namespace hopfkit
