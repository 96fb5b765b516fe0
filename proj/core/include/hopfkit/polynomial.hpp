/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over Q with exact gcd.
 *
 * Terms are kept sorted by decreasing graded-lexicographic order of their
 * monomials; coefficients are GMP rationals and never zero. The zero
 * polynomial has no terms.
 */
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

/// Upper bound on the number of parameters t_1..t_m.
inline constexpr std::size_t kMaxParameters = 8;

/// Monomial t_1^{e_1}...t_m^{e_m} with nonnegative exponents.
struct Monomial {
  std::array<std::uint16_t, kMaxParameters> exps{};
  std::uint32_t total = 0;

  static Monomial variable(std::size_t index, unsigned exponent = 1);
  bool is_one() const { return total == 0; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex comparison: negative if a < b, zero if equal, positive if a > b.
int compare(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& divisor, const Monomial& m);
/// Requires divides(divisor, m).
Monomial operator/(const Monomial& m, const Monomial& divisor);
/// Componentwise minimum.
Monomial common_part(const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    mpq_class coefficient;
  };

  Polynomial() = default;
  Polynomial(long value);  // NOLINT: implicit constant embedding
  explicit Polynomial(mpq_class value);
  static Polynomial term(Monomial m, mpq_class coefficient);
  static Polynomial variable(std::size_t index, unsigned exponent = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const mpq_class& leading_coefficient() const { return terms_.front().coefficient; }
  /// Constant coefficient value; requires is_constant().
  mpq_class constant_value() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const mpq_class& factor) const;
  Polynomial times_monomial(const Monomial& m) const;
  /// Requires every term to be divisible by m.
  Polynomial divided_by_monomial(const Monomial& m) const;
  /// Scaled so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;
  /// Componentwise minimum of all term monomials (one for zero).
  Monomial monomial_content() const;

  std::size_t degree_in(std::size_t var) const;
  bool uses(std::size_t var) const;
  /// Lowest variable index occurring in the polynomial, or kMaxParameters.
  std::size_t lowest_variable() const;

  /// Evaluation modulo the prime p at the given point; throws
  /// SpecializationFailure if a coefficient denominator vanishes mod p.
  std::uint64_t evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t p) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void normalize_sorted();
  std::vector<Term> terms_;
};

/// Exact quotient a / b if b divides a, otherwise nullopt. b must be nonzero.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor over Q (zero iff both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace hopfkit
