/**
 * @file scalar.hpp
 * @brief Exact elements of Q(t_1,...,t_m) and signed Laurent monomials.
 *
 * A Scalar is num/den with gcd(num, den) = 1 and den monic under the
 * graded-lex order, so equal field elements have identical representations.
 * A UnitScalar is ±t^e with e ∈ Z^m; character values and braiding entries
 * are always UnitScalars.
 *
 * Literal grammar (parse_scalar / parse_unit):
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := unary (('*' | '/') unary)*
 *     unary   := ('+' | '-') unary | power
 *     power   := primary ('^' exponent)?
 *     exponent:= ['-'] digits | '(' ['-'] digits ')'
 *     primary := digits | identifier | '(' expr ')'
 *
 * Identifiers must be declared in the ParameterSpace. to_string output
 * always parses back to the same value.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopfkit/polynomial.hpp"

namespace hopfkit {

/// Ordered parameter names t_1..t_m.
class ParameterSpace {
 public:
  ParameterSpace() = default;
  explicit ParameterSpace(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  friend bool operator==(const ParameterSpace&, const ParameterSpace&) = default;

 private:
  std::vector<std::string> names_;
};

class UnitScalar;

class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long value) : num_(value), den_(1) {}  // NOLINT: implicit constant embedding
  explicit Scalar(mpq_class value) : num_(std::move(value)), den_(1) {}
  explicit Scalar(Polynomial value) : num_(std::move(value)), den_(1) {}
  /// Canonical form of num/den; throws DivisionByZero if den is zero.
  static Scalar fraction(Polynomial num, Polynomial den);
  static Scalar parameter(std::size_t index) { return Scalar(Polynomial::variable(index)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// Rough size measure used for pivot selection.
  std::size_t complexity() const { return num_.size() + den_.size(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  Scalar inverse() const;
  Scalar pow(long exponent) const;
  /// Present iff the value is ±(Laurent monomial).
  std::optional<UnitScalar> as_unit() const;
  std::string to_string(const ParameterSpace& space) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Signed Laurent monomial ±t_1^{e_1}...t_m^{e_m}.
class UnitScalar {
 public:
  UnitScalar() = default;
  static UnitScalar parameter(std::size_t index, int exponent = 1);
  static UnitScalar minus_one();

  int sign() const { return sign_; }
  const std::array<std::int32_t, kMaxParameters>& exponents() const { return exps_; }
  bool is_one() const;
  bool has_zero_exponents() const;

  UnitScalar operator*(const UnitScalar& o) const;
  UnitScalar& operator*=(const UnitScalar& o) { return *this = *this * o; }
  UnitScalar operator/(const UnitScalar& o) const { return *this * o.inverse(); }
  UnitScalar inverse() const;
  UnitScalar pow(long exponent) const;
  friend bool operator==(const UnitScalar&, const UnitScalar&) = default;
  friend auto operator<=>(const UnitScalar&, const UnitScalar&) = default;

  Scalar to_scalar() const;
  std::string to_string(const ParameterSpace& space) const;

 private:
  int sign_ = 1;
  std::array<std::int32_t, kMaxParameters> exps_{};
};

/// True iff u is a root of unity, i.e. u ∈ {1, -1}.
bool is_root_of_unity(const UnitScalar& u);

/// k with base^k = value, if it exists. Throws AmbiguousLog when base and
/// value are both in {1, -1}.
std::optional<long> unit_discrete_log(const UnitScalar& base, const UnitScalar& value);

Scalar parse_scalar(std::string_view text, const ParameterSpace& space);
/// Throws NotAUnit if the parsed value is not ±(Laurent monomial).
UnitScalar parse_unit(std::string_view text, const ParameterSpace& space);

}  // namespace hopfkit
