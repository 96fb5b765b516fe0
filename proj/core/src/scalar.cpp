#include "hopfkit/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "hopfkit/errors.hpp"

namespace hopfkit {

ParameterSpace::ParameterSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxParameters) throw InvalidDatum("at most " + std::to_string(kMaxParameters) + " parameters are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw InvalidDatum("invalid parameter name '" + n + "'");
    for (char c : n) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) throw InvalidDatum("invalid parameter name '" + n + "'");
    }
    if (!seen.insert(n).second) throw InvalidDatum("duplicate parameter name '" + n + "'");
  }
}

std::optional<std::size_t> ParameterSpace::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Scalar

namespace {

// gcd and exact division specialised for monomial operands, which are the
// common case for Laurent denominators.
Polynomial fast_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_monomial() || b.is_monomial()) {
    if (a.is_zero() || b.is_zero()) return gcd(a, b);
    return Polynomial::term(common_part(a.monomial_content(), b.monomial_content()), 1);
  }
  return gcd(a, b);
}

Polynomial fast_divide(const Polynomial& a, const Polynomial& g) {
  if (g.is_one()) return a;
  if (g.is_monomial()) return a.divided_by_monomial(g.leading_monomial()).scaled(1 / g.leading_coefficient());
  return *exact_divide(a, g);
}

}  // namespace

Scalar Scalar::fraction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("division by zero");
  Scalar r;
  if (num.is_zero()) return r;
  if (!den.is_constant()) {
    Polynomial g = fast_gcd(num, den);
    if (!g.is_one()) {
      num = fast_divide(num, g);
      den = fast_divide(den, g);
    }
  }
  mpq_class lc = den.leading_coefficient();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    Polynomial n = num_ + o.num_;
    if (den_.is_one()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = fraction(std::move(n), den_);
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  Polynomial g = fast_gcd(den_, o.den_);
  Polynomial a = g.is_one() ? den_ : fast_divide(den_, g);
  Polynomial b = g.is_one() ? o.den_ : fast_divide(o.den_, g);
  Polynomial n = num_ * b + o.num_ * a;
  Polynomial d = a * o.den_;
  if (g.is_one()) {
    // gcd(n, a*b) = 1 already
    num_ = std::move(n);
    den_ = std::move(d);
    if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  return *this = fraction(std::move(n), std::move(d));
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial g1 = o.den_.is_one() ? Polynomial(1) : fast_gcd(num_, o.den_);
  Polynomial g2 = den_.is_one() ? Polynomial(1) : fast_gcd(o.num_, den_);
  Polynomial a = g1.is_one() ? num_ : fast_divide(num_, g1);
  Polynomial d = g1.is_one() ? o.den_ : fast_divide(o.den_, g1);
  Polynomial c = g2.is_one() ? o.num_ : fast_divide(o.num_, g2);
  Polynomial b = g2.is_one() ? den_ : fast_divide(den_, g2);
  Polynomial n = a * c;
  Polynomial m = b * d;
  mpq_class lc = m.leading_coefficient();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    n = n.scaled(inv);
    m = m.scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(m);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r;
  mpq_class lc = num_.leading_coefficient();
  r.num_ = den_.scaled(1 / lc);
  r.den_ = num_.scaled(1 / lc);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  return *this *= o.inverse();
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::optional<UnitScalar> Scalar::as_unit() const {
  if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
  const auto& nt = num_.terms()[0];
  const auto& dt = den_.terms()[0];
  if (dt.coefficient != 1) return std::nullopt;
  if (nt.coefficient != 1 && nt.coefficient != -1) return std::nullopt;
  UnitScalar u = nt.coefficient == -1 ? UnitScalar::minus_one() : UnitScalar();
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    int e = int{nt.monomial.exps[k]} - int{dt.monomial.exps[k]};
    if (e != 0) u *= UnitScalar::parameter(k, e);
  }
  return u;
}

std::string Scalar::to_string(const ParameterSpace& space) const {
  std::string n = num_.to_string(space.names());
  if (den_.is_one()) return n;
  return "(" + n + ")/(" + den_.to_string(space.names()) + ")";
}

// ------------------------------------------------------------ UnitScalar

UnitScalar UnitScalar::parameter(std::size_t index, int exponent) {
  if (index >= kMaxParameters) throw ExponentOverflow("parameter index out of range");
  UnitScalar u;
  u.exps_[index] = exponent;
  return u;
}

UnitScalar UnitScalar::minus_one() {
  UnitScalar u;
  u.sign_ = -1;
  return u;
}

bool UnitScalar::is_one() const { return sign_ == 1 && has_zero_exponents(); }

bool UnitScalar::has_zero_exponents() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int32_t e) { return e == 0; });
}

UnitScalar UnitScalar::operator*(const UnitScalar& o) const {
  UnitScalar r;
  r.sign_ = sign_ * o.sign_;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    long e = long{exps_[k]} + long{o.exps_[k]};
    if (e > std::numeric_limits<std::int32_t>::max() || e < std::numeric_limits<std::int32_t>::min())
      throw ExponentOverflow("unit exponent overflow");
    r.exps_[k] = static_cast<std::int32_t>(e);
  }
  return r;
}

UnitScalar UnitScalar::inverse() const {
  UnitScalar r = *this;
  for (auto& e : r.exps_) e = -e;
  return r;
}

UnitScalar UnitScalar::pow(long exponent) const {
  UnitScalar r;
  r.sign_ = (sign_ == -1 && (exponent % 2 != 0)) ? -1 : 1;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    long e = long{exps_[k]} * exponent;
    if (e > std::numeric_limits<std::int32_t>::max() || e < std::numeric_limits<std::int32_t>::min())
      throw ExponentOverflow("unit exponent overflow");
    r.exps_[k] = static_cast<std::int32_t>(e);
  }
  return r;
}

Scalar UnitScalar::to_scalar() const {
  Monomial num, den;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    if (exps_[k] > 0) num = num * Monomial::variable(k, static_cast<unsigned>(exps_[k]));
    if (exps_[k] < 0) den = den * Monomial::variable(k, static_cast<unsigned>(-exps_[k]));
  }
  return Scalar::fraction(Polynomial::term(num, mpq_class(sign_)), Polynomial::term(den, mpq_class(1)));
}

std::string UnitScalar::to_string(const ParameterSpace& space) const {
  std::string out;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += k < space.size() ? space.names()[k] : "t" + std::to_string(k + 1);
    if (exps_[k] != 1) out += "^" + std::to_string(exps_[k]);
  }
  if (out.empty()) return sign_ < 0 ? "-1" : "1";
  return sign_ < 0 ? "-" + out : out;
}

bool is_root_of_unity(const UnitScalar& u) { return u.has_zero_exponents(); }

std::optional<long> unit_discrete_log(const UnitScalar& base, const UnitScalar& value) {
  if (base.has_zero_exponents()) {
    if (value.has_zero_exponents()) throw AmbiguousLog("discrete log with a root-of-unity base");
    return std::nullopt;
  }
  std::optional<long> k;
  for (std::size_t j = 0; j < kMaxParameters; ++j) {
    long b = base.exponents()[j];
    long v = value.exponents()[j];
    if (b == 0) {
      if (v != 0) return std::nullopt;
      continue;
    }
    if (v % b != 0) return std::nullopt;
    long candidate = v / b;
    if (k && *k != candidate) return std::nullopt;
    k = candidate;
  }
  if (base.pow(*k).sign() != value.sign()) return std::nullopt;
  return k;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParameterSpace& space) : text_(text), space_(space) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long exponent() {
    bool paren = accept('(');
    bool negative = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 9) fail("exponent too large");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return negative ? -e : e;
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      long e = exponent();
      if (e < 0 && base.is_zero()) fail("negative power of zero");
      return base.pow(e);
    }
    return base;
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto index = space_.index_of(name);
      if (!index) fail("unknown parameter '" + std::string(name) + "'");
      return Scalar::parameter(*index);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const ParameterSpace& space_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const ParameterSpace& space) { return Parser(text, space).parse(); }

UnitScalar parse_unit(std::string_view text, const ParameterSpace& space) {
  Scalar s = parse_scalar(text, space);
  auto u = s.as_unit();
  if (!u) {
    throw NotAUnit("'" + std::string(text) +
                   "' is not a signed Laurent monomial; numeric specializations are not supported, add a parameter instead");
  }
  return *u;
}

}  // namespace hopfkit
