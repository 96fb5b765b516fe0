#include "hopfkit/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  if (index >= kMaxParameters) throw ExponentOverflow("parameter index out of range");
  if (exponent > std::numeric_limits<std::uint16_t>::max()) throw ExponentOverflow("exponent too large");
  Monomial m;
  m.exps[index] = static_cast<std::uint16_t>(exponent);
  m.total = exponent;
  return m;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.total != b.total) return a.total < b.total ? -1 : 1;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    if (a.exps[k] != b.exps[k]) return a.exps[k] < b.exps[k] ? -1 : 1;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    unsigned e = unsigned{a.exps[k]} + unsigned{b.exps[k]};
    if (e > std::numeric_limits<std::uint16_t>::max()) throw ExponentOverflow("monomial exponent overflow");
    r.exps[k] = static_cast<std::uint16_t>(e);
  }
  r.total = a.total + b.total;
  return r;
}

bool divides(const Monomial& divisor, const Monomial& m) {
  if (divisor.total > m.total) return false;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    if (divisor.exps[k] > m.exps[k]) return false;
  }
  return true;
}

Monomial operator/(const Monomial& m, const Monomial& divisor) {
  Monomial r;
  for (std::size_t k = 0; k < kMaxParameters; ++k) r.exps[k] = static_cast<std::uint16_t>(m.exps[k] - divisor.exps[k]);
  r.total = m.total - divisor.total;
  return r;
}

Monomial common_part(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.total = 0;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    r.exps[k] = std::min(a.exps[k], b.exps[k]);
    r.total += r.exps[k];
  }
  return r;
}

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) { return compare(a.monomial, b.monomial) > 0; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return __extension__ static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.push_back({Monomial{}, mpq_class(value)});
}

Polynomial::Polynomial(mpq_class value) {
  value.canonicalize();
  if (value != 0) terms_.push_back({Monomial{}, std::move(value)});
}

Polynomial Polynomial::term(Monomial m, mpq_class coefficient) {
  Polynomial p;
  coefficient.canonicalize();
  if (coefficient != 0) p.terms_.push_back({m, std::move(coefficient)});
  return p;
}

Polynomial Polynomial::variable(std::size_t index, unsigned exponent) {
  return term(Monomial::variable(index, exponent), mpq_class(1));
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coefficient == 1;
}

mpq_class Polynomial::constant_value() const { return terms_.empty() ? mpq_class(0) : terms_[0].coefficient; }

void Polynomial::normalize_sorted() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
  terms_ = std::move(merged);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

template <bool Subtract>
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if constexpr (Subtract) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      mpq_class s = Subtract ? mpq_class(a[i].coefficient - b[j].coefficient) : mpq_class(a[i].coefficient + b[j].coefficient);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge_terms<false>(terms_, other.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = merge_terms<true>(terms_, other.terms_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].monomial).scaled(a.terms_[0].coefficient);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].monomial).scaled(b.terms_[0].coefficient);
  Polynomial r;
  r.terms_.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) r.terms_.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  }
  r.normalize_sorted();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].monomial == b.terms_[k].monomial) || a.terms_[k].coefficient != b.terms_[k].coefficient) return false;
  }
  return true;
}

Polynomial Polynomial::scaled(const mpq_class& factor) const {
  if (factor == 0) return {};
  if (factor == 1) return *this;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= factor;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.monomial = t.monomial / m;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  mpq_class inv = 1 / leading_coefficient();
  return scaled(inv);
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].monomial;
  for (const auto& t : terms_) {
    m = common_part(m, t.monomial);
    if (m.is_one()) break;
  }
  return m;
}

std::size_t Polynomial::degree_in(std::size_t var) const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max<std::size_t>(d, t.monomial.exps[var]);
  return d;
}

bool Polynomial::uses(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial.exps[var] != 0; });
}

std::size_t Polynomial::lowest_variable() const {
  std::size_t best = kMaxParameters;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < best; ++k) {
      if (t.monomial.exps[k] != 0) {
        best = k;
        break;
      }
    }
  }
  return best;
}

std::uint64_t Polynomial::evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t p) const {
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t num = mpz_fdiv_ui(t.coefficient.get_num_mpz_t(), p);
    std::uint64_t den = mpz_fdiv_ui(t.coefficient.get_den_mpz_t(), p);
    if (den == 0) throw SpecializationFailure("coefficient denominator vanishes modulo p");
    std::uint64_t v = mul_mod(num, pow_mod(den, p - 2, p), p);
    for (std::size_t k = 0; k < kMaxParameters; ++k) {
      if (t.monomial.exps[k] == 0) continue;
      if (k >= point.size()) throw SpecializationFailure("evaluation point too short");
      v = mul_mod(v, pow_mod(point[k], t.monomial.exps[k], p), p);
    }
    acc = (acc + v) % p;
  }
  return acc;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (t.monomial.is_one() || c != 1) {
      out << c.get_str();
      need_star = true;
    }
    for (std::size_t k = 0; k < kMaxParameters; ++k) {
      unsigned e = t.monomial.exps[k];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << (k < names.size() ? names[k] : "t" + std::to_string(k + 1));
      if (e != 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return Polynomial{};
  if (b.is_monomial()) {
    const auto& bt = b.terms()[0];
    for (const auto& t : a.terms()) {
      if (!divides(bt.monomial, t.monomial)) return std::nullopt;
    }
    return a.divided_by_monomial(bt.monomial).scaled(1 / bt.coefficient);
  }
  if (!divides(b.leading_monomial(), a.leading_monomial())) return std::nullopt;
  Polynomial quotient;
  Polynomial rest = a;
  const mpq_class inv_lc = 1 / b.leading_coefficient();
  while (!rest.is_zero()) {
    const auto& lt = rest.terms().front();
    if (!divides(b.leading_monomial(), lt.monomial)) return std::nullopt;
    Polynomial step = Polynomial::term(lt.monomial / b.leading_monomial(), lt.coefficient * inv_lc);
    quotient += step;
    rest -= b * step;
  }
  return quotient;
}

namespace {

/// Coefficients of p viewed as a polynomial in variable v.
std::vector<Polynomial> split_by_variable(const Polynomial& p, std::size_t v) {
  std::vector<std::vector<Polynomial::Term>> buckets(p.degree_in(v) + 1);
  for (const auto& t : p.terms()) {
    Polynomial::Term stripped = t;
    unsigned e = stripped.monomial.exps[v];
    stripped.monomial.exps[v] = 0;
    stripped.monomial.total -= e;
    buckets[e].push_back(std::move(stripped));
  }
  std::vector<Polynomial> coeffs;
  coeffs.reserve(buckets.size());
  for (auto& bucket : buckets) {
    Polynomial c;
    for (auto& t : bucket) c += Polynomial::term(t.monomial, t.coefficient);
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

Polynomial content_in(const Polynomial& p, std::size_t v) {
  auto coeffs = split_by_variable(p, v);
  Polynomial g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t v) {
  if (p.is_zero()) return p;
  Polynomial c = content_in(p, v);
  if (c.is_one()) return p;
  return *exact_divide(p, c);
}

/// Sparse pseudo-remainder of a by b with respect to variable v.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t v) {
  const std::size_t db = b.degree_in(v);
  const Polynomial lcb = split_by_variable(b, v).back();
  while (!a.is_zero()) {
    std::size_t da = a.degree_in(v);
    if (da < db) break;
    Polynomial lca = split_by_variable(a, v).back();
    a = lcb * a - lca * b.times_monomial(Monomial::variable(v, static_cast<unsigned>(da - db)));
  }
  return a;
}

// Coprimality certificate: a nonconstant common factor has positive degree
// in some variable v used by both inputs, and survives specialising the other
// variables modulo p whenever the leading coefficients in v do not vanish.
// Returns true only when every such v yields a constant gcd modulo p.
constexpr std::uint64_t kCertPrime = (std::uint64_t{1} << 61) - 1;
constexpr std::array<std::uint64_t, kMaxParameters> kCertPoint = {
    0x1d8e4e27c47d124fULL % kCertPrime, 0x2b7e151628aed2a6ULL % kCertPrime, 0x3243f6a8885a308dULL % kCertPrime,
    0x13198a2e03707344ULL % kCertPrime, 0x0a4093822299f31dULL % kCertPrime, 0x082efa98ec4e6c89ULL % kCertPrime,
    0x152d8d6f4e0ac2a5ULL % kCertPrime, 0x0be5466cf34e90c6ULL % kCertPrime};

// Dense coefficients in variable v, lowest degree first; nullopt if a
// coefficient denominator vanishes.
std::optional<std::vector<std::uint64_t>> univariate_image(const Polynomial& a, std::size_t v) {
  const std::uint64_t p = kCertPrime;
  std::vector<std::uint64_t> c(a.degree_in(v) + 1, 0);
  for (const auto& t : a.terms()) {
    std::uint64_t num = mpz_fdiv_ui(t.coefficient.get_num_mpz_t(), p);
    std::uint64_t den = mpz_fdiv_ui(t.coefficient.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    std::uint64_t x = mul_mod(num, pow_mod(den, p - 2, p), p);
    for (std::size_t k = 0; k < kMaxParameters; ++k) {
      if (k == v || t.monomial.exps[k] == 0) continue;
      x = mul_mod(x, pow_mod(kCertPoint[k], t.monomial.exps[k], p), p);
    }
    auto& slot = c[t.monomial.exps[v]];
    slot = (slot + x) % p;
  }
  return c;
}

// Degree of gcd of two dense polynomials mod p with nonzero leading terms.
std::size_t gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  const std::uint64_t p = kCertPrime;
  auto trim = [](std::vector<std::uint64_t>& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::uint64_t inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      std::uint64_t f = mul_mod(a.back(), inv, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = (a[shift + k] + p - mul_mod(f, b[k], p)) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

bool certified_coprime(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = 0; v < kMaxParameters; ++v) {
    if (!a.uses(v) || !b.uses(v)) continue;
    auto ia = univariate_image(a, v);
    auto ib = univariate_image(b, v);
    if (!ia || !ib || ia->back() == 0 || ib->back() == 0) return false;
    if (gcd_degree_mod(std::move(*ia), std::move(*ib)) != 0) return false;
  }
  return true;
}

Polynomial gcd_without_monomial_content(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (certified_coprime(a, b)) return Polynomial(1);
  if (a.size() <= b.size()) {
    if (exact_divide(b, a)) return a.monic();
  } else if (exact_divide(a, b)) {
    return b.monic();
  }
  std::size_t v = std::min(a.lowest_variable(), b.lowest_variable());
  if (!a.uses(v)) return gcd(a, content_in(b, v));
  if (!b.uses(v)) return gcd(content_in(a, v), b);
  Polynomial ca = content_in(a, v);
  Polynomial cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial pa = ca.is_one() ? a : *exact_divide(a, ca);
  Polynomial pb = cb.is_one() ? b : *exact_divide(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  Polynomial g;
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, v).monic();
  }
  g = primitive_part_in(g, v);
  return (c * g).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  Monomial common = common_part(ma, mb);
  Polynomial g = gcd_without_monomial_content(a.divided_by_monomial(ma), b.divided_by_monomial(mb));
  return g.times_monomial(common).monic();
}

}  // namespace hopfkit
