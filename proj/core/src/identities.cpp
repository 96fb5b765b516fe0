#include "hopfkit/identities.hpp"

#include <random>
#include <sstream>

#include "hopfkit/errors.hpp"
#include "hopfkit/repr.hpp"

namespace hopfkit {

namespace {

Word letters(std::size_t i, int n) { return Word(static_cast<std::size_t>(n), static_cast<std::uint8_t>(i)); }

FreeElement word_element(const Word& w) { return {{w, Scalar(1)}}; }

AlgebraElement power(const AlgebraHandle& h, Side side, std::size_t i, int n) {
  return h.from_pure(side, word_element(letters(i, n)));
}

GroupElement k_elem(const AlgebraHandle& h, std::size_t i) { return h.datum().K[i]; }
GroupElement l_inv(const AlgebraHandle& h, std::size_t i) { return h.datum().L[i].inverse(); }

IdentityCheck named(std::string name) {
  IdentityCheck c;
  c.name = std::move(name);
  return c;
}

void fail(IdentityCheck& c, const std::string& what) {
  if (c.ok) c.detail = what;
  c.ok = false;
}

/// Random element of U^±_α: random small coefficients on random words.
FreeElement random_element(const AlgebraHandle& h, Side side, const DegreeVector& alpha, std::mt19937_64& rng) {
  const GradedSlice& s = h.slice(side, alpha);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, s.words.size() - 1);
  FreeElement x;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    Scalar& slot = x[s.words[pick(rng)]];
    slot += Scalar(c);
  }
  std::erase_if(x, [](const auto& kv) { return kv.second.is_zero(); });
  if (x.empty()) x[s.words.front()] = Scalar(1);
  return x;
}

Scalar symmetric_number(const Scalar& q, long a) {
  return (q.pow(a) - q.pow(-a)) / (q - q.inverse());
}

Scalar symmetric_binomial(const Scalar& q, long a, long n) {
  Scalar num(1), den(1);
  for (long t = 0; t < n; ++t) {
    num *= symmetric_number(q, a - t);
    den *= symmetric_number(q, t + 1);
  }
  return num / den;
}

Scalar symmetric_factorial(const Scalar& q, long n) {
  Scalar out(1);
  for (long t = 1; t <= n; ++t) out *= symmetric_number(q, t);
  return out;
}

}  // namespace

std::vector<DegreeVector> degrees_up_to(std::size_t theta, int lo, int hi) {
  std::vector<DegreeVector> out;
  for (int height = std::max(lo, 0); height <= hi; ++height) {
    std::vector<int> cur(theta, 0);
    // compositions of height into theta parts, lexicographically descending in the first coordinate
    auto rec = [&](auto& self, std::size_t k, int left) -> void {
      if (k + 1 == theta) {
        cur[k] = left;
        out.emplace_back(cur);
        return;
      }
      for (int x = left; x >= 0; --x) {
        cur[k] = x;
        self(self, k + 1, left - x);
      }
    };
    if (theta == 0) continue;
    rec(rec, 0, height);
  }
  return out;
}

IdentityCheck check_basic_pairing(const AlgebraHandle& h) {
  IdentityCheck c = named("basic pairing (F_i, E_j) = -delta_ij l_i");
  const std::size_t n = h.theta();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++c.cases;
      Scalar expected = i == j ? -h.datum().ell[i] : Scalar(0);
      Scalar got = h.pairing(word_element(letters(i, 1)), word_element(letters(j, 1)));
      if (!(got == expected)) fail(c, "(F" + std::to_string(i + 1) + ", E" + std::to_string(j + 1) + ")");
    }
  return c;
}

IdentityCheck check_gram_nondegenerate(const AlgebraHandle& h, int max_height) {
  IdentityCheck c = named("Gram determinants nonzero");
  for (const auto& alpha : degrees_up_to(h.theta(), 1, max_height)) {
    if (h.dim(Side::Minus, alpha) == 0) continue;
    ++c.cases;
    if (determinant(h.gram(alpha)).is_zero()) fail(c, "singular Gram matrix in degree " + alpha.to_string());
  }
  return c;
}

IdentityCheck check_dual_bases(const AlgebraHandle& h, int max_height) {
  IdentityCheck c = named("dual bases (x^k, y^l) = delta_kl");
  for (const auto& alpha : degrees_up_to(h.theta(), 1, max_height)) {
    if (h.dim(Side::Minus, alpha) == 0) continue;
    const DualBases& d = h.dual_bases(alpha);
    for (std::size_t k = 0; k < d.x_words.size(); ++k) {
      for (std::size_t l = 0; l < d.x_words.size(); ++l) {
        FreeElement y;
        for (std::size_t t = 0; t < d.e_words.size(); ++t)
          if (!d.y(l, t).is_zero()) y[d.e_words[t]] = d.y(l, t);
        ++c.cases;
        Scalar got = h.pairing(word_element(d.x_words[k]), y);
        if (!(got == Scalar(k == l ? 1 : 0))) fail(c, "degree " + alpha.to_string());
      }
    }
  }
  return c;
}

IdentityCheck check_pairing_routes(const AlgebraHandle& h, int max_height, int samples, std::uint64_t seed) {
  IdentityCheck c = named("pairing recursions agree (r-side vs s-side)");
  std::mt19937_64 rng(seed);
  const auto degrees = degrees_up_to(h.theta(), 1, max_height);
  std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
  for (int t = 0; t < samples; ++t) {
    const DegreeVector& alpha = degrees[pick(rng)];
    FreeElement x = random_element(h, Side::Minus, alpha, rng);
    FreeElement y = random_element(h, Side::Plus, alpha, rng);
    ++c.cases;
    Scalar r_side = h.pairing_via(PairingRoute::PeelRightF, x, y);
    Scalar s_side = h.pairing_via(PairingRoute::PeelLeftE, x, y);
    Scalar r_left = h.pairing_via(PairingRoute::PeelLeftF, x, y);
    Scalar s_right = h.pairing_via(PairingRoute::PeelRightE, x, y);
    Scalar words = h.pairing(x, y);
    if (!(r_side == s_side && r_side == r_left && r_side == s_right && r_side == words))
      fail(c, "sample " + std::to_string(t) + " in degree " + alpha.to_string());
  }
  return c;
}

IdentityCheck check_serre_vanish(const AlgebraHandle& h) {
  IdentityCheck c = named("Serre elements reduce to zero");
  for (Side side : {Side::Plus, Side::Minus}) {
    for (const auto& s : h.serre_generators(side)) {
      if (s.degree.height() > h.max_degree()) continue;
      ++c.cases;
      if (!h.reduce(side, s.element).empty())
        fail(c, "generator (" + std::to_string(s.i + 1) + "," + std::to_string(s.j + 1) + ")");
    }
  }
  return c;
}

IdentityCheck check_associativity(const AlgebraHandle& h, int max_height, int samples, std::uint64_t seed) {
  IdentityCheck c = named("associativity of multiplication");
  std::mt19937_64 rng(seed);
  const auto degrees = degrees_up_to(h.theta(), 0, max_height);
  std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
  const auto& datum = h.datum();
  auto random_term = [&]() {
    const DegreeVector& a = degrees[pick(rng)];
    const DegreeVector& b = degrees[pick(rng)];
    AlgebraElement f = a.is_zero() ? h.one() : h.from_pure(Side::Minus, random_element(h, Side::Minus, a, rng));
    AlgebraElement e = b.is_zero() ? h.one() : h.from_pure(Side::Plus, random_element(h, Side::Plus, b, rng));
    GroupElement g = GroupElement::identity(datum.group_rank);
    for (std::size_t k = 0; k < datum.group_rank; ++k) g.exps[k] = static_cast<long>(rng() % 3) - 1;
    return h.multiply(h.multiply(e, h.group(g)), f);
  };
  for (int t = 0; t < samples; ++t) {
    AlgebraElement a = random_term(), b = random_term(), d = random_term();
    ++c.cases;
    try {
      if (!(h.multiply(h.multiply(a, b), d) == h.multiply(a, h.multiply(b, d)))) fail(c, "sample " + std::to_string(t));
    } catch (const DegreeCapExceeded&) {
      --c.cases;
    }
  }
  return c;
}

IdentityCheck check_commutator_with_f(const AlgebraHandle& h, int max_height) {
  IdentityCheck c = named("yF_i - F_iy = l_i(r_i(y)K_i - L_i^-1 r'_i(y))");
  for (const auto& alpha : degrees_up_to(h.theta(), 1, max_height)) {
    for (const Word& w : h.slice(Side::Plus, alpha).canonical) {
      const FreeElement y = word_element(w);
      const AlgebraElement Y = h.from_pure(Side::Plus, y);
      for (std::size_t i = 0; i < h.theta(); ++i) {
        ++c.cases;
        AlgebraElement lhs = h.multiply(Y, h.F(i)) - h.multiply(h.F(i), Y);
        AlgebraElement r = h.from_pure(Side::Plus, h.skew_derivation(Side::Plus, Derivation::R, i, y));
        AlgebraElement rp = h.from_pure(Side::Plus, h.skew_derivation(Side::Plus, Derivation::RPrime, i, y));
        AlgebraElement rhs = (h.multiply(r, h.group(k_elem(h, i))) - h.multiply(h.group(l_inv(h, i)), rp))
                                 .scaled(h.datum().ell[i]);
        if (!(lhs == rhs)) fail(c, "y = " + word_to_string(w, Side::Plus) + ", i = " + std::to_string(i + 1));
      }
    }
  }
  return c;
}

IdentityCheck check_commutator_with_e(const AlgebraHandle& h, int max_height) {
  IdentityCheck c = named("E_ix - xE_i = l_i(K_i s_i(x) - s'_i(x)L_i^-1)");
  for (const auto& alpha : degrees_up_to(h.theta(), 1, max_height)) {
    for (const Word& w : h.slice(Side::Minus, alpha).canonical) {
      const FreeElement x = word_element(w);
      const AlgebraElement X = h.from_pure(Side::Minus, x);
      for (std::size_t i = 0; i < h.theta(); ++i) {
        ++c.cases;
        AlgebraElement lhs = h.multiply(h.E(i), X) - h.multiply(X, h.E(i));
        AlgebraElement s = h.from_pure(Side::Minus, h.skew_derivation(Side::Minus, Derivation::S, i, x));
        AlgebraElement sp = h.from_pure(Side::Minus, h.skew_derivation(Side::Minus, Derivation::SPrime, i, x));
        AlgebraElement rhs = (h.multiply(h.group(k_elem(h, i)), s) - h.multiply(sp, h.group(l_inv(h, i))))
                                 .scaled(h.datum().ell[i]);
        if (!(lhs == rhs)) fail(c, "x = " + word_to_string(w, Side::Minus) + ", i = " + std::to_string(i + 1));
      }
    }
  }
  return c;
}

IdentityCheck check_power_commutators(const AlgebraHandle& h, int bound) {
  IdentityCheck c = named("E_iF_i^n and F_iE_i^n expansions");
  const int n_max = std::min(bound, h.max_degree() - 1);
  for (std::size_t i = 0; i < h.theta(); ++i) {
    const Scalar& qii = h.q(i, i);
    const Scalar& ell = h.datum().ell[i];
    const AlgebraElement K = h.group(k_elem(h, i));
    const AlgebraElement Linv = h.group(l_inv(h, i));
    for (int n = 1; n <= n_max; ++n) {
      const Scalar bracket = (qii.pow(n) - Scalar(1)) / (qii - Scalar(1));
      const Scalar shift = qii.pow(1 - n);
      const AlgebraElement Fn = power(h, Side::Minus, i, n), Fn1 = power(h, Side::Minus, i, n - 1);
      const AlgebraElement En = power(h, Side::Plus, i, n), En1 = power(h, Side::Plus, i, n - 1);
      ++c.cases;
      AlgebraElement lhs = h.multiply(h.E(i), Fn);
      AlgebraElement rhs = h.multiply(Fn, h.E(i)) + h.multiply(K - Linv.scaled(shift), Fn1).scaled(ell * bracket);
      if (!(lhs == rhs)) fail(c, "E F^n, i = " + std::to_string(i + 1) + ", n = " + std::to_string(n));
      ++c.cases;
      lhs = h.multiply(h.F(i), En);
      rhs = h.multiply(En, h.F(i)) + h.multiply(Linv - K.scaled(shift), En1).scaled(ell * bracket);
      if (!(lhs == rhs)) fail(c, "F E^n, i = " + std::to_string(i + 1) + ", n = " + std::to_string(n));
    }
  }
  return c;
}

IdentityCheck check_power_serre_spans(const AlgebraHandle& h, int extra) {
  IdentityCheck c = named("F_i^nF_j and E_i^nE_j in the bounded span");
  const auto& a = h.cartan().a;
  for (Side side : {Side::Minus, Side::Plus}) {
    for (std::size_t i = 0; i < h.theta(); ++i)
      for (std::size_t j = 0; j < h.theta(); ++j) {
        if (i == j) continue;
        const int r = 1 - a[i][j];
        for (int n = r; n <= r + extra && n + 1 <= h.max_degree(); ++n) {
          DegreeVector alpha = DegreeVector::unit(h.theta(), i) * n + DegreeVector::unit(h.theta(), j);
          Matrix<Scalar> span(0, h.dim(side, alpha));
          for (int s = 0; s <= -a[i][j]; ++s) {
            Word w = letters(i, s);
            w.push_back(static_cast<std::uint8_t>(j));
            Word tail = letters(i, n - s);
            w.insert(w.end(), tail.begin(), tail.end());
            span.append_row(h.coordinates(side, alpha, word_element(w)));
          }
          Word target = letters(i, n);
          target.push_back(static_cast<std::uint8_t>(j));
          Matrix<Scalar> extended = span;
          extended.append_row(h.coordinates(side, alpha, word_element(target)));
          ++c.cases;
          if (rank(span) != rank(extended))
            fail(c, word_to_string(target, side) + " outside the span");
        }
      }
  }
  return c;
}

IdentityCheck check_theta_commutation(const AlgebraHandle& h, int max_height) {
  IdentityCheck c = named("theta_alpha commutation in U (x) U");
  for (const auto& alpha : degrees_up_to(h.theta(), 1, max_height)) {
    const TensorElement ta = h.theta_element(alpha);
    for (std::size_t i = 0; i < h.theta(); ++i) {
      const DegreeVector beta = alpha - DegreeVector::unit(h.theta(), i);
      const TensorElement tb = beta.is_nonnegative() ? h.theta_element(beta) : TensorElement{};
      const AlgebraElement one = h.one(), E = h.E(i), F = h.F(i);
      const AlgebraElement K = h.group(k_elem(h, i)), Linv = h.group(l_inv(h, i));
      ++c.cases;
      TensorElement lhs = h.multiply(TensorElement::pure(E, one), ta);
      lhs += h.multiply(TensorElement::pure(K, E), tb);
      TensorElement rhs = h.multiply(ta, TensorElement::pure(E, one));
      rhs += h.multiply(tb, TensorElement::pure(Linv, E));
      if (!(lhs == rhs)) fail(c, "E-rule, alpha = " + alpha.to_string() + ", i = " + std::to_string(i + 1));
      ++c.cases;
      lhs = h.multiply(TensorElement::pure(one, F), ta);
      lhs += h.multiply(TensorElement::pure(F, Linv), tb);
      rhs = h.multiply(ta, TensorElement::pure(one, F));
      rhs += h.multiply(tb, TensorElement::pure(F, K));
      if (!(lhs == rhs)) fail(c, "F-rule, alpha = " + alpha.to_string() + ", i = " + std::to_string(i + 1));
    }
  }
  return c;
}

IdentityCheck check_casimir_commutation(const AlgebraHandle& h, const std::vector<std::vector<int>>& modules) {
  IdentityCheck c = named("Casimir commutation with E_i and F_i");
  std::vector<std::pair<std::vector<int>, Weight>> ms;
  for (const auto& m : modules) ms.emplace_back(m, dominant_character(h, m));
  if (modules.empty()) {
    // smallest k·ω_i with k ∈ {1, 2} realized by a character
    for (std::size_t i = 0; i < h.theta(); ++i) {
      for (int k = 1; k <= 2; ++k) {
        std::vector<int> m(h.theta(), 0);
        m[i] = k;
        try {
          ms.emplace_back(m, dominant_character(h, m));
          break;
        } catch (const NoSolution&) {
        }
      }
    }
  }
  const auto& datum = h.datum();
  for (const auto& [m, chi] : ms) {
    const HighestWeightModule L = simple_module(h, chi);
    const WeightModule& M = L.module;
    const Matrix<Scalar> omega = casimir_plain(M);
    for (std::size_t i = 0; i < h.theta(); ++i) {
      const GroupElement KL = datum.K[i] * datum.L[i];
      Matrix<Scalar> d_e(M.total_dim(), M.total_dim()), d_f(M.total_dim(), M.total_dim());
      for (std::size_t w = 0; w < M.weight_count(); ++w) {
        const Scalar ce = (M.weight(w) * datum.chi[i])(KL).inverse().to_scalar();
        const Scalar cf = M.weight(w)(KL).to_scalar();
        for (std::size_t k = 0; k < M.dim(w); ++k) {
          d_e(M.offset(w) + k, M.offset(w) + k) = ce;
          d_f(M.offset(w) + k, M.offset(w) + k) = cf;
        }
      }
      const Matrix<Scalar> E = M.full_matrix(Side::Plus, i), F = M.full_matrix(Side::Minus, i);
      std::ostringstream label;
      label << "L(";
      for (std::size_t k = 0; k < m.size(); ++k) label << (k ? "," : "") << m[k];
      label << "), i = " << i + 1;
      ++c.cases;
      if (!(omega * E == E * omega * d_e)) fail(c, "E-rule on " + label.str());
      ++c.cases;
      if (!(omega * F == F * omega * d_f)) fail(c, "F-rule on " + label.str());
    }
  }
  return c;
}

IdentityCheck check_rank_one_expansion(const AlgebraHandle& h, int bound) {
  IdentityCheck c = named("rank-one E^rF^s expansion");
  if (h.theta() != 1) {
    c.skipped = true;
    c.detail = "needs a single vertex";
    return c;
  }
  const UnitScalar q11 = h.datum().q(0, 0);
  if (q11.sign() != 1) {
    c.skipped = true;
    c.detail = "q_11 has no square root among units";
    return c;
  }
  UnitScalar root;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    const int e = q11.exponents()[k];
    if (e % 2 != 0) {
      c.skipped = true;
      c.detail = "q_11 has no square root among units";
      return c;
    }
    if (e != 0) root *= UnitScalar::parameter(k, e / 2);
  }
  const Scalar q = root.to_scalar();
  const Scalar step = q - q.inverse();
  const Scalar scale = h.datum().ell[0] * step;
  const AlgebraElement K = h.group(k_elem(h, 0)), Linv = h.group(l_inv(h, 0));
  auto kl = [&](long a) { return K.scaled(q.pow(a) / step) - Linv.scaled(q.pow(-a) / step); };
  const int top = std::min(bound, h.max_degree() / 2);
  for (int r = 0; r <= top; ++r)
    for (int s = 0; s <= top; ++s) {
      AlgebraElement lhs = h.multiply(power(h, Side::Plus, 0, r), power(h, Side::Minus, 0, s));
      AlgebraElement rhs;
      for (int k = 0; k <= std::min(r, s); ++k) {
        AlgebraElement hk = h.one().scaled(scale.pow(k) * symmetric_binomial(q, r, k) * symmetric_binomial(q, s, k) *
                                           symmetric_factorial(q, k));
        for (int j = 1; j <= k; ++j) hk = h.multiply(hk, kl(k - (r + s) + j));
        rhs += h.multiply(h.multiply(power(h, Side::Minus, 0, s - k), hk), power(h, Side::Plus, 0, r - k));
      }
      ++c.cases;
      if (!(lhs == rhs)) fail(c, "r = " + std::to_string(r) + ", s = " + std::to_string(s));
    }
  return c;
}

std::vector<IdentityCheck> check_identities(const AlgebraHandle& h, const IdentityOptions& o) {
  const int cap = h.max_degree();
  std::vector<IdentityCheck> out;
  out.push_back(check_basic_pairing(h));
  out.push_back(check_gram_nondegenerate(h, std::min(o.gram_degree, cap)));
  out.push_back(check_dual_bases(h, std::min(o.pairing_degree, cap)));
  out.push_back(check_pairing_routes(h, std::min(o.pairing_degree, cap), o.pairing_samples, o.seed));
  out.push_back(check_serre_vanish(h));
  out.push_back(check_associativity(h, std::min(o.associativity_degree, cap / 3), o.associativity_samples, o.seed + 1));
  out.push_back(check_commutator_with_f(h, std::min(o.rules_degree, cap - 1)));
  out.push_back(check_commutator_with_e(h, std::min(o.rules_degree, cap - 1)));
  out.push_back(check_power_commutators(h, o.power_bound));
  out.push_back(check_power_serre_spans(h, 2));
  out.push_back(check_theta_commutation(h, std::min(o.quasi_degree, cap - 1)));
  if (h.cartan().finite_type) out.push_back(check_casimir_commutation(h, o.casimir_modules));
  out.push_back(check_rank_one_expansion(h, o.rank_one_bound));
  return out;
}

}  // namespace hopfkit
