#include "hopfkit/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "hopfkit/errors.hpp"
#include "hopfkit/modp.hpp"

namespace hopfkit {

// ------------------------------------------------------------------- words

DegreeVector word_degree(const Word& w, std::size_t theta) {
  DegreeVector d = DegreeVector::zero(theta);
  for (auto letter : w) ++d[letter];
  return d;
}

std::string word_to_string(const Word& w, Side side) {
  if (w.empty()) return "1";
  std::string out;
  const char letter = side == Side::Plus ? 'E' : 'F';
  for (auto l : w) out += letter + std::to_string(l + 1);
  return out;
}

std::string free_element_to_string(const FreeElement& x, Side side, const ParameterSpace& params) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(params) + ")*" + word_to_string(w, side);
  }
  return out;
}

std::vector<Word> words_of_degree(const DegreeVector& alpha) {
  std::vector<Word> out;
  if (!alpha.is_nonnegative()) return out;
  std::vector<int> remaining = alpha.coords;
  Word current;
  const int total = alpha.height();
  std::function<void()> rec = [&]() {
    if (static_cast<int>(current.size()) == total) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (remaining[i] == 0) continue;
      --remaining[i];
      current.push_back(static_cast<std::uint8_t>(i));
      rec();
      current.pop_back();
      ++remaining[i];
    }
  };
  rec();
  return out;
}

namespace {

void add_to(FreeElement& x, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

Word without(const Word& w, std::size_t p) {
  Word r;
  r.reserve(w.size() - 1);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k != p) r.push_back(w[k]);
  }
  return r;
}

Word prepend(std::uint8_t letter, const Word& w) {
  Word r;
  r.reserve(w.size() + 1);
  r.push_back(letter);
  r.insert(r.end(), w.begin(), w.end());
  return r;
}

Word append(const Word& w, std::uint8_t letter) {
  Word r = w;
  r.push_back(letter);
  return r;
}

int side_index(Side s) { return s == Side::Plus ? 0 : 1; }

}  // namespace

// ----------------------------------------------------------- AlgebraElement

AlgebraElement AlgebraElement::term(AlgebraTerm t, Scalar coefficient) {
  AlgebraElement a;
  a.add(t, coefficient);
  return a;
}

void AlgebraElement::add(const AlgebraTerm& t, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
  AlgebraElement r;
  for (const auto& [t, c] : terms_) r.add(t, c * s);
  return r;
}

std::string AlgebraElement::to_string(const ParameterSpace& params) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(params) + ")";
    if (!t.f.empty()) out += "*" + word_to_string(t.f, Side::Minus);
    if (!t.e.empty()) out += "*" + word_to_string(t.e, Side::Plus);
    if (!t.g.is_identity()) out += "*g" + t.g.to_string();
  }
  return out;
}

TensorElement TensorElement::pure(const AlgebraElement& a, const AlgebraElement& b) {
  TensorElement t;
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) t.add(ta, tb, ca * cb);
  return t;
}

void TensorElement::add(const AlgebraTerm& a, const AlgebraTerm& b, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

// -------------------------------------------------------------------- handle

int default_max_degree() {
  if (const char* env = std::getenv("HOPFKIT_MAX_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 16;
}

struct AlgebraHandle::Impl {
  ReducedDatum datum;
  CartanData cartan;
  int max_degree = 16;
  bool pre_nichols = false;
  std::size_t theta = 0;
  std::vector<std::vector<Scalar>> q;
  std::vector<std::vector<ModP>> q_mod;
  Specialization specialization{0x5eed'2024'0b1a'5e11ULL};
  std::vector<SerreGenerator> serre[2];

  struct SliceData {
    GradedSlice slice;
    std::vector<std::vector<ModP>> ideal_rows;  ///< echelon basis of the ideal mod p, dense over words
  };

  mutable std::recursive_mutex mutex;
  mutable std::map<DegreeVector, SliceData> slices[2];
  mutable std::map<std::pair<Word, Word>, Scalar> bare_memo;
  mutable std::map<std::tuple<int, std::size_t, DegreeVector>, Matrix<Scalar>> derivation_cache;
  mutable std::map<std::tuple<int, std::size_t, DegreeVector>, Matrix<Scalar>> left_mult_cache;
  mutable std::map<DegreeVector, DualBases> dual_cache;

  // χ_β(K_i) and χ_β(L_i) from the braiding.
  Scalar chi_on_K(const DegreeVector& beta, std::size_t i) const {
    UnitScalar u;
    for (std::size_t k = 0; k < theta; ++k) {
      if (beta[k]) u *= datum.q(i, k).pow(beta[k]);
    }
    return u.to_scalar();
  }
  Scalar chi_on_L(const DegreeVector& beta, std::size_t i) const {
    UnitScalar u;
    for (std::size_t k = 0; k < theta; ++k) {
      if (beta[k]) u *= datum.q(k, i).pow(beta[k]);
    }
    return u.to_scalar();
  }

  void check_cap(const DegreeVector& alpha) const {
    if (alpha.height() > max_degree)
      throw DegreeCapExceeded("degree " + alpha.to_string() + " exceeds the cap " + std::to_string(max_degree) +
                              " (set HOPFKIT_MAX_DEGREE to raise it)");
  }

  // Bare form: (F_i, E_i) normalized to 1.
  Scalar bare(const Word& w, const Word& v) const {
    if (w.size() != v.size()) return Scalar(0);
    if (w.empty()) return Scalar(1);
    auto key = std::make_pair(w, v);
    if (auto it = bare_memo.find(key); it != bare_memo.end()) return it->second;
    const std::uint8_t i = w.back();
    Word rest(w.begin(), w.end() - 1);
    Scalar total(0);
    Scalar coef(1);
    for (std::size_t p = v.size(); p-- > 0;) {
      if (v[p] == i) {
        Scalar sub = bare(rest, without(v, p));
        if (!sub.is_zero()) total += coef * sub;
      }
      coef *= q[i][v[p]];
    }
    bare_memo.emplace(std::move(key), total);
    return total;
  }

  Scalar form_factor(const DegreeVector& alpha) const {
    Scalar f(1);
    for (std::size_t i = 0; i < theta; ++i) {
      if (alpha[i]) f *= (-datum.ell[i]).pow(alpha[i]);
    }
    return f;
  }

  FreeElement derive_word(Derivation which, std::size_t i, const Word& w) const {
    FreeElement out;
    const std::size_t n = w.size();
    switch (which) {
      case Derivation::R: {
        Scalar coef(1);
        for (std::size_t p = n; p-- > 0;) {
          if (w[p] == i) add_to(out, without(w, p), coef);
          coef *= q[i][w[p]];
        }
        break;
      }
      case Derivation::RPrime: {
        Scalar coef(1);
        for (std::size_t p = 0; p < n; ++p) {
          if (w[p] == i) add_to(out, without(w, p), coef);
          coef *= q[w[p]][i];
        }
        break;
      }
      case Derivation::S: {
        Scalar coef(1);
        for (std::size_t p = 0; p < n; ++p) {
          if (w[p] == i) add_to(out, without(w, p), coef);
          coef *= q[i][w[p]];
        }
        break;
      }
      case Derivation::SPrime: {
        Scalar coef(1);
        for (std::size_t p = n; p-- > 0;) {
          if (w[p] == i) add_to(out, without(w, p), coef);
          coef *= q[w[p]][i];
        }
        break;
      }
    }
    return out;
  }

  // ------------------------------------------------------- Serre generators

  void build_serre() {
    for (std::size_t i = 0; i < theta; ++i)
      for (std::size_t j = 0; j < theta; ++j) {
        if (i == j) continue;
        const int n = 1 - cartan.a[i][j];
        for (Side side : {Side::Plus, Side::Minus}) {
          FreeElement y{{Word{static_cast<std::uint8_t>(j)}, Scalar(1)}};
          DegreeVector beta = DegreeVector::unit(theta, j);
          for (int step = 0; step < n; ++step) {
            // Plus: braiding from K_i; Minus: on w_i = F_iL_i, braiding from L_i with χ⁻¹.
            Scalar c = side == Side::Plus ? chi_on_K(beta, i) : chi_on_L(beta, i).inverse();
            FreeElement next;
            for (const auto& [w, coef] : y) {
              add_to(next, prepend(static_cast<std::uint8_t>(i), w), coef);
              add_to(next, append(w, static_cast<std::uint8_t>(i)), -(c * coef));
            }
            y = std::move(next);
            beta[i] += 1;
          }
          if (side == Side::Minus) {
            // w_{j1}···w_{jn} = (Π_{r<p} q_{j_p j_r})⁻¹ F_w L_w
            FreeElement converted;
            for (const auto& [w, coef] : y) {
              Scalar cw(1);
              for (std::size_t p = 0; p < w.size(); ++p)
                for (std::size_t r = 0; r < p; ++r) cw *= q[w[p]][w[r]];
              add_to(converted, w, coef / cw);
            }
            y = std::move(converted);
          }
          serre[side_index(side)].push_back({i, j, beta, std::move(y)});
        }
      }
  }

  // ------------------------------------------------------------- slices

  static void echelon_insert(std::vector<std::vector<ModP>>& rows, std::vector<std::size_t>& pivots,
                             std::vector<ModP> candidate) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      ModP f = candidate[pivots[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < candidate.size(); ++c) {
        if (!rows[r][c].is_zero()) candidate[c] -= f * rows[r][c];
      }
    }
    for (std::size_t c = 0; c < candidate.size(); ++c) {
      if (candidate[c].is_zero()) continue;
      ModP inv = candidate[c].inverse();
      for (auto& x : candidate) x *= inv;
      // keep earlier rows reduced against the new pivot
      for (auto& row : rows) {
        ModP f = row[c];
        if (f.is_zero()) continue;
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (!candidate[k].is_zero()) row[k] -= f * candidate[k];
        }
      }
      rows.push_back(std::move(candidate));
      pivots.push_back(c);
      return;
    }
  }

  SliceData& slice_data(Side side, const DegreeVector& alpha) const {
    auto& cache = slices[side_index(side)];
    if (auto it = cache.find(alpha); it != cache.end()) return it->second;
    check_cap(alpha);
    build_degree(alpha);
    return cache.at(alpha);
  }

  void build_mod_p(Side side, const DegreeVector& alpha, SliceData& out) const {
    GradedSlice& s = out.slice;
    const std::size_t n = s.words.size();
    std::vector<std::size_t> pivots;
    auto push_free = [&](const FreeElement& x) {
      std::vector<ModP> row(n, ModP(0));
      for (const auto& [w, c] : x) row[s.word_index.at(w)] += specialization(c);
      echelon_insert(out.ideal_rows, pivots, std::move(row));
    };
    for (const auto& g : serre[side_index(side)]) {
      if (g.degree == alpha) push_free(g.element);
    }
    for (std::size_t i = 0; i < theta && out.ideal_rows.size() < n; ++i) {
      if (alpha[i] == 0) continue;
      DegreeVector beta = alpha;
      beta[i] -= 1;
      const SliceData& lower = slice_data(side, beta);
      const auto& lw = lower.slice.words;
      std::vector<std::size_t> left_idx(lw.size()), right_idx(lw.size());
      for (std::size_t k = 0; k < lw.size(); ++k) {
        left_idx[k] = s.word_index.at(prepend(static_cast<std::uint8_t>(i), lw[k]));
        right_idx[k] = s.word_index.at(append(lw[k], static_cast<std::uint8_t>(i)));
      }
      for (const auto& lrow : lower.ideal_rows) {
        for (const auto* idx : {&left_idx, &right_idx}) {
          if (out.ideal_rows.size() == n) break;
          std::vector<ModP> row(n, ModP(0));
          for (std::size_t k = 0; k < lw.size(); ++k) row[(*idx)[k]] = lrow[k];
          echelon_insert(out.ideal_rows, pivots, std::move(row));
        }
      }
    }
    s.ideal_rank = out.ideal_rows.size();
    // canonical words: complement of the pivots when the largest words come first
    Matrix<ModP> m(out.ideal_rows.size(), n);
    for (std::size_t r = 0; r < out.ideal_rows.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = out.ideal_rows[r][n - 1 - c];
    auto piv = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[n - 1 - c] = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_pivot[k]) s.canonical.push_back(s.words[k]);
    }
  }

  // Exact elimination over every placement u·S·v; used when certification fails.
  void build_exact(Side side, const DegreeVector& alpha, GradedSlice& s) const {
    const std::size_t n = s.words.size();
    Matrix<Scalar> m;
    for (const auto& g : serre[side_index(side)]) {
      DegreeVector rest = alpha - g.degree;
      if (!rest.is_nonnegative()) continue;
      std::vector<DegreeVector> splits;
      std::function<void(std::size_t, DegreeVector)> rec = [&](std::size_t k, DegreeVector left) {
        if (k == theta) {
          splits.push_back(left);
          return;
        }
        for (int x = 0; x <= rest[k]; ++x) {
          left[k] = x;
          rec(k + 1, left);
        }
      };
      rec(0, DegreeVector::zero(theta));
      for (const auto& left : splits) {
        for (const auto& u : words_of_degree(left))
          for (const auto& v : words_of_degree(rest - left)) {
            std::vector<Scalar> row(n, Scalar(0));
            for (const auto& [w, c] : g.element) {
              Word full = u;
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), v.begin(), v.end());
              row[n - 1 - s.word_index.at(full)] += c;
            }
            m.append_row(row);
          }
      }
    }
    s.canonical.clear();
    s.canonical_index.clear();
    s.reduction.assign(n, {});
    if (m.rows() == 0) {
      s.ideal_rank = 0;
      s.canonical = s.words;
    } else {
      auto piv = rref(m);
      s.ideal_rank = piv.size();
      std::vector<bool> is_pivot(n, false);
      for (auto c : piv) is_pivot[n - 1 - c] = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_pivot[k]) s.canonical.push_back(s.words[k]);
      }
      for (std::size_t k = 0; k < s.canonical.size(); ++k) s.canonical_index[s.canonical[k]] = k;
      for (std::size_t r = 0; r < piv.size(); ++r) {
        std::size_t word = n - 1 - piv[r];
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t other = n - 1 - c;
          if (is_pivot[other] || m(r, c).is_zero()) continue;
          s.reduction[word].emplace_back(s.canonical_index.at(s.words[other]), -m(r, c));
        }
      }
    }
    s.canonical_index.clear();
    for (std::size_t k = 0; k < s.canonical.size(); ++k) s.canonical_index[s.canonical[k]] = k;
    for (std::size_t k = 0; k < n; ++k) {
      if (auto it = s.canonical_index.find(s.words[k]); it != s.canonical_index.end()) {
        s.reduction[k] = {{it->second, Scalar(1)}};
      }
    }
    s.certified = false;
  }

  void build_degree(const DegreeVector& alpha) const {
    SliceData data[2];
    for (Side side : {Side::Plus, Side::Minus}) {
      SliceData& d = data[side_index(side)];
      d.slice.alpha = alpha;
      d.slice.words = words_of_degree(alpha);
      for (std::size_t k = 0; k < d.slice.words.size(); ++k) d.slice.word_index[d.slice.words[k]] = k;
      if (d.slice.words.empty()) continue;
      build_mod_p(side, alpha, d);
      for (std::size_t k = 0; k < d.slice.canonical.size(); ++k) d.slice.canonical_index[d.slice.canonical[k]] = k;
    }
    GradedSlice& plus = data[0].slice;
    GradedSlice& minus = data[1].slice;
    const std::size_t dim = minus.canonical.size();
    bool certified = dim == plus.canonical.size();
    std::optional<Matrix<Scalar>> inv;
    if (certified && dim > 0) {
      Matrix<Scalar> g(dim, dim);
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) g(a, b) = bare(minus.canonical[a], plus.canonical[b]);
      inv = inverse(g);
      certified = inv.has_value();
    }
    if (certified) {
      // inv = scaled / common with scaled free of non-monomial denominators
      Polynomial common(1);
      for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
          const Polynomial& den = (*inv)(a, b).denominator();
          if (den.is_monomial()) continue;
          Polynomial g = gcd(common, den);
          common = common * *exact_divide(den, g);
        }
      }
      const Scalar common_scalar(common);
      Matrix<Scalar> scaled(dim, dim);
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) scaled(a, b) = (*inv)(a, b) * common_scalar;
      inv = std::move(scaled);
      for (GradedSlice* s : {&plus, &minus}) {
        s->certified = true;
        s->reduction.assign(s->words.size(), {});
      }
      for (std::size_t k = 0; k < minus.words.size(); ++k) {
        if (auto it = minus.canonical_index.find(minus.words[k]); it != minus.canonical_index.end()) {
          minus.reduction[k] = {{it->second, Scalar(1)}};
          continue;
        }
        // a = P_w G⁻¹ with P_w[v] = (F_w, E_v) over canonical E-words
        std::vector<Scalar> p(dim);
        for (std::size_t v = 0; v < dim; ++v) p[v] = bare(minus.words[k], plus.canonical[v]);
        for (std::size_t c = 0; c < dim; ++c) {
          Scalar a(0);
          for (std::size_t v = 0; v < dim; ++v) {
            if (!p[v].is_zero() && !(*inv)(v, c).is_zero()) a += p[v] * (*inv)(v, c);
          }
          if (!a.is_zero()) minus.reduction[k].emplace_back(c, a / common_scalar);
        }
      }
      for (std::size_t k = 0; k < plus.words.size(); ++k) {
        if (auto it = plus.canonical_index.find(plus.words[k]); it != plus.canonical_index.end()) {
          plus.reduction[k] = {{it->second, Scalar(1)}};
          continue;
        }
        // b = G⁻¹ Q_u with Q_u[c'] = (F_{c'}, E_u)
        std::vector<Scalar> qv(dim);
        for (std::size_t c = 0; c < dim; ++c) qv[c] = bare(minus.canonical[c], plus.words[k]);
        for (std::size_t c = 0; c < dim; ++c) {
          Scalar b(0);
          for (std::size_t v = 0; v < dim; ++v) {
            if (!qv[v].is_zero() && !(*inv)(c, v).is_zero()) b += (*inv)(c, v) * qv[v];
          }
          if (!b.is_zero()) plus.reduction[k].emplace_back(c, b / common_scalar);
        }
      }
    } else {
      build_exact(Side::Plus, alpha, plus);
      build_exact(Side::Minus, alpha, minus);
    }
    slices[0].emplace(alpha, std::move(data[0]));
    slices[1].emplace(alpha, std::move(data[1]));
  }
};

AlgebraHandle::AlgebraHandle(ReducedDatum datum, std::optional<int> max_degree) : impl_(std::make_unique<Impl>()) {
  validate_reduced(datum);
  impl_->cartan = detect_cartan(datum);
  impl_->datum = std::move(datum);
  impl_->theta = impl_->datum.theta();
  impl_->max_degree = max_degree.value_or(default_max_degree());
  const std::size_t n = impl_->theta;
  impl_->q.assign(n, std::vector<Scalar>(n));
  impl_->q_mod.assign(n, std::vector<ModP>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      impl_->q[i][j] = impl_->datum.q(i, j).to_scalar();
      impl_->q_mod[i][j] = impl_->specialization(impl_->datum.q(i, j));
    }
  impl_->pre_nichols = !(impl_->cartan.finite_type && check_dj2(impl_->datum).has_value());
  impl_->build_serre();
}

AlgebraHandle::~AlgebraHandle() = default;
AlgebraHandle::AlgebraHandle(AlgebraHandle&&) noexcept = default;
AlgebraHandle& AlgebraHandle::operator=(AlgebraHandle&&) noexcept = default;

const ReducedDatum& AlgebraHandle::datum() const { return impl_->datum; }
const CartanData& AlgebraHandle::cartan() const { return impl_->cartan; }
std::size_t AlgebraHandle::theta() const { return impl_->theta; }
int AlgebraHandle::max_degree() const { return impl_->max_degree; }
bool AlgebraHandle::pre_nichols_assumption() const { return impl_->pre_nichols; }
const Scalar& AlgebraHandle::q(std::size_t i, std::size_t j) const { return impl_->q[i][j]; }
Scalar AlgebraHandle::basic_pairing(std::size_t i) const { return -impl_->datum.ell[i]; }

UnitScalar AlgebraHandle::chi_degree(const DegreeVector& beta, const GroupElement& g) const {
  UnitScalar u;
  for (std::size_t k = 0; k < impl_->theta; ++k) {
    if (beta[k]) u *= impl_->datum.chi[k](g).pow(beta[k]);
  }
  return u;
}

const std::vector<SerreGenerator>& AlgebraHandle::serre_generators(Side side) const {
  return impl_->serre[side_index(side)];
}

const GradedSlice& AlgebraHandle::slice(Side side, const DegreeVector& alpha) const {
  std::lock_guard lock(impl_->mutex);
  return impl_->slice_data(side, alpha).slice;
}

std::size_t AlgebraHandle::dim(Side side, const DegreeVector& alpha) const {
  if (!alpha.is_nonnegative()) return 0;
  return slice(side, alpha).dim();
}

void AlgebraHandle::warm(int degree) const {
  std::lock_guard lock(impl_->mutex);
  std::function<void(std::size_t, DegreeVector, int)> rec = [&](std::size_t k, DegreeVector a, int left) {
    if (k == impl_->theta) {
      slice(Side::Plus, a);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      a[k] = x;
      rec(k + 1, a, left - x);
    }
  };
  rec(0, DegreeVector::zero(impl_->theta), std::min(degree, impl_->max_degree));
}

FreeElement AlgebraHandle::reduce(Side side, const FreeElement& x) const {
  std::lock_guard lock(impl_->mutex);
  FreeElement out;
  for (const auto& [w, c] : x) {
    const GradedSlice& s = slice(side, word_degree(w, impl_->theta));
    for (const auto& [k, r] : s.reduction[s.word_index.at(w)]) add_to(out, s.canonical[k], c * r);
  }
  return out;
}

std::vector<Scalar> AlgebraHandle::coordinates(Side side, const DegreeVector& alpha, const FreeElement& x) const {
  std::lock_guard lock(impl_->mutex);
  const GradedSlice& s = slice(side, alpha);
  std::vector<Scalar> coords(s.dim(), Scalar(0));
  for (const auto& [w, c] : x) {
    auto it = s.word_index.find(w);
    if (it == s.word_index.end()) throw Error("element is not homogeneous of degree " + alpha.to_string());
    for (const auto& [k, r] : s.reduction[it->second]) coords[k] += c * r;
  }
  return coords;
}

FreeElement AlgebraHandle::from_coordinates(Side side, const DegreeVector& alpha, const std::vector<Scalar>& coords) const {
  const GradedSlice& s = slice(side, alpha);
  FreeElement out;
  for (std::size_t k = 0; k < coords.size(); ++k) add_to(out, s.canonical[k], coords[k]);
  return out;
}

FreeElement AlgebraHandle::skew_derivation(Side side, Derivation which, std::size_t i, const FreeElement& x) const {
  const bool plus_op = which == Derivation::R || which == Derivation::RPrime;
  if (plus_op != (side == Side::Plus))
    throw WrongSide(plus_op ? "r_i and r'_i act on U+ only" : "s_i and s'_i act on U- only");
  FreeElement raw;
  for (const auto& [w, c] : x) {
    for (const auto& [w2, c2] : impl_->derive_word(which, i, w)) add_to(raw, w2, c * c2);
  }
  return reduce(side, raw);
}

const Matrix<Scalar>& AlgebraHandle::derivation_matrix(Derivation which, std::size_t i, const DegreeVector& alpha) const {
  std::lock_guard lock(impl_->mutex);
  auto key = std::make_tuple(static_cast<int>(which), i, alpha);
  if (auto it = impl_->derivation_cache.find(key); it != impl_->derivation_cache.end()) return it->second;
  const Side side = (which == Derivation::R || which == Derivation::RPrime) ? Side::Plus : Side::Minus;
  DegreeVector beta = alpha;
  beta[i] -= 1;
  const GradedSlice& src = slice(side, alpha);
  Matrix<Scalar> m(beta.is_nonnegative() ? dim(side, beta) : 0, src.dim());
  if (beta.is_nonnegative()) {
    for (std::size_t c = 0; c < src.dim(); ++c) {
      auto coords = coordinates(side, beta, impl_->derive_word(which, i, src.canonical[c]));
      for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
    }
  }
  return impl_->derivation_cache.emplace(key, std::move(m)).first->second;
}

const Matrix<Scalar>& AlgebraHandle::left_multiplication_matrix(Side side, std::size_t j, const DegreeVector& alpha) const {
  std::lock_guard lock(impl_->mutex);
  auto key = std::make_tuple(side_index(side), j, alpha);
  if (auto it = impl_->left_mult_cache.find(key); it != impl_->left_mult_cache.end()) return it->second;
  DegreeVector beta = alpha;
  beta[j] += 1;
  const GradedSlice& src = slice(side, alpha);
  const GradedSlice& dst = slice(side, beta);
  Matrix<Scalar> m(dst.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    Word w = prepend(static_cast<std::uint8_t>(j), src.canonical[c]);
    for (const auto& [k, r] : dst.reduction[dst.word_index.at(w)]) m(k, c) = r;
  }
  return impl_->left_mult_cache.emplace(key, std::move(m)).first->second;
}

Scalar AlgebraHandle::pairing(const FreeElement& x, const FreeElement& y) const {
  std::lock_guard lock(impl_->mutex);
  Scalar total(0);
  for (const auto& [w, cw] : x) {
    DegreeVector dw = word_degree(w, impl_->theta);
    for (const auto& [v, cv] : y) {
      if (!(word_degree(v, impl_->theta) == dw)) continue;
      Scalar b = impl_->bare(w, v);
      if (!b.is_zero()) total += cw * cv * b * impl_->form_factor(dw);
    }
  }
  return total;
}

namespace {

std::map<DegreeVector, FreeElement> split_by_degree(const FreeElement& x, std::size_t theta) {
  std::map<DegreeVector, FreeElement> out;
  for (const auto& [w, c] : x) out[word_degree(w, theta)].emplace(w, c);
  return out;
}

}  // namespace

Scalar AlgebraHandle::pairing_via(PairingRoute route, const FreeElement& x_in, const FreeElement& y_in) const {
  FreeElement x = reduce(Side::Minus, x_in);
  FreeElement y = reduce(Side::Plus, y_in);
  auto xs = split_by_degree(x, impl_->theta);
  auto ys = split_by_degree(y, impl_->theta);
  Scalar total(0);
  for (const auto& [deg, xd] : xs) {
    auto it = ys.find(deg);
    if (it == ys.end()) continue;
    const FreeElement& yd = it->second;
    if (deg.height() == 0) {
      total += xd.begin()->second * yd.begin()->second;
      continue;
    }
    for (std::size_t i = 0; i < impl_->theta; ++i) {
      const auto letter = static_cast<std::uint8_t>(i);
      Scalar part(0);
      switch (route) {
        case PairingRoute::PeelRightF:
        case PairingRoute::PeelLeftF: {
          const bool right = route == PairingRoute::PeelRightF;
          FreeElement xi;
          for (const auto& [w, c] : xd) {
            if ((right ? w.back() : w.front()) != letter) continue;
            add_to(xi, right ? Word(w.begin(), w.end() - 1) : Word(w.begin() + 1, w.end()), c);
          }
          if (xi.empty()) continue;
          FreeElement ry = skew_derivation(Side::Plus, right ? Derivation::R : Derivation::RPrime, i, yd);
          part = pairing_via(route, xi, ry);
          break;
        }
        case PairingRoute::PeelLeftE:
        case PairingRoute::PeelRightE: {
          const bool left = route == PairingRoute::PeelLeftE;
          FreeElement yi;
          for (const auto& [v, c] : yd) {
            if ((left ? v.front() : v.back()) != letter) continue;
            add_to(yi, left ? Word(v.begin() + 1, v.end()) : Word(v.begin(), v.end() - 1), c);
          }
          if (yi.empty()) continue;
          FreeElement sx = skew_derivation(Side::Minus, left ? Derivation::S : Derivation::SPrime, i, xd);
          part = pairing_via(route, sx, yi);
          break;
        }
      }
      if (!part.is_zero()) total += basic_pairing(i) * part;
    }
  }
  return total;
}

Matrix<Scalar> AlgebraHandle::gram(const DegreeVector& alpha) const {
  std::lock_guard lock(impl_->mutex);
  const GradedSlice& minus = slice(Side::Minus, alpha);
  const GradedSlice& plus = slice(Side::Plus, alpha);
  Matrix<Scalar> g(minus.dim(), plus.dim());
  Scalar factor = impl_->form_factor(alpha);
  for (std::size_t a = 0; a < minus.dim(); ++a)
    for (std::size_t b = 0; b < plus.dim(); ++b) g(a, b) = factor * impl_->bare(minus.canonical[a], plus.canonical[b]);
  return g;
}

const DualBases& AlgebraHandle::dual_bases(const DegreeVector& alpha) const {
  std::lock_guard lock(impl_->mutex);
  if (auto it = impl_->dual_cache.find(alpha); it != impl_->dual_cache.end()) return it->second;
  Matrix<Scalar> g = gram(alpha);
  if (g.rows() != g.cols()) throw SingularGram("U- and U+ have different dimensions in degree " + alpha.to_string());
  auto y = inverse(g.transpose());
  if (!y) throw SingularGram("the form is degenerate in degree " + alpha.to_string());
  DualBases d{alpha, slice(Side::Minus, alpha).canonical, slice(Side::Plus, alpha).canonical, std::move(*y)};
  return impl_->dual_cache.emplace(alpha, std::move(d)).first->second;
}

TensorElement AlgebraHandle::theta_element(const DegreeVector& alpha) const {
  TensorElement t;
  if (!alpha.is_nonnegative()) return t;
  const DualBases& d = dual_bases(alpha);
  for (std::size_t k = 0; k < d.x_words.size(); ++k) {
    FreeElement yk;
    for (std::size_t l = 0; l < d.e_words.size(); ++l) add_to(yk, d.e_words[l], d.y(k, l));
    t += TensorElement::pure(from_pure(Side::Minus, {{d.x_words[k], Scalar(1)}}), from_pure(Side::Plus, yk));
  }
  return t;
}

AlgebraElement AlgebraHandle::one() const {
  return AlgebraElement::term({{}, {}, GroupElement::identity(impl_->datum.group_rank)});
}

AlgebraElement AlgebraHandle::E(std::size_t i) const {
  return AlgebraElement::term({{}, {static_cast<std::uint8_t>(i)}, GroupElement::identity(impl_->datum.group_rank)});
}

AlgebraElement AlgebraHandle::F(std::size_t i) const {
  return AlgebraElement::term({{static_cast<std::uint8_t>(i)}, {}, GroupElement::identity(impl_->datum.group_rank)});
}

AlgebraElement AlgebraHandle::group(const GroupElement& g) const { return AlgebraElement::term({{}, {}, g}); }

AlgebraElement AlgebraHandle::from_pure(Side side, const FreeElement& x) const {
  AlgebraElement out;
  const GroupElement id = GroupElement::identity(impl_->datum.group_rank);
  for (const auto& [w, c] : reduce(side, x)) {
    out.add(side == Side::Plus ? AlgebraTerm{{}, w, id} : AlgebraTerm{w, {}, id}, c);
  }
  return out;
}

namespace {

struct Rewriter {
  const AlgebraHandle& h;

  AlgebraElement left_group(const GroupElement& g, const AlgebraElement& y) const {
    AlgebraElement out;
    const std::size_t n = h.theta();
    for (const auto& [t, c] : y.terms()) {
      UnitScalar s = h.chi_degree(word_degree(t.f, n), g).inverse() * h.chi_degree(word_degree(t.e, n), g);
      out.add({t.f, t.e, g * t.g}, c * s.to_scalar());
    }
    return out;
  }

  AlgebraElement left_F(std::size_t i, const AlgebraElement& y) const {
    AlgebraElement out;
    for (const auto& [t, c] : y.terms()) {
      for (const auto& [w, r] : h.reduce(Side::Minus, {{prepend(static_cast<std::uint8_t>(i), t.f), Scalar(1)}}))
        out.add({w, t.e, t.g}, c * r);
    }
    return out;
  }

  AlgebraElement left_E(std::size_t i, const AlgebraElement& y) const {
    AlgebraElement out;
    const std::size_t n = h.theta();
    const ReducedDatum& d = h.datum();
    const Scalar& ell = d.ell[i];
    for (const auto& [t, c] : y.terms()) {
      for (const auto& [w, r] : h.reduce(Side::Plus, {{prepend(static_cast<std::uint8_t>(i), t.e), Scalar(1)}}))
        out.add({t.f, w, t.g}, c * r);
      DegreeVector da = word_degree(t.f, n);
      if (da[i] == 0) continue;
      DegreeVector db = word_degree(t.e, n);
      DegreeVector lower = da - DegreeVector::unit(n, i);
      FreeElement fa{{t.f, Scalar(1)}};
      // K_i s_i(F_a) E_b = χ_{a−α_i}⁻¹(K_i) χ_b(K_i) s_i(F_a) E_b K_i
      Scalar ks = ell * (h.chi_degree(lower, d.K[i]).inverse() * h.chi_degree(db, d.K[i])).to_scalar();
      GroupElement kg = d.K[i] * t.g;
      for (const auto& [w, r] : h.skew_derivation(Side::Minus, Derivation::S, i, fa)) out.add({w, t.e, kg}, c * ks * r);
      // s'_i(F_a) L_i⁻¹ E_b = χ_b(L_i)⁻¹ s'_i(F_a) E_b L_i⁻¹
      Scalar ls = -(ell * h.chi_degree(db, d.L[i]).inverse().to_scalar());
      GroupElement lg = d.L[i].inverse() * t.g;
      for (const auto& [w, r] : h.skew_derivation(Side::Minus, Derivation::SPrime, i, fa)) out.add({w, t.e, lg}, c * ls * r);
    }
    return out;
  }
};

}  // namespace

AlgebraElement AlgebraHandle::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  Rewriter rw{*this};
  AlgebraElement out;
  for (const auto& [t, c] : a.terms()) {
    AlgebraElement y = rw.left_group(t.g, b);
    for (auto it = t.e.rbegin(); it != t.e.rend(); ++it) y = rw.left_E(*it, y);
    for (auto it = t.f.rbegin(); it != t.f.rend(); ++it) y = rw.left_F(*it, y);
    out += y.scaled(c);
  }
  return out;
}

TensorElement AlgebraHandle::multiply(const TensorElement& a, const TensorElement& b) const {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      AlgebraElement left = multiply(AlgebraElement::term(ka.first), AlgebraElement::term(kb.first));
      AlgebraElement right = multiply(AlgebraElement::term(ka.second), AlgebraElement::term(kb.second));
      TensorElement p = TensorElement::pure(left, right);
      for (const auto& [k, c] : p.terms()) out.add(k.first, k.second, c * ca * cb);
    }
  return out;
}

AlgebraElement AlgebraHandle::antipode_uminus(const FreeElement& x) const {
  AlgebraElement out;
  const ReducedDatum& d = impl_->datum;
  for (const auto& [w, c] : x) {
    AlgebraElement cur = one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      AlgebraElement s = multiply(F(*it), group(d.L[*it])).scaled(Scalar(-1));
      cur = multiply(cur, s);
    }
    out += cur.scaled(c);
  }
  return out;
}

}  // namespace hopfkit
