#include "hopfkit/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

// ---------------------------------------------------------- DegreeVector

DegreeVector DegreeVector::unit(std::size_t theta, std::size_t i) {
  DegreeVector d = zero(theta);
  d.coords[i] = 1;
  return d;
}

int DegreeVector::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

bool DegreeVector::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool DegreeVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

DegreeVector DegreeVector::operator+(const DegreeVector& o) const {
  DegreeVector r = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords[k];
  return r;
}

DegreeVector DegreeVector::operator-(const DegreeVector& o) const {
  DegreeVector r = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] -= o.coords[k];
  return r;
}

DegreeVector DegreeVector::operator*(int k) const {
  DegreeVector r = *this;
  for (auto& c : r.coords) c *= k;
  return r;
}

std::string DegreeVector::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(coords[k]);
  }
  return s + ")";
}

// ---------------------------------------------------------- GroupElement

bool GroupElement::is_identity() const {
  return std::all_of(exps.begin(), exps.end(), [](long e) { return e == 0; });
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (o.rank() != rank()) throw RankMismatch("group elements of different rank");
  GroupElement r = *this;
  for (std::size_t k = 0; k < exps.size(); ++k) r.exps[k] += o.exps[k];
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r = *this;
  for (auto& e : r.exps) e = -e;
  return r;
}

GroupElement GroupElement::pow(long k) const {
  GroupElement r = *this;
  for (auto& e : r.exps) e *= k;
  return r;
}

std::string GroupElement::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(exps[k]);
  }
  return s + "]";
}

// ------------------------------------------------------------- Character

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](const UnitScalar& u) { return u.is_one(); });
}

UnitScalar Character::operator()(const GroupElement& g) const { return evaluate(*this, g); }

Character Character::operator*(const Character& o) const {
  if (o.rank() != rank()) throw RankMismatch("characters of different rank");
  Character r = *this;
  for (std::size_t k = 0; k < values.size(); ++k) r.values[k] *= o.values[k];
  return r;
}

Character Character::inverse() const {
  Character r = *this;
  for (auto& v : r.values) v = v.inverse();
  return r;
}

Character Character::pow(long k) const {
  Character r = *this;
  for (auto& v : r.values) v = v.pow(k);
  return r;
}

std::string Character::to_string(const ParameterSpace& space) const {
  std::string s = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ',';
    s += values[k].to_string(space);
  }
  return s + "]";
}

UnitScalar evaluate(const Character& chi, const GroupElement& g) {
  if (chi.rank() != g.rank()) throw RankMismatch("character and group element of different rank");
  UnitScalar r;
  for (std::size_t k = 0; k < g.exps.size(); ++k) {
    if (g.exps[k] != 0) r *= chi.values[k].pow(g.exps[k]);
  }
  return r;
}

Character character_power(const std::vector<Character>& basis, const DegreeVector& alpha) {
  if (basis.empty()) throw RankMismatch("empty character basis");
  Character r = Character::trivial(basis[0].rank());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (alpha[i] != 0) r = r * basis[i].pow(alpha[i]);
  }
  return r;
}

// ----------------------------------------------------------- Smith form

namespace {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

/// row_target -= q * row_source
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  for (std::size_t k = 0; k < m[target].size(); ++k) m[target][k] -= q * m[source][k];
}

/// col_target -= q * col_source
void add_col(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  for (auto& row : m) row[target] -= q * row[source];
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t m = n ? a[0].size() : 0;
  SmithForm s{identity_matrix(n), a, identity_matrix(m), 0};
  IntMatrix& d = s.D;
  for (std::size_t t = 0; t < std::min(n, m); ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j) {
          if (d[i][j] == 0) continue;
          if (!pivot || abs(d[i][j]) < abs(d[pivot->first][pivot->second])) pivot = {i, j};
        }
      if (!pivot) return s;
      swap_rows(d, t, pivot->first);
      swap_rows(s.U, t, pivot->first);
      swap_cols(d, t, pivot->second);
      swap_cols(s.V, t, pivot->second);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d[i][t] == 0) continue;
        mpz_class q = d[i][t] / d[t][t];
        add_row(d, i, t, q);
        add_row(s.U, i, t, q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (d[t][j] == 0) continue;
        mpz_class q = d[t][j] / d[t][t];
        add_col(d, j, t, q);
        add_col(s.V, j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < n && !bad_row; ++i)
        for (std::size_t j = t + 1; j < m; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            bad_row = i;
            break;
          }
        }
      if (!bad_row) break;
      add_row(d, t, *bad_row, -1);
      add_row(s.U, t, *bad_row, -1);
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
    s.rank = t + 1;
  }
  return s;
}

std::optional<std::vector<mpz_class>> solve_integer_system(const IntMatrix& a, const std::vector<mpz_class>& b) {
  const std::size_t n = a.size();
  const std::size_t m = n ? a[0].size() : 0;
  SmithForm s = smith_normal_form(a);
  std::vector<mpz_class> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) c[i] += s.U[i][k] * b[k];
  std::vector<mpz_class> y(m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < s.rank) {
      if (c[i] % s.D[i][i] != 0) return std::nullopt;
      y[i] = c[i] / s.D[i][i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<mpz_class> x(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) x[i] += s.V[i][k] * y[k];
  return x;
}

SubgroupIndex smith_index(const std::vector<GroupElement>& generators, std::size_t rank) {
  if (rank == 0) return {mpz_class(1)};
  IntMatrix a;
  for (const auto& g : generators) {
    if (g.rank() != rank) throw RankMismatch("generator of wrong rank");
    std::vector<mpz_class> row;
    for (long e : g.exps) row.emplace_back(e);
    a.push_back(std::move(row));
  }
  if (a.empty()) return {};
  SmithForm s = smith_normal_form(a);
  if (s.rank < rank) return {};
  mpz_class index = 1;
  for (std::size_t k = 0; k < rank; ++k) index *= s.D[k][k];
  return {index};
}

// -------------------------------------------------- exponent-lattice solving

namespace {

/// Column k holds the flattened exponent vector of chars[k].
IntMatrix exponent_matrix(const std::vector<Character>& chars) {
  const std::size_t rank = chars.front().rank();
  IntMatrix a(rank * kMaxParameters, std::vector<mpz_class>(chars.size(), 0));
  for (std::size_t c = 0; c < chars.size(); ++c) {
    if (chars[c].rank() != rank) throw RankMismatch("characters of different rank");
    for (std::size_t g = 0; g < rank; ++g)
      for (std::size_t j = 0; j < kMaxParameters; ++j) a[g * kMaxParameters + j][c] = chars[c].values[g].exponents()[j];
  }
  return a;
}

std::vector<mpz_class> exponent_vector(const Character& chi) {
  std::vector<mpz_class> v;
  for (const auto& u : chi.values)
    for (std::size_t j = 0; j < kMaxParameters; ++j) v.emplace_back(u.exponents()[j]);
  return v;
}

/// Solves A x = b over GF(2); returns some solution.
std::optional<std::vector<int>> solve_mod2(std::vector<std::vector<int>> a, std::vector<int> b, std::size_t cols) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < n; ++c) {
    std::size_t r = row;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) continue;
    std::swap(a[r], a[row]);
    std::swap(b[r], b[row]);
    for (std::size_t k = 0; k < n; ++k) {
      if (k != row && a[k][c]) {
        for (std::size_t j = 0; j < cols; ++j) a[k][j] ^= a[row][j];
        b[k] ^= b[row];
      }
    }
    pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r) {
    if (b[r]) return std::nullopt;
  }
  std::vector<int> x(cols, 0);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = b[r];
  return x;
}

}  // namespace

bool z_linear_independent(const std::vector<Character>& chars) {
  if (chars.empty()) return true;
  return smith_normal_form(exponent_matrix(chars)).rank == chars.size();
}

std::optional<DegreeVector> try_solve_weight_difference(const Character& target, const Character& base,
                                                        const std::vector<Character>& basis) {
  if (!z_linear_independent(basis)) throw NotRegular("weight basis is not Z-linearly independent");
  Character diff = target * base.inverse();
  auto x = solve_integer_system(exponent_matrix(basis), exponent_vector(diff));
  if (!x) return std::nullopt;
  DegreeVector alpha = DegreeVector::zero(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!(*x)[i].fits_sint_p()) return std::nullopt;
    alpha[i] = static_cast<int>((*x)[i].get_si());
  }
  if (!(character_power(basis, alpha) == diff)) return std::nullopt;
  return alpha;
}

DegreeVector solve_weight_difference(const Character& target, const Character& base, const std::vector<Character>& basis) {
  auto alpha = try_solve_weight_difference(target, base, basis);
  if (!alpha) throw NoSolution("characters lie in different cosets of the root lattice");
  return *alpha;
}

std::optional<Character> solve_character(const std::vector<GroupElement>& elements, const std::vector<UnitScalar>& targets,
                                         std::size_t rank) {
  IntMatrix h;
  std::vector<std::vector<int>> h2;
  for (const auto& e : elements) {
    if (e.rank() != rank) throw RankMismatch("group element of wrong rank");
    std::vector<mpz_class> row;
    std::vector<int> row2;
    for (long x : e.exps) {
      row.emplace_back(x);
      row2.push_back(static_cast<int>(((x % 2) + 2) % 2));
    }
    h.push_back(std::move(row));
    h2.push_back(std::move(row2));
  }
  std::vector<UnitScalar> values(rank);
  if (elements.empty()) return Character(values);
  for (std::size_t j = 0; j < kMaxParameters; ++j) {
    std::vector<mpz_class> b;
    for (const auto& t : targets) b.emplace_back(t.exponents()[j]);
    auto x = solve_integer_system(h, b);
    if (!x) return std::nullopt;
    for (std::size_t k = 0; k < rank; ++k) {
      if ((*x)[k] != 0) values[k] *= UnitScalar::parameter(j, static_cast<int>((*x)[k].get_si()));
    }
  }
  std::vector<int> signs;
  for (const auto& t : targets) signs.push_back(t.sign() < 0 ? 1 : 0);
  auto s = solve_mod2(h2, signs, rank);
  if (!s) return std::nullopt;
  for (std::size_t k = 0; k < rank; ++k) {
    if ((*s)[k]) values[k] *= UnitScalar::minus_one();
  }
  Character chi(values);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!(chi(elements[i]) == targets[i])) return std::nullopt;
  }
  return chi;
}

}  // namespace hopfkit
