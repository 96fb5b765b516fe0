#include "hopfkit/datum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "hopfkit/errors.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

namespace {

std::string vertex_name(std::size_t i) { return std::to_string(i + 1); }

std::string pair_name(std::size_t i, std::size_t j) { return "(" + vertex_name(i) + "," + vertex_name(j) + ")"; }

}  // namespace

BraidingMatrix YDDatum::braiding() const {
  BraidingMatrix q(theta(), std::vector<UnitScalar>(theta()));
  for (std::size_t i = 0; i < theta(); ++i)
    for (std::size_t j = 0; j < theta(); ++j) q[i][j] = this->q(i, j);
  return q;
}

BraidingMatrix ReducedDatum::braiding() const {
  BraidingMatrix q(theta(), std::vector<UnitScalar>(theta()));
  for (std::size_t i = 0; i < theta(); ++i)
    for (std::size_t j = 0; j < theta(); ++j) q[i][j] = this->q(i, j);
  return q;
}

ReducedDatum ReducedDatum::with_rescaled_ell(const std::vector<Scalar>& factors) const {
  ReducedDatum r = *this;
  for (std::size_t i = 0; i < theta(); ++i) r.ell[i] *= factors.at(i);
  return r;
}

// ------------------------------------------------------------ validation

std::vector<std::vector<std::size_t>> equivalence_classes(const BraidingMatrix& q) {
  const std::size_t n = q.size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t s = 0; s < n; ++s) {
    if (cls[s] >= 0) continue;
    std::vector<std::size_t> members;
    std::queue<std::size_t> todo;
    todo.push(s);
    cls[s] = static_cast<int>(classes.size());
    while (!todo.empty()) {
      std::size_t i = todo.front();
      todo.pop();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (cls[j] < 0 && j != i && !(q[i][j] * q[j][i]).is_one()) {
          cls[j] = cls[s];
          todo.push(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

YDReport validate_yd(const YDDatum& datum) {
  if (datum.theta() == 0) throw InvalidDatum("datum has no vertices");
  if (datum.chi.size() != datum.theta()) throw InvalidDatum("number of characters differs from number of group elements");
  for (std::size_t i = 0; i < datum.theta(); ++i) {
    if (datum.g[i].rank() != datum.group_rank || datum.chi[i].rank() != datum.group_rank)
      throw RankMismatch("vertex " + vertex_name(i) + " has the wrong group rank");
  }
  YDReport report;
  auto q = datum.braiding();
  for (std::size_t i = 0; i < datum.theta(); ++i) {
    if (is_root_of_unity(q[i][i])) throw NotGeneric("q_ii is a root of unity at vertex " + vertex_name(i));
  }
  report.classes = equivalence_classes(q);
  return report;
}

void validate_reduced(const ReducedDatum& d) {
  const std::size_t n = d.theta();
  if (n == 0) throw InvalidDatum("reduced datum has no vertices");
  if (d.L.size() != n || d.chi.size() != n || d.ell.size() != n) throw InvalidDatum("K, L, chi and ell must have equal length");
  for (std::size_t i = 0; i < n; ++i) {
    if (d.K[i].rank() != d.group_rank || d.L[i].rank() != d.group_rank || d.chi[i].rank() != d.group_rank)
      throw RankMismatch("vertex " + vertex_name(i) + " has the wrong group rank");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(d.chi[j](d.K[i]) == d.chi[i](d.L[j])))
        throw InvalidDatum("chi_j(K_i) != chi_i(L_j) at " + pair_name(i, j));
    }
  for (std::size_t i = 0; i < n; ++i) {
    if ((d.K[i] * d.L[i]).is_identity()) throw InvalidDatum("K_i L_i is the identity at vertex " + vertex_name(i));
    if (is_root_of_unity(d.q(i, i))) throw NotGeneric("q_ii is a root of unity at vertex " + vertex_name(i));
    if (d.ell[i].is_zero()) throw InvalidDatum("ell_i is zero at vertex " + vertex_name(i));
  }
}

// -------------------------------------------------------- Cartan detection

namespace {

int edge_product(const IntegerMatrix& a, std::size_t i, std::size_t j) { return a[i][j] * a[j][i]; }

}  // namespace

std::optional<std::string> classify_connected(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return "A1";
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  int multi_edges = 0;
  std::optional<std::pair<std::size_t, std::size_t>> multi;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j] == 0) continue;
      int p = edge_product(a, i, j);
      if (p < 1 || p > 3 || (a[i][j] != -1 && a[j][i] != -1)) return std::nullopt;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
      if (p > 1) {
        ++multi_edges;
        multi = {i, j};
      }
    }
  if (edges != n - 1) return std::nullopt;
  if (multi_edges > 1) return std::nullopt;
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.size() > 1) return std::nullopt;
  const std::string rank = std::to_string(n);
  if (multi) {
    auto [i, j] = *multi;
    int p = edge_product(a, i, j);
    if (!branch.empty()) return std::nullopt;
    if (p == 3) return n == 2 ? std::optional<std::string>("G2") : std::nullopt;
    if (n == 2) return "B2";
    bool i_end = adj[i].size() == 1;
    bool j_end = adj[j].size() == 1;
    if (i_end || j_end) {
      std::size_t end = i_end ? i : j;
      std::size_t neighbour = i_end ? j : i;
      return (a[end][neighbour] == -2 ? "B" : "C") + rank;
    }
    return n == 4 ? std::optional<std::string>("F4") : std::nullopt;
  }
  if (branch.empty()) return "A" + rank;
  std::vector<int> arms;
  for (std::size_t start : adj[branch[0]]) {
    int length = 0;
    std::size_t prev = branch[0], cur = start;
    while (true) {
      ++length;
      std::optional<std::size_t> next;
      for (std::size_t x : adj[cur]) {
        if (x != prev) next = x;
      }
      if (!next) break;
      prev = cur;
      cur = *next;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + rank;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + rank;
  return std::nullopt;
}

bool symmetrized_positive_definite(const IntegerMatrix& a, const std::vector<int>& d) {
  const std::size_t n = a.size();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Scalar> m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = Scalar(long{d[i]} * a[i][j]);
    Scalar det = determinant(m);
    if (det.is_zero() || det.numerator().leading_coefficient() < 0) return false;
  }
  return true;
}

CartanData detect_cartan(const BraidingMatrix& q) {
  const std::size_t n = q.size();
  CartanData c;
  c.a.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_root_of_unity(q[i][i])) throw NotGeneric("q_ii is a root of unity at vertex " + vertex_name(i));
    c.a[i][i] = 2;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto k = unit_discrete_log(q[i][i], q[i][j] * q[j][i]);
      if (!k) throw NotCartan("q_ij q_ji is not a power of q_ii at " + pair_name(i, j));
      if (*k > 0) throw NotCartan("positive Cartan entry at " + pair_name(i, j));
      c.a[i][j] = static_cast<int>(*k);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((c.a[i][j] == 0) != (c.a[j][i] == 0)) throw NotCartan("a_ij = 0 but a_ji != 0 at " + pair_name(i, j));
    }
  c.components = equivalence_classes(q);
  // symmetrizer: propagate rational ratios d_j / d_i = a_ij / a_ji along edges
  std::vector<mpq_class> ratio(n, 0);
  for (const auto& comp : c.components) {
    ratio[comp[0]] = 1;
    std::queue<std::size_t> todo;
    todo.push(comp[0]);
    std::vector<bool> seen(n, false);
    seen[comp[0]] = true;
    while (!todo.empty()) {
      std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j : comp) {
        if (j == i || c.a[i][j] == 0) continue;
        mpq_class dj = ratio[i] * mpq_class(c.a[i][j], 1) / mpq_class(c.a[j][i], 1);
        if (!seen[j]) {
          seen[j] = true;
          ratio[j] = dj;
          todo.push(j);
        } else if (ratio[j] != dj) {
          throw NotSymmetrizable("no symmetrizer exists for the component containing vertex " + vertex_name(comp[0]));
        }
      }
    }
    mpz_class lcm_den = 1;
    for (std::size_t j : comp) lcm_den = lcm(lcm_den, mpz_class(ratio[j].get_den()));
    mpz_class g = 0;
    for (std::size_t j : comp) g = gcd(g, mpz_class(ratio[j].get_num() * (lcm_den / ratio[j].get_den())));
    for (std::size_t j : comp) ratio[j] = mpq_class(ratio[j].get_num() * (lcm_den / ratio[j].get_den()) / g);
  }
  c.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.d[i] = static_cast<int>(ratio[i].get_num().get_si());
  c.finite_type = true;
  for (const auto& comp : c.components) {
    IntegerMatrix sub(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t x = 0; x < comp.size(); ++x)
      for (std::size_t y = 0; y < comp.size(); ++y) sub[x][y] = c.a[comp[x]][comp[y]];
    auto type = classify_connected(sub);
    c.component_types.push_back(type.value_or(""));
    if (!type) c.finite_type = false;
  }
  return c;
}

// ------------------------------------------------------------------ linking

bool satisfies_link_condition(const BraidingMatrix& q) {
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i != j && q[i][j] * q[j][i] == q[i][i] * q[i][i]) return false;
    }
  return true;
}

namespace {

bool same_class(const std::vector<std::vector<std::size_t>>& classes, std::size_t i, std::size_t j) {
  for (const auto& c : classes) {
    bool hi = std::find(c.begin(), c.end(), i) != c.end();
    bool hj = std::find(c.begin(), c.end(), j) != c.end();
    if (hi || hj) return hi && hj;
  }
  return false;
}

}  // namespace

LinkabilityReport linkable(const YDDatum& datum, std::size_t i, std::size_t j) {
  LinkabilityReport r;
  auto classes = equivalence_classes(datum.braiding());
  if (i == j) r.reasons.push_back("i = j");
  if (same_class(classes, i, j)) r.reasons.push_back("i ~ j (same connected class)");
  if ((datum.g[i] * datum.g[j]).is_identity()) r.reasons.push_back("g_i g_j is the identity");
  if (!(datum.chi[i] * datum.chi[j]).is_trivial()) r.reasons.push_back("chi_i chi_j is not the trivial character");
  r.linkable = r.reasons.empty();
  return r;
}

LinkingReport validate_linking(const YDDatum& datum, const LinkingParameter& lambda) {
  const std::size_t n = datum.theta();
  auto q = datum.braiding();
  auto classes = equivalence_classes(q);
  LinkingReport report;
  for (const auto& [key, value] : lambda) {
    auto [i, j] = key;
    if (i >= n || j >= n) throw IllegalLink("vertex index out of range in " + pair_name(i, j));
    if (value.is_zero()) continue;
    if (i == j || same_class(classes, i, j)) throw IllegalLink("lambda defined on related vertices " + pair_name(i, j));
    report.lambda[key] = value;
  }
  // complete by λ_ij = -q_ij λ_ji and check consistency
  LinkingParameter completed = report.lambda;
  for (const auto& [key, value] : report.lambda) {
    auto [i, j] = key;
    Scalar expected_ji = -value / q[i][j].to_scalar();
    auto it = report.lambda.find({j, i});
    if (it == report.lambda.end()) {
      completed[{j, i}] = expected_ji;
    } else if (!(it->second == expected_ji)) {
      throw AntisymmetryViolation("lambda_ij != -q_ij lambda_ji at " + pair_name(i, j));
    }
  }
  report.lambda = std::move(completed);
  report.condition_holds = satisfies_link_condition(q);
  std::map<std::size_t, std::set<std::size_t>> partners;
  for (const auto& [key, value] : report.lambda) partners[key.first].insert(key.second);
  if (report.condition_holds) {
    for (const auto& [i, ps] : partners) {
      if (ps.size() > 1) throw MultipleLinks("vertex " + vertex_name(i) + " is linked to more than one vertex");
    }
  }
  for (const auto& [key, value] : report.lambda) {
    if (!linkable(datum, key.first, key.second).linkable)
      throw IllegalLink("lambda is nonzero on the non-linkable pair " + pair_name(key.first, key.second));
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto it = partners.find(i);
    if (it == partners.end()) {
      report.unlinked.insert(i);
    } else {
      report.linked.insert(i);
      if (it->second.size() == 1) report.partner[i] = *it->second.begin();
    }
  }
  report.perfect = report.unlinked.empty();
  return report;
}

RestrictedDatum restrict_datum(const YDDatum& datum, const LinkingParameter& lambda, const std::set<std::size_t>& removed) {
  LinkingReport report = validate_linking(datum, lambda);
  for (std::size_t h : removed) {
    if (!report.unlinked.count(h)) throw NotUnlinked("vertex " + vertex_name(h) + " is linked");
  }
  auto classes = equivalence_classes(datum.braiding());
  RestrictedDatum r;
  r.datum.params = datum.params;
  r.datum.group_rank = datum.group_rank;
  std::map<std::size_t, std::size_t> new_index;
  for (std::size_t i = 0; i < datum.theta(); ++i) {
    if (removed.count(i)) continue;
    new_index[i] = r.kept.size();
    r.kept.push_back(i);
    r.datum.g.push_back(datum.g[i]);
    r.datum.chi.push_back(datum.chi[i]);
  }
  for (const auto& [key, value] : report.lambda) {
    auto [i, j] = key;
    if (!new_index.count(i) || !new_index.count(j)) continue;
    if (same_class(classes, i, j)) continue;
    r.lambda[{new_index[i], new_index[j]}] = value;
  }
  return r;
}

ReducedConversion to_reduced(const YDDatum& datum, const LinkingParameter& lambda) {
  LinkingReport report = validate_linking(datum, lambda);
  if (!report.condition_holds) throw ConditionFails("q_ij q_ji = q_ii^2 for some i != j");
  if (!report.perfect) throw NotPerfect("linking parameter is not perfect");
  auto classes = equivalence_classes(datum.braiding());
  auto class_of = [&](std::size_t v) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (std::find(classes[c].begin(), classes[c].end(), v) != classes[c].end()) return c;
    }
    return classes.size();
  };
  std::vector<int> side(classes.size(), 0);  // -1 minus, +1 plus
  ReducedConversion out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (side[c] != 0) continue;
    std::size_t partner_class = class_of(report.partner.at(classes[c][0]));
    if (side[partner_class] != 0 || partner_class == c) throw InvalidDatum("linked classes do not pair up");
    for (std::size_t v : classes[c]) {
      if (class_of(report.partner.at(v)) != partner_class) throw InvalidDatum("linked classes do not pair up");
    }
    side[c] = -1;
    side[partner_class] = 1;
    for (std::size_t v : classes[c]) {
      out.minus_vertices.push_back(v);
      out.plus_vertices.push_back(report.partner.at(v));
    }
  }
  ReducedDatum& r = out.datum;
  r.params = datum.params;
  r.group_rank = datum.group_rank;
  for (std::size_t k = 0; k < out.minus_vertices.size(); ++k) {
    std::size_t minus = out.minus_vertices[k];
    std::size_t plus = out.plus_vertices[k];
    r.L.push_back(datum.g[minus]);
    r.K.push_back(datum.g[plus]);
    r.chi.push_back(datum.chi[plus]);
    r.ell.push_back(-report.lambda.at({plus, minus}));
  }
  validate_reduced(r);
  return out;
}

std::pair<YDDatum, LinkingParameter> tilde(const ReducedDatum& reduced) {
  const std::size_t n = reduced.theta();
  YDDatum d;
  d.params = reduced.params;
  d.group_rank = reduced.group_rank;
  for (std::size_t i = 0; i < n; ++i) {
    d.g.push_back(reduced.L[i]);
    d.chi.push_back(reduced.chi[i].inverse());
  }
  for (std::size_t i = 0; i < n; ++i) {
    d.g.push_back(reduced.K[i]);
    d.chi.push_back(reduced.chi[i]);
  }
  LinkingParameter lambda;
  for (std::size_t i = 0; i < n; ++i) {
    lambda[{n + i, i}] = -reduced.ell[i];
    lambda[{i, n + i}] = reduced.ell[i] * d.q(i, n + i).to_scalar();
  }
  return {std::move(d), std::move(lambda)};
}

// --------------------------------------------------------------- reductivity

ReductivityReport regularity_and_reductivity(const ReducedDatum& reduced) {
  ReductivityReport r;
  r.regular = z_linear_independent(reduced.chi);
  std::vector<GroupElement> kl;
  for (std::size_t i = 0; i < reduced.theta(); ++i) kl.push_back(reduced.K[i] * reduced.L[i]);
  r.gamma2_index = smith_index(kl, reduced.group_rank);
  r.gamma_reductive = true;
  r.reductive = r.gamma2_index.is_finite();
  if (r.regular && r.gamma2_index.is_finite()) {
    CartanData c = detect_cartan(reduced);
    Matrix<Scalar> a(c.theta(), c.theta());
    for (std::size_t i = 0; i < c.theta(); ++i)
      for (std::size_t j = 0; j < c.theta(); ++j) a(i, j) = Scalar(long{c.a[i][j]});
    r.cartan_invertible = !determinant(a).is_zero();
    if (!*r.cartan_invertible) throw AuditFailure("regular datum with finite index but singular Cartan matrix");
  }
  return r;
}

std::optional<TwistData> check_dj2(const BraidingMatrix& q, const CartanData& cartan) {
  const std::size_t n = q.size();
  TwistData t;
  t.d = cartan.d;
  t.q_hat.assign(n, std::vector<UnitScalar>(n));
  t.p.assign(n, std::vector<UnitScalar>(n));
  std::vector<std::size_t> component_of(n);
  for (std::size_t c = 0; c < cartan.components.size(); ++c) {
    const auto& comp = cartan.components[c];
    std::optional<UnitScalar> qj;
    for (std::size_t i : comp) {
      component_of[i] = c;
      const UnitScalar& qii = q[i][i];
      if (qii.sign() != 1) return std::nullopt;
      UnitScalar root;
      for (std::size_t k = 0; k < kMaxParameters; ++k) {
        int e = qii.exponents()[k];
        if (e % (2 * cartan.d[i]) != 0) return std::nullopt;
        int r = e / (2 * cartan.d[i]);
        if (r != 0) root *= UnitScalar::parameter(k, r);
      }
      if (qj && !(*qj == root)) return std::nullopt;
      qj = root;
    }
    t.q_component.push_back(*qj);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (component_of[i] == component_of[j]) {
        t.q_hat[i][j] = t.q_component[component_of[i]].pow(long{cartan.d[i]} * cartan.a[i][j]);
      }
      t.p[i][j] = q[i][j] / t.q_hat[i][j];
    }
  return t;
}

std::optional<TwistData> check_dj2(const ReducedDatum& reduced) {
  return check_dj2(reduced.braiding(), detect_cartan(reduced));
}

namespace {

/// Phase-one simplex with Bland's rule: is {x ≥ 0, A x = b} nonempty? (b ≥ 0)
bool feasible(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b) {
  const std::size_t rows = a.size();
  const std::size_t n = rows ? a[0].size() : 0;
  const std::size_t cols = n + rows;
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols + 1, 0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) t[r][j] = a[r][j];
    t[r][n + r] = 1;
    t[r][cols] = b[r];
    basis[r] = n + r;
  }
  auto cost = [&](std::size_t j) { return j >= n ? mpq_class(1) : mpq_class(0); };
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < cols && !entering; ++j) {
      mpq_class rc = cost(j);
      for (std::size_t r = 0; r < rows; ++r) rc -= cost(basis[r]) * t[r][j];
      if (rc < 0) entering = j;
    }
    if (!entering) break;
    std::optional<std::size_t> leave;
    mpq_class best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][*entering] <= 0) continue;
      mpq_class ratio = t[r][cols] / t[r][*entering];
      if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[*leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (!leave) break;
    std::size_t pr = *leave;
    mpq_class pv = t[pr][*entering];
    for (auto& x : t[pr]) x /= pv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || t[r][*entering] == 0) continue;
      mpq_class f = t[r][*entering];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[pr][j];
    }
    basis[pr] = *entering;
  }
  mpq_class objective = 0;
  for (std::size_t r = 0; r < rows; ++r) objective += cost(basis[r]) * t[r][cols];
  return objective == 0;
}

}  // namespace

bool check_nli(const std::vector<UnitScalar>& diagonal) {
  // A nonneg rational kernel vector n of the exponent matrix gives the
  // relation Π q_ii^{2n_i} = 1 after clearing denominators, so signs never
  // obstruct a relation.
  const std::size_t n = diagonal.size();
  if (n == 0) return true;
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (std::size_t k = 0; k < kMaxParameters; ++k) {
    std::vector<mpq_class> row(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      int e = diagonal[i].exponents()[k];
      row[i] = e;
      if (e) nonzero = true;
    }
    if (!nonzero) continue;
    a.push_back(std::move(row));
    b.push_back(0);
  }
  a.push_back(std::vector<mpq_class>(n, 1));
  b.push_back(1);
  return !feasible(a, b);
}

bool check_nli(const ReducedDatum& reduced) {
  std::vector<UnitScalar> diagonal;
  for (std::size_t i = 0; i < reduced.theta(); ++i) diagonal.push_back(reduced.q(i, i));
  return check_nli(diagonal);
}

PointedReductivityReport pointed_reductivity(const YDDatum& datum, const LinkingParameter& lambda) {
  PointedReductivityReport r;
  LinkingReport report = validate_linking(datum, lambda);
  r.perfect = report.perfect;
  r.unlinked = report.unlinked;
  RestrictedDatum restricted = restrict_datum(datum, lambda, report.unlinked);
  if (restricted.datum.theta() == 0) {
    r.gamma2_index = smith_index({}, datum.group_rank);
  } else {
    ReducedConversion conv = to_reduced(restricted.datum, restricted.lambda);
    r.gamma2_index = regularity_and_reductivity(conv.datum).gamma2_index;
  }
  r.gamma_reductive = r.perfect;
  r.reductive = r.perfect && r.gamma2_index.is_finite();
  return r;
}

}  // namespace hopfkit
