// Acceptance run: nine exact criteria, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "frozen/oracle_values.hpp"
#include "hopfkit/datum.hpp"
#include "hopfkit/errors.hpp"
#include "hopfkit/identities.hpp"
#include "hopfkit/oracles.hpp"
#include "hopfkit/presets.hpp"
#include "hopfkit/repr.hpp"

using namespace hopfkit;

namespace {

using Multiset = std::map<std::vector<int>, std::uint64_t>;

class Verdict {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && failures_.size() < 8) failures_.push_back(what);
    if (!cond) ++failed_;
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  bool ok() const { return failed_ == 0 && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

std::string str(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

std::string str(const Multiset& m) {
  std::string out;
  for (const auto& [mu, k] : m) out += (out.empty() ? "" : " + ") + std::to_string(k) + "*L" + str(mu);
  return out;
}

oracle::RootSystem classical(const ReducedDatum& d) { return oracle::root_system(detect_cartan(d.braiding()).a); }

/// Fixed factors (2, q, q^-3, 3, q^2) applied to ℓ vertex by vertex.
ReducedDatum rescaled(const ReducedDatum& d) {
  const Scalar q = Scalar::parameter(0);
  const std::vector<Scalar> cycle{Scalar(2), q, q.pow(-3), Scalar(3), q * q};
  std::vector<Scalar> factors;
  for (std::size_t i = 0; i < d.theta(); ++i) factors.push_back(cycle[i % cycle.size()]);
  return d.with_rescaled_ell(factors);
}

// ------------------------------------------------------------ criterion 1

void graded_dimensions(Verdict& v) {
  for (const std::string name : {"A1", "A2", "B2"}) {
    const auto start = std::chrono::steady_clock::now();
    const AlgebraHandle h(preset(name));
    const auto rs = classical(h.datum());
    std::size_t compared = 0;
    for (const auto& alpha : degrees_up_to(h.theta(), 0, 8)) {
      const std::uint64_t expected = oracle::kostant_partition(rs, alpha.coords);
      const std::size_t got = h.dim(Side::Minus, alpha);
      v.expect(got == expected, name + " alpha " + str(alpha.coords) + ": " + std::to_string(got) + " vs " +
                                    std::to_string(expected));
      ++compared;
    }
    for (const auto& c : frozen::kKostant)
      if (c.type == name) v.expect(h.dim(Side::Minus, DegreeVector(c.key)) == c.value, name + " frozen " + str(c.key));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.expect(seconds < 60.0, name + " took " + std::to_string(seconds) + " s");
    std::ostringstream s;
    s << name << ": " << compared << " degrees, " << seconds << " s";
    v.note(s.str());
  }
}

// --------------------------------------------------------- criteria 2 to 4

struct SimpleCase {
  std::string preset;
  std::vector<int> m;
  std::uint64_t dim;  ///< 0: take the Weyl dimension
};

const std::vector<SimpleCase>& simple_cases() {
  static const std::vector<SimpleCase> cases = [] {
    std::vector<SimpleCase> c;
    for (int m = 0; m <= 10; ++m) c.push_back({"A1", {m}, std::uint64_t(m + 1)});
    c.push_back({"A2", {1, 0}, 3});
    c.push_back({"A2", {0, 1}, 3});
    c.push_back({"A2", {1, 1}, 8});
    c.push_back({"A2", {2, 0}, 6});
    c.push_back({"A2", {2, 2}, 27});
    c.push_back({"B2", {1, 0}, 0});
    c.push_back({"B2", {0, 1}, 0});
    return c;
  }();
  return cases;
}

/// Dimensions and degree-keyed multiplicities of the simple modules of criterion 2.
using SimpleOutput = std::vector<std::pair<std::size_t, Multiset>>;

SimpleOutput simple_modules(Verdict& v, const std::function<ReducedDatum(const ReducedDatum&)>& transform) {
  SimpleOutput out;
  std::map<std::string, std::unique_ptr<AlgebraHandle>> handles;
  std::set<std::uint64_t> b2;
  for (const auto& c : simple_cases()) {
    auto& h = handles[c.preset];
    if (!h) h = std::make_unique<AlgebraHandle>(transform(preset(c.preset)));
    const auto rs = classical(h->datum());
    const HighestWeightModule L = simple_module(*h, dominant_character(*h, c.m));
    const std::uint64_t weyl = oracle::weyl_dim(rs, c.m);
    const std::uint64_t expected = c.dim ? c.dim : weyl;
    const std::string label = c.preset + " L" + str(c.m);
    v.expect(L.module.total_dim() == expected, label + " dim " + std::to_string(L.module.total_dim()));
    v.expect(weyl == expected, label + " oracle dim " + std::to_string(weyl));
    if (c.preset == "B2") b2.insert(L.module.total_dim());
    Multiset mult;
    for (std::size_t k = 0; k < L.module.weight_count(); ++k) mult[L.degrees[k].coords] += L.module.dim(k);
    v.expect(mult == oracle::freudenthal(rs, c.m), label + " multiplicities");
    v.expect(audit_relations(L.module).ok, label + " relations audit");
    out.emplace_back(L.module.total_dim(), std::move(mult));
  }
  v.expect(b2 == std::set<std::uint64_t>{4, 5}, "B2 fundamental dimensions");
  return out;
}

struct TensorCase {
  std::string preset;
  std::vector<int> m1, m2;
};

const std::vector<TensorCase>& tensor_cases() {
  static const std::vector<TensorCase> cases = [] {
    std::vector<TensorCase> c;
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) c.push_back({"A1", {m}, {n}});
    c.push_back({"A2", {1, 0}, {0, 1}});
    c.push_back({"A2-two-parameter", {1, 0}, {0, 1}});
    return c;
  }();
  return cases;
}

struct TensorResult {
  std::string label;
  bool connected = true;
  Multiset summands;
  std::size_t dim = 0;
  std::vector<std::pair<bool, UnitScalar>> casimir;  ///< (scalar on span, G) per summand
};

std::vector<TensorResult> tensor_products(const std::function<ReducedDatum(const ReducedDatum&)>& transform) {
  std::vector<TensorResult> out;
  std::map<std::string, std::unique_ptr<AlgebraHandle>> handles;
  for (const auto& c : tensor_cases()) {
    auto& h = handles[c.preset];
    if (!h) h = std::make_unique<AlgebraHandle>(transform(preset(c.preset)));
    const HighestWeightModule a = simple_module(*h, dominant_character(*h, c.m1));
    const HighestWeightModule b = simple_module(*h, dominant_character(*h, c.m2));
    const WeightModule t = tensor(a.module, b.module);
    const DecompositionReport r = decompose(*h, t);
    TensorResult res;
    res.label = c.preset + " L" + str(c.m1) + "(x)L" + str(c.m2);
    res.connected = detect_cartan(h->datum()).connected();
    res.dim = t.total_dim();
    for (const auto& s : r.summands) res.summands[s.m] += s.multiplicity;
    const GFunction g(*h, r.summands.front().highest);
    for (const auto& e : casimir_eigenvalues(t, r, g)) res.casimir.emplace_back(e.scalar_on_span, e.expected);
    if (r.audited_dim != r.module_dim || !r.direct) res.summands[{-1}] = 1;  // poisons the comparison
    out.push_back(std::move(res));
  }
  return out;
}

const std::vector<TensorResult>& tensor_products_default() {
  static const std::vector<TensorResult> results = tensor_products([](const ReducedDatum& d) { return d; });
  return results;
}

void complete_reducibility(Verdict& v) {
  const auto& results = tensor_products_default();
  const oracle::RootSystem a1 = oracle::root_system({{2}});
  const oracle::RootSystem a2 = oracle::root_system({{2, -1}, {-1, 2}});
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& c = tensor_cases()[k];
    const auto& r = results[k];
    Multiset expected;
    if (c.preset == "A1") {
      for (int mu : oracle::clebsch_gordan_a1(c.m1[0], c.m2[0])) expected[{mu}] += 1;
    } else {
      expected = {{{1, 1}, 1}, {{0, 0}, 1}};
      v.expect(oracle::tensor_decomposition(a2, c.m1, c.m2) == expected, r.label + " oracle");
    }
    v.expect(r.summands == expected, r.label + ": " + str(r.summands) + " vs " + str(expected));
    std::uint64_t audited = 0;
    for (const auto& [mu, mult] : r.summands) audited += mult * oracle::weyl_dim(c.preset == "A1" ? a1 : a2, mu);
    v.expect(audited == r.dim, r.label + " dimension audit");
  }
  v.expect(results[results.size() - 2].summands == results.back().summands, "two-parameter A2 multiset");
  v.note("A2 L(1,0)(x)L(0,1) = " + str(results[results.size() - 2].summands) + ", dim " +
         std::to_string(results[results.size() - 2].dim));
}

void casimir(Verdict& v) {
  for (const auto& r : tensor_products_default()) {
    std::set<UnitScalar> values;
    for (const auto& [scalar, g] : r.casimir) {
      v.expect(scalar, r.label + " Omega_G not scalar on a summand");
      values.insert(g);
    }
    std::uint64_t summands = 0;
    for (const auto& [mu, k] : r.summands) summands += k;
    v.expect(r.casimir.size() == summands, r.label + " one eigenvalue per summand");
    if (r.connected) v.expect(values.size() == r.casimir.size(), r.label + " eigenvalues not pairwise distinct");
  }
}

// ------------------------------------------------------------ criterion 5

void counterexample(Verdict& v) {
  const AlgebraHandle h(preset("A1xA1-G-counterexample"));
  const ReducedDatum& d = h.datum();
  const UnitScalar q = UnitScalar::parameter(0);
  // χ'(K_1) = q, χ'(K_2) = q⁻¹ on Γ = ⟨K_1, K_2⟩
  const auto lower = solve_character(d.K, {q, q.inverse()}, d.group_rank);
  v.expect(lower.has_value(), "chi' exists");
  if (!lower) return;
  const Weight upper = *lower * d.chi[0] * d.chi[1];
  const auto m_lower = is_dominant(h, *lower);
  const auto m_upper = is_dominant(h, upper);
  v.expect(m_lower.has_value() && m_upper.has_value(), "both dominant");
  // χ(K_iL_i) = q_ii^{m_i}: χ'(K_1L_1) = q^2 = q_11^2, χ(K_1L_1) = q^2·q^2 = q_11^4, and
  // symmetrically on vertex 2 with q_22 = q⁻¹
  v.expect(m_lower == std::vector<int>{2, 2}, "m(chi') = " + (m_lower ? str(*m_lower) : "none"));
  v.expect(m_upper == std::vector<int>{4, 4}, "m(chi) = " + (m_upper ? str(*m_upper) : "none"));
  v.expect(weight_leq(h, *lower, upper), "chi' <= chi");
  v.expect(!check_nli(d), "check_nli is false");
  bool refused = false;
  try {
    GFunction(h, *lower);
  } catch (const NliFails&) {
    refused = true;
  }
  v.expect(refused, "G refused without allow_degenerate");
  const GFunction g(h, *lower, true);
  v.expect(g(upper) == g(*lower), "G(chi) == G(chi')");
  if (m_lower && m_upper)
    v.note("computed m(chi') = " + str(*m_lower) + ", m(chi) = " + str(*m_upper) + ", G(chi) = G(chi') = " +
           g(upper).to_string(d.params) + "; a stated m(chi) = (3,3) is inconsistent with chi(K_1L_1) = q^4");
}

// ------------------------------------------------------------ criterion 6

void form_identities(Verdict& v) {
  for (const std::string name : {"A1", "A2", "B2", "A2-two-parameter"}) {
    const AlgebraHandle h(preset(name));
    for (const IdentityCheck& c :
         {check_basic_pairing(h), check_gram_nondegenerate(h, 5), check_pairing_routes(h, 4, 200, 20240611)}) {
      v.expect(c.ok && c.cases > 0, name + " " + c.name + ": " + c.detail);
      v.note(name + " " + c.name + ": " + std::to_string(c.cases) + " cases");
    }
  }
}

// ------------------------------------------------------------ criterion 7

void structural_identities(Verdict& v) {
  std::vector<std::pair<std::string, ReducedDatum>> data;
  for (const std::string name : {"A1", "A2", "B2", "A2-two-parameter", "A1xA1-G-counterexample"})
    data.emplace_back(name, preset(name));
  const ReducedDatum a1 = preset("A1");
  data.emplace_back("A1 with l = 1/(q - q^-1)", a1.with_rescaled_ell({parse_scalar("1/(q-q^-1)", a1.params)}));
  for (const auto& [name, datum] : data) {
    const AlgebraHandle h(datum);
    for (const IdentityCheck& c : check_identities(h)) {
      v.expect(c.ok, name + " " + c.name + ": " + c.detail);
      if (c.name.find("rank") != std::string::npos && name.rfind("A1", 0) == 0 && name.find("xA1") == std::string::npos)
        v.expect(!c.skipped && c.cases > 0, name + " " + c.name + " was skipped");
    }
  }
}

// ------------------------------------------------------------ criterion 8

/// θ = 2 diagonal datum on Γ = Z^3 with K_i = L_i = e_i.
ReducedDatum rank_three_datum() {
  ReducedDatum d;
  d.name = "A1xA1 on Z^3";
  d.params = ParameterSpace({"q"});
  d.group_rank = 3;
  for (std::size_t i = 0; i < 2; ++i) {
    GroupElement e = GroupElement::identity(3);
    e.exps[i] = 1;
    d.K.push_back(e);
    d.L.push_back(e);
    d.ell.emplace_back(1);
  }
  const UnitScalar q = UnitScalar::parameter(0);
  d.chi.emplace_back(std::vector<UnitScalar>{q.pow(2), UnitScalar(), UnitScalar()});
  d.chi.emplace_back(std::vector<UnitScalar>{UnitScalar(), q.pow(2), UnitScalar()});
  return d;
}

void reductivity(Verdict& v) {
  const ReductivityReport a1 = regularity_and_reductivity(preset("A1"));
  v.expect(a1.gamma2_index.is_finite() && *a1.gamma2_index.value == 2, "A1 index 2");
  v.expect(a1.reductive, "A1 reductive");
  const ReductivityReport r3 = regularity_and_reductivity(rank_three_datum());
  v.expect(!r3.gamma2_index.is_finite(), "rank three index infinite");
  v.expect(!r3.reductive, "rank three not reductive");
  const auto [yd, lambda] = tilde(preset("A2"));
  const LinkingReport perfect = validate_linking(yd, lambda);
  v.expect(perfect.perfect && perfect.unlinked.empty(), "tilde datum perfectly linked");
  v.expect(pointed_reductivity(yd, lambda).perfect, "pointed report sees the perfect linking");
  LinkingParameter partial = lambda;
  const auto link = *partial.begin();
  partial.erase(link.first);
  partial.erase({link.first.second, link.first.first});
  const LinkingReport broken = validate_linking(yd, partial);
  v.expect(!broken.perfect && !broken.unlinked.empty(), "removing a link leaves unlinked vertices");
  const PointedReductivityReport p = pointed_reductivity(yd, partial);
  v.expect(!p.gamma_reductive, "not Gamma-reductive");
  v.expect(!p.reductive, "not reductive");
  v.note("unlinked vertices after removing one link: " + std::to_string(broken.unlinked.size()));
}

// ------------------------------------------------------------ criterion 9

void ell_invariance(Verdict& v) {
  Verdict scratch;
  const SimpleOutput base = simple_modules(scratch, [](const ReducedDatum& d) { return d; });
  const SimpleOutput moved = simple_modules(scratch, rescaled);
  v.expect(base == moved, "simple module dimensions and multiplicities");
  v.expect(scratch.ok(), "rescaled simple modules match the oracle");
  const auto& a = tensor_products_default();
  const auto b = tensor_products(rescaled);
  for (std::size_t k = 0; k < a.size(); ++k) {
    v.expect(a[k].summands == b[k].summands && a[k].dim == b[k].dim, a[k].label + " decomposition");
    bool scalar = true;
    for (const auto& [s, g] : b[k].casimir) scalar = scalar && s;
    v.expect(scalar && b[k].casimir.size() == a[k].casimir.size(), a[k].label + " Casimir");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"graded dimensions equal Kostant partition numbers", graded_dimensions},
      {"simple module dimensions and weight multiplicities",
       [](Verdict& v) { simple_modules(v, [](const ReducedDatum& d) { return d; }); }},
      {"complete reducibility of tensor products", complete_reducibility},
      {"Casimir acts by G on each summand", casimir},
      {"degenerate diagonal counterexample", counterexample},
      {"pairing values, Gram determinants and pairing recursions", form_identities},
      {"structural identities", structural_identities},
      {"reductivity decisions", reductivity},
      {"invariance under rescaling the linking scalars", ell_invariance},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%zu checks, %.1f s)\n", k + 1, v.ok() ? "PASS" : "FAIL",
                criteria[k].first.c_str(), v.checks(), seconds);
    for (const auto& n : v.notes()) std::printf("    %s\n", n.c_str());
    for (const auto& f : v.failures()) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
    if (!v.ok()) ++failed;
  }
  return failed;
}
