#include <doctest.h>

#include <set>

#include "frozen/oracle_values.hpp"
#include "hopfkit/errors.hpp"
#include "hopfkit/oracles.hpp"
#include "hopfkit/presets.hpp"
#include "hopfkit/repr.hpp"

using namespace hopfkit;

namespace {

const AlgebraHandle& handle(const std::string& name) {
  static std::map<std::string, AlgebraHandle> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, AlgebraHandle(preset(name))).first;
  return it->second;
}

HighestWeightModule simple(const std::string& name, const std::vector<int>& m) {
  const AlgebraHandle& h = handle(name);
  return simple_module(h, dominant_character(h, m));
}

std::map<std::vector<int>, std::uint64_t> degree_multiplicities(const HighestWeightModule& L) {
  std::map<std::vector<int>, std::uint64_t> out;
  for (std::size_t k = 0; k < L.module.weight_count(); ++k) out[L.degrees[k].coords] += L.module.dim(k);
  return out;
}

std::map<std::vector<int>, std::uint64_t> summands_of(const DecompositionReport& r) {
  std::map<std::vector<int>, std::uint64_t> out;
  for (const auto& s : r.summands) out[s.m] += s.multiplicity;
  return out;
}

oracle::RootSystem classical(const AlgebraHandle& h) { return oracle::root_system(detect_cartan(h.datum().braiding()).a); }

Matrix<Scalar> scalar_identity(std::size_t n, const UnitScalar& c) {
  Matrix<Scalar> m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = c.to_scalar();
  return m;
}

}  // namespace

TEST_CASE("rank one simple modules have dimension m+1") {
  for (int m = 0; m <= 6; ++m) {
    const HighestWeightModule L = simple("A1", {m});
    CHECK(L.module.total_dim() == std::size_t(m + 1));
    CHECK(L.depth == m);
    CHECK(audit_relations(L.module).ok);
    CHECK(is_integrable(L.module));
  }
}

TEST_CASE("weight multiplicities agree with the frozen Freudenthal table") {
  for (const auto& c : frozen::kFreudenthal) {
    std::uint64_t weyl = 0;
    for (const auto& [g, k] : c.multiplicities) weyl += k;
    if (weyl > 30) continue;
    CAPTURE(c.type);
    CAPTURE(c.m.size() > 1 ? c.m[1] : -1);
    const HighestWeightModule L = simple(c.type, c.m);
    std::map<std::vector<int>, std::uint64_t> expected(c.multiplicities.begin(), c.multiplicities.end());
    CHECK(degree_multiplicities(L) == expected);
  }
}

TEST_CASE("A2 adjoint module") {
  const HighestWeightModule L = simple("A2", {1, 1});
  CHECK(L.module.total_dim() == 8);
  CHECK(degree_multiplicities(L).at({1, 1}) == 2);
  const RelationsAudit audit = audit_relations(L.module);
  CAPTURE(audit.failures.size());
  CHECK(audit.ok);
}

TEST_CASE("non-dominant weights are rejected") {
  const AlgebraHandle& h = handle("A1");
  CHECK_THROWS_AS(simple_module(h, h.datum().chi[0].inverse()), NotDominant);
  CHECK(is_dominant(h, h.datum().chi[0]) == std::vector<int>{2});
  CHECK_FALSE(is_dominant(h, h.datum().chi[0].inverse()).has_value());
}

TEST_CASE("truncated Verma modules") {
  const AlgebraHandle& h = handle("A1");
  const HighestWeightModule M = verma_truncated(h, dominant_character(h, {1}), 3);
  CHECK(M.kind == ModuleKind::Verma);
  CHECK(M.module.total_dim() == 4);
  CHECK(M.module.truncated_depth == 3);
  CHECK(audit_relations(M.module).ok);
}

TEST_CASE("rank one tensor products follow the Clebsch-Gordan rule") {
  const AlgebraHandle& h = handle("A1");
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const WeightModule t = tensor(simple("A1", {m}).module, simple("A1", {n}).module);
      CHECK(t.total_dim() == std::size_t((m + 1) * (n + 1)));
      CHECK(audit_relations(t).ok);
      const DecompositionReport r = decompose(h, t);
      CHECK(r.direct);
      CHECK(r.audited_dim == r.module_dim);
      std::map<std::vector<int>, std::uint64_t> expected;
      for (int k : oracle::clebsch_gordan_a1(m, n)) expected[{k}] += 1;
      CHECK(summands_of(r) == expected);
    }
}

TEST_CASE("higher rank tensor products agree with the character oracle") {
  for (const auto& c : frozen::kTensor) {
    if (c.type == "A1") continue;
    CAPTURE(c.type);
    const AlgebraHandle& h = handle(c.type);
    const WeightModule t = tensor(simple(c.type, c.m1).module, simple(c.type, c.m2).module);
    const DecompositionReport r = decompose(h, t);
    std::map<std::vector<int>, std::uint64_t> expected(c.summands.begin(), c.summands.end());
    CHECK(summands_of(r) == expected);
    CHECK(summands_of(r) == oracle::tensor_decomposition(classical(h), c.m1, c.m2));
  }
}

TEST_CASE("the two-parameter datum decomposes like the one-parameter one") {
  const AlgebraHandle& h = handle("A2-two-parameter");
  const WeightModule t = tensor(simple("A2-two-parameter", {1, 0}).module, simple("A2-two-parameter", {0, 1}).module);
  CHECK(t.total_dim() == 9);
  const std::map<std::vector<int>, std::uint64_t> expected{{{1, 1}, 1}, {{0, 0}, 1}};
  CHECK(summands_of(decompose(h, t)) == expected);
}

TEST_CASE("modules over different handles cannot be tensored") {
  AlgebraHandle other(preset("A1"));
  const HighestWeightModule a = simple("A1", {1});
  const HighestWeightModule b = simple_module(other, dominant_character(other, {1}));
  CHECK_THROWS_AS(tensor(a.module, b.module), HandleMismatch);
}

TEST_CASE("the G-weighted Casimir acts by G on simple modules") {
  for (const std::string name : {"A1", "A2", "B2"}) {
    const AlgebraHandle& h = handle(name);
    for (std::size_t i = 0; i < h.theta(); ++i) {
      std::vector<int> m(h.theta(), 0);
      m[i] = 1;
      const HighestWeightModule L = simple(name, m);
      const GFunction g(h, L.highest);
      CAPTURE(name);
      CHECK(casimir_apply(L.module, g) == scalar_identity(L.module.total_dim(), g(L.highest)));
    }
  }
}

TEST_CASE("G separates the summands of a tensor product") {
  const AlgebraHandle& h = handle("A1");
  const WeightModule t = tensor(simple("A1", {2}).module, simple("A1", {2}).module);
  const DecompositionReport r = decompose(h, t);
  const GFunction g(h, r.summands.front().highest);
  std::set<UnitScalar> values;
  for (const auto& e : casimir_eigenvalues(t, r, g)) {
    CHECK(e.scalar_on_span);
    values.insert(e.expected);
  }
  CHECK(values.size() == 3);
}

TEST_CASE("G satisfies its defining recursion") {
  const AlgebraHandle& h = handle("B2");
  const auto& d = h.datum();
  const Weight top = dominant_character(h, {1, 1});
  const GFunction g(h, top);
  CHECK(g(top) == UnitScalar());
  for (std::size_t i = 0; i < 2; ++i) {
    const Weight lower = top * d.chi[i].inverse();
    CHECK(g(top) == g(lower) * top(d.K[i] * d.L[i]));
  }
  CHECK(g.q_alpha(DegreeVector::zero(2)).is_one());
}

TEST_CASE("degenerate diagonal: equal G on comparable dominant weights") {
  const AlgebraHandle& h = handle("A1xA1-G-counterexample");
  const auto& d = h.datum();
  const Weight lower = d.chi[0] * d.chi[1];
  const Weight upper = lower * d.chi[0] * d.chi[1];
  CHECK(is_dominant(h, lower) == std::vector<int>{2, 2});
  CHECK(is_dominant(h, upper) == std::vector<int>{4, 4});
  CHECK(weight_leq(h, lower, upper));
  CHECK_FALSE(weight_leq(h, upper, lower));
  CHECK_THROWS_AS(GFunction(h, lower), NliFails);
  const GFunction g(h, lower, true);
  CHECK(g(lower).is_one());
  CHECK(g(upper).is_one());
  // every q-power character lies in the coset; a sign does not
  const Weight sign(std::vector<UnitScalar>{UnitScalar::minus_one(), UnitScalar()});
  CHECK_THROWS_AS(g(sign), NotInCoset);
}

TEST_CASE("simple modules over a disconnected diagram factor") {
  const AlgebraHandle& h = handle("A1xA1-G-counterexample");
  const FactorizationReport f = component_factorization_check(h, dominant_character(h, {2, 2}));
  CHECK(f.dim == 9);
  CHECK(f.dim_first == 3);
  CHECK(f.dim_rest == 3);
  CHECK(f.holds());
  CHECK_THROWS_AS(component_factorization_check(handle("A2"), dominant_character(handle("A2"), {1, 0})),
                  ConnectedDiagram);
}

TEST_CASE("sub data keep the chosen vertices") {
  const ReducedDatum d = preset("A1xA1-G-counterexample");
  const ReducedDatum s = sub_datum(d, {1});
  REQUIRE(s.theta() == 1);
  CHECK(s.K[0] == d.K[1]);
  CHECK(s.chi[0] == d.chi[1]);
  CHECK(s.group_rank == d.group_rank);
}
