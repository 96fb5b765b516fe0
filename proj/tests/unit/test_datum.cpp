#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hopfkit/datum.hpp"
#include "hopfkit/datum_io.hpp"
#include "hopfkit/errors.hpp"
#include "hopfkit/presets.hpp"

using namespace hopfkit;

namespace {

UnitScalar qp(int e) { return UnitScalar::parameter(0, e); }

/// Γ = Z^rank; g_i and χ_i given by exponent rows, χ_i(e_k) = q^{chi[i][k]}.
YDDatum yd(const std::vector<std::vector<long>>& g, const std::vector<std::vector<int>>& chi, std::size_t rank) {
  YDDatum d;
  d.params = ParameterSpace({"q"});
  d.group_rank = rank;
  for (const auto& row : g) d.g.emplace_back(row);
  for (const auto& row : chi) {
    std::vector<UnitScalar> v;
    for (int e : row) v.push_back(qp(e));
    d.chi.emplace_back(v);
  }
  return d;
}

/// θ = 2 diagonal A1 × A1 datum on Γ = Z^3 with K_i = L_i = e_i.
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
  d.chi.emplace_back(std::vector<UnitScalar>{qp(2), qp(0), qp(0)});
  d.chi.emplace_back(std::vector<UnitScalar>{qp(0), qp(2), qp(0)});
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("every preset validates") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const ReducedDatum d = preset(name);
    CHECK_NOTHROW(validate_reduced(d));
    for (std::size_t i = 0; i < d.theta(); ++i)
      for (std::size_t j = 0; j < d.theta(); ++j) CHECK(d.chi[j](d.K[i]) == d.chi[i](d.L[j]));
  }
  CHECK_THROWS_AS(preset("E8"), InvalidDatum);
}

TEST_CASE("counterexample preset has the prescribed characters") {
  const ReducedDatum d = preset("A1xA1-G-counterexample");
  REQUIRE(d.theta() == 2);
  CHECK(d.K == d.L);
  CHECK(d.chi[0](d.K[0]) == qp(1));
  CHECK(d.chi[0](d.K[1]).is_one());
  CHECK(d.chi[1](d.K[0]).is_one());
  CHECK(d.chi[1](d.K[1]) == qp(-1));
  CHECK_FALSE(check_nli(d));
}

TEST_CASE("genericity") {
  CHECK(validate_yd(yd({{1}}, {{2}}, 1)).generic);
  CHECK_THROWS_AS(validate_yd(yd({{1}}, {{0}}, 1)), NotGeneric);
  YDDatum minus = yd({{1}}, {{1}}, 1);
  minus.chi[0].values[0] = UnitScalar::minus_one();
  CHECK_THROWS_AS(validate_yd(minus), NotGeneric);
}

TEST_CASE("equivalence classes follow nontrivial braiding") {
  const auto q = preset("A2").braiding();
  CHECK(equivalence_classes(q).size() == 1);
  const auto c = equivalence_classes(preset("A1xA1-G-counterexample").braiding());
  CHECK(c == std::vector<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("Cartan detection on presets") {
  const CartanData a2 = detect_cartan(preset("A2"));
  CHECK(a2.a == IntegerMatrix{{2, -1}, {-1, 2}});
  CHECK(a2.finite_type);
  CHECK(a2.component_types == std::vector<std::string>{"A2"});
  const CartanData b2 = detect_cartan(preset("B2"));
  CHECK(b2.a == IntegerMatrix{{2, -1}, {-2, 2}});
  CHECK(b2.d == std::vector<int>{2, 1});
  CHECK(b2.component_types == std::vector<std::string>{"B2"});
  const CartanData two = detect_cartan(preset("A2-two-parameter"));
  CHECK(two.a == a2.a);
  const CartanData cex = detect_cartan(preset("A1xA1-G-counterexample"));
  CHECK_FALSE(cex.connected());
  CHECK(cex.component_types == std::vector<std::string>{"A1", "A1"});
}

TEST_CASE("non-Cartan braidings are rejected") {
  BraidingMatrix q{{qp(2), qp(1)}, {qp(1), qp(2)}};  // q12 q21 = q^2 = q11^1, a12 = +1
  CHECK_THROWS_AS(detect_cartan(q), NotCartan);
  BraidingMatrix r{{qp(2), qp(-1)}, {qp(0), qp(3)}};  // q12 q21 = q^-1 not a power of q^2
  CHECK_THROWS_AS(detect_cartan(r), NotCartan);
}

TEST_CASE("Dynkin classification") {
  CHECK(classify_connected({{2, -1}, {-3, 2}}) == "G2");
  CHECK(classify_connected({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == "A3");
  CHECK_FALSE(classify_connected({{2, -2}, {-2, 2}}).has_value());
  CHECK(symmetrized_positive_definite({{2, -1}, {-2, 2}}, {2, 1}));
  CHECK_FALSE(symmetrized_positive_definite({{2, -2}, {-2, 2}}, {1, 1}));
}

TEST_CASE("linkability and linking validation") {
  const auto [d, lambda] = tilde(preset("A1"));
  REQUIRE(d.theta() == 2);
  CHECK(linkable(d, 0, 1).linkable);
  CHECK_FALSE(linkable(d, 0, 0).linkable);
  const LinkingReport r = validate_linking(d, lambda);
  CHECK(r.perfect);
  CHECK(r.unlinked.empty());
  CHECK(r.partner.at(0) == 1);
  LinkingParameter bad = lambda;
  bad[{0, 1}] = bad[{0, 1}] * Scalar(2);
  CHECK_THROWS_AS(validate_linking(d, bad), AntisymmetryViolation);
  LinkingParameter self{{{0, 0}, Scalar(1)}};
  CHECK_THROWS_AS(validate_linking(d, self), IllegalLink);
}

TEST_CASE("reduction of tilde data recovers the reduced datum") {
  for (const std::string name : {"A1", "A2", "B2", "A2-two-parameter"}) {
    CAPTURE(name);
    const ReducedDatum original = preset(name);
    const auto [d, lambda] = tilde(original);
    const ReducedConversion conv = to_reduced(d, lambda);
    CHECK(conv.datum.K == original.K);
    CHECK(conv.datum.L == original.L);
    CHECK(conv.datum.chi == original.chi);
    CHECK(conv.datum.ell == original.ell);
  }
}

TEST_CASE("removing a link leaves unlinked vertices") {
  const auto [d, lambda] = tilde(preset("A2"));
  LinkingParameter partial = lambda;
  partial.erase({0, 2});
  partial.erase({2, 0});
  const LinkingReport r = validate_linking(d, partial);
  CHECK_FALSE(r.perfect);
  CHECK(r.unlinked == std::set<std::size_t>{0, 2});
  CHECK_THROWS_AS(to_reduced(d, partial), NotPerfect);
  const RestrictedDatum rest = restrict_datum(d, partial, r.unlinked);
  CHECK(rest.datum.theta() == 2);
  CHECK(rest.kept == std::vector<std::size_t>{1, 3});
  CHECK_THROWS_AS(restrict_datum(d, partial, {1}), NotUnlinked);
  const PointedReductivityReport p = pointed_reductivity(d, partial);
  CHECK_FALSE(p.perfect);
  CHECK_FALSE(p.gamma_reductive);
  CHECK_FALSE(p.reductive);
}

TEST_CASE("regularity and the index of the subgroup generated by K_iL_i") {
  const ReductivityReport a1 = regularity_and_reductivity(preset("A1"));
  CHECK(a1.regular);
  CHECK(a1.gamma2_index.value == 2);
  CHECK(a1.reductive);
  const ReductivityReport a2 = regularity_and_reductivity(preset("A2"));
  CHECK(a2.gamma2_index.value == 4);
  const ReductivityReport two = regularity_and_reductivity(preset("A2-two-parameter"));
  CHECK_FALSE(two.gamma2_index.is_finite());
  CHECK_FALSE(two.reductive);
  const ReductivityReport r3 = regularity_and_reductivity(rank_three_datum());
  CHECK(r3.regular);
  CHECK_FALSE(r3.gamma2_index.is_finite());
  CHECK_FALSE(r3.reductive);
}

TEST_CASE("twist condition and N-linear independence") {
  CHECK(check_dj2(preset("A2")).has_value());
  CHECK(check_dj2(preset("B2")).has_value());
  CHECK(check_nli(preset("A2")));
  CHECK(check_nli(preset("B2")));
  CHECK_FALSE(check_nli(std::vector<UnitScalar>{qp(2), qp(-3)}));
  CHECK(check_nli(std::vector<UnitScalar>{qp(2), qp(3)}));
  CHECK(satisfies_link_condition(preset("A2").braiding()));
}

TEST_CASE("rescaling the linking scalars") {
  const ReducedDatum d = preset("A2");
  const ReducedDatum r = d.with_rescaled_ell({Scalar(2), Scalar::parameter(0)});
  CHECK(r.ell[0] == Scalar(2));
  CHECK(r.ell[1] == Scalar::parameter(0));
  CHECK(r.chi == d.chi);
}

TEST_CASE("datum JSON round trip") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const ReducedDatum d = preset(name);
    const LoadedDatum back = parse_datum_json(reduced_to_json(d));
    REQUIRE(back.reduced.has_value());
    CHECK(back.reduced->K == d.K);
    CHECK(back.reduced->L == d.L);
    CHECK(back.reduced->chi == d.chi);
    CHECK(back.reduced->ell == d.ell);
  }
  const auto [d, lambda] = tilde(preset("A2"));
  const LoadedDatum back = parse_datum_json(yd_to_json(d, lambda));
  REQUIRE(back.yd.has_value());
  CHECK(back.yd->g == d.g);
  CHECK(back.lambda == lambda);
}

TEST_CASE("datum files") {
  const LoadedDatum a2 = load_datum_file(std::string(HOPFKIT_TEST_DATA) + "/a2.json");
  REQUIRE(a2.reduced.has_value());
  CHECK(a2.reduced->chi == preset("A2").chi);
  const LoadedDatum linked = load_datum_file(std::string(HOPFKIT_TEST_DATA) + "/a1_linked.json");
  REQUIRE(linked.yd.has_value());
  CHECK(validate_linking(*linked.yd, linked.lambda).perfect);
  CHECK_THROWS_AS(parse_datum_json("{nonsense"), ParseError);
  CHECK_THROWS_AS(load_datum_file(std::string(HOPFKIT_TEST_DATA) + "/missing.json"), Error);
  std::string text = read_file(std::string(HOPFKIT_TEST_DATA) + "/a2.json");
  const auto pos = text.find("[-1, 2]]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 8, "[-2, 2]]");
  CHECK_THROWS_AS(parse_datum_json(text), InvalidDatum);
}
