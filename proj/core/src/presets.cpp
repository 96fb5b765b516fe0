#include "hopfkit/presets.hpp"

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

GroupElement basis_element(std::size_t rank, std::size_t k) {
  GroupElement g = GroupElement::identity(rank);
  g.exps[k] = 1;
  return g;
}

// Γ = Z^θ with K_i = L_i = g_i and χ_j(g_i) = q^{b_ij} for symmetric b.
ReducedDatum symmetric_preset(std::string name, const std::vector<std::vector<int>>& b) {
  const std::size_t n = b.size();
  ReducedDatum d;
  d.name = std::move(name);
  d.params = ParameterSpace({"q"});
  d.group_rank = n;
  for (std::size_t i = 0; i < n; ++i) {
    d.K.push_back(basis_element(n, i));
    d.L.push_back(basis_element(n, i));
    std::vector<UnitScalar> values;
    for (std::size_t k = 0; k < n; ++k) values.push_back(UnitScalar::parameter(0, b[k][i]));
    d.chi.emplace_back(std::move(values));
    d.ell.emplace_back(1);
  }
  return d;
}

ReducedDatum two_parameter_a2() {
  // q = [[r s⁻¹, s], [r⁻¹, r s⁻¹]] on Γ = Z⁴ = ⟨K1, K2, L1, L2⟩
  auto r = [](int e) { return UnitScalar::parameter(0, e); };
  auto s = [](int e) { return UnitScalar::parameter(1, e); };
  const UnitScalar qm[2][2] = {{r(1) * s(-1), s(1)}, {r(-1), r(1) * s(-1)}};
  ReducedDatum d;
  d.name = "A2-two-parameter";
  d.params = ParameterSpace({"r", "s"});
  d.group_rank = 4;
  for (std::size_t i = 0; i < 2; ++i) {
    d.K.push_back(basis_element(4, i));
    d.L.push_back(basis_element(4, 2 + i));
  }
  for (std::size_t j = 0; j < 2; ++j) {
    // χ_j(K_i) = q_ij, χ_j(L_i) = q_ji
    d.chi.emplace_back(std::vector<UnitScalar>{qm[0][j], qm[1][j], qm[j][0], qm[j][1]});
    d.ell.emplace_back(1);
  }
  return d;
}

ReducedDatum counterexample() {
  ReducedDatum d;
  d.name = "A1xA1-G-counterexample";
  d.params = ParameterSpace({"q"});
  d.group_rank = 2;
  for (std::size_t i = 0; i < 2; ++i) {
    d.K.push_back(basis_element(2, i));
    d.L.push_back(basis_element(2, i));
    d.ell.emplace_back(1);
  }
  d.chi.emplace_back(std::vector<UnitScalar>{UnitScalar::parameter(0, 1), UnitScalar()});
  d.chi.emplace_back(std::vector<UnitScalar>{UnitScalar(), UnitScalar::parameter(0, -1)});
  return d;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"A1", "A2", "B2", "A2-two-parameter", "A1xA1-G-counterexample"};
  return names;
}

ReducedDatum preset(std::string_view name) {
  if (name == "A1") return symmetric_preset("A1", {{2}});
  if (name == "A2") return symmetric_preset("A2", {{2, -1}, {-1, 2}});
  if (name == "B2") return symmetric_preset("B2", {{4, -2}, {-2, 2}});
  if (name == "A2-two-parameter") return two_parameter_a2();
  if (name == "A1xA1-G-counterexample") return counterexample();
  throw InvalidDatum("unknown preset '" + std::string(name) + "'");
}

}  // namespace hopfkit
