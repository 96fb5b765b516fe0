// Prints tests/frozen/oracle_values.hpp. Regenerate with
//   build/tools/hopfkit_freeze_oracles > tests/frozen/oracle_values.hpp
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hopfkit/oracles.hpp"

namespace {

using hopfkit::oracle::CartanMatrix;
using hopfkit::oracle::IntVector;

const std::vector<std::pair<std::string, CartanMatrix>>& types() {
  static const std::vector<std::pair<std::string, CartanMatrix>> t{
      {"A1", {{2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"B2", {{2, -1}, {-2, 2}}},
      {"G2", {{2, -1}, {-3, 2}}},
      {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {"B3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
      {"C3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
      {"D4", {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}},
      {"F4", {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}},
  };
  return t;
}

std::string vec(const IntVector& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "}";
}

std::vector<IntVector> box(std::size_t n, int lo, int hi, int max_entry) {
  std::vector<IntVector> out;
  IntVector cur(n, 0);
  auto rec = [&](auto& self, std::size_t k, int sum) -> void {
    if (k == n) {
      if (sum >= lo && sum <= hi) out.push_back(cur);
      return;
    }
    for (int x = 0; x <= max_entry && sum + x <= hi; ++x) {
      cur[k] = x;
      self(self, k + 1, sum + x);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

int main() {
  namespace o = hopfkit::oracle;
  std::map<std::string, o::RootSystem> systems;
  for (const auto& [name, a] : types()) systems.emplace(name, o::root_system(a));
  auto& out = std::cout;
  out << "// Generated by hopfkit_freeze_oracles from the integer oracles. Do not edit.\n"
         "#pragma once\n\n#include <cstdint>\n#include <string>\n#include <vector>\n\n"
         "namespace hopfkit::frozen {\n\n"
         "struct CartanCase {\n  std::string type;\n  std::vector<std::vector<int>> cartan;\n  std::vector<int> symmetrizer;\n"
         "  std::size_t positive_roots;\n};\n\n"
         "struct ValueCase {\n  std::string type;\n  std::vector<int> key;\n  std::uint64_t value;\n};\n\n"
         "struct WeightCase {\n  std::string type;\n  std::vector<int> m;\n"
         "  std::vector<std::pair<std::vector<int>, std::uint64_t>> multiplicities;  // keyed by gamma\n};\n\n"
         "struct TensorCase {\n  std::string type;\n  std::vector<int> m1, m2;\n"
         "  std::vector<std::pair<std::vector<int>, std::uint64_t>> summands;\n};\n\n"
         "struct ClebschGordanCase {\n  int m, n;\n  std::vector<int> highest;\n};\n\n";

  out << "inline const std::vector<CartanCase> kCartan{\n";
  for (const auto& [name, a] : types()) {
    const auto& rs = systems.at(name);
    out << "    {\"" << name << "\", {";
    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? ", " : "") << vec(a[i]);
    out << "}, " << vec(rs.d) << ", " << rs.positive.size() << "},\n";
  }
  out << "};\n\n";

  out << "/// Kostant partition numbers for |alpha| <= 8.\ninline const std::vector<ValueCase> kKostant{\n";
  for (const std::string name : {"A1", "A2", "B2"}) {
    const auto& rs = systems.at(name);
    for (const auto& alpha : box(rs.rank(), 0, 8, 8))
      out << "    {\"" << name << "\", " << vec(alpha) << ", " << o::kostant_partition(rs, alpha) << "},\n";
  }
  out << "};\n\n";

  std::vector<std::pair<std::string, std::vector<IntVector>>> weyl_cases;
  {
    std::vector<IntVector> a1;
    for (int m = 0; m <= 10; ++m) a1.push_back({m});
    weyl_cases.emplace_back("A1", a1);
    weyl_cases.emplace_back("A2", box(2, 0, 4, 2));
    weyl_cases.emplace_back("B2", box(2, 0, 2, 2));
    weyl_cases.emplace_back("G2", std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}});
  }
  out << "/// Weyl dimensions of L(m).\ninline const std::vector<ValueCase> kWeyl{\n";
  for (const auto& [name, ms] : weyl_cases)
    for (const auto& m : ms) out << "    {\"" << name << "\", " << vec(m) << ", " << o::weyl_dim(systems.at(name), m) << "},\n";
  out << "};\n\n";

  out << "/// Freudenthal multiplicities of the weight lambda - sum gamma_i alpha_i.\n"
         "inline const std::vector<WeightCase> kFreudenthal{\n";
  for (const auto& [name, ms] : weyl_cases) {
    if (name == "G2") continue;
    for (const auto& m : ms) {
      out << "    {\"" << name << "\", " << vec(m) << ", {";
      bool first = true;
      for (const auto& [g, k] : o::freudenthal(systems.at(name), m)) {
        out << (first ? "" : ", ") << "{" << vec(g) << ", " << k << "}";
        first = false;
      }
      out << "}},\n";
    }
  }
  out << "};\n\n";

  out << "/// Simple summands of L(m1) (x) L(m2).\ninline const std::vector<TensorCase> kTensor{\n";
  auto tensor_case = [&](const std::string& name, const IntVector& m1, const IntVector& m2) {
    out << "    {\"" << name << "\", " << vec(m1) << ", " << vec(m2) << ", {";
    bool first = true;
    for (const auto& [mu, k] : o::tensor_decomposition(systems.at(name), m1, m2)) {
      out << (first ? "" : ", ") << "{" << vec(mu) << ", " << k << "}";
      first = false;
    }
    out << "}},\n";
  };
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) tensor_case("A1", {m}, {n});
  tensor_case("A2", {1, 0}, {0, 1});
  tensor_case("A2", {1, 0}, {1, 0});
  tensor_case("A2", {1, 1}, {1, 0});
  tensor_case("B2", {1, 0}, {0, 1});
  tensor_case("B2", {0, 1}, {0, 1});
  out << "};\n\n";

  out << "inline const std::vector<ClebschGordanCase> kClebschGordan{\n";
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) out << "    {" << m << ", " << n << ", " << vec(o::clebsch_gordan_a1(m, n)) << "},\n";
  out << "};\n\n}  // namespace hopfkit::frozen\n";
}
