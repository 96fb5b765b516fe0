#include <doctest.h>

#include "hopfkit/errors.hpp"
#include "hopfkit/lattice.hpp"
#include "support/generators.hpp"

using namespace hopfkit;

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<mpz_class>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

mpz_class det(IntMatrix m) {
  // fraction-free Bareiss elimination
  const std::size_t n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Character chr(std::vector<int> exps) {
  std::vector<UnitScalar> v;
  for (int e : exps) v.push_back(UnitScalar::parameter(0, e));
  return Character(v);
}

}  // namespace

TEST_CASE("degree vectors") {
  const DegreeVector a({2, 1}), b = DegreeVector::unit(2, 1);
  CHECK(a.height() == 3);
  CHECK((a - b) == DegreeVector({2, 0}));
  CHECK((a * 2) == DegreeVector({4, 2}));
  CHECK_FALSE((b - a).is_nonnegative());
  CHECK(DegreeVector::zero(3).is_zero());
}

TEST_CASE("group elements and characters") {
  const GroupElement g({1, -2}), h({0, 3});
  CHECK((g * h) == GroupElement({1, 1}));
  CHECK((g * g.inverse()).is_identity());
  CHECK(g.pow(3) == GroupElement({3, -6}));
  const Character c = chr({1, 2});
  CHECK(c(g) == UnitScalar::parameter(0, -3));
  CHECK((c * c.inverse()).is_trivial());
  CHECK_THROWS_AS(evaluate(c, GroupElement({1})), RankMismatch);
}

TEST_CASE("Smith normal form satisfies U A V = D on random matrices") {
  testing::Generator gen(17);
  for (int k = 0; k < 40; ++k) {
    const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 4));
    const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 4));
    IntMatrix a(rows, std::vector<mpz_class>(cols));
    for (auto& row : a)
      for (auto& x : row) x = gen.integer(-6, 6);
    const SmithForm s = smith_normal_form(a);
    CHECK(multiply(multiply(s.U, a), s.V) == s.D);
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(s.D[i][j] == 0);
    for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
      CHECK(s.D[i][i] >= 0);
      if (s.D[i + 1][i + 1] != 0) CHECK(s.D[i + 1][i + 1] % s.D[i][i] == 0);
    }
  }
}

TEST_CASE("subgroup index") {
  CHECK(smith_index({GroupElement({2})}, 1).value == 2);
  CHECK(smith_index({GroupElement({2, 0}), GroupElement({0, 2})}, 2).value == 4);
  CHECK(smith_index({GroupElement({1, 1}), GroupElement({1, -1})}, 2).value == 2);
  CHECK_FALSE(smith_index({GroupElement({1, 1, 0}), GroupElement({0, 1, 1})}, 3).is_finite());
  CHECK(smith_index({}, 0).value == 1);
}

TEST_CASE("integer systems") {
  const IntMatrix a{{2, 0}, {0, 3}};
  auto x = solve_integer_system(a, {4, 9});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(solve_integer_system(a, {1, 0}).has_value());
}

TEST_CASE("Z-linear independence of characters") {
  CHECK(z_linear_independent({chr({1, 0}), chr({0, 1})}));
  CHECK_FALSE(z_linear_independent({chr({1, 2}), chr({2, 4})}));
  CHECK_FALSE(z_linear_independent({chr({0, 0})}));
}

TEST_CASE("weight differences") {
  const std::vector<Character> basis{chr({2, -1}), chr({-1, 2})};
  const Character base = chr({1, 0});
  const DegreeVector alpha({2, 1});
  const Character target = base * character_power(basis, alpha);
  CHECK(try_solve_weight_difference(target, base, basis) == alpha);
  CHECK_FALSE(try_solve_weight_difference(chr({1, 1}), base, basis).has_value());
  CHECK_THROWS_AS(solve_weight_difference(chr({1, 1}), base, basis), NoSolution);
  CHECK_THROWS_AS(try_solve_weight_difference(target, base, {chr({1, 1}), chr({2, 2})}), NotRegular);
}

TEST_CASE("characters with prescribed values") {
  auto c = solve_character({GroupElement({2, 0}), GroupElement({0, 1})},
                           {UnitScalar::parameter(0, 4), UnitScalar::parameter(0, -1)}, 2);
  REQUIRE(c.has_value());
  CHECK((*c)(GroupElement({2, 0})) == UnitScalar::parameter(0, 4));
  CHECK((*c)(GroupElement({0, 1})) == UnitScalar::parameter(0, -1));
  CHECK_FALSE(solve_character({GroupElement({2})}, {UnitScalar::parameter(0, 1)}, 1).has_value());
}
