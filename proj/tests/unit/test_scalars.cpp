#include <doctest.h>

#include "hopfkit/errors.hpp"
#include "hopfkit/modp.hpp"
#include "hopfkit/scalar.hpp"
#include "support/generators.hpp"

using namespace hopfkit;

namespace {

const ParameterSpace kQ({"q"});
const ParameterSpace kRS({"r", "s"});

Scalar S(const char* text, const ParameterSpace& p = kQ) { return parse_scalar(text, p); }

}  // namespace

TEST_CASE("monomials compare in graded-lex order") {
  const Monomial x = Monomial::variable(0), y = Monomial::variable(1);
  CHECK(compare(x * x, x * y) > 0);
  CHECK(compare(x * y, y * y) > 0);
  CHECK(compare(y * y, x) > 0);
  CHECK(compare(x, x) == 0);
  CHECK(divides(x, x * y));
  CHECK_FALSE(divides(x * x, x * y));
  CHECK((x * x * y) / (x * y) == x);
  CHECK(common_part(x * x * y, x * y * y) == x * y);
}

TEST_CASE("polynomial arithmetic and exact division") {
  const Polynomial t = Polynomial::variable(0);
  const Polynomial one(1);
  CHECK((t + one) * (t + one) == t * t + t.scaled(2) + one);
  CHECK((t - t).is_zero());
  auto q = exact_divide(t * t - one, t - one);
  REQUIRE(q.has_value());
  CHECK(*q == t + one);
  CHECK_FALSE(exact_divide(t * t + one, t - one).has_value());
  CHECK(t.degree_in(0) == 1);
  CHECK_FALSE(t.uses(1));
}

TEST_CASE("polynomial gcd is monic and divides both inputs") {
  const Polynomial r = Polynomial::variable(0), s = Polynomial::variable(1);
  const Polynomial common = r * s - Polynomial(2);
  const Polynomial a = common * (r + s), b = common * (r - s + Polynomial(1));
  CHECK(gcd(a, b) == common.monic());
  CHECK(gcd(r * r, r * s) == r);
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
  CHECK(gcd(a, Polynomial()) == a.monic());
}

TEST_CASE("gcd divides its inputs on random products") {
  testing::Generator gen(101);
  for (int k = 0; k < 40; ++k) {
    const Polynomial c = gen.polynomial(2), a = gen.polynomial(2), b = gen.polynomial(2);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Polynomial g = gcd(a * c, b * c);
    CHECK(exact_divide(a * c, g).has_value());
    CHECK(exact_divide(b * c, g).has_value());
    CHECK(exact_divide(g, c.monic()).has_value());
  }
}

TEST_CASE("scalars are stored in canonical form") {
  CHECK(S("(q^2-1)/(q-1)") == S("q+1"));
  CHECK(S("q/q") == Scalar(1));
  const Scalar half_over_q = S("1/(2*q)");
  CHECK(half_over_q.denominator().is_one() == false);
  CHECK(half_over_q.denominator().leading_coefficient() == 1);
  CHECK(half_over_q.numerator() == Polynomial(mpq_class(1, 2)));
  CHECK(S("(2*q+2)/(4*q+4)") == Scalar(mpq_class(1, 2)));
}

TEST_CASE("scalar field axioms on random elements") {
  testing::Generator gen(7);
  for (int k = 0; k < 30; ++k) {
    const Scalar a = gen.scalar(2), b = gen.scalar(2), c = gen.nonzero_scalar(2);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(c * c.inverse() == Scalar(1));
    CHECK((a / c) * c == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("printing and parsing round-trip") {
  for (const char* text : {"0", "1", "-3/2", "q", "q^-2", "-r*s^-1", "(r+s)/(r-s)", "1/(q^2+q+1)", "r^3*s^-2+7"}) {
    const ParameterSpace& p = std::string(text).find_first_of("rs") != std::string::npos ? kRS : kQ;
    const Scalar x = parse_scalar(text, p);
    CHECK(parse_scalar(x.to_string(p), p) == x);
  }
  testing::Generator gen(11);
  for (int k = 0; k < 50; ++k) {
    const Scalar x = gen.scalar(2);
    CHECK(parse_scalar(x.to_string(kRS), kRS) == x);
    const UnitScalar u = gen.unit(2);
    CHECK(parse_unit(u.to_string(kRS), kRS) == u);
  }
}

TEST_CASE("parse errors are reported") {
  CHECK_THROWS_AS(S("q^"), ParseError);
  CHECK_THROWS_AS(S("t+1"), ParseError);
  CHECK_THROWS_AS(S("(q+1"), ParseError);
  CHECK_THROWS_AS(S("1/(q-q)"), ParseError);
  CHECK_THROWS_AS(S("q") / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(parse_unit("q+1", kQ), NotAUnit);
  CHECK_THROWS_AS(parse_unit("2", kQ), NotAUnit);
  CHECK(parse_unit("-q^(-3)", kQ) == UnitScalar::minus_one() * UnitScalar::parameter(0, -3));
}

TEST_CASE("unit scalars") {
  const UnitScalar q = UnitScalar::parameter(0);
  CHECK((q * q.inverse()).is_one());
  CHECK(q.pow(3) == UnitScalar::parameter(0, 3));
  CHECK(is_root_of_unity(UnitScalar::minus_one()));
  CHECK_FALSE(is_root_of_unity(q));
  CHECK(Scalar(q.pow(2).to_scalar()).as_unit() == q.pow(2));
  CHECK_FALSE(S("q+1").as_unit().has_value());
  CHECK(S("-q^-1").as_unit() == UnitScalar::minus_one() * q.inverse());
}

TEST_CASE("discrete logarithms of units") {
  const UnitScalar q = UnitScalar::parameter(0);
  CHECK(unit_discrete_log(q.pow(2), q.pow(6)) == 3);
  CHECK(unit_discrete_log(q.pow(2), q.pow(-4)) == -2);
  CHECK_FALSE(unit_discrete_log(q.pow(2), q.pow(3)).has_value());
  CHECK(unit_discrete_log(UnitScalar::minus_one() * q, q.pow(2)) == 2);
  CHECK_FALSE(unit_discrete_log(UnitScalar::minus_one() * q, q).has_value());
  CHECK_THROWS_AS(unit_discrete_log(UnitScalar::minus_one(), UnitScalar()), AmbiguousLog);
}

TEST_CASE("prime field arithmetic") {
  const ModP a(123456789), b(-5);
  CHECK(a * a.inverse() == ModP(1));
  CHECK(b + ModP(5) == ModP(0));
  CHECK(ModP(2).pow(61) == ModP(1));
  CHECK(ModP(3).pow(-1) * ModP(3) == ModP(1));
}

TEST_CASE("specialization is a ring map") {
  testing::Generator gen(5);
  const Specialization spec(42);
  for (int k = 0; k < 30; ++k) {
    const Scalar a = gen.scalar(2), b = gen.scalar(2);
    CHECK(spec(a + b) == spec(a) + spec(b));
    CHECK(spec(a * b) == spec(a) * spec(b));
    const UnitScalar u = gen.unit(2), v = gen.unit(2);
    CHECK(spec(u * v) == spec(u) * spec(v));
    CHECK(spec(u) == spec(u.to_scalar()));
  }
}
