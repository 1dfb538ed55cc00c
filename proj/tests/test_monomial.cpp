#include <doctest.h>

#include "mixmult/errors.hpp"
#include "mixmult/numeric.hpp"
#include "support.hpp"

using namespace mixmult;

TEST_CASE("exponent vector arithmetic") {
  const ExponentVector a{2, 0, 1}, b{1, 3, 1};
  CHECK(a.degree() == 3);
  CHECK((a * b) == ExponentVector{3, 3, 2});
  CHECK(lcm(a, b) == ExponentVector{2, 3, 1});
  CHECK(gcd(a, b) == ExponentVector{1, 0, 1});
  CHECK(colon_quotient(a, b) == ExponentVector{1, 0, 0});
  CHECK(pow(b, 2) == ExponentVector{2, 6, 2});
  CHECK(ExponentVector{1, 0, 1}.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(ExponentVector(3).is_one());
  CHECK(variable_power(3, 1, 4) == ExponentVector{0, 4, 0});
  CHECK(ExponentVector{0, 2, 0}.support_mask() == 2u);
}

TEST_CASE("lexicographic order") {
  CHECK(ExponentVector{1, 0} > ExponentVector{0, 5});
  CHECK(ExponentVector{0, 1} < ExponentVector{0, 2});
}

TEST_CASE("exponent overflow is rejected") {
  const ExponentVector big{0xFFFFFFF0u};
  CHECK_THROWS(big * big);
}

TEST_CASE("monomial text round trip") {
  const auto ctx = support::xyz(3);
  CHECK(parse_monomial(ctx, "x^2*y") == ExponentVector{2, 1, 0});
  CHECK(parse_monomial(ctx, " x * x * z ^3 ") == ExponentVector{2, 0, 3});
  CHECK(parse_monomial(ctx, "1") == ExponentVector(3));
  CHECK(format_monomial(ctx, ExponentVector{2, 1, 0}) == "x^2*y");
  CHECK(format_monomial(ctx, ExponentVector(3)) == "1");
  for (const char* text : {"x*y^3*z", "z", "x^10", "1"})
    CHECK(format_monomial(ctx, parse_monomial(ctx, text)) == text);
}

TEST_CASE("malformed monomials") {
  const auto ctx = support::xyz(2);
  for (const char* text : {"", "q", "x^", "x**y", "2*x", "x^-1", "x^y", "*x"})
    CHECK_THROWS_AS(parse_monomial(ctx, text), InputError);
}

TEST_CASE("variable contexts") {
  CHECK_THROWS_AS(VariableContext(std::vector<std::string>{}), InputError);
  CHECK_THROWS_AS(VariableContext({"x", "x"}), InputError);
  CHECK_THROWS_AS(VariableContext({"x", ""}), InputError);
  const VariableContext ctx({"a1", "b_2"});
  CHECK(ctx.index_of("b_2") == 1);
  CHECK_THROWS_AS(ctx.index_of("c"), InputError);
}

TEST_CASE("fraction strings") {
  CHECK(to_fraction_string(Rational(3, 6)) == "1/2");
  CHECK(to_fraction_string(Rational(-4)) == "-4/1");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(parse_fraction_string("-6/4") == Rational(-3, 2));
  CHECK(parse_fraction_string("7") == Rational(7));
  CHECK_THROWS_AS(parse_fraction_string("1/0"), InputError);
  CHECK_THROWS_AS(parse_fraction_string("a/b"), InputError);
}
