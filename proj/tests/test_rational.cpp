#include "bac/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace bac;

TEST_CASE("rational parsing accepts fractions, integers and decimals") {
  CHECK(parse_rational("1/4") == Rational(1, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("2/8") == Rational(1, 4));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("1") == Rational(1));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+0.2") == Rational(1, 5));
  CHECK(parse_rational(" 7/10 ") == Rational(7, 10));
}

TEST_CASE("decimal and slash forms of the same value parse identically") {
  CHECK(parse_rational("0.2") == parse_rational("1/5"));
  CHECK(parse_rational("0.4") == parse_rational("2/5"));
  CHECK(parse_rational("0.3") == parse_rational("3/10"));
  CHECK(parse_rational("1.0") == parse_rational("1/1"));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
}

TEST_CASE("formatting always renders lowest terms with a denominator") {
  CHECK(format_rational(Rational(1, 4)) == "1/4");
  CHECK(format_rational(parse_rational("2/8")) == "1/4");
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(format_rational(Rational(5)) == "5/1");
}

TEST_CASE("exact comparisons distinguish values floats cannot") {
  // 10^-40 apart; any double comparison would call these equal
  Rational a(1, ipow(10, 40));
  Rational b = a + Rational(1, ipow(10, 80));
  CHECK(cmp(a, b) == Cmp::less);
  CHECK(cmp(b, a) == Cmp::greater);
  CHECK(cmp(a, a) == Cmp::equal);
}

TEST_CASE("ipow matches repeated multiplication") {
  CHECK(ipow(3, 0) == 1);
  CHECK(ipow(3, 1) == 3);
  CHECK(ipow(2, 10) == 1024);
  CHECK(ipow(10, 20) == Int("100000000000000000000"));
}
