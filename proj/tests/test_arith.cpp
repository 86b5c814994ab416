#include "dedekind/error.hpp"
#include "dedekind/numtheory.hpp"
#include "dedekind/perm.hpp"
#include "dedekind/rational.hpp"

#include <doctest.h>

using namespace dedekind;

TEST_CASE("rational arithmetic stays reduced") {
  const Rational a(BigInt(6), BigInt(8));
  CHECK(a.str() == "3/4");
  CHECK((a + Rational(BigInt(1), BigInt(4))).str() == "1/1");
  CHECK((a * Rational(BigInt(4), BigInt(3))) == Rational(1));
  CHECK((a / Rational(BigInt(-3), BigInt(2))).str() == "-1/2");
  CHECK(Rational(BigInt(2), BigInt(-4)).str() == "-1/2");
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK((Rational(BigInt(1), BigInt(3)) - Rational(BigInt(1), BigInt(2))).abs().str() == "1/6");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), InvalidParameter);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK(Rational::parse("0.01").str() == "1/100");
  CHECK(Rational::parse("7").str() == "7/1");
  CHECK(Rational::parse("-0.25").str() == "-1/4");
  CHECK(Rational::parse("0.08").str() == "2/25");
  CHECK(Rational::parse("010").str() == "10/1");
  CHECK(Rational::parse(".5").str() == "1/2");
  CHECK(Rational::parse("-1.5").str() == "-3/2");
  CHECK_THROWS(Rational::parse("1.2.3"));
  CHECK_THROWS(Rational::parse("1.-2"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("rational to_double") {
  CHECK(Rational(BigInt(1), BigInt(4)).to_double() == doctest::Approx(0.25));
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 3) == 2);
  CHECK(multiplicative_order(2, 4) == 0);
  CHECK(ipow(3, 4) == 81);
  CHECK(big_pow(2, 100).str() == "1267650600228229401496703205376");
  CHECK(factorize(360) == std::map<std::uint64_t, unsigned>{{2, 3}, {3, 2}, {5, 1}});
  const auto primes = first_odd_primes(6);
  CHECK(primes == std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17});
}

TEST_CASE("permutations compose left to right") {
  const auto a = Perm::from_cycles(3, {{0, 1}});
  const auto b = Perm::from_cycles(3, {{1, 2}});
  // (a*b)(0) = b(a(0)) = b(1) = 2
  CHECK((a * b)(0) == 2);
  CHECK((a * a).is_identity());
  const auto c = Perm::from_cycles(4, {{0, 1, 2, 3}});
  CHECK((c * c.inverse()).is_identity());
  CHECK_FALSE((c * c).is_identity());
}
