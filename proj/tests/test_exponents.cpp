#include "doctest.h"
#include "oscwhit/errors.hpp"
#include "oscwhit/exponents.hpp"

using namespace oscwhit;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7/64") == Rational(7, 64));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(to_string(Rational(6, 8)) == "3/4");
  CHECK_THROWS(parse_rational("x/2"));
}

TEST_CASE("form algebra") {
  ExponentForm f{{"a", Rational(1, 2)}, {"x", Rational(-1, 3)}};
  ExponentForm g{{"a", Rational(1, 2)}, {"b", Rational(1)}};
  auto h = f - g;
  CHECK(h.coef("a") == Rational(0));
  CHECK(h.terms().count("a") == 0);
  CHECK(h.coef("b") == Rational(-1));
  auto s = f.substitute("a", ExponentForm{{"b", Rational(2)}});
  CHECK(s.coef("b") == Rational(1));
  auto m = pointwise_max(f, g);
  CHECK(m.coef("b") == Rational(1));
  CHECK(m.coef("x") == Rational(0));
  CHECK(f.evaluate({{"a", 2.0}, {"x", 3.0}}) == doctest::Approx(0.0));
}

TEST_CASE("optimized main bound") {
  for (Rational th : {Rational(0), Rational(7, 64), Rational(1, 4)}) {
    auto mb = optimize_main_bound(ConductorProfile{th, std::nullopt});
    REQUIRE(mb.final.size() == 2);
    ExponentForm f0{{"a", Rational(3, 4)}, {"b", Rational(1, 16)}, {"d", Rational(1, 8)}, {"x", -(1 - 2 * th) / 8}};
    ExponentForm f1{{"a", Rational(7, 6)}, {"b", Rational(1, 12)}, {"c", th / 3}, {"x", Rational(-1, 6)}};
    CHECK(mb.final[0].equals(f0));
    CHECK(mb.final[1].equals(f1));
    // the optimal E and kappa balance the four terms in pairs
    CHECK(mb.four_terms[0].equals(mb.four_terms[3]));
    CHECK(mb.four_terms[1].equals(mb.four_terms[2]));
  }
}

TEST_CASE("x exponent of the simplified bound") {
  CHECK(simplified_bound(Rational(0)).coef("x") == Rational(3, 8));
  CHECK(simplified_bound(Rational(7, 64)).coef("x") == Rational(103, 256));
}

TEST_CASE("kappa needs a nontrivial character conductor") {
  auto mb = optimize_main_bound(ConductorProfile{Rational(0), std::nullopt});
  CHECK_THROWS_AS(mb.kappa({{"a", 1.0}, {"b", 1.0}, {"c", 1.0}, {"d", 1.0}, {"x", 0.0}}), DegenerateX);
}

TEST_CASE("truncation parameters") {
  auto t = truncation_params(1e4, Rational(1, 2));
  CHECK(t.A == doctest::Approx(1e-6));
  CHECK(t.B == doctest::Approx(1e-2));
  CHECK_THROWS_AS(truncation_params(1e4, Rational(1)), KappaRange);
  CHECK_THROWS_AS(truncation_params(1e4, Rational(0)), KappaRange);
  CHECK_THROWS_AS(truncation_params(0.5, Rational(1, 2)), DomainError);
}

TEST_CASE("amplifier primes") {
  auto s = amplifier_set(10);
  CHECK(s.primes == std::vector<long>{11, 13, 17, 19});
  CHECK(amplifier_set(10, {13}).primes == std::vector<long>{11, 17, 19});
  for (double E : {100.0, 1e3, 1e5}) CHECK(amplifier_set(E).pnt_ok);
}
