#include <cmath>

#include "doctest.h"
#include "oscwhit/errors.hpp"
#include "oscwhit/zeta_nonarch.hpp"

using namespace oscwhit;

TEST_CASE("primes") {
  CHECK(primes_up_to(100).size() == 25);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(1));
  auto ps = primes_up_to(2000000);
  long lo = std::count_if(ps.begin(), ps.end(), [](long p) { return p <= 1000000; });
  CHECK(long(ps.size()) - lo == 70435);
}

TEST_CASE("spherical Whittaker values") {
  double tau = 0.7, q = 5;
  auto rep = NonArchRep::unramified(tau);
  auto [a, b] = rep.satake(q);
  CHECK(std::abs(macdonald_w0(rep, q, 0) - 1.0) < 1e-15);
  CHECK(std::abs(macdonald_w0(rep, q, 2) - (a * a + 1.0 + b * b) / q) < 1e-14);
  CHECK(std::abs(macdonald_w0(rep, q, -1)) == 0.0);
  CHECK_THROWS_AS(macdonald_w0(NonArchRep::ramified(1, LocalType::Steinberg), q, 1), UnsupportedCase);
}

TEST_CASE("classical vectors are orthonormal") {
  for (double q : {2.0, 7.0, 97.0})
    for (double tau : {0.0, 0.5, 2.0}) {
      auto rep = NonArchRep::unramified(tau);
      for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m) {
          cplx v = classical_inner(rep, q, n, m);
          CHECK(std::abs(v - (n == m ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("twisted zeta bound holds") {
  for (double q : {2.0, 3.0, 11.0})
    for (int n = 0; n <= 4; ++n)
      for (int l = 0; l <= 4; ++l) CHECK(zeta_twisted(1.0, NonArchRep::unramified(0.5), q, n, l).holds);
}

TEST_CASE("Gauss-sum test vectors reach the conductor bound") {
  for (long p : {3L, 5L, 7L})
    for (int r = 1; r <= 2; ++r) {
      auto all = gauss_zeta_all(NonArchRep::unramified(0), p, r);
      CHECK(all.size() == enumerate_characters(p, r).size());
      for (auto& g : all) CHECK(g.ratio >= 1 - 1e-10);
    }
}

TEST_CASE("single character agrees with the batched version") {
  auto chars = enumerate_characters(5, 2);
  auto all = gauss_zeta_all(NonArchRep::unramified(2), 5, 2);
  for (std::size_t i = 0; i < chars.size(); i += 5) {
    auto g = gauss_zeta(NonArchRep::unramified(2), chars[i], PAdicPlace::make(5));
    CHECK(g.abs_value == doctest::Approx(all[i].abs_value).epsilon(1e-10));
  }
}

TEST_CASE("characters") {
  auto chars = enumerate_characters(7, 1);
  CHECK(chars.size() == 5);  // phi(7) - 1 nontrivial
  for (auto& c : chars) {
    CHECK(c.is_primitive());
    CHECK(std::abs(c(1) - 1.0) < 1e-15);
    CHECK(std::abs(c(7)) == 0.0);
  }
  CHECK(enumerate_characters(2, 3).size() == 2);  // primitive mod 8
  CHECK(parse_local_type("steinberg") == LocalType::Steinberg);
  CHECK_THROWS_AS(parse_local_type("bogus"), UnknownType);
}
