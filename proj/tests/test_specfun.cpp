#include <cmath>

#include "doctest.h"
#include "oscwhit/errors.hpp"
#include "oscwhit/specfun.hpp"

using namespace oscwhit;

namespace {

// reference values from 30-digit mpmath
bool close(cplx a, cplx b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

}  // namespace

TEST_CASE("complex Gamma against reference values") {
  CHECK(close(gamma(cplx(0.5, 10)), cplx(3.3787243762342358e-7, 1.6893698390389189e-7), 1e-12));
  CHECK(close(gamma(cplx(-3.3, 0.7)), cplx(0.0011510424761154108, 0.08353804548929627), 1e-12));
  cplx lg = lgamma(cplx(2, 300));
  CHECK(lg.real() == doctest::Approx(-461.76428023775532).epsilon(1e-13));
  // the imaginary part is defined modulo 2 pi on the principal branch
  double d = std::remainder(lg.imag() - 1413.4873257881843, 2 * M_PI);
  CHECK(std::abs(d) < 1e-9);
  CHECK(close(gamma_C(cplx(1, 2)), cplx(-0.044826369741435981, 0.019191320987168155), 1e-12));
}

TEST_CASE("Gamma identities") {
  for (cplx z : {cplx(0.3, 0.2), cplx(2.5, -4), cplx(-1.7, 3.1)}) {
    CHECK(close(gamma(z + 1.0), z * gamma(z), 1e-12));
    // reflection
    CHECK(close(gamma(z) * gamma(1.0 - z), M_PI / std::sin(M_PI * z), 1e-12));
  }
  CHECK(gamma(cplx(5.0)).real() == doctest::Approx(24.0).epsilon(1e-14));
  CHECK_THROWS_AS(gamma(cplx(-2.0, 0.0)), PoleError);
  CHECK(beta(2.5, 3.5) == doctest::Approx(0.03681553890925539).epsilon(1e-13));
  CHECK(close(beta(cplx(2.5, 1), cplx(1.5, -1)),
              gamma(cplx(2.5, 1)) * gamma(cplx(1.5, -1)) / gamma(cplx(4.0, 0.0)), 1e-12));
}

TEST_CASE("Bessel J for integer order") {
  CHECK(bessel_j(0, 10.5) == doctest::Approx(-0.23664819446234713).epsilon(1e-12));
  CHECK(bessel_j(3, 7.2) == doctest::Approx(-0.20987172096636112).epsilon(1e-12));
  CHECK(bessel_j(5, 100.0) == doctest::Approx(-0.074195736964513921).epsilon(1e-11));
  CHECK(bessel_j(2, -3.0) == doctest::Approx(0.48609126058589108).epsilon(1e-12));
  CHECK(bessel_j(-3, 7.2) == doctest::Approx(0.20987172096636112).epsilon(1e-12));
}

TEST_CASE("Bessel K of complex argument") {
  CHECK(close(bessel_k(cplx(2, 0), cplx(3, 4)), cplx(0.00057274759539475327, 0.035205977657653012), 1e-10));
  CHECK(close(bessel_k(cplx(5, 0), cplx(0.3, 25)), cplx(0.078355767001508067, -0.17165606950507196), 1e-10));
  CHECK(close(bessel_k(cplx(0.3, 2), cplx(2, 1)), cplx(0.046547201253069685, -0.038110963919779602), 1e-10));
  cplx lk = bessel_k_log(cplx(0.3, 2), 500.0);
  CHECK(lk.real() == doctest::Approx(-502.88566855011851).epsilon(1e-13));
  CHECK(lk.imag() == doctest::Approx(0.0011988057009957126).epsilon(1e-9));
}

TEST_CASE("scaled Bessel K of imaginary order with derivative") {
  struct Case {
    cplx nu;
    double x;
    cplx v, d;
  };
  const Case cases[] = {
      {{0, 10}, 5, {-0.71833271665681596, 0}, {-0.81422238648803391, 0}},
      {{0.5, 20}, 3, {0.93416166546321727, 0.56451003379223951}, {2.6735449489078432, -5.7573194082612489}},
      {{0, 100}, 30, {-0.25547460644684147, 0}, {-0.078180549494265547, 0}},
      {{2.5, 50}, 10, {51.267475913156466, -20.552148686008153}, {-113.66596329952618, -245.96410719435937}},
      {{0, 0.01}, 2, {0.11569464003565578, 0}, {-0.14207626778421937, 0}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.nu);
    CAPTURE(c.x);
    KScaled k = bessel_k_scaled(c.nu, c.x);
    CHECK(std::abs(k.value - c.v) <= 1e-10 * std::max(1.0, std::abs(c.v)));
    CHECK(std::abs(k.derivative - c.d) <= 1e-9 * std::max(1.0, std::abs(c.d)));
  }
}

TEST_CASE("Bessel K series and contour agree for small argument") {
  for (cplx nu : {cplx(0.0, 3.0), cplx(0.5, 2.0), cplx(0.25, 7.0)})
    for (double x : {0.3, 0.8}) {
      KScaled a = bessel_k_scaled(nu, x), b = bessel_k_series_scaled(nu, x);
      CHECK(std::abs(a.value - b.value) <= 1e-10 * std::abs(b.value));
    }
}

TEST_CASE("K_{1/2} closed form") {
  for (double x : {0.5, 2.0, 9.0}) {
    cplx k = bessel_k(cplx(0.5, 0), cplx(x, 0));
    CHECK(k.real() == doctest::Approx(std::sqrt(M_PI / (2 * x)) * std::exp(-x)).epsilon(1e-12));
  }
}
