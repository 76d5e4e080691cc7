#include <cmath>

#include "doctest.h"
#include "oscwhit/errors.hpp"
#include "oscwhit/quadrature.hpp"

using namespace oscwhit;

TEST_CASE("polynomials are integrated exactly by one rule") {
  QuadResult r = gk15([](double x) { return cplx(x * x * x * x - 2 * x); }, -1.0, 2.0);
  CHECK(r.value.real() == doctest::Approx(6.6 - 3.0).epsilon(1e-14));
}

TEST_CASE("adaptive integration, finite and infinite intervals") {
  auto r = integrate([](double x) { return cplx(std::exp(-x) * std::cos(x)); }, 0.0, INFINITY);
  CHECK(r.value.real() == doctest::Approx(0.5).epsilon(1e-11));
  auto g = integrate([](double x) { return cplx(std::exp(-x * x)); }, -INFINITY, INFINITY);
  CHECK(g.value.real() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));
  auto s = integrate([](double x) { return cplx(1.0 / std::sqrt(x)); }, 0.0, 1.0);
  CHECK(s.value.real() == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("oscillatory integrals against reference values") {
  // 30-digit mpmath values
  auto a = integrate_oscillatory([](double x) { return std::exp(cplx(0, 1000 * x * x)); }, 0.0, 1.0, 2000.0);
  CHECK(std::abs(a.value - cplx(0.020229935353977091, 0.019535240441665066)) < 1e-11);
  auto b = integrate_phased([](double x) { return std::log(x) * std::exp(cplx(0, 50 * x)); }, 1.0, 3.0,
                            [](double) { return 50.0; });
  CHECK(std::abs(b.value - cplx(-0.015998435814127367, -0.015347472630540468)) < 1e-12);
}

TEST_CASE("phase breakpoints cover each half period") {
  auto pts = phase_breakpoints(0.0, 10.0, [](double) { return 3.0; });
  REQUIRE(pts.size() >= 2);
  CHECK(pts.front() == 0.0);
  CHECK(pts.back() == 10.0);
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(3.0 * (pts[i] - pts[i - 1]) <= M_PI * (1 + 1e-12));
}

TEST_CASE("two-dimensional integral") {
  auto r = integrate_2d([](double x, double y) { return std::exp(cplx(0, x + y)); }, 0, 1, 0, 1);
  cplx one = (std::exp(cplx(0, 1)) - 1.0) / cplx(0, 1);
  CHECK(std::abs(r.value - one * one) < 1e-12);
}

TEST_CASE("multiplicative measures") {
  // d^x y over both signs: 2 int_lo^hi e^{-y^2} dy / y
  IntegrationSpec s;
  s.measure = Measure::MultiplicativeR;
  s.integrand = [](double y) { return cplx(y * y * std::exp(-y * y)); };
  s.lo = 1e-8;
  s.hi = 20;
  // 2 int_0^inf y e^{-y^2} dy = 1
  CHECK(integrate(s).value.real() == doctest::Approx(1.0).epsilon(1e-10));

  IntegrationSpec c;
  c.measure = Measure::MultiplicativeC;
  // radial r^2 e^{-r^2}: 2 int r e^{-r^2} dr = 1; angular average of cos^2 is 1/2
  c.integrand2 = [](double r, double a) { return cplx(r * r * std::exp(-r * r) * 2 * std::cos(a) * std::cos(a)); };
  c.lo = 1e-8;
  c.hi = 20;
  CHECK(integrate(c).value.real() == doctest::Approx(1.0).epsilon(1e-9));

  s.lo = 0.0;
  CHECK_THROWS_AS(integrate(s), DomainError);
}

TEST_CASE("failure is reported") {
  QuadOptions o;
  o.max_panels = 3;
  o.throw_on_fail = false;
  auto r = integrate_panels([](double x) { return cplx(std::sin(1.0 / (x + 1e-3))); }, {0.0, 1.0}, o);
  CHECK_FALSE(r.converged);
  o.throw_on_fail = true;
  CHECK_THROWS_AS(integrate_panels([](double x) { return cplx(std::sin(1.0 / (x + 1e-3))); }, {0.0, 1.0}, o),
                  NotConverged);
}
