#include <cmath>

#include "doctest.h"
#include "oscwhit/asymptotics.hpp"
#include "oscwhit/errors.hpp"
#include "oscwhit/specfun.hpp"
#include "oscwhit/verify.hpp"
#include "oscwhit/zeta_arch.hpp"

using namespace oscwhit;

// Oracle values are 30-digit mpmath quadratures of the same integrals.

TEST_CASE("amplitude derivatives agree with finite differences") {
  for (const auto& a : {amp::bump(-1, 1), amp::half_bump(1.0), amp::gaussian_bump(0.7, -2, 2),
                        amp::plateau(0.4, 1.0, {1.0, 0.5, -0.3})}) {
    CAPTURE(a.name);
    for (double x : {0.13, 0.55, 0.81}) {
      CHECK(std::abs(a.deriv(0, x) - a.eval(x)) == 0.0);
      for (int n = 1; n <= 3; ++n) {
        const double h = 1e-5;
        cplx fd = (a.deriv(n - 1, x + h) - a.deriv(n - 1, x - h)) / (2 * h);
        CHECK(std::abs(fd - a.deriv(n, x)) <= 1e-6 * std::max(1.0, std::abs(a.deriv(n, x))));
      }
    }
    CHECK(a.l1_norm(2) >= 0.0);
  }
}

TEST_CASE("zero amplitude gives zero expansions") {
  auto z = amp::zero(-1, 1);
  auto r = erdelyi_expansion(phase::exp_model(), z, 100.0, 3);
  for (const auto& t : r.terms) CHECK(std::abs(t.coefficient) == 0.0);
  CHECK(r.remainder_bound == 0.0);
  auto f = fourier_endpoint_expansion(amp::zero(0, 1), cplx(0.5, 0), 100.0, 2);
  CHECK(std::abs(f.sum()) == 0.0);
  CHECK(f.remainder_bound == 0.0);
}

TEST_CASE("Erdelyi expansion against the oracle") {
  auto ph = phase::exp_model();
  auto a = amp::bump(-1, 1);
  const cplx ref(0.056101421434211505, -0.055998664068836639);
  auto o = erdelyi_oracle(ph, a, 1000.0);
  CHECK(std::abs(o.value - ref) < 1e-11);
  auto o2 = erdelyi_oracle(ph, a, -1000.0);
  CHECK(std::abs(o2.value - std::conj(ref)) < 1e-11);
  auto r = erdelyi_expansion(ph, a, 1000.0, 3);
  CHECK(std::abs(ref - r.sum()) <= r.remainder_bound);
  // exponents strictly increasing
  for (std::size_t i = 1; i < r.terms.size(); ++i) CHECK(r.terms[i].exponent > r.terms[i - 1].exponent);
  // leading coefficient Gamma(1/2) k(0) e^{-i pi/4} / ... with |S''(0)| = 1: sqrt(2 pi)
  CHECK(std::abs(r.terms[0].coefficient) == doctest::Approx(std::sqrt(2 * M_PI)).epsilon(1e-12));

  auto c = phase::cubic();
  auto oc = erdelyi_oracle(c, a, 1000.0);
  CHECK(std::abs(oc.value - cplx(0.28110385838312546, 0.0)) < 1e-11);
  auto rc = erdelyi_expansion(c, a, 1000.0, 4);
  CHECK(std::abs(oc.value - rc.sum()) <= rc.remainder_bound);
}

TEST_CASE("Erdelyi leading term scales as mu^{-1/m}") {
  auto a = amp::bump(-1, 1);
  for (auto ph : {phase::quadratic(), phase::cubic()}) {
    std::vector<double> mus = logspace(1e2, 1e4, 8), mags;
    for (double mu : mus) {
      auto r = erdelyi_expansion(ph, a, mu, 2);
      mags.push_back(std::abs(r.terms[0].coefficient) * std::pow(mu, -r.terms[0].exponent_value));
    }
    CHECK(fit_loglog(mus, mags).slope == doctest::Approx(-1.0 / ph.m).epsilon(0.05));
  }
}

TEST_CASE("Erdelyi sign convention: S^{(m)} rule matches the oracle, S^{(m+1)} does not") {
  auto ph = phase::quadratic_cubic();
  auto a = amp::bump(-1, 1);
  for (double mu : {1000.0, -1000.0}) {
    auto o = erdelyi_oracle(ph, a, mu).value;
    auto good = erdelyi_expansion(ph, a, mu, 4, EpsilonRule::DerivativeM);
    auto bad = erdelyi_expansion(ph, a, mu, 4, EpsilonRule::DerivativeMPlus1);
    CHECK(std::abs(o - good.sum()) <= good.remainder_bound);
    CHECK(std::abs(o - bad.sum()) > 10 * std::abs(o - good.sum()));
  }
}

TEST_CASE("Gaussian amplitude against the closed-form Fresnel integral") {
  // int e^{-x^2/2} e^{i mu x^2/2} dx = sqrt(2 pi / (1 - i mu)); the bump cut-off at |x| = 6 is negligible
  const double mu = 1e4;
  auto r = erdelyi_expansion(phase::quadratic(), amp::gaussian_bump(1.0, -6, 6), mu, 3);
  const cplx closed = std::sqrt(2 * M_PI / (1.0 - cplx(0, mu)));
  CHECK(std::abs(closed - r.sum()) <= r.remainder_bound);
}

TEST_CASE("endpoint Fourier expansion") {
  auto hb = amp::half_bump(1.0);
  const cplx ref(0.039633302700885099, 0.03963330270088466);
  CHECK(std::abs(fourier_endpoint_oracle(hb, 0.5, 1000.0).value - ref) < 1e-11);
  auto r = fourier_endpoint_expansion(hb, 0.5, 1000.0, 0);
  CHECK(std::abs(r.terms[0].coefficient - std::sqrt(M_PI) * std::exp(cplx(0, M_PI / 4))) < 1e-12);
  CHECK(std::abs(ref - r.sum()) <= r.remainder_bound);

  const cplx lam(0.5, 5.0);
  const cplx ref5(8.9954992445997696e-9, 7.8594887704292059e-9);
  for (double x : {1e3, 1e4}) {
    auto r5 = fourier_endpoint_expansion(hb, lam, x, 1);
    auto o5 = fourier_endpoint_oracle(hb, lam, x).value;
    if (x == 1e3) CHECK(std::abs(o5 - ref5) < 1e-12);
    CHECK(std::abs(o5 - r5.sum()) <= r5.remainder_bound);
  }
  CHECK_THROWS_AS(fourier_endpoint_expansion(hb, cplx(1.5, 0), 100.0, 1), DomainError);
}

TEST_CASE("real-exponent path agrees with the complex one") {
  auto hb = amp::half_bump(1.0);
  for (double lam : {0.25, 0.5, 1.0})
    for (double x : {300.0, -2000.0}) {
      auto a = fourier_endpoint_expansion(hb, cplx(lam, 0), x, 3);
      auto b = fourier_endpoint_expansion_real(hb, lam, x, 3);
      REQUIRE(a.terms.size() == b.terms.size());
      for (std::size_t i = 0; i < a.terms.size(); ++i)
        CHECK(std::abs(a.terms[i].coefficient - b.terms[i].coefficient) <=
              1e-12 * std::max(1e-300, std::abs(b.terms[i].coefficient)));
      CHECK(a.remainder_bound == doctest::Approx(b.remainder_bound).epsilon(1e-12));
    }
}

TEST_CASE("Lambda_m") {
  CHECK(std::abs(bessel_lambda(0, 1.0) - 1.0) < 1e-14);
  for (int m : {1, 2, 5})
    for (cplx a : {cplx(0.5, 2), cplx(3, -1), cplx(1.5, 0)})
      CHECK(std::abs(bessel_lambda(m, a) - bessel_lambda(-m, a)) <= 1e-12 * std::abs(bessel_lambda(m, a)));
}

TEST_CASE("Bessel endpoint expansion") {
  auto pl = amp::plateau(0.4, 1.0, {1.0, 0.5, -0.3});
  struct Case {
    double lam;
    int m;
    cplx ref;
  };
  for (const Case& c : {Case{0, 0, {0.0033333444168057987, 0}},
                        Case{2, 1, {-0.0012107081289302969, 0.0031187059969877876}}}) {
    auto o = bessel_endpoint_oracle(pl, c.lam, c.m, 300.0).value;
    CHECK(std::abs(o - c.ref) < 1e-12);
    auto r = bessel_endpoint_expansion(pl, c.lam, c.m, 300.0, 3, 0.4);
    CHECK(std::abs(o - r.sum()) <= r.remainder_bound);
  }
  // simplest case: 1/x
  auto r0 = bessel_endpoint_expansion(amp::plateau(0.4, 1.0), 0.0, 0, 1000.0, 1, 0.4);
  CHECK(std::abs(r0.sum() - 1e-3) < 1e-15);
  CHECK_THROWS_AS(bessel_endpoint_expansion(pl, 0.0, 5, 20.0, 3, 0.4), DomainError);
}

TEST_CASE("Bessel K bound") {
  CHECK(bessel_k_large_bound_check(0, 1, 1, 1, 50).holds);
  auto c = bessel_k_large_bound_check(0, 0, 1, 1, 100);
  CHECK(std::isfinite(c.lhs));
  CHECK(c.holds);
  for (double u : {0.0, 0.5, 1.0}) CHECK(bessel_k_large_bound_check(5, u, 1, 1, 250).holds);
  // rhs scales as x^{-1/2} at u = 0
  auto a = bessel_k_large_bound_check(0, 0, 1, 1, 100), b = bessel_k_large_bound_check(0, 0, 1, 1, 400);
  CHECK(a.rhs / b.rhs == doctest::Approx(2.0).epsilon(1e-12));
  auto uf = bessel_k_large_bound_check(0, 1, 1, 1, 1e4);
  CHECK(uf.underflow);
  CHECK(uf.holds);
}

TEST_CASE("stationary phase on R x torus") {
  auto ph = phase_nd::polar_model(0.0);
  auto rad = amp::bump(-1, 1);
  AmplitudeND a{[rad](const std::vector<double>& v) { return rad.eval(v[0]); }, {{-1, 1}}};
  auto orc = polar_model_oracle(rad, 0.0);
  // the angular integral contributes 2 pi J_0
  CHECK(std::abs(orc(1000.0) - 2 * M_PI * cplx(0.00056293244217400947, -0.00082650775280565536)) < 1e-12);
  for (double mu : {1e3, 1e4}) {
    auto r = stationary_phase_nd(ph, a, mu, orc);
    CHECK_FALSE(r.certified);
    const double rel = std::abs(orc(mu) - r.sum()) / std::abs(orc(mu));
    CHECK(rel <= (mu < 5e3 ? 0.10 : 0.03));
    CHECK(std::abs(orc(mu) - r.sum()) <= r.remainder_bound);
  }
  // the reduced oracle matches the tensor-product quadrature
  auto t = tensor_oracle_2d(ph, a);
  CHECK(std::abs(t(100.0) - orc(100.0)) < 1e-9);
}

TEST_CASE("stationary phase with a quadratic phase: closed form") {
  auto ph = phase_nd::quadratic(2);
  auto g = amp::gaussian_bump(1, -6, 6);
  AmplitudeND a{[g](const std::vector<double>& v) { return g.eval(v[0]) * g.eval(v[1]); }, {{-6, 6}, {-6, 6}}};
  auto r = stationary_phase_nd(ph, a, 1e4, quadratic_product_oracle({g, g}));
  const cplx closed = 2 * M_PI / (1.0 - cplx(0, 1e4));
  CHECK(std::abs(closed - r.sum()) <= r.remainder_bound);
}

TEST_CASE("phase validation") {
  auto bad = phase::quadratic();
  bad.x0 = 0.5;
  CHECK_THROWS_AS(bad.validate(), NonStationaryPhase);
  auto deg = phase_nd::quadratic(2);
  deg.hess = [](const std::vector<double>&) { return std::vector<std::vector<double>>{{1, 0}, {0, 0}}; };
  CHECK_THROWS_AS(deg.validate(), DegenerateHessian);
}

TEST_CASE("temperedness probe") {
  GridSpec g{{-3}, {3}, {121}};
  CHECK(temperedness_probe(phase_nd::exp_line(), g).pass);
  CHECK(temperedness_probe(phase_nd::square_line(), g).pass);
  GridSpec g2{{-3, 0}, {3, 6.2}, {61, 61}};
  CHECK(temperedness_probe(phase_nd::polar_model(1.0), g2).pass);
}
