#include <cmath>

#include "doctest.h"
#include "oscwhit/errors.hpp"
#include "oscwhit/zeta_arch.hpp"

using namespace oscwhit;

TEST_CASE("discrete weight 2 at s = 1/2 and T = 0") {
  // int 4 pi y e^{-2 pi y} dy/y = 2
  auto W = test_function(ArchRepParam::real_discrete(1), TestOption::B);
  auto z = local_zeta(0.5, *W, ArchCharacter::real(0), 0.0);
  CHECK(z.value.real() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(std::abs(z.value.imag()) < 1e-10);
}

TEST_CASE("Mellin transform of the discrete vector") {
  // int (4 pi y)^{(p+1)/2} Gamma(p+1)^{-1/2} e^{-2 pi y} y^{s-1/2} dy/y
  //   = (4 pi)^{(p+1)/2} Gamma(p+1)^{-1/2} Gamma(p/2 + s) (2 pi)^{-(p/2 + s)}
  int p = 3;
  double s = 0.8;
  auto W = test_function(ArchRepParam::real_discrete(p), TestOption::B);
  auto z = local_zeta(s, *W, ArchCharacter::real(0), 0.0);
  double want = std::pow(4 * M_PI, (p + 1) / 2.0) / std::sqrt(std::tgamma(p + 1.0)) * std::tgamma(p / 2.0 + s) *
                std::pow(2 * M_PI, -(p / 2.0 + s));
  CHECK(z.value.real() == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("test vector choice") {
  auto rep = ArchRepParam::real_principal(4);
  auto tv = choose_test_vector(rep, ArchCharacter::real(500), TestOption::B);
  CHECK(tv.regime == Regime::LargeConductor);
  CHECK(std::abs(tv.T) == doctest::Approx(500 / (2 * M_PI * kirillov_peak(rep).y0)));
  auto tvd = choose_test_vector(ArchRepParam::real_discrete(3), ArchCharacter::real(100), TestOption::B);
  CHECK(std::abs(tvd.T) == doctest::Approx(50.0));
}

TEST_CASE("character conductor") {
  CHECK(ArchCharacter::real(-3).conductor() == 4.0);
  CHECK(ArchCharacter::complex(3, 1).conductor() == doctest::Approx(11.0 / 4));
  CHECK_THROWS_AS(ArchCharacter::real(1, 2), DomainError);
  CHECK_THROWS_AS(ArchCharacter::real(NAN), DomainError);
}

TEST_CASE("log-log fit is exact on power laws") {
  std::vector<double> x{1, 2, 5, 10, 100}, y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -0.75));
  auto f = fit_loglog(x, y);
  CHECK(f.slope == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(std::exp(f.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(fit_loglog({1.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(fit_loglog({1.0, 2.0}, {1.0, -1.0}), DomainError);
}

TEST_CASE("the bump is localized at 1") {
  auto b = option_a_bump(Place::Real);
  CHECK(std::abs(b->eval(kOptionAPeak)) > 0);
  CHECK(std::abs(b->eval(0.3)) == 0.0);
  CHECK(std::abs(b->eval(3.0)) == 0.0);
}

TEST_CASE("small discrete lower-bound sweep") {
  auto r = verify_lower_bound(ArchRepParam::real_discrete(5), LowerCase::RealDiscrete, {1e3, 3e3, 1e4});
  CHECK(r.points.size() == 3);
  for (auto& pt : r.points) CHECK(pt.measured > 0);
  CHECK(r.slope_pass);
}

TEST_CASE("K-type decay") {
  auto k = ktype_decay_check(ArchRepParam::real_principal(2), 50.0);
  CHECK(k.lhs >= 0);
  CHECK(k.holds);
}
