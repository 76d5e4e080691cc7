#include <cmath>

#include "doctest.h"
#include "oscwhit/errors.hpp"
#include "oscwhit/specfun.hpp"
#include "oscwhit/whittaker_arch.hpp"

using namespace oscwhit;

namespace {

bool close(cplx a, cplx b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

}  // namespace

// reference values from 30-digit mpmath
TEST_CASE("real principal values") {
  auto r0 = ArchRepParam::real_principal(3, 0);
  CHECK(close(whittaker_real_principal(r0, 0.3), cplx(0.17407395993709652, 0.67500841915115164), 1e-10));
  CHECK(close(whittaker_real_principal(r0, -0.3), cplx(0.17407395993709652, 0.67500841915115164), 1e-10));
  auto r10 = ArchRepParam::real_principal(10, 0);
  CHECK(close(whittaker_real_principal(r10, 2.5), cplx(-0.016154284538943147, 0.0023236330935089061), 1e-9));
  auto r2 = ArchRepParam::real_principal(2, 0);
  CHECK(close(whittaker_real_principal(r2, 0.01), cplx(-0.01491136953124569, -0.097099774243293695), 1e-10));
  auto z = ArchRepParam::real_principal(0, 0);
  CHECK(close(whittaker_real_principal(z, 0.3), cplx(0.081131329423831417, 0), 1e-10));
  auto r1 = ArchRepParam::real_principal(3, 1);
  CHECK(close(whittaker_real_principal(r1, 0.3), cplx(-0.55595524446697669, -0.36018931384966479), 1e-10));
  CHECK(close(whittaker_real_principal(r1, -0.3), cplx(-0.32218531935850756, 0.4972957583699751), 1e-10));
}

TEST_CASE("complex principal values") {
  CHECK(close(whittaker_complex(ArchRepParam::complex_principal(1, 2, 0), 0.2),
              cplx(-0.056351733231080349, 0.45376003086853405), 1e-10));
  CHECK(close(whittaker_complex(ArchRepParam::complex_principal(5), 0.5),
              cplx(0.23499869608637191, -0.30210713672280636), 1e-10));
  CHECK(close(whittaker_complex(ArchRepParam::complex_principal(0), 0.05), cplx(0.4660704432384754, 0), 1e-10));
}

TEST_CASE("discrete series closed form") {
  for (int p : {1, 4, 11}) {
    auto rep = ArchRepParam::real_discrete(p);
    for (double y : {0.01, 0.2, 1.0, 3.0}) {
      double want = std::pow(4 * M_PI * y, (p + 1) / 2.0) / std::sqrt(std::tgamma(p + 1.0)) * std::exp(-2 * M_PI * y);
      CHECK(close(whittaker_real_discrete(rep, y), cplx(want, 0), 1e-12));
    }
    CHECK(std::abs(whittaker_real_discrete(rep, -0.5)) == 0.0);
  }
  // weight 2 at its peak y = 1/(2 pi): 2/e
  CHECK(whittaker_real_discrete(ArchRepParam::real_discrete(1), 1 / (2 * M_PI)).real() ==
        doctest::Approx(2 / M_E).epsilon(1e-13));
}

TEST_CASE("unit norm") {
  for (auto rep : {ArchRepParam::real_principal(3), ArchRepParam::real_principal(20, 1), ArchRepParam::real_discrete(6),
                   ArchRepParam::complex_principal(2), ArchRepParam::complex_principal(4, 1, 0),
                   ArchRepParam::complex_principal(0, 3, 0)}) {
    CAPTURE(rep.describe());
    CHECK(kirillov_norm_sq(*make_kirillov(rep)) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("tabulation agrees with direct evaluation") {
  for (auto rep : {ArchRepParam::real_principal(30), ArchRepParam::complex_principal(12, 2, 1)}) {
    auto W = make_kirillov(rep);
    auto T = tabulate_kirillov(W);
    double peak = std::abs(kirillov_peak(rep).value);
    for (double y : {0.05, 0.5, 1.3, 2.0, 4.0, 7.5}) {
      CAPTURE(y);
      CHECK(std::abs(T->eval(y) - W->eval(y)) <= 1e-10 * peak);
      CHECK(std::abs(T->lie_A(y) - W->lie_A(y)) <= 1e-8 * (1 + rep.tau) * peak);
    }
  }
}

TEST_CASE("lie_A matches a finite difference") {
  auto W = make_kirillov(ArchRepParam::real_principal(7, 1));
  for (double y : {0.2, 1.1, -0.7}) {
    double h = 1e-5;
    cplx fd = (W->eval(y * std::exp(h)) - W->eval(y * std::exp(-h))) / (2 * h);
    CHECK(std::abs(W->lie_A(y) - fd) <= 1e-6 * (1 + std::abs(fd)));
  }
}

TEST_CASE("series and large-argument branches overlap") {
  CHECK(check_branch_overlap(ArchRepParam::real_principal(5)) < 1e-8);
  CHECK(check_branch_overlap(ArchRepParam::complex_principal(5, 1, 0)) < 1e-8);
}

TEST_CASE("peak location and value") {
  auto rep = ArchRepParam::real_discrete(1);
  Peak pk = kirillov_peak(rep);
  CHECK(pk.y0 == doctest::Approx(2 / (4 * M_PI)));
  CHECK(pk.value == doctest::Approx(2 / M_E).epsilon(1e-12));
  auto big = kirillov_peak(ArchRepParam::real_principal(100));
  CHECK(big.y0 == doctest::Approx(100 / (2 * M_PI)));
  CHECK(big.value > 0);
}

TEST_CASE("small_y ratio is bounded on a grid") {
  for (auto rep : {ArchRepParam::real_principal(0), ArchRepParam::real_principal(10, 1),
                   ArchRepParam::complex_principal(5)}) {
    auto W = make_kirillov(rep);
    double C = std::pow(1 + rep.tau, 0.5);
    for (double y : {1e-6, 1e-3, 0.1, 1.0}) CHECK(small_y_ratio(*W, y) <= 10 * C);
  }
}

TEST_CASE("SU(2) basis") {
  // trivial K-type
  CHECK(std::abs(su2_basis_value(0, 0, 0, cplx(0.6, 0.8), 0.0) - 1.0) < 1e-15);
  cplx a(0.6, 0), b(0, 0.8);
  // |v| <= sqrt(n+1) and the weight-n0 vector has norm sqrt(n+1) at alpha = 1
  CHECK(std::abs(su2_basis_value(3, 0, 3, 1.0, 0.0)) == doctest::Approx(2.0));
  CHECK(std::abs(su2_basis_value(4, 2, 4, a, b)) <= std::sqrt(5.0));
  CHECK(std::abs(su2_basis_value(5, 5, 1, a, b)) <= std::sqrt(6.0));
  CHECK_THROWS_AS(su2_basis_value(4, 2, 0, a, b), UnsupportedIndex);
  CHECK_THROWS_AS(su2_basis_value(3, 0, 0, a, b), UnsupportedIndex);
  CHECK_THROWS_AS(su2_basis_value(2, 0, 0, cplx(1, 1), b), DomainError);
}

TEST_CASE("invalid representations") {
  CHECK_THROWS_AS(ArchRepParam::real_discrete(0), DomainError);
  CHECK_THROWS_AS(ArchRepParam::real_principal(1, 2), DomainError);
  CHECK_THROWS_AS(ArchRepParam::complex_principal(1, 0, 2), DomainError);
  CHECK_THROWS_AS(ArchRepParam::real_principal(NAN), DomainError);
}
