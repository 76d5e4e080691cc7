#include "oscwhit/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <cmath>
#include <vector>

#include "oscwhit/errors.hpp"
#include "oscwhit/quadrature.hpp"

namespace oscwhit {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log sin(w) without overflow for large |Im w|
cplx log_sin(cplx w) {
  const cplx I(0, 1);
  if (std::abs(w.imag()) < 20) return std::log(std::sin(w));
  if (w.imag() > 0)
    return -I * w + std::log(0.5) + I * (M_PI / 2) + std::log(1.0 - std::exp(2.0 * I * w));
  return I * w + std::log(0.5) - I * (M_PI / 2) + std::log(1.0 - std::exp(-2.0 * I * w));
}

// sinh(a) - a
double sinh_minus(double a) {
  if (std::abs(a) > 0.5) return std::sinh(a) - a;
  double a2 = a * a, term = a * a2 / 6, s = term;
  for (int k = 2; k < 12; ++k) {
    term *= a2 / ((2 * k) * (2 * k + 1));
    s += term;
  }
  return s;
}

// sinh(a) - a cosh(a) = -sum 2k a^{2k+1}/(2k+1)!
double sinh_minus_acosh(double a) {
  if (std::abs(a) > 0.5) return std::sinh(a) - a * std::cosh(a);
  double a2 = a * a, p = a, s = 0.0;
  for (int k = 1; k < 12; ++k) {
    p *= a2 / ((2 * k) * (2 * k + 1));  // a^{2k+1}/(2k+1)!
    s -= 2 * k * p;
  }
  return s;
}

// Steepest-descent contour for e^{pi tau/2} K_{sigma + i tau}(x), tau > 0.
KScaled contour_k(double sigma, double tau, double x) {
  const cplx I(0, 1);
  double astar = 0.0;
  if (x < tau) {
    double lo = std::acosh(tau / x), hi = lo + 1.0;
    auto f = [&](double a) { return x * std::sinh(a) - tau * a; };
    while (f(hi) < 0) hi = lo + 2 * (hi - lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      double mid = 0.5 * (lo + hi);
      (f(mid) < 0 ? lo : hi) = mid;
    }
    astar = 0.5 * (lo + hi);
  }
  const double sh_s = std::sinh(astar), ch_s = std::cosh(astar);
  // x cosh a* - tau, written without cancellation
  const double slope0 = astar > 0 ? -x * sinh_minus_acosh(astar) / astar : x - tau;

  struct Pt {
    double a, dadw, cosb, b, dbdw, sinb;
  };
  auto point = [&](double w) {
    Pt p;
    double h = w * w;
    p.a = astar + h;
    p.dadw = 2 * w;
    double sa = std::sinh(p.a);
    double g, Dh;  // Dh = (x sinh a - tau a)/h
    if (astar > 0) {
      double c1 = h > 0 ? 2 * std::sinh(0.5 * h) * std::sinh(0.5 * h) / h : 0.0;
      double c2 = h > 0 ? sinh_minus(h) / h : 0.0;
      Dh = slope0 + x * (sh_s * c1 + ch_s * c2);
      g = tau * p.a / (x * sa);
    } else {
      double c2 = h > 0 ? sinh_minus(h) / h : 0.0;
      Dh = x * c2 + (x - tau);
      g = h > 0 ? tau * h / (x * sa) : tau / x;
    }
    double shc = h > 0 ? sa / h : 1.0;  // only used when astar == 0
    double q;  // (1-g)(1+g)/h  when astar > 0,  (1-g)(1+g) otherwise
    double gp = p.a > 1e-8 ? tau * sinh_minus_acosh(p.a) / (x * sa * sa) : -tau * p.a / (3 * x);
    if (astar > 0) {
      q = Dh / (x * sa) * (1 + g);
      double sq = std::sqrt(std::max(q, 0.0));
      p.cosb = w * sq;
      p.dbdw = sq > 0 ? 2 * gp / sq : 0.0;
    } else {
      q = (h > 0 ? Dh / (x * shc) : (x - tau) / x) * (1 + g);
      p.cosb = std::sqrt(std::max(q, 0.0));
      p.dbdw = p.cosb > 0 ? gp / p.cosb * p.dadw : 0.0;
    }
    p.sinb = g;
    p.b = std::atan2(g, p.cosb);
    return p;
  };
  auto expo = [&](const Pt& p, double sgn) {
    return -x * std::cosh(p.a) * p.cosb - tau * (p.b - M_PI / 2) + sgn * sigma * p.a;
  };

  // cutoff where both tails have dropped by e^{-50}
  double peak = std::max(expo(point(0.0), 1.0), expo(point(0.0), -1.0));
  std::vector<double> wpts{0.0};
  double w = 0.125;
  for (int k = 0; k < 200; ++k) {
    Pt p = point(w);
    double e = std::max(expo(p, 1.0), expo(p, -1.0));
    peak = std::max(peak, e);
    wpts.push_back(w);
    if (e < peak - 50 && k > 2) break;
    w *= 1.5;
  }

  QuadOptions opt;
  // the exponent carries absolute rounding of order eps*(tau + x)
  opt.rel_tol = std::max(1e-14, 4e-16 * (tau + x + std::abs(sigma)));
  opt.abs_tol = 1e-16 * std::exp(peak);
  opt.throw_on_fail = false;

  auto tails = [&](bool deriv) {
    CFun f = [&, deriv](double w) -> cplx {
      Pt p = point(w);
      cplx rot = std::exp(I * (sigma * p.b));
      double er = expo(p, 1.0), el = expo(p, -1.0);
      cplx vr = std::exp(er) * rot * cplx(p.dadw, p.dbdw);
      cplx vl = std::exp(el) * rot * cplx(p.dadw, -p.dbdw);
      if (deriv) {
        double ca = std::cosh(p.a) * p.cosb, sa = std::sinh(p.a) * p.sinb;
        vr *= -cplx(ca, sa);
        vl *= -cplx(ca, -sa);
      }
      return vr + vl;
    };
    return integrate_panels(f, wpts, opt).value;
  };

  cplx hv = 0.0, hd = 0.0;
  if (astar > 0) {
    auto omega = [&](double a) { return std::abs(tau - x * std::cosh(a)) + 1.0; };
    CFun fv = [&](double a) {
      return std::exp(sigma * a + I * (tau * a - x * std::sinh(a) + sigma * M_PI / 2));
    };
    CFun fd = [&](double a) { return -I * std::sinh(a) * fv(a); };
    // phase tau*a carries absolute rounding ~ eps*tau*a*
    QuadOptions ho = opt;
    ho.abs_tol = std::max(opt.abs_tol, 1e-15 * tau * astar * 2 * astar * std::exp(sigma * astar));
    hv = integrate_phased(fv, -astar, astar, omega, ho).value;
    ho.abs_tol *= x * std::sinh(astar);
    hd = integrate_phased(fd, -astar, astar, omega, ho).value;
  }
  KScaled r;
  r.value = 0.5 * (hv + tails(false));
  r.derivative = 0.5 * (hd + tails(true));
  return r;
}

}  // namespace

cplx lgamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma pole at " + std::to_string(z.real()));
  if (z.real() < 0.5) return std::log(M_PI) - log_sin(M_PI * z) - lgamma(1.0 - z);
  cplx acc = 0.0;
  while (std::abs(z) < 17) {
    acc += std::log(z);
    z += 1.0;
  }
  static const double B[] = {1.0 / 6,  -1.0 / 30,     1.0 / 42,    -1.0 / 30,     5.0 / 66,
                             -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798};
  cplx zi = 1.0 / z, z2 = zi * zi, s = 0.0, p = zi;
  for (int k = 1; k <= 9; ++k) {
    s += B[k - 1] / ((2.0 * k) * (2.0 * k - 1)) * p;
    p *= z2;
  }
  return (z - 0.5) * std::log(z) - z + kLogSqrt2Pi + s - acc;
}

double gamma(double x) {
  if (x <= 0 && x == std::floor(x)) throw PoleError("Gamma pole at " + std::to_string(x));
  return std::tgamma(x);
}

cplx gamma(cplx z) {
  if (z.imag() == 0.0) return gamma(z.real());
  return std::exp(lgamma(z));
}

cplx gamma_C(cplx s) { return 2.0 * std::pow(2 * M_PI, -s) * gamma(s); }

double beta(double x, double y) {
  if (x > 0 && y > 0) return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
  return gamma(x) * gamma(y) / gamma(x + y);
}

cplx beta(cplx x, cplx y) {
  if (x.imag() == 0 && y.imag() == 0) return beta(x.real(), y.real());
  return std::exp(lgamma(x) + lgamma(y) - lgamma(x + y));
}

double bessel_j(int m, double x) {
  int sgn = 1;
  if (m < 0) {
    m = -m;
    if (m % 2) sgn = -sgn;
  }
  if (x < 0) {
    x = -x;
    if (m % 2) sgn = -sgn;
  }
  return sgn * boost::math::cyl_bessel_j(m, x);
}

KScaled bessel_k_series_scaled(cplx nu, double x) {
  const double tau = nu.imag();
  double dn = std::abs(nu.real() - std::round(nu.real()));
  if (tau == 0.0 && dn < 1e-12) throw UnsupportedCase("series K needs non-integer order");
  double q = 0.25 * x * x;
  auto half = [&](cplx v) {
    // Gamma(v) (x/2)^{-v} sum q^n / (n! (1-v)_n), scaled by e^{pi|tau|/2}
    cplx pref = std::exp(lgamma(v) - v * std::log(0.5 * x) + M_PI * std::abs(tau) / 2);
    cplx t = 1.0, s = 0.0, ds = 0.0;
    for (int n = 0; n < 200; ++n) {
      s += t;
      ds += t * (2.0 * n - v);
      t *= q / ((n + 1.0) * (1.0 * n + 1.0 - v));
      if (std::abs(t) < 1e-18 * std::abs(s) && n > 2) break;
    }
    return std::pair<cplx, cplx>(pref * s, pref * ds / x);
  };
  auto a = half(nu), b = half(-nu);
  return {0.5 * (a.first + b.first), 0.5 * (a.second + b.second)};
}

KScaled bessel_k_scaled(cplx nu, double x) {
  if (!(x > 0)) throw DomainError("bessel_k_scaled needs x > 0");
  double sigma = std::abs(nu.real()), tau = nu.imag();
  if (nu.real() < 0) tau = -tau;  // K_nu = K_{-nu}
  if (tau == 0.0) {
    double k = boost::math::cyl_bessel_k(sigma, x);
    double kp = boost::math::cyl_bessel_k_prime(sigma, x);
    return {k, kp};
  }
  bool flip = tau < 0;
  tau = std::abs(tau);
  double dn = std::abs(sigma - std::round(sigma));
  KScaled r = (x <= 1.0 && (tau >= 0.5 || dn >= 0.25))
                  ? bessel_k_series_scaled(cplx(sigma, tau), x)
                  : contour_k(sigma, tau, x);
  if (flip) {
    r.value = std::conj(r.value);
    r.derivative = std::conj(r.derivative);
  }
  return r;
}

cplx bessel_k_log(cplx nu, cplx z) {
  if (z == 0.0) throw DomainError("bessel_k at z = 0");
  if (z.real() < 0) throw DomainError("bessel_k needs Re z >= 0");
  if (nu.real() < 0) nu = -nu;
  if (std::abs(nu.imag()) > 20) throw UnsupportedCase("complex argument with |Im nu| > 20");
  const cplx half = nu - 0.5;
  const cplx I2z = 1.0 / (2.0 * z);
  double wmax = std::sqrt(4 * nu.real() + 80);
  QuadOptions opt;
  opt.rel_tol = 1e-15;
  opt.abs_tol = 1e-300;
  opt.throw_on_fail = false;
  // [0,1] in w = e^v to tame w^{2 nu}, then [1, wmax]
  CFun f0 = [&](double v) {
    double w = std::exp(v);
    return std::exp(-w * w + (2.0 * nu + 1.0) * v) * std::pow(1.0 + w * w * I2z, half);
  };
  CFun f1 = [&](double w) {
    return std::exp(-w * w + 2.0 * nu * std::log(w)) * std::pow(1.0 + w * w * I2z, half);
  };
  std::vector<double> p0, p1;
  for (int k = 0; k <= 10; ++k) p0.push_back(-40.0 + 4.0 * k);
  for (double w = 1.0; w < wmax; w += 1.0) p1.push_back(w);
  p1.push_back(wmax);
  cplx I = 2.0 * (integrate_panels(f0, p0, opt).value + integrate_panels(f1, p1, opt).value);
  return 0.5 * std::log(M_PI / 2) - 0.5 * std::log(z) - z - lgamma(nu + 0.5) + std::log(I);
}

cplx bessel_k(cplx nu, cplx z) {
  if (z == 0.0) throw DomainError("bessel_k at z = 0");
  if (z.real() < 0) throw DomainError("bessel_k needs Re z >= 0");
  if (z.imag() == 0.0) {
    double x = z.real();
    if (nu.imag() == 0.0) return boost::math::cyl_bessel_k(std::abs(nu.real()), x);
    return bessel_k_scaled(nu, x).value * std::exp(-M_PI * std::abs(nu.imag()) / 2);
  }
  return std::exp(bessel_k_log(nu, z));
}

}  // namespace oscwhit
