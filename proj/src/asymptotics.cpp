#include "oscwhit/asymptotics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "oscwhit/calibration.hpp"
#include "oscwhit/errors.hpp"
#include "oscwhit/jet.hpp"
#include "oscwhit/specfun.hpp"

namespace oscwhit {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx I(0.0, 1.0);

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Rational to_rational(double v, long long maxden = 100000) {
  // continued fraction, stop when the denominator would exceed maxden
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = v;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(x);
    long long ai = static_cast<long long>(a);
    long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > maxden) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = x - a;
    if (std::abs(static_cast<double>(h1) / k1 - v) < 1e-12 * std::max(1.0, std::abs(v)) || frac < 1e-14)
      break;
    x = 1.0 / frac;
  }
  return Rational(h1, k1);
}

std::vector<cplx> to_cplx(const std::vector<double>& v) { return {v.begin(), v.end()}; }

// e^{1 - 1/(1-U^2)} as a jet, zero when numerically flat
JetD bump_jet(const JetD& U) {
  double u = U[0];
  if (std::abs(u) >= 1.0 || 1.0 - u * u < 1.0 / 700.0) return JetD(U.order());
  JetD one(U.order(), 1.0);
  return exp(one - 1.0 / (one - U * U));
}

// e^{-1/T}, T > 0
JetD flat_step(const JetD& T) {
  if (T[0] <= 1.0 / 700.0) return JetD(T.order());
  return exp(-(1.0 / T));
}

}  // namespace

// ---------------------------------------------------------------- amplitudes

cplx SmoothAmplitude1D::eval(double x) const {
  if (x < a || x > b) return 0.0;
  return taylor(x, 0)[0];
}

cplx SmoothAmplitude1D::deriv(int n, double x) const {
  if (n > kmax) throw DerivativeUnavailable("order " + std::to_string(n) + " > " + std::to_string(kmax));
  if (x < a || x > b) return 0.0;
  return taylor(x, n)[n] * factorial(n);
}

double SmoothAmplitude1D::l1_norm(int n) const {
  if (n > kmax) throw DerivativeUnavailable("order " + std::to_string(n) + " > " + std::to_string(kmax));
  std::vector<double> pts;
  const int P = 64;
  for (int k = 0; k <= P; ++k) pts.push_back(a + (b - a) * k / P);
  QuadOptions o;
  o.abs_tol = 1e-12;
  o.rel_tol = 1e-9;
  o.throw_on_fail = false;
  return integrate_panels([&](double x) { return cplx(std::abs(deriv(n, x))); }, pts, o).value.real();
}

namespace amp {

SmoothAmplitude1D zero(double a, double b) {
  SmoothAmplitude1D f;
  f.a = a;
  f.b = b;
  f.kmax = 64;
  f.name = "zero";
  f.taylor = [](double, int K) { return std::vector<cplx>(K + 1, 0.0); };
  return f;
}

SmoothAmplitude1D bump(double a, double b) {
  SmoothAmplitude1D f;
  f.a = a;
  f.b = b;
  f.name = "bump";
  f.taylor = [a, b](double x, int K) {
    JetD U(K, (2.0 * x - a - b) / (b - a));
    if (K >= 1) U[1] = 2.0 / (b - a);
    return to_cplx(bump_jet(U).coeffs());
  };
  return f;
}

SmoothAmplitude1D half_bump(double b) {
  SmoothAmplitude1D f;
  f.a = 0.0;
  f.b = b;
  f.name = "half_bump";
  f.taylor = [b](double x, int K) {
    JetD U(K, x / b);
    if (K >= 1) U[1] = 1.0 / b;
    return to_cplx(bump_jet(U).coeffs());
  };
  return f;
}

SmoothAmplitude1D gaussian_bump(double s, double a, double b) {
  SmoothAmplitude1D f;
  f.a = a;
  f.b = b;
  f.name = "gaussian_bump";
  f.taylor = [s, a, b](double x, int K) {
    JetD X = JetD::variable(K, x);
    JetD U(K, (2.0 * x - a - b) / (b - a));
    if (K >= 1) U[1] = 2.0 / (b - a);
    JetD g = exp(-(X * X) / (2.0 * s * s));
    return to_cplx((g * bump_jet(U)).coeffs());
  };
  return f;
}

SmoothAmplitude1D plateau(double r0, double b, std::vector<double> poly) {
  SmoothAmplitude1D f;
  f.a = 0.0;
  f.b = b;
  f.name = "plateau";
  f.taylor = [r0, b, poly](double x, int K) {
    JetD X = JetD::variable(K, x);
    JetD p(K, 0.0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * X + *it;
    if (x <= r0) return to_cplx(p.coeffs());
    if (x >= b) return std::vector<cplx>(K + 1, 0.0);
    JetD T(K, (x - r0) / (b - r0));
    if (K >= 1) T[1] = 1.0 / (b - r0);
    JetD f0 = flat_step(T), f1 = flat_step(1.0 - T);
    JetD psi = f0 / (f0 + f1);
    return to_cplx((p * (1.0 - psi)).coeffs());
  };
  return f;
}

}  // namespace amp

// -------------------------------------------------------------------- phases

double Phase1D::S(double x) const { return taylor(x, 0)[0]; }

double Phase1D::deriv(int n, double x) const { return taylor(x, n)[n] * factorial(n); }

void Phase1D::validate() const {
  if (m < 1) throw DomainError("phase order m must be >= 1");
  auto c = taylor(x0, m);
  double top = std::abs(c[m] * factorial(m));
  if (!(top > 0.0) || !std::isfinite(top)) throw NonStationaryPhase(name + ": S^(m)(x0) = 0");
  for (int j = 1; j < m; ++j)
    if (std::abs(c[j] * factorial(j)) > 1e-8 * top)
      throw NonStationaryPhase(name + ": S^(" + std::to_string(j) + ")(x0) != 0");
}

namespace phase {

Phase1D exp_model() {
  Phase1D p;
  p.x0 = 0.0;
  p.m = 2;
  p.name = "exp_model";
  p.taylor = [](double x, int K) {
    std::vector<double> c(K + 1);
    double e = std::exp(x);
    c[0] = x - e + 1.0;
    if (K >= 1) c[1] = 1.0 - e;
    for (int k = 2; k <= K; ++k) c[k] = -e / factorial(k);
    return c;
  };
  return p;
}

Phase1D quadratic() {
  Phase1D p;
  p.name = "quadratic";
  p.taylor = [](double x, int K) {
    std::vector<double> c(K + 1, 0.0);
    c[0] = 0.5 * x * x;
    if (K >= 1) c[1] = x;
    if (K >= 2) c[2] = 0.5;
    return c;
  };
  return p;
}

Phase1D cubic() {
  Phase1D p;
  p.m = 3;
  p.name = "cubic";
  p.taylor = [](double x, int K) {
    std::vector<double> c(K + 1, 0.0);
    c[0] = x * x * x / 6.0;
    if (K >= 1) c[1] = 0.5 * x * x;
    if (K >= 2) c[2] = 0.5 * x;
    if (K >= 3) c[3] = 1.0 / 6.0;
    return c;
  };
  return p;
}

Phase1D quadratic_cubic() {
  Phase1D p;
  p.name = "quadratic_cubic";
  p.taylor = [](double x, int K) {
    std::vector<double> c(K + 1, 0.0);
    c[0] = 0.5 * x * x - x * x * x / 6.0;
    if (K >= 1) c[1] = x - 0.5 * x * x;
    if (K >= 2) c[2] = 0.5 - 0.5 * x;
    if (K >= 3) c[3] = -1.0 / 6.0;
    return c;
  };
  return p;
}

Phase1D from_name(const std::string& name) {
  if (name == "exp_model") return exp_model();
  if (name == "quadratic") return quadratic();
  if (name == "cubic") return cubic();
  if (name == "quadratic_cubic") return quadratic_cubic();
  throw UnknownType("phase " + name);
}

}  // namespace phase

// -------------------------------------------------------------------- result

cplx AsymptoticResult::sum() const {
  cplx s = 0.0;
  for (const auto& t : terms) s += t.coefficient * std::pow(std::abs(mu), -t.exponent_value);
  return s;
}

std::string AsymptoticResult::to_json() const {
  nlohmann::json j;
  j["schema"] = "oscwhit/1";
  j["terms"] = nlohmann::json::array();
  for (const auto& t : terms)
    j["terms"].push_back({{"re", t.coefficient.real()},
                          {"im", t.coefficient.imag()},
                          {"exponent_num", t.exponent.numerator()},
                          {"exponent_den", t.exponent.denominator()}});
  j["remainder_bound"] = remainder_bound;
  j["mu"] = mu;
  j["N"] = N;
  j["certified"] = certified;
  if (formula_bound > 0.0) j["formula_bound"] = formula_bound;
  return j.dump();
}

// ------------------------------------------------------------------- Erdelyi

AsymptoticResult erdelyi_expansion(const Phase1D& phase, const SmoothAmplitude1D& amp, double mu,
                                   int N, EpsilonRule rule) {
  if (N < 1) throw DomainError("N must be >= 1");
  if (mu == 0.0) throw DomainError("mu must be nonzero");
  phase.validate();
  if (amp.kmax < N) throw DerivativeUnavailable("amplitude lacks order-" + std::to_string(N) + " derivatives");
  const double x0 = phase.x0;
  if (!(x0 >= amp.a && x0 <= amp.b)) throw NonStationaryPhase("x0 outside the amplitude support");
  const int m = phase.m;

  AsymptoticResult res;
  res.N = N;
  res.mu = mu;
  std::vector<double> s = phase.taylor(x0, m + N + 1);
  std::vector<cplx> ph = amp.taylor(x0, N);
  std::vector<cplx> coef(N, 0.0);

  for (int h : {+1, -1}) {
    if (h > 0 && !(x0 < amp.b)) continue;
    if (h < 0 && !(x0 > amp.a)) continue;
    auto sh = [&](int j) { return (j % 2 && h < 0) ? -s[j] : s[j]; };
    double lead = sh(m);
    double eps_src = rule == EpsilonRule::DerivativeM ? lead : sh(m + 1);
    int eps = (mu > 0) == (eps_src >= 0) ? 1 : -1;
    // S(x0 + h t) - S(x0) = lead t^m Q(t),  U(t) = |lead|^{1/m} t Q^{1/m}
    JetD Q(N, 1.0);
    for (int j = 1; j <= N; ++j) Q[j] = sh(m + j) / lead;
    JetD P = pow(Q, 1.0 / m);
    const double c = std::pow(std::abs(lead), 1.0 / m);
    JetD U(N, 0.0);
    for (int k = 1; k <= N; ++k) U[k] = c * P[k - 1];
    // series reversion T = U^{-1}
    JetD T(N, 0.0);
    if (N >= 1) T[1] = 1.0 / c;
    for (int k = 2; k <= N; ++k) {
      JetD Tk = T;
      Tk[k] = 0.0;
      T[k] = -U.compose(Tk)[k] / c;
    }
    JetC phi(N);
    for (int k = 0; k <= N; ++k) phi[k] = (k % 2 && h < 0) ? -ph[k] : ph[k];
    JetC Tc(N);
    for (int k = 0; k <= N; ++k) Tc[k] = T[k];
    JetC g = phi.compose(Tc);
    JetC dT = Tc.differentiate();
    JetC gt(N - 1);
    for (int k = 0; k < N; ++k) {
      cplx acc = 0.0;
      for (int j = 0; j <= k; ++j) acc += g[j] * dT[k - j];
      gt[k] = acc;
    }
    for (int n = 0; n < N; ++n)
      coef[n] += std::tgamma((n + 1.0) / m) / m * gt[n] *
                 std::exp(I * (eps * kPi * (n + 1.0) / (2.0 * m)));
  }
  cplx ph0 = std::exp(I * (mu * s[0]));
  for (int n = 0; n < N; ++n) {
    AsymptoticTerm t;
    t.coefficient = coef[n] * ph0;
    t.exponent = Rational(n + 1, m);
    t.exponent_value = (n + 1.0) / m;
    res.terms.push_back(t);
  }
  double norms = 0.0;
  for (int n = 0; n <= N; ++n) norms += amp.l1_norm(n);
  res.remainder_bound = calib("asym.erdelyi.C") * std::tgamma(double(N) / m) / factorial(N - 1) *
                        std::pow(std::abs(mu), -double(N) / m) * norms;
  return res;
}

QuadResult erdelyi_oracle(const Phase1D& phase, const SmoothAmplitude1D& amp, double mu) {
  auto f = [&](double x) { return amp.eval(x) * std::exp(I * (mu * phase.S(x))); };
  auto omega = [&](double x) { return std::abs(mu * phase.deriv(1, x)) + 1.0; };
  QuadOptions o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-12;
  o.max_panels = 2000000;
  o.throw_on_fail = false;
  double a = amp.a, b = amp.b;
  double smax = 0.0;
  for (int k = 0; k <= 64; ++k) smax = std::max(smax, std::abs(phase.S(a + (b - a) * k / 64.0)));
  o.noise_scale = 1.0 + std::abs(mu) * smax;
  if (phase.x0 > a && phase.x0 < b) {
    QuadResult l = integrate_phased(f, a, phase.x0, omega, o);
    QuadResult r = integrate_phased(f, phase.x0, b, omega, o);
    return {l.value + r.value, l.err_est + r.err_est, l.panels + r.panels, l.converged && r.converged};
  }
  return integrate_phased(f, a, b, omega, o);
}

// ----------------------------------------------------- Fourier endpoint terms

namespace {

void check_right_endpoint(const SmoothAmplitude1D& amp, int N) {
  for (int n = 0; n <= N; ++n) {
    double scale = std::max(1.0, amp.l1_norm(n) / std::max(amp.b - amp.a, 1e-300));
    if (std::abs(amp.deriv(n, amp.b)) > 1e-9 * scale)
      throw EndpointMismatch("phi^(" + std::to_string(n) + ") does not vanish at the right end");
  }
}

void check_flat(const SmoothAmplitude1D& amp, int n, double lo, double hi) {
  double scale = std::max(1.0, amp.l1_norm(n));
  for (int k = 0; k <= 16; ++k) {
    double x = lo + (hi - lo) * k / 16.0;
    if (std::abs(amp.deriv(n, x)) > 1e-12 * scale)
      throw EndpointMismatch("phi^(" + std::to_string(n) + ") is not identically zero near 0");
  }
}

}  // namespace

AsymptoticResult fourier_endpoint_expansion(const SmoothAmplitude1D& amp, cplx lambda, double x,
                                            int N, double delta) {
  if (!(lambda.real() > 0.0 && lambda.real() <= 1.0)) throw DomainError("Re lambda must lie in (0,1]");
  if (N < 0) throw DomainError("N must be >= 0");
  if (x == 0.0) throw DomainError("x must be nonzero");
  if (amp.kmax < N + 1) throw DerivativeUnavailable("amplitude lacks order-" + std::to_string(N + 1) + " derivatives");
  check_right_endpoint(amp, N);
  double T0 = 0.0;
  if (delta > 0.0) {
    check_flat(amp, N + 1, 0.0, std::min(delta, amp.b));
    T0 = std::abs(lambda.imag()) / delta;
    if (!(std::abs(x) > T0)) throw DomainError("|x| must exceed |Im lambda|/delta");
  }
  const double sg = x > 0 ? 1.0 : -1.0;
  const double ax = std::abs(x);
  AsymptoticResult res;
  res.N = N;
  res.mu = x;
  cplx twist = std::exp(-I * lambda.imag() * std::log(ax));
  for (int n = 0; n <= N; ++n) {
    AsymptoticTerm t;
    t.coefficient = gamma(cplx(n) + lambda) / factorial(n) * std::exp(sg * I * kPi * (cplx(n) + lambda) / 2.0) *
                    amp.deriv(n, 0.0) * twist;
    t.exponent_value = n + lambda.real();
    t.exponent = to_rational(t.exponent_value);
    res.terms.push_back(t);
  }
  double tail = amp.l1_norm(N + 1);
  double g = gamma(N + lambda.real()) / factorial(N);
  if (delta > 0.0)
    res.remainder_bound = g * std::pow(ax - T0, -(N + 1.0)) * tail;
  else
    res.remainder_bound = g * std::pow(ax, -(N + 1.0)) * std::exp(kPi * std::abs(lambda.imag()) / 2.0) * tail;
  return res;
}

AsymptoticResult fourier_endpoint_expansion_real(const SmoothAmplitude1D& amp, double lambda, double x,
                                                 int N) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in (0,1]");
  if (x == 0.0) throw DomainError("x must be nonzero");
  if (amp.kmax < N + 1) throw DerivativeUnavailable("amplitude lacks order-" + std::to_string(N + 1) + " derivatives");
  check_right_endpoint(amp, N);
  const double sg = x > 0 ? 1.0 : -1.0;
  AsymptoticResult res;
  res.N = N;
  res.mu = x;
  for (int n = 0; n <= N; ++n) {
    double ang = sg * kPi * (n + lambda) / 2.0;
    AsymptoticTerm t;
    t.coefficient = std::tgamma(n + lambda) / factorial(n) * cplx(std::cos(ang), std::sin(ang)) * amp.deriv(n, 0.0);
    t.exponent_value = n + lambda;
    t.exponent = to_rational(t.exponent_value);
    res.terms.push_back(t);
  }
  res.remainder_bound = std::tgamma(N + lambda) / factorial(N) * std::pow(std::abs(x), -(N + 1.0)) * amp.l1_norm(N + 1);
  return res;
}

QuadResult fourier_endpoint_oracle(const SmoothAmplitude1D& amp, cplx lambda, double x) {
  if (!(lambda.real() > 0.0)) throw DomainError("Re lambda must be positive");
  QuadOptions o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-12;
  o.max_panels = 2000000;
  o.throw_on_fail = false;
  const double ax = std::abs(x), li = std::abs(lambda.imag());
  o.noise_scale = 1.0 + ax * amp.b + 40.0 * li;
  const double tc = std::min(amp.b, 1.0 / (1.0 + ax));
  double sup = 0.0;
  for (int k = 0; k <= 32; ++k) sup = std::max(sup, std::abs(amp.eval(amp.b * k / 32.0)));
  sup = std::max(sup, 1e-300);
  double vmin = std::log(1e-16 * lambda.real() / sup) / lambda.real();
  vmin = std::min(vmin, std::log(tc) - 1.0);
  auto flog = [&](double v) {
    double t = std::exp(v);
    return amp.eval(t) * std::exp(lambda * v + I * (x * t));
  };
  auto wlog = [&](double v) { return li + ax * std::exp(v) + 1.0; };
  QuadResult head = integrate_phased(flog, vmin, std::log(tc), wlog, o);
  auto flin = [&](double t) { return amp.eval(t) * std::exp((lambda - 1.0) * std::log(t) + I * (x * t)); };
  auto wlin = [&](double t) { return ax + li / t + 1.0; };
  QuadResult body = integrate_phased(flin, tc, amp.b, wlin, o);
  return {head.value + body.value, head.err_est + body.err_est, head.panels + body.panels,
          head.converged && body.converged};
}

// ------------------------------------------------------- Bessel endpoint terms

cplx bessel_lambda(int m, cplx alpha) {
  cplx a1 = (alpha + 1.0 + double(m)) / 2.0, a2 = (alpha + 1.0 - double(m)) / 2.0;
  for (cplx z : {a1, a2})
    if (std::abs(z.imag()) < 1e-15 && z.real() <= 0.0 && std::abs(z.real() - std::round(z.real())) < 1e-15)
      throw PoleError("Lambda_m has a pole at this alpha");
  return std::pow(2.0, alpha - 1.0) * gamma(a1) * gamma(a2);
}

AsymptoticResult bessel_endpoint_expansion(const SmoothAmplitude1D& amp, double lambda, int m, double x,
                                           int N, double r0) {
  if (m < 0) throw DomainError("m must be >= 0");
  if (N < 1) throw DomainError("N must be >= 1");
  if (!(r0 > 0.0 && r0 <= 1.0)) throw DomainError("r0 must lie in (0,1]");
  const double T0 = std::abs(lambda) / r0;
  if (!(x >= 1.0 + std::max(T0, double(m) * m))) throw DomainError("x below 1 + max(|lambda|/r0, m^2)");
  if (amp.kmax < N) throw DerivativeUnavailable("amplitude lacks order-" + std::to_string(N) + " derivatives");
  if (std::abs(amp.b - 1.0) > 1e-12 || amp.a != 0.0) throw DomainError("amplitude must live on [0,1]");
  check_right_endpoint(amp, N - 1);
  check_flat(amp, N, 0.0, r0);

  AsymptoticResult res;
  res.N = N;
  res.mu = x;
  cplx twist = std::exp(-I * lambda * std::log(x));
  for (int n = 0; n < N; ++n) {
    // int_0^inf r^{n+i lambda} J_m(rx) dr in closed form
    const int k = m - n;
    cplx F;
    int twoj = m - n - 1;
    if (lambda == 0.0 && twoj >= 0 && twoj % 2 == 0) {
      // removable singularity of the prefactor times Lambda_m
      int j = twoj / 2;
      double sgn = ((((k - 1) / 2 + j) % 2 + 2) % 2) ? -1.0 : 1.0;
      F = std::pow(2.0, n - 1.0) * std::tgamma((n + 1.0 + m) / 2.0) * 2.0 * kPi * sgn / factorial(j);
    } else {
      cplx ik = std::pow(I, k);
      F = (ik * std::exp(kPi * lambda / 2.0) + std::exp(-kPi * lambda / 2.0) / ik) * bessel_lambda(m, cplx(n, lambda));
    }
    AsymptoticTerm t;
    t.coefficient = amp.deriv(n, 0.0) / factorial(n) * F * twist / kPi;
    t.exponent = Rational(1 + n);
    t.exponent_value = 1.0 + n;
    res.terms.push_back(t);
  }
  res.remainder_bound = calib("asym.bessel_endpoint.C") / std::sqrt(x) * std::pow(x - T0, -double(N)) * amp.l1_norm(N);
  return res;
}

QuadResult bessel_endpoint_oracle(const SmoothAmplitude1D& amp, double lambda, int m, double x) {
  QuadOptions o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-12;
  o.max_panels = 2000000;
  o.throw_on_fail = false;
  const double rc = std::min(1.0, 1.0 / x);
  auto flog = [&](double v) {
    double r = std::exp(v);
    return amp.eval(r) * r * bessel_j(m, r * x) * std::exp(I * (lambda * v));
  };
  auto wlog = [&](double v) { return std::abs(lambda) + x * std::exp(v) + 1.0; };
  QuadResult head = integrate_phased(flog, std::log(1e-17) + std::log(rc), std::log(rc), wlog, o);
  auto flin = [&](double r) { return amp.eval(r) * bessel_j(m, r * x) * std::exp(I * (lambda * std::log(r))); };
  auto wlin = [&](double r) { return x + std::abs(lambda) / r + 1.0; };
  QuadResult body = integrate_phased(flin, rc, 1.0, wlin, o);
  return {head.value + body.value, head.err_est + body.err_est, head.panels + body.panels,
          head.converged && body.converged};
}

BesselKCheck bessel_k_large_bound_check(int m, double u, double r, double r0, double x) {
  if (m < 0) throw DomainError("m must be >= 0");
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("u must lie in [0,1]");
  if (!(r0 > 0.0 && r >= r0)) throw DomainError("need r >= r0 > 0");
  if (!(x >= 1.0 && x >= calib("asym.bessel_k_large.x_over_m2") * m * m))
    throw DomainError("x below the calibrated multiple of m^2");
  double loglhs = bessel_k_log(cplx(m), cplx(u * x, r * x)).real();
  double logrhs = std::log(calib("asym.bessel_k_large.C") * std::sqrt(kPi / 2.0)) -
                  0.25 * std::log(r0 * r0 + u * u) - 0.5 * std::log(x) - u * x;
  BesselKCheck c;
  c.lhs = std::exp(loglhs);
  c.rhs = std::exp(logrhs);
  c.underflow = logrhs < std::log(std::numeric_limits<double>::min());
  c.holds = loglhs <= logrhs;
  return c;
}

// ---------------------------------------------------------- stationary phase

namespace {

Eigen::MatrixXd to_eigen(const std::vector<std::vector<double>>& h) {
  int n = static_cast<int>(h.size());
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = h[i][j];
  return M;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// distance on R^k x torus
double torus_distance(const std::vector<double>& a, const std::vector<double>& b, int n, int torus) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double d = a[i] - b[i];
    if (i >= n - torus) {
      d = std::remainder(d, 2.0 * kPi);
    }
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

int TemperedPhaseND::hess_signature() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(hess(x0)));
  int sig = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) sig += es.eigenvalues()[i] > 0 ? 1 : -1;
  return sig;
}

double TemperedPhaseND::hess_det() const { return to_eigen(hess(x0)).determinant(); }

double TemperedPhaseND::weight(int i, const std::vector<double>& x) const {
  auto g = grad(x);
  double n2 = 0.0;
  for (double v : g) n2 += v * v;
  return g[i] / n2;
}

void TemperedPhaseND::validate() const {
  if (static_cast<int>(x0.size()) != n) throw DomainError(name + ": x0 has wrong dimension");
  if (norm2(grad(x0)) > 1e-10) throw NonStationaryPhase(name + ": gradient does not vanish at x0");
  if (std::abs(hess_det()) < 1e-10) throw DegenerateHessian(name + ": det Hessian ~ 0");
}

namespace phase_nd {

TemperedPhaseND polar_model(double eps0) {
  const double c = std::sqrt(1.0 + eps0 * eps0);
  TemperedPhaseND p;
  p.n = 2;
  p.torus_dims = 1;
  p.name = "polar_model";
  p.S = [=](const std::vector<double>& v) { return v[0] + eps0 * v[1] - c * std::exp(v[0]) * std::cos(v[1]); };
  p.grad = [=](const std::vector<double>& v) {
    double e = c * std::exp(v[0]);
    return std::vector<double>{1.0 - e * std::cos(v[1]), eps0 + e * std::sin(v[1])};
  };
  p.hess = [=](const std::vector<double>& v) {
    double e = c * std::exp(v[0]), co = std::cos(v[1]), si = std::sin(v[1]);
    return std::vector<std::vector<double>>{{-e * co, e * si}, {e * si, e * co}};
  };
  p.x0 = {0.0, std::atan2(-eps0, 1.0)};
  return p;
}

TemperedPhaseND quadratic(int n) {
  TemperedPhaseND p;
  p.n = n;
  p.name = "quadratic";
  p.S = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += 0.5 * x * x;
    return s;
  };
  p.grad = [](const std::vector<double>& v) { return v; };
  p.hess = [n](const std::vector<double>&) {
    std::vector<std::vector<double>> h(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) h[i][i] = 1.0;
    return h;
  };
  p.x0.assign(n, 0.0);
  return p;
}

TemperedPhaseND exp_line() {
  TemperedPhaseND p;
  p.n = 1;
  p.name = "exp_line";
  p.S = [](const std::vector<double>& v) { return v[0] - std::exp(v[0]); };
  p.grad = [](const std::vector<double>& v) { return std::vector<double>{1.0 - std::exp(v[0])}; };
  p.hess = [](const std::vector<double>& v) { return std::vector<std::vector<double>>{{-std::exp(v[0])}}; };
  p.x0 = {0.0};
  return p;
}

TemperedPhaseND square_line() {
  TemperedPhaseND p = quadratic(1);
  p.name = "square_line";
  return p;
}

}  // namespace phase_nd

namespace {

// grid scan + Newton for a second critical point inside the amplitude support
void scan_critical_points(const TemperedPhaseND& ph, const AmplitudeND& amp) {
  const int n = ph.n, nt = ph.torus_dims, nr = n - nt;
  const int G = n == 1 ? 401 : (n == 2 ? 61 : 15);
  std::vector<double> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    if (i < nr) {
      lo[i] = amp.box[i].first;
      hi[i] = amp.box[i].second;
    } else {
      lo[i] = 0.0;
      hi[i] = 2.0 * kPi;
    }
  }
  long total = 1;
  for (int i = 0; i < n; ++i) total *= G;
  std::vector<double> x(n);
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    for (int i = 0; i < n; ++i) {
      x[i] = lo[i] + (hi[i] - lo[i]) * (r % G) / (G - 1);
      r /= G;
    }
    if (std::abs(amp.f(x)) == 0.0) continue;
    double g0 = norm2(ph.grad(x));
    double step = 0.0;
    for (int i = 0; i < n; ++i) step = std::max(step, (hi[i] - lo[i]) / (G - 1));
    auto H = to_eigen(ph.hess(x));
    if (g0 > 2.0 * H.norm() * step + 1e-12) continue;
    // Newton from a promising grid point
    std::vector<double> y = x;
    bool ok = false;
    for (int it = 0; it < 50; ++it) {
      auto g = ph.grad(y);
      Eigen::VectorXd gv(n);
      for (int i = 0; i < n; ++i) gv[i] = g[i];
      if (gv.norm() < 1e-11) {
        ok = true;
        break;
      }
      Eigen::VectorXd d = to_eigen(ph.hess(y)).fullPivLu().solve(gv);
      for (int i = 0; i < n; ++i) y[i] -= d[i];
      if (!std::isfinite(y[0])) break;
    }
    if (!ok) continue;
    bool inside = true;
    for (int i = 0; i < nr; ++i) inside = inside && y[i] >= lo[i] && y[i] <= hi[i];
    if (!inside || std::abs(amp.f(y)) == 0.0) continue;
    if (torus_distance(y, ph.x0, n, nt) > 1e-3)
      throw MultipleCriticalPoints(ph.name + ": second critical point in the support");
  }
}

// crude sum_{|alpha| <= 2} ||d^alpha phi||_1 by central differences on a grid
double sobolev_l1(const TemperedPhaseND& ph, const AmplitudeND& amp) {
  const int n = ph.n, nr = n - ph.torus_dims;
  const int G = n == 1 ? 801 : 121;
  std::vector<double> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    if (i < nr) {
      lo[i] = amp.box[i].first;
      hi[i] = amp.box[i].second;
    } else {
      lo[i] = 0.0;
      hi[i] = 2.0 * kPi;
    }
  }
  long total = 1;
  double cell = 1.0;
  for (int i = 0; i < n; ++i) {
    total *= G;
    cell *= (hi[i] - lo[i]) / (G - 1);
  }
  const double h = 1e-3;
  double acc = 0.0;
  std::vector<double> x(n);
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    for (int i = 0; i < n; ++i) {
      x[i] = lo[i] + (hi[i] - lo[i]) * (r % G) / (G - 1);
      r /= G;
    }
    cplx f0 = amp.f(x);
    double s = std::abs(f0);
    for (int i = 0; i < n; ++i) {
      auto xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      cplx fp = amp.f(xp), fm = amp.f(xm);
      s += std::abs((fp - fm) / (2 * h)) + std::abs((fp - 2.0 * f0 + fm) / (h * h));
      for (int j = i + 1; j < n; ++j) {
        auto a = x, b = x, c = x, d = x;
        a[i] += h; a[j] += h;
        b[i] += h; b[j] -= h;
        c[i] -= h; c[j] += h;
        d[i] -= h; d[j] -= h;
        s += std::abs((amp.f(a) - amp.f(b) - amp.f(c) + amp.f(d)) / (4 * h * h));
      }
    }
    acc += s * cell;
  }
  return acc;
}

}  // namespace

AsymptoticResult stationary_phase_nd(const TemperedPhaseND& phase, const AmplitudeND& amp, double mu,
                                     const OracleFn& oracle, double safety) {
  if (mu == 0.0) throw DomainError("mu must be nonzero");
  phase.validate();
  if (static_cast<int>(amp.box.size()) != phase.n - phase.torus_dims)
    throw DomainError("amplitude box must cover the non-periodic coordinates");
  scan_critical_points(phase, amp);
  const int n = phase.n;
  const double det = phase.hess_det();
  const int sig = phase.hess_signature() * (mu > 0 ? 1 : -1);
  cplx A0 = std::pow(2.0 * kPi, n / 2.0) / std::sqrt(std::abs(det)) * std::exp(I * (kPi / 4.0 * sig)) * amp.f(phase.x0);

  AsymptoticResult res;
  res.N = 1;
  res.mu = mu;
  res.certified = false;
  AsymptoticTerm t;
  t.coefficient = A0 * std::exp(I * (mu * phase.S(phase.x0)));
  t.exponent = Rational(n, 2);
  t.exponent_value = n / 2.0;
  res.terms.push_back(t);
  if (A0 == 0.0) {
    res.remainder_bound = 0.0;
    return res;
  }
  const double mu4 = 4.0 * mu;
  cplx lead4 = A0 * std::exp(I * (mu4 * phase.S(phase.x0))) * std::pow(std::abs(mu4), -n / 2.0);
  double e4 = std::abs(oracle(mu4) - lead4);
  res.remainder_bound = safety * e4 * std::pow(4.0, n / 2.0 + 1.0);
  res.formula_bound = sobolev_l1(phase, amp) * std::pow(std::abs(mu), -(1.0 + n / 2.0));
  return res;
}

OracleFn polar_model_oracle(const SmoothAmplitude1D& radial, double eps0) {
  const double c = std::sqrt(1.0 + eps0 * eps0);
  return [radial, eps0, c](double mu) {
    double kd = mu * eps0;
    int k = static_cast<int>(std::lround(kd));
    if (std::abs(kd - k) > 1e-9) throw DomainError("mu*eps0 must be an integer on the torus");
    auto f = [&](double x) { return radial.eval(x) * std::exp(I * (mu * x)) * bessel_j(k, mu * c * std::exp(x)); };
    auto w = [&](double x) { return std::abs(mu) * (1.0 + c * std::exp(x)) + 1.0; };
    QuadOptions o;
    o.abs_tol = 1e-14;
    o.rel_tol = 1e-12;
    o.max_panels = 2000000;
    o.throw_on_fail = false;
    cplx v = integrate_phased(f, radial.a, radial.b, w, o).value;
    return 2.0 * kPi * std::pow(-I, k) * v;
  };
}

OracleFn quadratic_product_oracle(const std::vector<SmoothAmplitude1D>& factors) {
  return [factors](double mu) {
    cplx p = 1.0;
    auto ph = phase::quadratic();
    for (const auto& f : factors) p *= erdelyi_oracle(ph, f, mu).value;
    return p;
  };
}

OracleFn tensor_oracle_2d(const TemperedPhaseND& phase, const AmplitudeND& amp) {
  if (phase.n != 2) throw DomainError("tensor oracle is two-dimensional");
  return [phase, amp](double mu) {
    const int nr = phase.n - phase.torus_dims;
    auto range = [&](int i) {
      return i < nr ? amp.box[i] : std::pair<double, double>(0.0, 2.0 * kPi);
    };
    auto [ax, bx] = range(0);
    auto [ay, by] = range(1);
    QuadOptions o;
    o.abs_tol = 1e-12;
    o.rel_tol = 1e-10;
    o.max_panels = 2000000;
    o.throw_on_fail = false;
    // outer frequency bound from the gradient on a coarse grid
    double gx = 0.0;
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        std::vector<double> v{ax + (bx - ax) * i / 40.0, ay + (by - ay) * j / 40.0};
        gx = std::max(gx, std::abs(phase.grad(v)[0]));
      }
    auto inner = [&](double x) {
      auto f = [&](double y) {
        std::vector<double> v{x, y};
        return amp.f(v) * std::exp(I * (mu * phase.S(v)));
      };
      auto w = [&](double y) { return std::abs(mu * phase.grad({x, y})[1]) + 1.0; };
      return integrate_phased(f, ay, by, w, o).value;
    };
    return integrate_phased(inner, ax, bx, [&](double) { return std::abs(mu) * gx + 1.0; }, o).value;
  };
}

// -------------------------------------------------------------- temperedness

std::string TemperednessReport::to_string() const {
  std::ostringstream os;
  os << (pass ? "pass" : "fail") << " points=" << points << " max|w_i^(a)|=";
  for (std::size_t i = 0; i < max_abs.size(); ++i) os << (i ? "," : "") << max_abs[i];
  return os.str();
}

TemperednessReport temperedness_probe(const TemperedPhaseND& phase, const GridSpec& grid) {
  const int n = phase.n;
  TemperednessReport rep;
  rep.max_abs.assign(n, 0.0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= grid.count[i];
  const double h = 1e-3;
  std::vector<double> x(n);
  bool finite = true;
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    for (int i = 0; i < n; ++i) {
      int c = grid.count[i];
      x[i] = c == 1 ? grid.lo[i] : grid.lo[i] + (grid.hi[i] - grid.lo[i]) * (r % c) / (c - 1);
      r /= c;
    }
    if (torus_distance(x, phase.x0, n, phase.torus_dims) < grid.exclude_radius) continue;
    ++rep.points;
    for (int i = 0; i < n; ++i) {
      auto w = [&](const std::vector<double>& y) { return phase.weight(i, y); };
      double w0 = w(x), m = std::abs(w0);
      for (int a = 0; a < n; ++a) {
        auto xp = x, xm = x;
        xp[a] += h;
        xm[a] -= h;
        double wp = w(xp), wm = w(xm);
        m = std::max({m, std::abs((wp - wm) / (2 * h)), std::abs((wp - 2 * w0 + wm) / (h * h))});
        for (int b = a + 1; b < n; ++b) {
          auto p = x, q = x, s = x, t = x;
          p[a] += h; p[b] += h;
          q[a] += h; q[b] -= h;
          s[a] -= h; s[b] += h;
          t[a] -= h; t[b] -= h;
          m = std::max(m, std::abs((w(p) - w(q) - w(s) + w(t)) / (4 * h * h)));
        }
      }
      if (!std::isfinite(m)) finite = false;
      rep.max_abs[i] = std::max(rep.max_abs[i], m);
    }
  }
  rep.pass = finite;
  for (double v : rep.max_abs) rep.pass = rep.pass && v <= grid.ceiling;
  return rep;
}

}  // namespace oscwhit
