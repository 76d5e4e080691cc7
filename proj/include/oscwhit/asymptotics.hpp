#pragma once

// Asymptotic expansions of one- and two-dimensional oscillatory integrals
// together with their remainder bounds and quadrature oracles.

#include <boost/rational.hpp>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "oscwhit/quadrature.hpp"

namespace oscwhit {

using cplx = std::complex<double>;
using Rational = boost::rational<long long>;

// Amplitude given by its Taylor coefficients phi^{(n)}(x)/n!, n = 0..K.
struct SmoothAmplitude1D {
  std::function<std::vector<cplx>(double x, int K)> taylor;
  double a = 0.0, b = 0.0;  // support
  int kmax = 16;
  std::string name;

  cplx eval(double x) const;
  cplx deriv(int n, double x) const;
  // int_a^b |phi^{(n)}|
  double l1_norm(int n) const;
};

namespace amp {
SmoothAmplitude1D zero(double a, double b);
// exp(1 - 1/(1-u^2)), u affine from [a,b] onto [-1,1]; value 1 at the centre
SmoothAmplitude1D bump(double a, double b);
// exp(1 - 1/(1-(t/b)^2)) on [0,b]; value 1 at t = 0
SmoothAmplitude1D half_bump(double b);
// exp(-x^2/(2 s^2)) * bump(a,b)
SmoothAmplitude1D gaussian_bump(double s, double a, double b);
// poly(x) on [0,r0], smooth monotone cut-off to 0 at b
SmoothAmplitude1D plateau(double r0, double b, std::vector<double> poly = {1.0});
}  // namespace amp

struct Phase1D {
  std::function<std::vector<double>(double x, int K)> taylor;  // S^{(n)}(x)/n!
  double x0 = 0.0;
  int m = 2;
  std::string name;

  double S(double x) const;
  double deriv(int n, double x) const;
  // checks the order-(m-1) stationarity at x0
  void validate() const;
};

namespace phase {
Phase1D exp_model();          // x - e^x + 1, m = 2
Phase1D quadratic();          // x^2/2, m = 2
Phase1D cubic();              // x^3/6, m = 3
Phase1D quadratic_cubic();    // x^2/2 - x^3/6, m = 2 (S'' and S''' differ in sign)
Phase1D from_name(const std::string& name);
}  // namespace phase

struct AsymptoticTerm {
  cplx coefficient;    // includes the unimodular phase
  Rational exponent;   // term = coefficient * |mu|^{-exponent}
  double exponent_value;
};

struct AsymptoticResult {
  std::vector<AsymptoticTerm> terms;
  double remainder_bound = 0.0;
  int N = 0;
  double mu = 0.0;
  bool certified = true;
  double formula_bound = 0.0;  // stationary phase: uncalibrated Sobolev-type bound

  cplx sum() const;
  std::string to_json() const;
};

enum class EpsilonRule { DerivativeM, DerivativeMPlus1 };

AsymptoticResult erdelyi_expansion(const Phase1D& phase, const SmoothAmplitude1D& amp, double mu,
                                   int N, EpsilonRule rule = EpsilonRule::DerivativeM);
QuadResult erdelyi_oracle(const Phase1D& phase, const SmoothAmplitude1D& amp, double mu);

AsymptoticResult fourier_endpoint_expansion(const SmoothAmplitude1D& amp, cplx lambda, double x,
                                            int N, double delta = 0.0);
// classical real-exponent path
AsymptoticResult fourier_endpoint_expansion_real(const SmoothAmplitude1D& amp, double lambda,
                                                 double x, int N);
// int_0^b phi(t) t^{lambda-1} e^{ixt} dt
QuadResult fourier_endpoint_oracle(const SmoothAmplitude1D& amp, cplx lambda, double x);

cplx bessel_lambda(int m, cplx alpha);
AsymptoticResult bessel_endpoint_expansion(const SmoothAmplitude1D& amp, double lambda, int m,
                                           double x, int N, double r0);
// int_0^1 phi(r) r^{i lambda} J_m(r x) dr
QuadResult bessel_endpoint_oracle(const SmoothAmplitude1D& amp, double lambda, int m, double x);

struct BesselKCheck {
  double lhs, rhs;
  bool holds;
  bool underflow;
};
BesselKCheck bessel_k_large_bound_check(int m, double u, double r, double r0, double x);

// Phase on R^k x (R/2piZ)^{n-k}; torus coordinates come last.
struct TemperedPhaseND {
  int n = 2;
  int torus_dims = 0;
  std::function<double(const std::vector<double>&)> S;
  std::function<std::vector<double>(const std::vector<double>&)> grad;
  std::function<std::vector<std::vector<double>>(const std::vector<double>&)> hess;
  std::vector<double> x0;
  std::string name;

  int hess_signature() const;
  double hess_det() const;
  double weight(int i, const std::vector<double>& x) const;
  void validate() const;
};

struct AmplitudeND {
  std::function<cplx(const std::vector<double>&)> f;
  std::vector<std::pair<double, double>> box;  // non-torus coordinates
};

namespace phase_nd {
// x + e0*alpha - sqrt(1+e0^2) e^x cos(alpha) on R x torus
TemperedPhaseND polar_model(double eps0);
// sum x_i^2 / 2 on R^n
TemperedPhaseND quadratic(int n);
// x - e^x on R (n = 1)
TemperedPhaseND exp_line();
// x^2/2 on R (n = 1)
TemperedPhaseND square_line();
}  // namespace phase_nd

using OracleFn = std::function<cplx(double mu)>;

// Leading term only.  remainder_bound = safety * |oracle - leading| at 4 mu
// scaled back by 4^{n/2+1}; certified = false.
AsymptoticResult stationary_phase_nd(const TemperedPhaseND& phase, const AmplitudeND& amp,
                                     double mu, const OracleFn& oracle, double safety = 2.0);

// Reduced oracles: angular integral done in closed form, resp. product of
// one-dimensional integrals; direct tensor-product quadrature for moderate mu.
OracleFn polar_model_oracle(const SmoothAmplitude1D& radial, double eps0);
OracleFn quadratic_product_oracle(const std::vector<SmoothAmplitude1D>& factors);
OracleFn tensor_oracle_2d(const TemperedPhaseND& phase, const AmplitudeND& amp);

struct GridSpec {
  std::vector<double> lo, hi;
  std::vector<int> count;
  double exclude_radius = 0.1;
  double ceiling = 1e4;
};

struct TemperednessReport {
  std::vector<double> max_abs;  // per i: max over grid and |alpha| <= 2
  int points = 0;
  bool pass = false;
  std::string to_string() const;
};
TemperednessReport temperedness_probe(const TemperedPhaseND& phase, const GridSpec& grid);

}  // namespace oscwhit
