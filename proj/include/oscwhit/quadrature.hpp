#pragma once

// Adaptive Gauss-Kronrod (7/15) integration with a global error queue,
// oscillation-aware presplitting and the multiplicative measures on R^x
// and C^x.
//
// Measure conventions:
//   R^x : d^x y = dy/|y| summed over both signs of y.
//   C^x : d^x z = 2 (dr/r)(dalpha/2pi) for z = r e^{i alpha}; a radial
//         function integrates to 2 * int f(r) dr/r.

#include <complex>
#include <functional>
#include <vector>

namespace oscwhit {

using cplx = std::complex<double>;
using CFun = std::function<cplx(double)>;
using CFun2 = std::function<cplx(double, double)>;

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_panels = 200000;
  bool throw_on_fail = true;
  // rounding level of the integrand in units of machine epsilon, e.g.
  // |mu| * max|S| for e^{i mu S}; panels below it are not refined
  double noise_scale = 1.0;
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double err_est = 0.0;
  int panels = 0;
  bool converged = true;
};

// One GK15 rule on [a,b]; returns Kronrod value and |K - G| estimate.
QuadResult gk15(const CFun& f, double a, double b);

// Global adaptive integration starting from the given breakpoints
// (at least two, increasing, finite).
QuadResult integrate_panels(const CFun& f, const std::vector<double>& pts,
                            const QuadOptions& opt = {});

// Finite or infinite interval; infinite ends are mapped to [0,1).
QuadResult integrate(const CFun& f, double a, double b,
                     const QuadOptions& opt = {});

// Presplit into half periods pi/frequency before adapting.
QuadResult integrate_oscillatory(const CFun& f, double a, double b,
                                 double frequency, const QuadOptions& opt = {});

// Breakpoints such that omega integrates to at most pi over each panel,
// where omega(x) bounds the local angular frequency.
std::vector<double> phase_breakpoints(double a, double b,
                                      const std::function<double(double)>& omega,
                                      std::size_t max_points = 4000000);

QuadResult integrate_phased(const CFun& f, double a, double b,
                            const std::function<double(double)>& omega,
                            const QuadOptions& opt = {});

// Iterated integral over [ax,bx] x [ay,by]; the inner integral is taken
// over y with the given inner frequency bound (0 for none).
QuadResult integrate_2d(const CFun2& f, double ax, double bx, double ay,
                        double by, double inner_frequency = 0.0,
                        const QuadOptions& opt = {});

enum class Measure { Lebesgue, MultiplicativeR, MultiplicativeC };

struct IntegrationSpec {
  // Lebesgue / MultiplicativeR: integrand of one variable.
  CFun integrand;
  // MultiplicativeC: integrand of (r, alpha).
  CFun2 integrand2;
  Measure measure = Measure::Lebesgue;
  // Lebesgue: interval [lo,hi]; multiplicative: lo <= |y| <= hi.
  double lo = 0.0, hi = 1.0;
  // dominant angular frequency in the integration variable (log |y| for
  // the multiplicative measures); 0 if not oscillatory
  double oscillation_hint = 0.0;
  double target_abs_tol = 1e-12;
};

QuadResult integrate(const IntegrationSpec& spec);

}  // namespace oscwhit
