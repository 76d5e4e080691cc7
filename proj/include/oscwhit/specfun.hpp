#pragma once

#include <complex>

namespace oscwhit {

using cplx = std::complex<double>;

// log Gamma on the principal branch of the sum of logs; exp() of it is
// Gamma.  PoleError at non-positive integers.
cplx lgamma(cplx z);
cplx gamma(cplx z);
double gamma(double x);
// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s)
cplx gamma_C(cplx s);
cplx beta(cplx x, cplx y);
double beta(double x, double y);

// J_m(x) for integer m and real x
double bessel_j(int m, double x);

// K_nu(z), Re z >= 0, z != 0.
//  - real z, real nu: library routine
//  - real z, complex nu: steepest-descent contour in t for
//    int e^{-z cosh t + nu t} dt, or the power series for |z| <= 1
//  - complex z: Laplace-type integral, |Im nu| <= 20
cplx bessel_k(cplx nu, cplx z);

// log K_nu(z) for complex z, no under/overflow of e^{-z}
cplx bessel_k_log(cplx nu, cplx z);

// e^{pi |Im nu| / 2} K_nu(x) for real x > 0, with optional derivative in x
struct KScaled {
  cplx value;
  cplx derivative;
};
KScaled bessel_k_scaled(cplx nu, double x);

// Power series for non-integer nu, scaled as above; intended for |x| <= 1
KScaled bessel_k_series_scaled(cplx nu, double x);

}  // namespace oscwhit
