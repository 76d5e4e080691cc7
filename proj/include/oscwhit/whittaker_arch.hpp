#pragma once

// Unit-norm Kirillov functions W(y) = W(a(y)) of archimedean GL2 new /
// minimal vectors.
//
// Normalization: int |W(y)|^2 d^x y = 1 with the measures of
// quadrature.hpp (both signs on R^x; 2 dr/r on the radial part over C^x).
//
//   real principal, parity 0:  2 pi^{i tau}/Gamma(1/2+i tau) |y|^{1/2+i tau/2} K_{i tau}(2 pi |y|)
//   real principal, parity 1:  2i pi^{1/2+i tau}/Gamma(1+i tau) |y|^{1+i tau/2}
//                               [K_{1/2+i tau}(2 pi|y|) - sgn(y) K_{1/2-i tau}(2 pi|y|)]
//   real discrete weight p+1:  (4 pi y)^{(p+1)/2} Gamma(p+1)^{-1/2} e^{-2 pi y}, y > 0
//   complex, n1 != n2:         4 y^{n/2+1} K_{(|n1|-|n2|)/2+i tau}(4 pi y)
//                               / (Gamma_C(1+n/2+i tau) sqrt(B(|n1|+1,|n2|+1))),  n = |n1|+|n2|
//   complex, n1 == n2:         minimal vector, radial part of the (0,0) new vector
//                               times e^{i n1 alpha}

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace oscwhit {

using cplx = std::complex<double>;

enum class Place { Real, Complex };
enum class RepKind { Principal, Discrete };

struct ArchRepParam {
  Place place = Place::Real;
  RepKind kind = RepKind::Principal;
  double tau = 0.0;
  int parity = 0;
  int p = 0;
  int n1 = 0, n2 = 0;

  static ArchRepParam real_principal(double tau, int parity = 0);
  static ArchRepParam real_discrete(int p);
  static ArchRepParam complex_principal(double tau, int n1 = 0, int n2 = 0);

  void validate() const;
  std::string describe() const;
};

// sum_n coef[n] y^{expo0 + 2n}
struct PowerFamily {
  cplx expo0;
  std::vector<cplx> coef;
};

class KirillovFunction {
 public:
  virtual ~KirillovFunction() = default;
  virtual Place place() const = 0;
  // real place: y != 0 of either sign; complex place: radial part, y > 0
  virtual cplx eval(double y) const = 0;
  // A = y d/dy
  virtual cplx lie_A(double y) const = 0;
  // complex place: W(r e^{i a}) = eval(r) e^{i k a}
  virtual int angular_index() const { return 0; }
  virtual bool vanishes_negative() const { return false; }
  // W(y) = sum of families for 0 < |y| <= small_y_limit(); none if 0
  virtual double small_y_limit() const { return 0.0; }
  virtual std::vector<PowerFamily> small_y_families(int /*sign*/) const { return {}; }
  // W is zero (or below 1e-18 of its maximum) outside [support_lo, support_hi]
  virtual double support_lo() const { return 0.0; }
  virtual double support_hi() const = 0;
  // dominant oscillation of W in log|y|
  virtual double log_frequency() const { return 0.0; }
  virtual std::string branch(double /*y*/) const { return "closed-form"; }
};

using KirillovPtr = std::shared_ptr<const KirillovFunction>;

KirillovPtr make_kirillov(const ArchRepParam& rep);

cplx whittaker_real_principal(const ArchRepParam& rep, double y);
cplx whittaker_real_discrete(const ArchRepParam& rep, double y);
cplx whittaker_complex(const ArchRepParam& rep, double y);

struct Peak {
  double y0;
  double value;
  double derivative_value;
};
Peak kirillov_peak(const ArchRepParam& rep);

// Same function, with eval / lie_A served from piecewise Chebyshev fits in
// log|y| between the series radius (or support_lo) and support_hi.  Fits
// are refined until the trailing coefficients drop below rel_tol * max|W|.
KirillovPtr tabulate_kirillov(KirillovPtr W, double rel_tol = 1e-13);

// A.W as a Kirillov function (tabulated)
KirillovPtr lie_A_of(KirillovPtr W);

// int |W|^2 d^x y under the module measures
double kirillov_norm_sq(const KirillovFunction& W);

// |W(y)| / (|y|_v^{1/2} (1 + |log|y|_v|)), |y|_C = y^2
double small_y_ratio(const KirillovFunction& W, double y);

// Evaluate both branches of a real principal / complex tau != 0 function
// near the series radius; throws BranchDisagreement above rel_tol.
double check_branch_overlap(const ArchRepParam& rep, double rel_tol = 1e-8);

// Orthonormal basis vector of the SU(2) K-type V_n with weight n0, in the
// displayed cases n == n0 (0 <= k <= n0) or k in {0, n}.
cplx su2_basis_value(int n, int k, int n0, cplx alpha, cplx beta);

// Power families of c y^a K_nu(b y), with log_c = log c
std::vector<PowerFamily> bessel_k_families(cplx log_c, cplx a, cplx nu, double b, int terms = 30);
cplx eval_families(const std::vector<PowerFamily>& f, double y);
cplx eval_families_A(const std::vector<PowerFamily>& f, double y);

}  // namespace oscwhit
