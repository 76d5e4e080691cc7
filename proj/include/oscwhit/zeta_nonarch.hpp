#pragma once

// Non-archimedean local computations over Q_p: spherical Whittaker values,
// the orthonormal classical vectors, twisted zeta sums, Gauss-sum test
// vectors and the local L-factor table.
//
// Kirillov model: a function on p^Z x Z_p^x, here always Z_p^x-invariant,
// so it is a sequence W(p^k).  Inner products use d^x y with vol(Z_p^x) = 1.

#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace oscwhit {

using cplx = std::complex<double>;

bool is_prime(long n);
std::vector<long> primes_up_to(long n);

struct PAdicPlace {
  long p = 2;
  double q = 2.0;
  int d = 0;  // conductor exponent of the additive character
  static PAdicPlace make(long p, int d = 0);
};

enum class LocalType { Unramified, SemiUnramified, Steinberg, Supercuspidal, Other };
LocalType parse_local_type(const std::string& s);
std::string to_string(LocalType t);

struct NonArchRep {
  LocalType type = LocalType::Unramified;
  double tau = 0.0;  // unramified: pi(|.|^{i tau}, |.|^{-i tau})
  int c = 0;         // conductor exponent
  static NonArchRep unramified(double tau);
  static NonArchRep ramified(int c, LocalType type);
  // (q^{i tau}, q^{-i tau})
  std::pair<cplx, cplx> satake(double q) const;
};

// (Z/p^R)^x as a product of two cyclic groups <g1> x <g2>: a primitive
// root and the trivial group for odd p, <-1> x <5> for p = 2.
struct UnitGroup {
  long p = 2;
  int R = 1;
  long modulus = 2;
  long n1 = 1, n2 = 1, g1 = 1, g2 = 1;
  std::vector<int> e1_of, e2_of;  // discrete logs, -1 on non-units
  static std::shared_ptr<const UnitGroup> make(long p, int R);
  long order() const { return n1 * n2; }
};

// Character of Z_p^x of conductor dividing p^r,
// chi(g1^e1 g2^e2) = exp(2 pi i (k1 e1 / n1 + k2 e2 / n2)).
struct PAdicCharacter {
  long p = 2;
  int r = 0;
  long k1 = 0, k2 = 0;
  std::shared_ptr<const UnitGroup> group;  // mod p^r
  cplx unram_value = 1.0;                  // chi(p)
  long index = 0;

  static PAdicCharacter trivial(long p);
  // chi(u) = exp(2 pi i num/den), den = lcm(n1, n2); num = -1 on non-units
  std::pair<long, long> angle(long u) const;
  cplx operator()(long u) const;
  bool is_primitive() const;
};

// all primitive characters mod p^r, r >= 1, p^r <= 1e6
std::vector<PAdicCharacter> enumerate_characters(long p, int r);

// W_0(p^k) with W_0(1) = 1
cplx macdonald_w0(const NonArchRep& rep, double q, int k);
// sum_k |W_0(p^k)|^2
double w0_norm_sq(const NonArchRep& rep, double q);

struct ClassicalNormalizers {
  double c1, c;
};
ClassicalNormalizers classical_normalizers(const NonArchRep& rep, double q);

// W_n(p^k) for the classical vector e_n (W_0(1) = 1 normalization, so
// <e_n, e_m> = sum_k W_n conj(W_m) / w0_norm_sq)
cplx classical_basis_wn(const NonArchRep& rep, double q, int n, int k);
cplx classical_inner(const NonArchRep& rep, double q, int n, int m);

struct TwistedZeta {
  cplx value;
  double bound_rhs;
  bool holds;
};
// zeta(s, n(p^{-l}).W_n) for the unit vector e_n, Re s = 1
TwistedZeta zeta_twisted(cplx s, const NonArchRep& rep, double q, int n, int l, double eps = 0.01);

struct GaussZeta {
  double abs_value, target, ratio;
  cplx value;
  // |sum_u chi(u) psi(p^{j} u)| for the shells j = -r-1 .. 0
  std::vector<double> shell_sums;
};
// l_p(n(T).W_0, chi) at s = 1/2 with T = p^{-(r+d)} (T = 0 if r = 0).
// additive_measure: d^x y restricted from dy (vol Z_p^x = 1 - 1/p)
GaussZeta gauss_zeta(const NonArchRep& rep, const PAdicCharacter& chi, const PAdicPlace& place,
                     bool additive_measure = false);
// same for every primitive character mod p^r at once (one FFT per shell)
std::vector<GaussZeta> gauss_zeta_all(const NonArchRep& rep, long p, int r, int d = 0,
                                      bool additive_measure = false);

struct LFactorBounds {
  double lower, upper;
};
// bounds for |L_p(s, pi x chi)|^{-1}; rep.type describes pi x chi
LFactorBounds l_factor_reciprocal_bounds(const NonArchRep& rep, const PAdicCharacter& chi, cplx s,
                                         double theta = 7.0 / 64.0);

}  // namespace oscwhit
