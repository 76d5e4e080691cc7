#include "oscwhit/zeta_nonarch.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "oscwhit/calibration.hpp"
#include "oscwhit/errors.hpp"

namespace oscwhit {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long mulmod(long a, long b, long m) { return static_cast<long>((static_cast<__int128>(a) * b) % m); }

long powmod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

long primitive_root(long p) {
  long phi = p - 1, n = phi;
  std::vector<long> f;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long d : f) ok = ok && powmod(g, phi / d, p) != 1;
    if (ok) return g;
  }
  return 1;
}

cplx unit(double turns) { return std::polar(1.0, kTwoPi * turns); }

// psi(p^j u) for the standard character of Q_p, j < 0
cplx psi_shell(long u, long pj) { return unit(static_cast<double>(u % pj) / pj); }

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long n) {
  std::vector<char> sieve(std::max<long>(n + 1, 2), 1);
  std::vector<long> out;
  for (long i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) sieve[j] = 0;
  }
  return out;
}

PAdicPlace PAdicPlace::make(long p, int d) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (d < 0) throw DomainError("d must be >= 0");
  PAdicPlace pl;
  pl.p = p;
  pl.q = static_cast<double>(p);
  pl.d = d;
  return pl;
}

LocalType parse_local_type(const std::string& s) {
  if (s == "unramified") return LocalType::Unramified;
  if (s == "semi-unramified" || s == "semi_unramified") return LocalType::SemiUnramified;
  if (s == "steinberg") return LocalType::Steinberg;
  if (s == "supercuspidal") return LocalType::Supercuspidal;
  if (s == "other") return LocalType::Other;
  throw UnknownType("local type '" + s + "'");
}

std::string to_string(LocalType t) {
  switch (t) {
    case LocalType::Unramified: return "unramified";
    case LocalType::SemiUnramified: return "semi-unramified";
    case LocalType::Steinberg: return "steinberg";
    case LocalType::Supercuspidal: return "supercuspidal";
    case LocalType::Other: return "other";
  }
  return "other";
}

NonArchRep NonArchRep::unramified(double tau) {
  NonArchRep r;
  r.tau = tau;
  return r;
}

NonArchRep NonArchRep::ramified(int c, LocalType type) {
  if (c < 1) throw DomainError("ramified representation needs conductor exponent >= 1");
  if (type == LocalType::Unramified) throw DomainError("unramified type with c >= 1");
  NonArchRep r;
  r.type = type;
  r.c = c;
  return r;
}

std::pair<cplx, cplx> NonArchRep::satake(double q) const {
  if (type != LocalType::Unramified) throw UnsupportedCase("Satake parameters of a ramified representation");
  double th = tau * std::log(q);
  return {std::polar(1.0, th), std::polar(1.0, -th)};
}

// ------------------------------------------------------------- characters

std::shared_ptr<const UnitGroup> UnitGroup::make(long p, int R) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (R < 0) throw DomainError("R must be >= 0");
  auto G = std::make_shared<UnitGroup>();
  G->p = p;
  G->R = R;
  G->modulus = ipow(p, R);
  if (G->modulus > 10000000) throw DomainError("modulus too large");
  const long M = G->modulus;
  if (R == 0 || (p == 2 && R == 1)) {
    G->e1_of.assign(M, -1);
    G->e2_of.assign(M, -1);
    G->e1_of[M == 1 ? 0 : 1] = 0;
    G->e2_of[M == 1 ? 0 : 1] = 0;
    return G;
  }
  if (p == 2) {
    G->n1 = 2;
    G->g1 = M - 1;
    G->n2 = R >= 3 ? ipow(2, R - 2) : 1;
    G->g2 = 5 % M;
  } else {
    long g = primitive_root(p);
    if (R >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
    G->g1 = g % M;
    G->n1 = ipow(p, R - 1) * (p - 1);
  }
  G->e1_of.assign(M, -1);
  G->e2_of.assign(M, -1);
  long a = 1;
  for (long e1 = 0; e1 < G->n1; ++e1) {
    long b = a;
    for (long e2 = 0; e2 < G->n2; ++e2) {
      G->e1_of[b] = static_cast<int>(e1);
      G->e2_of[b] = static_cast<int>(e2);
      b = mulmod(b, G->g2, M);
    }
    a = mulmod(a, G->g1, M);
  }
  return G;
}

PAdicCharacter PAdicCharacter::trivial(long p) {
  PAdicCharacter c;
  c.p = p;
  c.r = 0;
  c.group = UnitGroup::make(p, 0);
  return c;
}

std::pair<long, long> PAdicCharacter::angle(long u) const {
  const UnitGroup& G = *group;
  long den = std::lcm(G.n1, G.n2);
  long v = ((u % G.modulus) + G.modulus) % G.modulus;
  if (G.e1_of[v] < 0) return {-1, den};
  long num = (k1 * G.e1_of[v] % G.n1) * (den / G.n1) + (k2 * G.e2_of[v] % G.n2) * (den / G.n2);
  return {num % den, den};
}

cplx PAdicCharacter::operator()(long u) const {
  auto [num, den] = angle(u);
  if (num < 0) return 0.0;
  return unit(static_cast<double>(num) / den);
}

bool PAdicCharacter::is_primitive() const {
  if (r == 0) return true;
  if (r == 1) {
    for (long u = 1; u < p; ++u)
      if (angle(u).first != 0) return true;
    return false;
  }
  // kernel of reduction mod p^{r-1} is cyclic, generated by 1 + p^{r-1}
  return angle(1 + ipow(p, r - 1)).first != 0;
}

std::vector<PAdicCharacter> enumerate_characters(long p, int r) {
  if (r < 1) throw DomainError("r must be >= 1");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (ipow(p, r) > 1000000) throw DomainError("p^r must be <= 1e6");
  auto G = UnitGroup::make(p, r);
  std::vector<PAdicCharacter> out;
  long idx = 0;
  for (long k1 = 0; k1 < G->n1; ++k1)
    for (long k2 = 0; k2 < G->n2; ++k2) {
      PAdicCharacter c;
      c.p = p;
      c.r = r;
      c.k1 = k1;
      c.k2 = k2;
      c.group = G;
      if (!c.is_primitive()) continue;
      c.index = idx++;
      out.push_back(c);
    }
  return out;
}

// ------------------------------------------------------ spherical vectors

cplx macdonald_w0(const NonArchRep& rep, double q, int k) {
  if (rep.type != LocalType::Unramified) throw UnsupportedCase("spherical vector of a ramified representation");
  if (k < 0) return 0.0;
  double th = rep.tau * std::log(q);
  cplx s = 0.0;
  for (int a = 0; a <= k; ++a) s += std::polar(1.0, th * (2 * a - k));
  return s * std::pow(q, -k / 2.0);
}

double w0_norm_sq(const NonArchRep& rep, double q) {
  double s = 0.0;
  for (int k = 0;; ++k) {
    double t = std::norm(macdonald_w0(rep, q, k));
    s += t;
    if ((k + 1.0) * (k + 1.0) * std::pow(q, -k) < 1e-18 * s && k > 2) break;
  }
  return s;
}

ClassicalNormalizers classical_normalizers(const NonArchRep& rep, double q) {
  if (rep.type != LocalType::Unramified) throw UnsupportedCase("classical vectors need an unramified representation");
  double lam = 2.0 * std::cos(rep.tau * std::log(q));
  double a = 1.0 / (1.0 + 1.0 / q);
  ClassicalNormalizers n;
  n.c1 = 1.0 - lam * lam * a * a / q;
  n.c = 1.0 - 1.0 / (q * q) - (1.0 / q - 1.0 / (q * q * q)) * lam * lam * a * a;
  if (!(n.c1 > 0.0) || !(n.c > 0.0)) throw NonUnitary("classical normalizer is not positive");
  return n;
}

cplx classical_basis_wn(const NonArchRep& rep, double q, int n, int k) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (n == 0) return macdonald_w0(rep, q, k);
  auto nz = classical_normalizers(rep, q);
  double lam = 2.0 * std::cos(rep.tau * std::log(q));
  double rq = 1.0 / std::sqrt(q);
  if (n == 1)
    return (macdonald_w0(rep, q, k - 1) - rq / (1.0 + 1.0 / q) * lam * macdonald_w0(rep, q, k)) / std::sqrt(nz.c1);
  return (macdonald_w0(rep, q, k - n) - rq * lam * macdonald_w0(rep, q, k - n + 1) +
          macdonald_w0(rep, q, k - n + 2) / q) /
         std::sqrt(nz.c);
}

cplx classical_inner(const NonArchRep& rep, double q, int n, int m) {
  int k0 = std::max(0, std::min(n, m) - 2);
  cplx s = 0.0;
  for (int k = k0;; ++k) {
    cplx t = classical_basis_wn(rep, q, n, k) * std::conj(classical_basis_wn(rep, q, m, k));
    s += t;
    int kk = k - std::max(n, m);
    if (kk > 2 && 9.0 * (kk + 3.0) * (kk + 3.0) * std::pow(q, -kk) < 1e-17) break;
  }
  return s / w0_norm_sq(rep, q);
}

TwistedZeta zeta_twisted(cplx s, const NonArchRep& rep, double q, int n, int l, double eps) {
  if (std::abs(s.real() - 1.0) > 1e-12) throw DomainError("Re s must be 1");
  if (n < 0 || l < 0) throw DomainError("n, l must be >= 0");
  auto qs = [&](int k) { return std::exp(-(s - 0.5) * (k * std::log(q))); };
  TwistedZeta z;
  cplx v = 0.0;
  const int k0 = std::max(l, n - 2);
  for (int k = k0;; ++k) {
    v += classical_basis_wn(rep, q, n, k) * qs(k);
    int kk = k - n;
    // |W_n(p^{n+kk})| q^{-(n+kk)/2} <= 9 (kk+3) q^{-kk} q^{-n/2} / sqrt(c)
    if (kk > 2 && 9.0 * (kk + 3.0) * std::pow(q, -kk) < 1e-16) break;
  }
  if (l >= 1) v -= classical_basis_wn(rep, q, n, l - 1) * qs(l - 1) / (q - 1.0);
  // unit-norm e_n
  z.value = v / std::sqrt(w0_norm_sq(rep, q));
  z.bound_rhs = calib("znarch.twisted.C") * std::pow(q, n / 2.0) * std::pow(q, -std::max(n, l) * (1.0 - eps));
  z.holds = std::abs(z.value) <= z.bound_rhs;
  return z;
}

// ------------------------------------------------------------- Gauss sums

namespace {

GaussZeta assemble(const NonArchRep& rep, long p, int r, cplx chi_p, const std::vector<cplx>& shells,
                   bool additive_measure) {
  // shells[i] = sum over (Z/p^R)^x of chi(u) psi(p^j u), j = -r-1+i, R = max(r, -j)
  const double q = static_cast<double>(p);
  const double vol = additive_measure ? 1.0 - 1.0 / q : 1.0;
  GaussZeta g;
  cplx ell = 0.0;
  for (int v = 0; v <= r; ++v) {
    int j = v - r;
    int R = std::max(r, -j);
    double order = R == 0 ? 1.0 : std::pow(q, R - 1) * (q - 1.0);
    ell += macdonald_w0(rep, q, v) * std::pow(chi_p, v) * vol * shells[j + r + 1] / order;
  }
  for (const auto& s : shells) g.shell_sums.push_back(std::abs(s));
  g.value = ell;
  g.abs_value = std::abs(ell);
  g.target = std::pow(q, -r / 2.0);
  g.ratio = g.abs_value / g.target;
  return g;
}

GaussZeta unramified_twist(const NonArchRep& rep, long p, cplx chi_p, bool additive_measure) {
  // T = 0: sum_v W_0(p^v) chi(p)^v divided by L(1/2, pi x chi)
  const double q = static_cast<double>(p);
  auto [al, be] = rep.satake(q);
  cplx s = 0.0;
  for (int v = 0;; ++v) {
    s += macdonald_w0(rep, q, v) * std::pow(chi_p, v);
    if (v > 4 && (v + 1.0) * std::pow(q, -v / 2.0) < 1e-17) break;
  }
  cplx linv = (1.0 - al * chi_p / std::sqrt(q)) * (1.0 - be * chi_p / std::sqrt(q));
  GaussZeta g;
  g.value = s * linv * (additive_measure ? 1.0 - 1.0 / q : 1.0);
  g.abs_value = std::abs(g.value);
  g.target = 1.0;
  g.ratio = g.abs_value;
  return g;
}

std::mutex fftw_mutex;

}  // namespace

GaussZeta gauss_zeta(const NonArchRep& rep, const PAdicCharacter& chi, const PAdicPlace& place,
                     bool additive_measure) {
  if (rep.type != LocalType::Unramified) throw UnsupportedCase("gauss_zeta needs an unramified representation");
  if (chi.p != place.p) throw DomainError("character and place have different primes");
  if (!chi.is_primitive()) throw NotPrimitive("character factors through a smaller modulus");
  const long p = chi.p;
  const int r = chi.r;
  if (r == 0) return unramified_twist(rep, p, chi.unram_value, additive_measure);
  // the additive conductor d only shifts T; after the shift psi is standard
  std::vector<cplx> shells;
  for (int j = -r - 1; j <= 0; ++j) {
    long M = ipow(p, std::max(r, -j));
    long pj = j < 0 ? ipow(p, -j) : 1;
    cplx s = 0.0;
    for (long u = 1; u < M; ++u) {
      if (u % p == 0) continue;
      s += chi(u) * (j < 0 ? psi_shell(u, pj) : cplx(1.0));
    }
    shells.push_back(s);
  }
  return assemble(rep, p, r, chi.unram_value, shells, additive_measure);
}

std::vector<GaussZeta> gauss_zeta_all(const NonArchRep& rep, long p, int r, int d, bool additive_measure) {
  if (rep.type != LocalType::Unramified) throw UnsupportedCase("gauss_zeta needs an unramified representation");
  PAdicPlace::make(p, d);
  auto chars = enumerate_characters(p, r);
  auto Gr = chars.empty() ? UnitGroup::make(p, r) : chars[0].group;
  std::vector<std::vector<cplx>> shells(chars.size());
  for (int j = -r - 1; j <= 0; ++j) {
    int R = std::max(r, -j);
    auto G = R == r ? Gr : UnitGroup::make(p, R);
    const long n1 = G->n1, n2 = G->n2, N = n1 * n2;
    long pj = j < 0 ? ipow(p, -j) : 1;
    fftw_complex* buf = fftw_alloc_complex(N);
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lk(fftw_mutex);
      plan = fftw_plan_dft_2d(static_cast<int>(n1), static_cast<int>(n2), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    long a = 1;
    for (long e1 = 0; e1 < n1; ++e1) {
      long b = a;
      for (long e2 = 0; e2 < n2; ++e2) {
        cplx v = j < 0 ? psi_shell(b, pj) : cplx(1.0);
        buf[e1 * n2 + e2][0] = v.real();
        buf[e1 * n2 + e2][1] = v.imag();
        b = mulmod(b, G->g2, G->modulus);
      }
      a = mulmod(a, G->g1, G->modulus);
    }
    fftw_execute(plan);
    // lift chi from mod p^r to mod p^R
    const long s1 = p == 2 ? 1 : n1 / Gr->n1, s2 = n2 / Gr->n2;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      long K1 = chars[i].k1 * s1 % n1, K2 = chars[i].k2 * s2 % n2;
      shells[i].emplace_back(buf[K1 * n2 + K2][0], buf[K1 * n2 + K2][1]);
    }
    {
      std::lock_guard<std::mutex> lk(fftw_mutex);
      fftw_destroy_plan(plan);
    }
    fftw_free(buf);
  }
  std::vector<GaussZeta> out;
  out.reserve(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i)
    out.push_back(assemble(rep, p, r, chars[i].unram_value, shells[i], additive_measure));
  return out;
}

LFactorBounds l_factor_reciprocal_bounds(const NonArchRep& rep, const PAdicCharacter& chi, cplx s, double theta) {
  const double sig = s.real();
  if (!(sig > 0.0)) throw DomainError("Re s must be positive");
  if (theta < 0.0 || theta >= 0.5) throw DomainError("theta must lie in [0, 1/2)");
  const double q = static_cast<double>(chi.p);
  auto qp = [q](double e) { return std::pow(q, -e); };
  const double not_sq_int = std::max(0.0, (1.0 - qp(sig + theta)) * (1.0 - qp(sig - theta)));
  switch (rep.type) {
    case LocalType::Unramified:
      return {not_sq_int, (1.0 + qp(sig + theta)) * (1.0 + qp(sig - theta))};
    case LocalType::SemiUnramified:
      return {not_sq_int, 1.0 + qp(sig - theta)};
    case LocalType::Steinberg:
      return {1.0 - qp(sig + 0.5), 1.0 + qp(0.5 + sig - theta)};
    case LocalType::Supercuspidal:
      return {1.0, 1.0};
    case LocalType::Other:
      return {not_sq_int, 1.0};
  }
  throw UnknownType("local type");
}

}  // namespace oscwhit
