#include "oscwhit/whittaker_arch.hpp"

#include <boost/math/special_functions/binomial.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <sstream>

#include "oscwhit/errors.hpp"
#include "oscwhit/quadrature.hpp"
#include "oscwhit/specfun.hpp"

namespace oscwhit {

namespace {

const cplx I(0.0, 1.0);
// below this |tau| the power series degenerates (Gamma(+-i tau) poles)
constexpr double kSeriesMinTau = 0.05;
constexpr double kSmallY = 0.25;

double scan_support_hi(const KirillovFunction& W, double y_start) {
  double peak = std::abs(W.eval(y_start));
  double y = y_start;
  for (int k = 0; k < 400; ++k) {
    y = y * 1.15 + 0.05;
    double v = std::abs(W.eval(y));
    peak = std::max(peak, v);
    if (v < 1e-18 * peak && y > 2 * y_start) break;
  }
  return y;
}

class RealPrincipalW : public KirillovFunction {
 public:
  explicit RealPrincipalW(const ArchRepParam& r) : rep_(r) {
    double tau = rep_.tau;
    if (rep_.parity == 0) {
      // 2 pi^{i tau} / Gamma(1/2 + i tau), kept as a log
      lognorm_ = std::log(2.0) + I * tau * std::log(M_PI) - lgamma(cplx(0.5, tau));
      power_ = cplx(0.5, tau / 2);
    } else {
      lognorm_ = std::log(2.0) + I * (M_PI / 2) + cplx(0.5, tau) * std::log(M_PI) - lgamma(cplx(1.0, tau));
      power_ = cplx(1.0, tau / 2);
    }
    if (std::abs(tau) >= kSeriesMinTau) {
      if (rep_.parity == 0) {
        fam_pos_ = bessel_k_families(lognorm_, power_, cplx(0, tau), 2 * M_PI);
        fam_neg_ = fam_pos_;
      } else {
        auto a = bessel_k_families(lognorm_, power_, cplx(0.5, tau), 2 * M_PI);
        auto b = bessel_k_families(lognorm_ + I * M_PI, power_, cplx(0.5, -tau), 2 * M_PI);
        auto c = bessel_k_families(lognorm_, power_, cplx(0.5, -tau), 2 * M_PI);
        fam_pos_ = a;
        fam_pos_.insert(fam_pos_.end(), b.begin(), b.end());
        fam_neg_ = a;
        fam_neg_.insert(fam_neg_.end(), c.begin(), c.end());
      }
    }
    hi_ = scan_support_hi(*this, std::max(std::abs(tau), 1.0) / (2 * M_PI));
  }
  Place place() const override { return Place::Real; }
  cplx eval(double y) const override { return value(y, false); }
  cplx lie_A(double y) const override { return value(y, true); }
  double small_y_limit() const override { return fam_pos_.empty() ? 0.0 : kSmallY; }
  std::vector<PowerFamily> small_y_families(int sign) const override {
    return sign > 0 ? fam_pos_ : fam_neg_;
  }
  double support_hi() const override { return hi_; }
  double log_frequency() const override { return 1.5 * std::abs(rep_.tau); }
  std::string branch(double y) const override {
    return (std::abs(y) <= small_y_limit()) ? "series" : "contour";
  }

  cplx value(double y, bool lie) const {
    if (y == 0.0) throw DomainError("W(0) undefined");
    double ay = std::abs(y);
    if (ay <= small_y_limit()) {
      const auto& f = y > 0 ? fam_pos_ : fam_neg_;
      return lie ? eval_families_A(f, ay) : eval_families(f, ay);
    }
    return direct(y, lie);
  }

  cplx direct(double y, bool lie) const {
    double ay = std::abs(y), x = 2 * M_PI * ay, tau = rep_.tau;
    cplx pref = std::exp(lognorm_ + power_ * std::log(ay) - M_PI * std::abs(tau) / 2);
    if (rep_.parity == 0) {
      KScaled k = bessel_k_scaled(cplx(0, tau), x);
      return lie ? pref * (power_ * k.value + x * k.derivative) : pref * k.value;
    }
    KScaled k = bessel_k_scaled(cplx(0.5, tau), x);
    double sg = y > 0 ? 1.0 : -1.0;
    cplx v = k.value - sg * std::conj(k.value);
    if (!lie) return pref * v;
    cplx d = k.derivative - sg * std::conj(k.derivative);
    return pref * (power_ * v + x * d);
  }

 private:
  ArchRepParam rep_;
  cplx lognorm_, power_;
  std::vector<PowerFamily> fam_pos_, fam_neg_;
  double hi_ = 0.0;
};

class RealDiscreteW : public KirillovFunction {
 public:
  explicit RealDiscreteW(const ArchRepParam& r) : p_(r.p) {
    hi_ = scan_support_hi(*this, (p_ + 1) / (4 * M_PI));
  }
  Place place() const override { return Place::Real; }
  cplx eval(double y) const override {
    if (y <= 0) return 0.0;
    return std::exp(0.5 * (p_ + 1) * std::log(4 * M_PI * y) - 0.5 * std::lgamma(p_ + 1.0) - 2 * M_PI * y);
  }
  cplx lie_A(double y) const override { return (0.5 * (p_ + 1) - 2 * M_PI * y) * eval(y); }
  bool vanishes_negative() const override { return true; }
  double small_y_limit() const override { return kSmallY; }
  std::vector<PowerFamily> small_y_families(int sign) const override {
    if (sign < 0) return {};
    // (4 pi)^{(p+1)/2} Gamma(p+1)^{-1/2} y^{(p+1)/2} e^{-2 pi y}; odd powers need
    // two families of step 2
    PowerFamily even{cplx(0.5 * (p_ + 1), 0), {}}, odd{cplx(0.5 * (p_ + 1) + 1, 0), {}};
    double c = std::exp(0.5 * (p_ + 1) * std::log(4 * M_PI) - 0.5 * std::lgamma(p_ + 1.0));
    double t = c;
    for (int k = 0; k < 60; ++k) {
      (k % 2 == 0 ? even : odd).coef.push_back(t);
      t *= -2 * M_PI / (k + 1);
    }
    return {even, odd};
  }
  double support_hi() const override { return hi_; }

 private:
  int p_;
  double hi_ = 0.0;
};

class ComplexW : public KirillovFunction {
 public:
  explicit ComplexW(const ArchRepParam& r) : rep_(r) {
    int a1 = std::abs(r.n1), a2 = std::abs(r.n2);
    if (r.n1 == r.n2) {
      a1 = a2 = 0;
      ang_ = r.n1;
    }
    int n = a1 + a2;
    nu_ = cplx(0.5 * (a1 - a2), r.tau);
    power_ = 0.5 * n + 1.0;
    cplx s = cplx(1.0 + 0.5 * n, r.tau);
    lognorm_ = std::log(4.0) - (std::log(2.0) - s * std::log(2 * M_PI) + lgamma(s)) -
               0.5 * (std::lgamma(a1 + 1.0) + std::lgamma(a2 + 1.0) - std::lgamma(a1 + a2 + 2.0));
    if (std::abs(r.tau) >= kSeriesMinTau) fam_ = bessel_k_families(lognorm_, power_, nu_, 4 * M_PI);
    hi_ = scan_support_hi(*this, std::max({std::abs(r.tau), 1.0 + n}) / (4 * M_PI));
  }
  Place place() const override { return Place::Complex; }
  int angular_index() const override { return ang_; }
  cplx eval(double y) const override { return value(y, false); }
  cplx lie_A(double y) const override { return value(y, true); }
  double small_y_limit() const override { return fam_.empty() ? 0.0 : kSmallY; }
  std::vector<PowerFamily> small_y_families(int sign) const override {
    return sign > 0 ? fam_ : std::vector<PowerFamily>{};
  }
  double support_hi() const override { return hi_; }
  double log_frequency() const override { return 1.5 * std::abs(rep_.tau); }
  std::string branch(double y) const override {
    return (y <= small_y_limit()) ? "series" : "contour";
  }

  cplx value(double y, bool lie) const {
    if (!(y > 0)) throw DomainError("complex-place radial part needs y > 0");
    if (y <= small_y_limit()) return lie ? eval_families_A(fam_, y) : eval_families(fam_, y);
    return direct(y, lie);
  }

  cplx direct(double y, bool lie) const {
    double x = 4 * M_PI * y;
    KScaled k = bessel_k_scaled(nu_, x);
    if (k.value == 0.0 && k.derivative == 0.0) {
      // K_nu(x) below the double range while y^{power} is large: logs
      if (std::abs(nu_.imag()) > 20) return 0.0;
      const cplx lk = bessel_k_log(nu_, x);
      const cplx v = std::exp(lognorm_ + power_ * std::log(y) + lk);
      if (!lie) return v;
      // x K'/K = -(x/2)(K_{nu-1} + K_{nu+1})/K
      const cplx r = std::exp(bessel_k_log(nu_ - 1.0, x) - lk) + std::exp(bessel_k_log(nu_ + 1.0, x) - lk);
      return v * (power_ - 0.5 * x * r);
    }
    cplx pref = std::exp(lognorm_ + power_ * std::log(y) - M_PI * std::abs(rep_.tau) / 2);
    return lie ? pref * (power_ * k.value + x * k.derivative) : pref * k.value;
  }

 private:
  ArchRepParam rep_;
  cplx nu_, lognorm_;
  double power_ = 1.0;
  int ang_ = 0;
  std::vector<PowerFamily> fam_;
  double hi_ = 0.0;
};

}  // namespace

ArchRepParam ArchRepParam::real_principal(double tau, int parity) {
  ArchRepParam r;
  r.place = Place::Real;
  r.kind = RepKind::Principal;
  r.tau = tau;
  r.parity = parity;
  r.validate();
  return r;
}

ArchRepParam ArchRepParam::real_discrete(int p) {
  ArchRepParam r;
  r.place = Place::Real;
  r.kind = RepKind::Discrete;
  r.p = p;
  r.validate();
  return r;
}

ArchRepParam ArchRepParam::complex_principal(double tau, int n1, int n2) {
  ArchRepParam r;
  r.place = Place::Complex;
  r.kind = RepKind::Principal;
  r.tau = tau;
  r.n1 = n1;
  r.n2 = n2;
  r.validate();
  return r;
}

void ArchRepParam::validate() const {
  if (!std::isfinite(tau)) throw DomainError("tau must be finite");
  if (kind == RepKind::Discrete && (place != Place::Real || p < 1))
    throw DomainError("discrete series needs the real place and p >= 1");
  if (place == Place::Complex && kind != RepKind::Principal)
    throw DomainError("complex place supports principal series only");
  if (place == Place::Real && kind == RepKind::Principal && parity != 0 && parity != 1)
    throw DomainError("parity must be 0 or 1");
  if (place == Place::Complex && n1 < n2) throw DomainError("complex place needs n1 >= n2");
}

std::string ArchRepParam::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (place == Place::Real && kind == RepKind::Principal)
    os << "real-principal(tau=" << tau << ",parity=" << parity << ")";
  else if (place == Place::Real)
    os << "real-discrete(p=" << p << ")";
  else
    os << "complex(tau=" << tau << ",n1=" << n1 << ",n2=" << n2 << ")";
  return os.str();
}

std::vector<PowerFamily> bessel_k_families(cplx log_c, cplx a, cplx nu, double b, int terms) {
  // K_nu(z) = 1/2 sum_n [Gamma(nu)(z/2)^{2n-nu}/(n!(1-nu)_n) + Gamma(-nu)(z/2)^{2n+nu}/(n!(1+nu)_n)]
  std::vector<PowerFamily> out;
  double lb = std::log(0.5 * b), q = 0.25 * b * b;
  for (int sg : {-1, 1}) {
    cplx v = double(sg) * nu;  // family with y^{a + v + 2n}
    PowerFamily f;
    f.expo0 = a + v;
    cplx c = std::exp(log_c + lgamma(-v) + v * lb - std::log(2.0));
    for (int n = 0; n < terms; ++n) {
      f.coef.push_back(c);
      c *= q / ((n + 1.0) * (n + 1.0 + v));
    }
    out.push_back(std::move(f));
  }
  return out;
}

cplx eval_families(const std::vector<PowerFamily>& fams, double y) {
  double ly = std::log(y), y2 = y * y;
  cplx s = 0.0;
  for (const auto& f : fams) {
    cplx h = 0.0;
    for (auto it = f.coef.rbegin(); it != f.coef.rend(); ++it) h = h * y2 + *it;
    s += h * std::exp(f.expo0 * ly);
  }
  return s;
}

cplx eval_families_A(const std::vector<PowerFamily>& fams, double y) {
  double ly = std::log(y), y2 = y * y;
  cplx s = 0.0;
  for (const auto& f : fams) {
    cplx h = 0.0;
    int n = static_cast<int>(f.coef.size());
    for (int k = n - 1; k >= 0; --k) h = h * y2 + f.coef[k] * (f.expo0 + 2.0 * k);
    s += h * std::exp(f.expo0 * ly);
  }
  return s;
}

KirillovPtr make_kirillov(const ArchRepParam& rep) {
  rep.validate();
  if (rep.place == Place::Complex) return std::make_shared<ComplexW>(rep);
  if (rep.kind == RepKind::Discrete) return std::make_shared<RealDiscreteW>(rep);
  return std::make_shared<RealPrincipalW>(rep);
}

cplx whittaker_real_principal(const ArchRepParam& rep, double y) {
  if (rep.place != Place::Real || rep.kind != RepKind::Principal)
    throw DomainError("not a real principal series");
  return RealPrincipalW(rep).eval(y);
}

cplx whittaker_real_discrete(const ArchRepParam& rep, double y) {
  if (rep.place != Place::Real || rep.kind != RepKind::Discrete) throw DomainError("not a real discrete series");
  return RealDiscreteW(rep).eval(y);
}

cplx whittaker_complex(const ArchRepParam& rep, double y) {
  if (rep.place != Place::Complex) throw DomainError("not a complex-place representation");
  return ComplexW(rep).eval(y);
}

Peak kirillov_peak(const ArchRepParam& rep) {
  auto W = make_kirillov(rep);
  double y0;
  if (rep.place == Place::Real && rep.kind == RepKind::Principal)
    y0 = std::max(std::abs(rep.tau), 1.0) / (2 * M_PI);
  else if (rep.kind == RepKind::Discrete)
    y0 = (rep.p + 1) / (4 * M_PI);
  else if (rep.n1 == rep.n2)
    // turning point of K_{i tau}(4 pi y)
    y0 = std::max(std::abs(rep.tau), 1.0) / (4 * M_PI);
  else
    y0 = (std::abs(rep.n1) + std::abs(rep.n2) + 1) / (8 * M_PI);
  return {y0, std::abs(W->eval(y0)), std::abs(W->lie_A(y0))};
}

double kirillov_norm_sq(const KirillovFunction& W) {
  QuadOptions o;
  o.abs_tol = 1e-11;
  o.rel_tol = 1e-11;
  double lo = std::log(std::max(W.support_lo(), 1e-16)), hi = std::log(W.support_hi());
  double w = 2 * W.log_frequency() + 4;
  auto omega = [&](double t) { return w + 4 * M_PI * std::exp(t); };
  double total = 0.0;
  for (int sg : {1, -1}) {
    if (sg < 0 && (W.vanishes_negative() || W.place() == Place::Complex)) continue;
    CFun f = [&](double t) { return cplx(std::norm(W.eval(sg * std::exp(t)))); };
    total += integrate_phased(f, lo, hi, omega, o).value.real();
  }
  return W.place() == Place::Complex ? 2 * total : total;
}

double small_y_ratio(const KirillovFunction& W, double y) {
  double ay = W.place() == Place::Complex ? y * y : std::abs(y);
  return std::abs(W.eval(y)) / (std::sqrt(ay) * (1 + std::abs(std::log(ay))));
}

double check_branch_overlap(const ArchRepParam& rep, double rel_tol) {
  auto W = make_kirillov(rep);
  double ys = W->small_y_limit();
  if (ys == 0.0 || rep.kind == RepKind::Discrete) return 0.0;
  double worst = 0.0;
  for (double f : {0.8, 0.9, 1.0}) {
    double y = f * ys;
    cplx a = W->eval(y), b;
    if (auto r = dynamic_cast<const RealPrincipalW*>(W.get()))
      b = r->direct(y, false);
    else
      b = static_cast<const ComplexW&>(*W).direct(y, false);
    worst = std::max(worst, std::abs(a - b) / std::abs(b));
  }
  if (worst > rel_tol)
    throw BranchDisagreement(rep.describe() + ": relative gap " + std::to_string(worst));
  return worst;
}

cplx su2_basis_value(int n, int k, int n0, cplx alpha, cplx beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10)
    throw DomainError("(alpha, beta) is not in SU(2)");
  if (n < 0 || std::abs(n0) > n || (n - n0) % 2 != 0) throw UnsupportedIndex("invalid (n, n0)");
  using boost::math::binomial_coefficient;
  cplx v;
  if (n == n0) {
    if (k < 0 || k > n0) throw UnsupportedIndex("k out of range");
    double c = std::sqrt((n0 + 1) * binomial_coefficient<double>(n0, k));
    v = c * std::pow(alpha, n0 - k) * std::pow(beta, k);
  } else if (k == 0 || k == n) {
    int j = (n + n0) / 2, l = (n - n0) / 2;
    double c = (n + 1) * std::sqrt(oscwhit::beta(j + 1.0, l + 1.0)) * binomial_coefficient<double>(n, l);
    if (k == 0)
      v = (l % 2 ? -c : c) * std::pow(alpha, j) * std::pow(std::conj(beta), l);
    else
      v = c * std::pow(beta, j) * std::pow(std::conj(alpha), l);
  } else {
    throw UnsupportedIndex("only n == n0 or k in {0, n} are available");
  }
  if (std::abs(v) > std::sqrt(n + 1.0) * (1 + 1e-12)) throw NonUnitary("basis vector exceeds sqrt(n+1)");
  return v;
}

namespace {

constexpr int kChebN = 24;

struct ChebPanel {
  double a, b;
  std::array<cplx, kChebN> c, d;  // W and dW/dx coefficients
};

cplx clenshaw(const std::array<cplx, kChebN>& c, double t) {
  cplx b1 = 0.0, b2 = 0.0;
  for (int k = kChebN - 1; k >= 1; --k) {
    cplx b0 = 2.0 * t * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

ChebPanel fit_panel(const std::function<cplx(double)>& f, double a, double b) {
  ChebPanel p{a, b, {}, {}};
  std::array<cplx, kChebN> v;
  for (int j = 0; j < kChebN; ++j) {
    double t = std::cos(M_PI * (j + 0.5) / kChebN);
    v[j] = f(0.5 * (a + b) + 0.5 * (b - a) * t);
  }
  for (int k = 0; k < kChebN; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < kChebN; ++j) s += v[j] * std::cos(M_PI * k * (j + 0.5) / kChebN);
    p.c[k] = s * (2.0 / kChebN);
  }
  p.c[0] *= 0.5;
  // derivative series in t, then d/dx = 2/(b-a) d/dt
  p.d.fill(0.0);
  if (kChebN >= 2) {
    std::array<cplx, kChebN + 1> e{};
    for (int k = kChebN - 1; k >= 1; --k) e[k - 1] = e[k + 1] + 2.0 * k * p.c[k];
    e[0] *= 0.5;
    for (int k = 0; k < kChebN; ++k) p.d[k] = e[k] * (2.0 / (b - a));
  }
  return p;
}

double tail(const ChebPanel& p) {
  return std::max({std::abs(p.c[kChebN - 1]), std::abs(p.c[kChebN - 2]), std::abs(p.c[kChebN - 3])});
}

class TabulatedW : public KirillovFunction {
 public:
  TabulatedW(KirillovPtr W, double rel_tol) : W_(std::move(W)) {
    const double hi = std::log(W_->support_hi());
    double lo;
    if (W_->small_y_limit() > 0)
      lo = std::log(W_->small_y_limit());
    else
      lo = std::log(std::max(W_->support_lo(), 1e-8));
    lo_ = lo;
    hi_ = hi;
    for (int sg : {1, -1}) {
      auto& panels = sg > 0 ? pos_ : neg_;
      if (sg < 0 && (W_->vanishes_negative() || W_->place() == Place::Complex)) continue;
      if (!(hi > lo)) continue;
      std::function<cplx(double)> f = [&](double x) { return W_->eval(sg * std::exp(x)); };
      double scale = 0.0;
      double h = std::min(0.5, 1.0 / (1.0 + W_->log_frequency()));
      int n0 = std::max(1, static_cast<int>(std::ceil((hi - lo) / h)));
      std::vector<ChebPanel> work;
      for (int i = 0; i < n0; ++i) work.push_back(fit_panel(f, lo + (hi - lo) * i / n0, lo + (hi - lo) * (i + 1) / n0));
      for (const auto& p : work)
        for (const auto& c : p.c) scale = std::max(scale, std::abs(c));
      std::vector<ChebPanel> stack(work.rbegin(), work.rend());
      while (!stack.empty()) {
        ChebPanel p = stack.back();
        stack.pop_back();
        if (tail(p) <= rel_tol * scale || p.b - p.a < 1e-6) {
          panels.push_back(p);
          continue;
        }
        double m = 0.5 * (p.a + p.b);
        stack.push_back(fit_panel(f, m, p.b));
        stack.push_back(fit_panel(f, p.a, m));
      }
    }
  }
  Place place() const override { return W_->place(); }
  cplx eval(double y) const override { return value(y, false); }
  cplx lie_A(double y) const override { return value(y, true); }
  int angular_index() const override { return W_->angular_index(); }
  bool vanishes_negative() const override { return W_->vanishes_negative(); }
  double small_y_limit() const override { return W_->small_y_limit(); }
  std::vector<PowerFamily> small_y_families(int sign) const override { return W_->small_y_families(sign); }
  double support_lo() const override { return W_->support_lo(); }
  double support_hi() const override { return W_->support_hi(); }
  double log_frequency() const override { return W_->log_frequency(); }
  std::string branch(double y) const override {
    double x = std::log(std::abs(y));
    return (x >= lo_ && x <= hi_) ? "table" : W_->branch(y);
  }
  std::size_t panel_count() const { return pos_.size() + neg_.size(); }

 private:
  cplx value(double y, bool lie) const {
    if (y == 0.0) throw DomainError("W(0) undefined");
    if (y < 0 && (W_->vanishes_negative() || W_->place() == Place::Complex)) return lie ? W_->lie_A(y) : W_->eval(y);
    double x = std::log(std::abs(y));
    if (x > hi_) return 0.0;
    const auto& panels = y > 0 ? pos_ : neg_;
    if (x < lo_ || panels.empty()) return lie ? W_->lie_A(y) : W_->eval(y);
    auto it = std::upper_bound(panels.begin(), panels.end(), x, [](double v, const ChebPanel& p) { return v < p.b; });
    if (it == panels.end()) --it;
    double t = (2 * x - it->a - it->b) / (it->b - it->a);
    return clenshaw(lie ? it->d : it->c, t);
  }

  KirillovPtr W_;
  double lo_ = 0.0, hi_ = 0.0;
  std::vector<ChebPanel> pos_, neg_;
};

class LieAW : public KirillovFunction {
 public:
  explicit LieAW(KirillovPtr W) : W_(std::move(W)) {}
  Place place() const override { return W_->place(); }
  cplx eval(double y) const override { return W_->lie_A(y); }
  cplx lie_A(double y) const override {
    // A(A W) by a centred difference in log|y|
    const double h = 1e-4;
    return (W_->lie_A(y * std::exp(h)) - W_->lie_A(y * std::exp(-h))) / (2 * h);
  }
  int angular_index() const override { return W_->angular_index(); }
  bool vanishes_negative() const override { return W_->vanishes_negative(); }
  double small_y_limit() const override { return W_->small_y_limit(); }
  std::vector<PowerFamily> small_y_families(int sign) const override {
    auto f = W_->small_y_families(sign);
    for (auto& fam : f)
      for (std::size_t k = 0; k < fam.coef.size(); ++k) fam.coef[k] *= fam.expo0 + 2.0 * k;
    return f;
  }
  double support_lo() const override { return W_->support_lo(); }
  double support_hi() const override { return W_->support_hi(); }
  double log_frequency() const override { return W_->log_frequency(); }

 private:
  KirillovPtr W_;
};

}  // namespace

KirillovPtr tabulate_kirillov(KirillovPtr W, double rel_tol) {
  if (!W) throw DomainError("null Kirillov function");
  return std::make_shared<TabulatedW>(std::move(W), rel_tol);
}

KirillovPtr lie_A_of(KirillovPtr W) { return tabulate_kirillov(std::make_shared<LieAW>(std::move(W))); }

}  // namespace oscwhit
