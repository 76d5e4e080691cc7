#include "oscwhit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>

#include "oscwhit/errors.hpp"

namespace oscwhit {

namespace {

// QUADPACK qk15 nodes and weights
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double& last_resabs() {
  thread_local double v = 0.0;
  return v;
}

struct Panel {
  double a, b;
  cplx val;
  double err;
  double resabs;
  bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace

QuadResult gk15(const CFun& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx fc = f(c);
  cplx resk = fc * wgk[7];
  cplx resg = fc * wg[3];
  double resabs = std::abs(fc) * wgk[7];
  for (int j = 0; j < 7; ++j) {
    double dx = h * xgk[j];
    cplx f1 = f(c - dx), f2 = f(c + dx);
    resk += (f1 + f2) * wgk[j];
    resabs += (std::abs(f1) + std::abs(f2)) * wgk[j];
    if (j % 2 == 1) resg += (f1 + f2) * wg[j / 2];
  }
  QuadResult r;
  r.value = resk * h;
  r.err_est = std::abs((resk - resg) * h);
  r.panels = 1;
  last_resabs() = resabs * std::abs(h);
  return r;
}

QuadResult integrate_panels(const CFun& f, const std::vector<double>& pts,
                            const QuadOptions& opt) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::priority_queue<Panel> q;
  std::vector<Panel> done;
  cplx total = 0.0;
  double err = 0.0, done_err = 0.0;
  auto push = [&](double a, double b, const QuadResult& r) {
    Panel p{a, b, r.value, r.err_est, last_resabs()};
    // panels whose error is at the rounding level are final
    if (p.err <= 50 * eps * opt.noise_scale * p.resabs || (b - a) < 64 * eps * std::max(std::abs(a), std::abs(b)) ||
        (b - a) < 1e-250) {
      done.push_back(p);
      done_err += p.err;
    } else {
      q.push(p);
    }
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i + 1] > pts[i])) continue;
    auto r = gk15(f, pts[i], pts[i + 1]);
    total += r.value;
    err += r.err_est;
    push(pts[i], pts[i + 1], r);
  }
  int npan = static_cast<int>(q.size() + done.size());
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
  bool ok = true;
  // only the panels still queued can be improved
  while (!q.empty() && err - done_err > target()) {
    if (npan >= opt.max_panels) {
      ok = false;
      break;
    }
    Panel p = q.top();
    q.pop();
    double m = 0.5 * (p.a + p.b);
    auto l = gk15(f, p.a, m);
    push(p.a, m, l);
    auto r = gk15(f, m, p.b);
    push(m, p.b, r);
    total += l.value + r.value - p.val;
    err += l.err_est + r.err_est - p.err;
    ++npan;
  }
  // sum in panel order so results do not depend on the queue history
  while (!q.empty()) {
    done.push_back(q.top());
    q.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  QuadResult res;
  res.value = 0.0;
  res.err_est = 0.0;
  double floor = 0.0;
  for (auto& d : done) {
    res.value += d.val;
    res.err_est += d.err;
    floor += 50 * eps * opt.noise_scale * d.resabs;
  }
  res.panels = npan;
  double tgt = std::max(opt.abs_tol, opt.rel_tol * std::abs(res.value));
  res.converged = ok && res.err_est <= 2 * std::max(tgt, floor);
  if (!res.converged && opt.throw_on_fail)
    {
    char buf[160];
    std::snprintf(buf, sizeof buf, "adaptive quadrature: err %.3g (target %.3g) after %d panels", res.err_est,
                  std::max(tgt, floor), npan);
    throw NotConverged(buf);
  }
  return res;
}

QuadResult integrate(const CFun& f, double a, double b, const QuadOptions& opt) {
  if (a == b) return {};
  if (a > b) {
    auto r = integrate(f, b, a, opt);
    r.value = -r.value;
    return r;
  }
  bool ia = std::isinf(a), ib = std::isinf(b);
  if (!ia && !ib) return integrate_panels(f, {a, b}, opt);
  if (ia && ib) {
    CFun g = [&](double t) {
      double d = 1.0 - t * t;
      if (d <= 0) return cplx(0.0);
      double x = t / d;
      return f(x) * ((1.0 + t * t) / (d * d));
    };
    return integrate_panels(g, {-1.0, -0.5, 0.0, 0.5, 1.0}, opt);
  }
  if (ib) {
    CFun g = [&](double t) {
      if (t >= 1.0) return cplx(0.0);
      double x = a + t / (1.0 - t);
      return f(x) / ((1.0 - t) * (1.0 - t));
    };
    return integrate_panels(g, {0.0, 0.5, 1.0}, opt);
  }
  CFun g = [&](double t) {
    if (t >= 1.0) return cplx(0.0);
    double x = b - t / (1.0 - t);
    return f(x) / ((1.0 - t) * (1.0 - t));
  };
  return integrate_panels(g, {0.0, 0.5, 1.0}, opt);
}

QuadResult integrate_oscillatory(const CFun& f, double a, double b, double frequency,
                                 const QuadOptions& opt) {
  if (!(frequency > 0)) throw DomainError("integrate_oscillatory: frequency must be positive");
  return integrate_phased(f, a, b, [frequency](double) { return frequency; }, opt);
}

std::vector<double> phase_breakpoints(double a, double b,
                                      const std::function<double(double)>& omega,
                                      std::size_t max_points) {
  std::vector<double> pts{a};
  double x = a;
  while (x < b) {
    double w = std::max(omega(x), 1e-300);
    double h = M_PI / w;
    for (int it = 0; it < 2 && x + h < b; ++it) {
      double w2 = omega(x + h);
      if (w2 > w) {
        w = w2;
        h = M_PI / w;
      }
    }
    x = std::min(b, x + h);
    pts.push_back(x);
    if (pts.size() > max_points) throw NotConverged("phase_breakpoints: too many panels");
  }
  return pts;
}

QuadResult integrate_phased(const CFun& f, double a, double b,
                            const std::function<double(double)>& omega,
                            const QuadOptions& opt) {
  if (a == b) return {};
  auto pts = phase_breakpoints(a, b, omega);
  QuadOptions o = opt;
  o.max_panels = std::max<int>(opt.max_panels, static_cast<int>(4 * pts.size()));
  return integrate_panels(f, pts, o);
}

QuadResult integrate_2d(const CFun2& f, double ax, double bx, double ay, double by,
                        double inner_frequency, const QuadOptions& opt) {
  QuadOptions inner = opt;
  inner.abs_tol = opt.abs_tol / std::max(1.0, 4.0 * (bx - ax));
  int inner_panels = 0;
  CFun g = [&](double x) {
    CFun h = [&](double y) { return f(x, y); };
    QuadResult r = inner_frequency > 0
                       ? integrate_oscillatory(h, ay, by, inner_frequency, inner)
                       : integrate_panels(h, {ay, by}, inner);
    inner_panels += r.panels;
    return r.value;
  };
  auto r = integrate_panels(g, {ax, bx}, opt);
  r.panels += inner_panels;
  return r;
}

QuadResult integrate(const IntegrationSpec& spec) {
  if (!(spec.target_abs_tol > 0)) throw DomainError("target_abs_tol must be positive");
  if (!(spec.hi > spec.lo)) throw DomainError("empty integration domain");
  QuadOptions o;
  o.abs_tol = spec.target_abs_tol;
  o.rel_tol = 0.0;
  auto run = [&](const CFun& g, double a, double b) {
    return spec.oscillation_hint > 0 ? integrate_oscillatory(g, a, b, spec.oscillation_hint, o)
                                     : integrate_panels(g, {a, b}, o);
  };
  switch (spec.measure) {
    case Measure::Lebesgue:
      if (std::isinf(spec.lo) || std::isinf(spec.hi)) return integrate(spec.integrand, spec.lo, spec.hi, o);
      return run(spec.integrand, spec.lo, spec.hi);
    case Measure::MultiplicativeR: {
      if (!(spec.lo > 0)) throw DomainError("multiplicative measure needs 0 < lo");
      const auto& f = spec.integrand;
      CFun g = [&](double t) {
        double y = std::exp(t);
        return f(y) + f(-y);
      };
      return run(g, std::log(spec.lo), std::log(spec.hi));
    }
    case Measure::MultiplicativeC: {
      if (!(spec.lo > 0)) throw DomainError("multiplicative measure needs 0 < lo");
      const auto& f = spec.integrand2;
      auto r = integrate_2d([&](double t, double al) { return f(std::exp(t), al) * (1.0 / M_PI); },
                            std::log(spec.lo), std::log(spec.hi), 0.0, 2 * M_PI, 0.0, o);
      return r;
    }
  }
  return {};
}

}  // namespace oscwhit
