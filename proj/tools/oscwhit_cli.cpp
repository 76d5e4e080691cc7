// oscwhit: sweeps, scaling reports, calibration and the acceptance run.
//
// Exit status: 0 all checks pass, 2 some bound or check is violated,
// 1 usage or domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oscwhit/asymptotics.hpp"
#include "oscwhit/calibration.hpp"
#include "oscwhit/errors.hpp"
#include "oscwhit/exponents.hpp"
#include "oscwhit/verify.hpp"
#include "oscwhit/whittaker_arch.hpp"
#include "oscwhit/zeta_arch.hpp"
#include "oscwhit/zeta_nonarch.hpp"

using namespace oscwhit;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
const char* kSchema = "oscwhit/1";

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "lo:hi:n" log-spaced, or a comma-separated list
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  try {
    if (spec.find(':') != std::string::npos) {
      std::vector<std::string> parts;
      std::stringstream ss(spec);
      for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
      if (parts.size() != 3) throw UsageError("grid '" + spec + "' is not lo:hi:n");
      double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
      int n = std::stoi(parts[2]);
      if (!(lo > 0 && hi >= lo && n >= 1)) throw UsageError("grid '" + spec + "' needs 0 < lo <= hi, n >= 1");
      return logspace(lo, hi, n);
    }
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(std::stod(p));
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse grid '" + spec + "'");
  }
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

struct Output {
  std::string path;
  std::ostringstream buf;
  void flush() {
    if (path.empty() || path == "-") {
      std::cout << buf.str();
      return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << buf.str();
  }
};

// ---------------------------------------------------------------- reps

struct RepArgs {
  std::string place = "real";
  std::string kind = "principal";
  double tau = 0.0;
  int parity = 0, p = 1, n1 = 0, n2 = 0;

  void attach(CLI::App* c) {
    c->add_option("--place", place, "real | complex")->check(CLI::IsMember({"real", "complex"}));
    c->add_option("--kind", kind, "principal | discrete")->check(CLI::IsMember({"principal", "discrete"}));
    c->add_option("--tau", tau, "spectral parameter");
    c->add_option("--parity", parity, "real principal parity 0 | 1");
    c->add_option("--p", p, "discrete series weight parameter");
    c->add_option("--n1", n1, "complex place exponent n1");
    c->add_option("--n2", n2, "complex place exponent n2");
  }
  ArchRepParam make() const {
    if (place == "complex") return ArchRepParam::complex_principal(tau, n1, n2);
    if (kind == "discrete") return ArchRepParam::real_discrete(p);
    return ArchRepParam::real_principal(tau, parity);
  }
};

// ---------------------------------------------------------------- whittaker

int cmd_whittaker(const RepArgs& ra, const std::string& ygrid, bool peak, bool norm, bool as_json, Output& out) {
  const ArchRepParam rep = ra.make();
  auto W = make_kirillov(rep);
  if (peak || norm) {
    json j{{"schema", kSchema}, {"rep", rep.describe()}};
    if (peak) {
      Peak pk = kirillov_peak(rep);
      j["peak"] = {{"y0", pk.y0}, {"value", pk.value}, {"derivative_value", pk.derivative_value}};
    }
    if (norm) j["norm_sq"] = kirillov_norm_sq(*W);
    out.buf << j.dump(2) << "\n";
    return 0;
  }
  const auto ys = parse_grid(ygrid);
  if (as_json) {
    json j{{"schema", kSchema}, {"values", json::array()}};
    for (double y : ys) {
      cplx v = W->eval(y);
      j["values"].push_back(
          {{"rep", rep.describe()}, {"y", y}, {"value_re", v.real()}, {"value_im", v.imag()}, {"branch", W->branch(y)}});
    }
    out.buf << j.dump(2) << "\n";
    return 0;
  }
  out.buf << "rep,y,value_re,value_im,branch\n";
  for (double y : ys) {
    cplx v = W->eval(y);
    out.buf << '"' << rep.describe() << "\"," << num(y) << ',' << num(v.real()) << ',' << num(v.imag()) << ','
            << W->branch(y) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- zeta-arch

LowerCase lower_case(const std::string& s) {
  if (s == "realA") return LowerCase::RealA;
  if (s == "realB") return LowerCase::RealB;
  if (s == "discrete") return LowerCase::RealDiscrete;
  if (s == "cpA") return LowerCase::ComplexA;
  if (s == "cpA_arith") return LowerCase::ComplexAArith;
  if (s == "cpB") return LowerCase::ComplexB;
  throw UsageError("unknown lower-bound case " + s);
}

UpperCase upper_case(const std::string& s) {
  if (s == "realA") return UpperCase::RealA;
  if (s == "realB") return UpperCase::RealB;
  if (s == "cpA") return UpperCase::ComplexA;
  if (s == "cpA_arith") return UpperCase::ComplexAArith;
  if (s == "cpB") return UpperCase::ComplexB;
  throw UsageError("unknown upper-bound case " + s);
}

int emit_report(const BoundReport& b, bool as_json, Output& out) {
  if (as_json) {
    json j = b.to_json();
    j["schema"] = kSchema;
    out.buf << j.dump(2) << "\n";
  } else {
    out.buf << "aspect,parameter,measured,predicted_exponent,fitted_slope,pass\n";
    for (const auto& p : b.points)
      out.buf << b.aspect << ',' << num(p.parameter) << ',' << num(p.measured) << ',' << num(b.expected_slope) << ','
              << num(b.fit.slope) << ',' << (b.pass() ? "true" : "false") << '\n';
  }
  return b.pass() ? 0 : kExitViolation;
}

int cmd_zeta_value(const RepArgs& ra, const std::string& option, double mu, int m, double sre, double sim, double T,
                   Output& out) {
  const ArchRepParam rep = ra.make();
  const TestOption opt = option == "A" ? TestOption::A : TestOption::B;
  ArchCharacter chi = rep.place == Place::Complex ? ArchCharacter::complex(mu, m) : ArchCharacter::real(mu, m);
  TestVector tv = choose_test_vector(rep, chi, opt);
  const cplx Tuse = std::isnan(T) ? tv.T : cplx(T);
  auto W = test_function(rep, opt);
  ZetaValue z = local_zeta(cplx(sre, sim), *W, chi, Tuse);
  json j{{"schema", kSchema},
         {"rep", rep.describe()},
         {"test_vector", tv.to_json()},
         {"T_re", Tuse.real()},
         {"T_im", Tuse.imag()},
         {"value_re", z.value.real()},
         {"value_im", z.value.imag()},
         {"abs_value", std::abs(z.value)},
         {"err_est", z.err_est}};
  out.buf << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- zeta-nonarch

int cmd_gauss(long pmax, int rmax, double tau, int d, Output& out) {
  if (pmax < 2 || rmax < 1) throw UsageError("need --p-max >= 2 and --r-max >= 1");
  bool ok = true;
  out.buf << "p,r,chi_index,abs_value,target,ratio\n";
  for (long p : primes_up_to(pmax))
    for (int r = 1; r <= rmax; ++r) {
      auto chars = enumerate_characters(p, r);
      auto all = gauss_zeta_all(NonArchRep::unramified(tau), p, r, d);
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& g = all[i];
        if (!(g.ratio >= 1 - 1e-10)) ok = false;
        out.buf << p << ',' << r << ',' << chars[i].index << ',' << num(g.abs_value) << ',' << num(g.target) << ','
                << num(g.ratio) << '\n';
      }
    }
  return ok ? 0 : kExitViolation;
}

int cmd_twisted(long qmax, int nmax, int lmax, const std::vector<double>& taus, Output& out) {
  bool ok = true;
  out.buf << "q,tau,n,l,abs_value,bound,holds\n";
  for (long q : primes_up_to(qmax))
    for (double tau : taus)
      for (int n = 0; n <= nmax; ++n)
        for (int l = 0; l <= lmax; ++l) {
          auto z = zeta_twisted(1.0, NonArchRep::unramified(tau), double(q), n, l);
          ok = ok && z.holds;
          out.buf << q << ',' << num(tau) << ',' << n << ',' << l << ',' << num(std::abs(z.value)) << ','
                  << num(z.bound_rhs) << ',' << (z.holds ? "true" : "false") << '\n';
        }
  return ok ? 0 : kExitViolation;
}

int cmd_orthonormal(long qmax, int nmax, const std::vector<double>& taus, Output& out) {
  double worst = 0.0;
  out.buf << "q,tau,n,m,inner_re,inner_im\n";
  for (long q : primes_up_to(qmax))
    for (double tau : taus)
      for (int n = 0; n <= nmax; ++n)
        for (int m = 0; m <= nmax; ++m) {
          cplx ip = classical_inner(NonArchRep::unramified(tau), double(q), n, m);
          worst = std::max(worst, std::abs(ip - (n == m ? 1.0 : 0.0)));
          out.buf << q << ',' << num(tau) << ',' << n << ',' << m << ',' << num(ip.real()) << ',' << num(ip.imag())
                  << '\n';
        }
  return worst <= 1e-10 ? 0 : kExitViolation;
}

// ---------------------------------------------------------------- expand

struct ExpandArgs {
  std::string phase = "exp-model";
  std::string amp = "bump";
  std::string grid = "1e2:1e4:8";
  int N = 3;
  double lam_re = 0.5, lam_im = 0.0;
  int m = 0;
  double r0 = 0.4;
  double eps0 = 0.0;
  double delta = 0.0;
};

std::string underscore(std::string s) {
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
}

int cmd_expand(const std::string& which, const ExpandArgs& a, Output& out) {
  const auto grid = parse_grid(a.grid);
  bool ok = true;
  out.buf << (which == "erdelyi" || which == "statphase" ? "mu" : "x")
          << ",expansion_re,expansion_im,oracle_re,oracle_im,remainder_bound,holds\n";
  auto row = [&](double v, const AsymptoticResult& r, cplx o) {
    const cplx s = r.sum();
    const bool h = std::abs(o - s) <= r.remainder_bound;
    ok = ok && h;
    out.buf << num(v) << ',' << num(s.real()) << ',' << num(s.imag()) << ',' << num(o.real()) << ',' << num(o.imag())
            << ',' << num(r.remainder_bound) << ',' << (h ? "true" : "false") << '\n';
  };
  if (which == "erdelyi") {
    Phase1D ph = phase::from_name(underscore(a.phase));
    SmoothAmplitude1D am;
    if (a.amp == "bump")
      am = amp::bump(-1, 1);
    else if (a.amp == "gaussian-bump")
      am = amp::gaussian_bump(1.0, -6, 6);
    else
      throw UsageError("unknown amplitude " + a.amp + " (bump | gaussian-bump)");
    for (double mu : grid) row(mu, erdelyi_expansion(ph, am, mu, a.N), erdelyi_oracle(ph, am, mu).value);
  } else if (which == "fourier") {
    auto am = amp::half_bump(1.0);
    const cplx lam(a.lam_re, a.lam_im);
    for (double x : grid)
      row(x, fourier_endpoint_expansion(am, lam, x, a.N, a.delta), fourier_endpoint_oracle(am, lam, x).value);
  } else if (which == "bessel") {
    std::vector<double> poly = {1.0, 0.5, -0.3};
    poly.resize(std::max(1, a.N));
    auto am = amp::plateau(a.r0, 1.0, poly);
    for (double x : grid)
      row(x, bessel_endpoint_expansion(am, a.lam_re, a.m, x, a.N, a.r0),
          bessel_endpoint_oracle(am, a.lam_re, a.m, x).value);
  } else if (which == "statphase") {
    auto ph = phase_nd::polar_model(a.eps0);
    auto rad = amp::bump(-1, 1);
    AmplitudeND am{[rad](const std::vector<double>& v) { return rad.eval(v[0]); }, {{-1, 1}}};
    auto orc = polar_model_oracle(rad, a.eps0);
    for (double mu : grid) {
      auto r = stationary_phase_nd(ph, am, mu, orc);
      row(r.mu, r, orc(r.mu));
    }
  } else {
    throw UsageError("unknown expansion " + which);
  }
  return ok ? 0 : kExitViolation;
}

// ---------------------------------------------------------------- exponents

json forms(const std::vector<ExponentForm>& v) {
  json j = json::array();
  for (const auto& f : v) j.push_back(f.to_json());
  return j;
}

int cmd_optimize(const std::string& theta_s, Output& out) {
  const Rational th = parse_rational(theta_s);
  MainBound mb = optimize_main_bound(ConductorProfile{th, std::nullopt});
  ExponentForm s = simplified_bound(th);
  HypotheticalBound h = hypothetical_improved_bound(th);
  json j{{"schema", kSchema}, {"theta", to_string(th)}};
  j["main_bound"] = mb.to_json();
  j["simplified"] = s.to_json();
  j["hypothetical"] = {{"final", forms(h.final)}, {"simplified", h.simplified.to_json()}};
  const bool sub = s.coef("x") < Rational(1, 2);
  j["subconvex"] = sub;
  out.buf << j.dump(2) << "\n";
  return sub ? 0 : kExitViolation;
}

int cmd_primes(double E, const std::vector<long>& excluded, Output& out) {
  AmplifierSet s = amplifier_set(E, excluded);
  json j{{"schema", kSchema}, {"E", E}, {"primes", s.primes}, {"count", s.primes.size()}};
  if (E >= 100) {
    j["pnt_lower"] = s.pnt_lower;
    j["pnt_ok"] = s.pnt_ok;
  }
  out.buf << j.dump(2) << "\n";
  return s.pnt_ok ? 0 : kExitViolation;
}

int cmd_truncation(double C, const std::string& kappa, Output& out) {
  TruncationParams t = truncation_params(C, parse_rational(kappa));
  json j{{"schema", kSchema}, {"C", C}, {"kappa", kappa}, {"A", t.A}, {"B", t.B}};
  out.buf << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- calibrate

int cmd_calibrate(const std::string& only, bool write, const std::string& dest, Output& out) {
  const Calibration& cur = Calibration::global();
  const auto measured = measure_constants(only);
  if (measured.empty()) throw UsageError("no calibration key matches '" + only + "'");
  Calibration next = cur;
  bool moved = false;
  json j{{"schema", kSchema}, {"file", Calibration::default_path()}, {"constants", json::array()}};
  for (const auto& [k, v] : measured) {
    json e{{"key", k}, {"measured", v}};
    if (cur.has(k)) {
      const double old = cur.get(k);
      const double rel = std::abs(v - old) / std::abs(old);
      e["current"] = old;
      e["relative_change"] = rel;
      e["moved"] = rel > 0.2;
      moved = moved || rel > 0.2;
    }
    next.set(k, v);
    j["constants"].push_back(e);
  }
  j["written"] = write && !moved;
  if (write && !moved) next.save(dest.empty() ? Calibration::default_path() : dest);
  out.buf << j.dump(2) << "\n";
  if (moved) std::cerr << "calibrate: a constant moved by more than 20%; file left unchanged\n";
  return moved ? kExitViolation : 0;
}

// ---------------------------------------------------------------- verify-all

int cmd_verify_all(const std::string& config_path, bool quick_flag, Output& out) {
  if (config_path.empty()) throw UsageError("verify-all needs --config <file.json>");
  std::ifstream f(config_path);
  if (!f) throw UsageError("cannot read " + config_path);
  json cfg;
  try {
    cfg = json::parse(f);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config is not JSON: ") + e.what());
  }
  if (!cfg.is_object() || !cfg.contains("criteria") || !cfg["criteria"].is_array() || cfg["criteria"].empty())
    throw UsageError("config needs a nonempty \"criteria\" array");
  VerifyOptions opt;
  opt.quick = quick_flag || cfg.value("quick", false);
  std::vector<int> ids;
  for (const auto& c : cfg["criteria"]) {
    if (!c.is_number_integer() || c.get<int>() < 1 || c.get<int>() > kCriterionCount)
      throw UsageError("criterion ids must be integers in 1.." + std::to_string(kCriterionCount));
    ids.push_back(c.get<int>());
  }
  json j{{"schema", kSchema}, {"quick", opt.quick}, {"criteria", json::array()}};
  bool all = true;
  for (int id : ids) {
    CriterionResult r = run_criterion(id, opt);
    std::cerr << r.summary_line() << "\n";
    for (const auto& c : r.checks)
      if (!c.pass) std::cerr << "      " << c.label << ": " << c.detail << "\n";
    all = all && r.pass;
    j["criteria"].push_back(r.to_json());
  }
  j["pass"] = all;
  out.buf << j.dump(2) << "\n";
  return all ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oscwhit: oscillatory integrals, Whittaker functions and local zeta integrals"};
  app.require_subcommand(1);
  Output out;
  app.add_option("-o,--output", out.path, "output file (default stdout)");

  // whittaker
  RepArgs w_rep;
  std::string w_y = "0.01:10:10";
  bool w_peak = false, w_norm = false, w_json = false;
  auto* w = app.add_subcommand("whittaker", "Kirillov values W(y) of a unit archimedean vector");
  w_rep.attach(w);
  w->add_option("--y", w_y, "grid lo:hi:n or list");
  w->add_flag("--peak", w_peak, "report y0, |W(y0)|, |A W(y0)|");
  w->add_flag("--norm", w_norm, "report int |W|^2 d^x y");
  w->add_flag("--json", w_json, "JSON instead of CSV");

  // zeta-arch
  auto* za = app.add_subcommand("zeta-arch", "archimedean local zeta integrals");
  za->require_subcommand(1);
  RepArgs zl_rep, zu_rep, zv_rep;
  std::string zl_case = "realA", zl_grid = "1e2:1e4:8", zl_aspect = "mu";
  double zl_fixed = 0.0;
  bool zl_json = false;
  auto* zl = za->add_subcommand("lower", "lower-bound sweep at the chosen test vector");
  zl_rep.attach(zl);
  zl->add_option("--case", zl_case, "realA | realB | discrete | cpA | cpA_arith | cpB");
  zl->add_option("--sweep", zl_grid, "swept parameter grid");
  zl->add_option("--aspect", zl_aspect, "mu | m | p | tau");
  zl->add_option("--fixed", zl_fixed, "value of the other character parameter");
  zl->add_flag("--json", zl_json);
  std::string zu_case = "realA", zu_grid = "1e2:1e4:8";
  double zu_sigma = 0.51, zu_t = 10.0, zu_fixed = 0.0;
  bool zu_json = false;
  auto* zu = za->add_subcommand("upper", "upper-bound sweep on a shifted line");
  zu_rep.attach(zu);
  zu->add_option("--case", zu_case, "realA | realB | cpA | cpA_arith | cpB");
  zu->add_option("--sweep", zu_grid, "mu grid (m grid for cpA_arith)");
  zu->add_option("--sigma", zu_sigma, "Re s' of the shifted line");
  zu->add_option("--t", zu_t, "Im s'");
  zu->add_option("--fixed", zu_fixed, "value of the other character parameter");
  zu->add_flag("--json", zu_json);
  std::string zv_opt = "B";
  double zv_mu = 100.0, zv_sre = 0.5, zv_sim = 0.0, zv_T = NAN;
  int zv_m = 0;
  auto* zv = za->add_subcommand("value", "one local zeta integral");
  zv_rep.attach(zv);
  zv->add_option("--option", zv_opt, "A (bump) | B (minimal vector)")->check(CLI::IsMember({"A", "B"}));
  zv->add_option("--mu", zv_mu);
  zv->add_option("--m", zv_m);
  zv->add_option("--s-re", zv_sre);
  zv->add_option("--s-im", zv_sim);
  zv->add_option("--T", zv_T, "override the chosen T");

  // zeta-nonarch
  auto* zn = app.add_subcommand("zeta-nonarch", "p-adic local computations");
  zn->require_subcommand(1);
  long g_pmax = 50;
  int g_rmax = 3, g_d = 0;
  double g_tau = 0.0;
  auto* zg = zn->add_subcommand("gauss", "Gauss-sum test vectors, all primitive characters");
  zg->add_option("--p-max", g_pmax);
  zg->add_option("--r-max", g_rmax);
  zg->add_option("--tau", g_tau);
  zg->add_option("--d", g_d, "conductor exponent of the additive character");
  long t_qmax = 97;
  int t_nmax = 10, t_lmax = 10;
  std::string t_taus = "0,0.5,2";
  auto* zt = zn->add_subcommand("twisted", "twisted zeta sums of e_n against the bound");
  zt->add_option("--q-max", t_qmax);
  zt->add_option("--n-max", t_nmax);
  zt->add_option("--l-max", t_lmax);
  zt->add_option("--tau", t_taus, "list of tau");
  long o_qmax = 97;
  int o_nmax = 5;
  std::string o_taus = "0,0.5,2";
  auto* zo = zn->add_subcommand("orthonormal", "Gram matrix of e_0..e_n");
  zo->add_option("--q-max", o_qmax);
  zo->add_option("--n-max", o_nmax);
  zo->add_option("--tau", o_taus, "list of tau");

  // expand
  auto* ex = app.add_subcommand("expand", "asymptotic expansions against their oracles");
  ExpandArgs ea;
  std::string ex_which;
  ex->add_option("kind", ex_which, "erdelyi | fourier | bessel | statphase")
      ->required()
      ->check(CLI::IsMember({"erdelyi", "fourier", "bessel", "statphase"}));
  ex->add_option("--phase", ea.phase, "exp-model | quadratic | cubic | quadratic-cubic");
  ex->add_option("--amp", ea.amp, "bump | gaussian-bump");
  ex->add_option("--mu,--x", ea.grid, "grid lo:hi:n or list");
  ex->add_option("--N", ea.N, "truncation order");
  ex->add_option("--lambda", ea.lam_re, "Re lambda (fourier), lambda (bessel)");
  ex->add_option("--lambda-im", ea.lam_im, "Im lambda (fourier)");
  ex->add_option("--m", ea.m, "Bessel order");
  ex->add_option("--r0", ea.r0, "plateau radius (bessel)");
  ex->add_option("--eps0", ea.eps0, "polar model parameter (statphase)");
  ex->add_option("--delta", ea.delta, "refined endpoint bound (fourier)");

  // exponents
  auto* xp = app.add_subcommand("exponents", "exact exponent bookkeeping");
  xp->require_subcommand(1);
  std::string x_theta = "7/64";
  auto* xo = xp->add_subcommand("optimize", "optimized main bound, simplified and hypothetical forms");
  xo->add_option("--theta", x_theta, "exponent toward Ramanujan, e.g. 7/64");
  double x_E = 1000;
  std::vector<long> x_excl;
  auto* xpr = xp->add_subcommand("primes", "amplifier primes in [E, 2E]");
  xpr->add_option("--E", x_E)->required();
  xpr->add_option("--exclude", x_excl, "primes to leave out");
  double x_C = 1e6;
  std::string x_kappa = "1/3";
  auto* xt = xp->add_subcommand("truncation", "truncation parameters A, B");
  xt->add_option("--C", x_C, "C(chi)");
  xt->add_option("--kappa", x_kappa);

  // calibrate
  std::string c_only, c_dest;
  bool c_write = false;
  auto* ca = app.add_subcommand("calibrate", "re-measure the implied constants");
  ca->add_option("--only", c_only, "key prefix, e.g. zarch.upper.");
  ca->add_flag("--write", c_write, "write the file if no constant moved by more than 20%");
  ca->add_option("--dest", c_dest, "file to write (default: the active calibration file)");

  // verify-all
  std::string v_config;
  bool v_quick = false;
  auto* va = app.add_subcommand("verify-all", "run the acceptance criteria listed in a JSON config");
  va->add_option("--config", v_config, "JSON: {\"criteria\": [1, ...], \"quick\": false}");
  va->add_flag("--quick", v_quick, "smaller grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    int rc = 0;
    if (w->parsed()) {
      rc = cmd_whittaker(w_rep, w_y, w_peak, w_norm, w_json, out);
    } else if (zl->parsed()) {
      rc = emit_report(verify_lower_bound(zl_rep.make(), lower_case(zl_case), parse_grid(zl_grid), zl_aspect, zl_fixed),
                       zl_json, out);
    } else if (zu->parsed()) {
      rc = emit_report(
          verify_upper_bound(zu_rep.make(), upper_case(zu_case), zu_sigma, zu_t, parse_grid(zu_grid), zu_fixed),
          zu_json, out);
    } else if (zv->parsed()) {
      rc = cmd_zeta_value(zv_rep, zv_opt, zv_mu, zv_m, zv_sre, zv_sim, zv_T, out);
    } else if (zg->parsed()) {
      rc = cmd_gauss(g_pmax, g_rmax, g_tau, g_d, out);
    } else if (zt->parsed()) {
      rc = cmd_twisted(t_qmax, t_nmax, t_lmax, parse_grid(t_taus), out);
    } else if (zo->parsed()) {
      rc = cmd_orthonormal(o_qmax, o_nmax, parse_grid(o_taus), out);
    } else if (ex->parsed()) {
      rc = cmd_expand(ex_which, ea, out);
    } else if (xo->parsed()) {
      rc = cmd_optimize(x_theta, out);
    } else if (xpr->parsed()) {
      rc = cmd_primes(x_E, x_excl, out);
    } else if (xt->parsed()) {
      rc = cmd_truncation(x_C, x_kappa, out);
    } else if (ca->parsed()) {
      rc = cmd_calibrate(c_only, c_write, c_dest, out);
    } else if (va->parsed()) {
      rc = cmd_verify_all(v_config, v_quick, out);
    }
    out.flush();
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "oscwhit: " << e.what() << "\n";
    return kExitUsage;
  }
}
