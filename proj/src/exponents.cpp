#include "oscwhit/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oscwhit/calibration.hpp"
#include "oscwhit/errors.hpp"
#include "oscwhit/zeta_nonarch.hpp"

namespace oscwhit {

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + s + "'");
    return Rational(std::stoll(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw DomainError("not a rational: '" + s + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ExponentForm::ExponentForm(std::initializer_list<std::pair<const std::string, Rational>> init) {
  for (const auto& [k, v] : init) set(k, coef(k) + v);
}

Rational ExponentForm::coef(const std::string& sym) const {
  auto it = terms_.find(sym);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExponentForm::set(const std::string& sym, Rational v) {
  if (v == Rational(0))
    terms_.erase(sym);
  else
    terms_[sym] = v;
}

ExponentForm& ExponentForm::operator+=(const ExponentForm& o) {
  for (const auto& [k, v] : o.terms_) set(k, coef(k) + v);
  return *this;
}

ExponentForm& ExponentForm::operator-=(const ExponentForm& o) {
  for (const auto& [k, v] : o.terms_) set(k, coef(k) - v);
  return *this;
}

ExponentForm& ExponentForm::operator*=(const Rational& k) {
  if (k == Rational(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= k;
  return *this;
}

bool ExponentForm::equals(const ExponentForm& o) const { return without("w") == o.without("w"); }

ExponentForm ExponentForm::substitute(const std::string& sym, const ExponentForm& by) const {
  ExponentForm out = without(sym);
  return out + by * coef(sym);
}

ExponentForm ExponentForm::without(const std::string& sym) const {
  ExponentForm out = *this;
  out.terms_.erase(sym);
  return out;
}

double ExponentForm::evaluate(const std::map<std::string, double>& values) const {
  double s = 0.0;
  for (const auto& [k, v] : terms_) {
    auto it = values.find(k);
    if (it == values.end()) throw DomainError("no numeric value for symbol " + k);
    s += boost::rational_cast<double>(v) * it->second;
  }
  return s;
}

std::string ExponentForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational a = v < Rational(0) ? -v : v;
    if (first)
      os << (v < Rational(0) ? "-" : "");
    else
      os << (v < Rational(0) ? " - " : " + ");
    if (a != Rational(1)) os << to_string(a) << "*";
    os << k;
    first = false;
  }
  return os.str();
}

nlohmann::json ExponentForm::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : terms_) j[k] = to_string(v);
  return j;
}

ExponentForm pointwise_max(const ExponentForm& f, const ExponentForm& g) {
  ExponentForm out;
  for (const auto& [k, v] : f.terms()) out.set(k, std::max(v, g.coef(k)));
  for (const auto& [k, v] : g.terms()) out.set(k, std::max(v, f.coef(k)));
  return out;
}

void ConductorProfile::validate() const {
  if (theta < Rational(0) || theta >= Rational(1, 2)) throw DomainError("theta must lie in [0, 1/2)");
}

std::vector<std::string> ConductorProfile::consistency_warnings() const {
  std::vector<std::string> w;
  if (!numeric) return w;
  auto get = [&](const char* k) -> std::optional<double> {
    auto it = numeric->find(k);
    if (it == numeric->end()) return std::nullopt;
    return it->second;
  };
  auto le = [&](const char* lo, const char* hi) {
    auto l = get(lo), h = get(hi);
    if (l && h && *l > *h + 1e-12) w.push_back(std::string(lo) + " > " + hi);
  };
  le("b", "a");
  le("c", "b");
  le("d", "a");
  return w;
}

namespace {

const Rational kHalf(1, 2);

}  // namespace

double MainBound::kappa(const std::map<std::string, double>& values) const {
  auto it = values.find("x");
  if (it == values.end() || it->second == 0.0) throw DegenerateX("log C(chi) = 0");
  return kappa_x.evaluate(values) / it->second;
}

nlohmann::json MainBound::to_json() const {
  nlohmann::json j;
  j["theta"] = to_string(theta);
  j["E"] = E.to_json();
  j["kappa"] = {{"numerator", kappa_x.to_json()}, {"denominator", "x"}};
  for (const auto& t : four_terms) j["four_terms"].push_back(t.to_json());
  j["prefactor"] = prefactor.to_json();
  j["prefactor"]["w"] = "C";
  for (const auto& t : final) j["final"].push_back(t.to_json());
  return j;
}

MainBound optimize_main_bound(const ConductorProfile& profile) {
  profile.validate();
  const Rational th = profile.theta;
  MainBound mb;
  mb.theta = th;

  // period bound: max(T1, -E, T3 + E, T4)
  KappaLinear t1{ExponentForm{{"c", th}, {"a", kHalf}}, Rational(-1, 2)};
  KappaLinear t4{ExponentForm{{"a", Rational(3, 2)}, {"b", Rational(1, 8)}, {"x", Rational(-1, 4)}},
                 Rational(1, 4)};
  ExponentForm t3_noE{{"a", Rational(3, 2)}, {"b", Rational(1, 8)}, {"d", Rational(1, 4)},
                      {"x", -(1 - 2 * th) / 4}};

  // -E = T3 + E
  mb.E = t3_noE * Rational(-1, 2);
  // T1 = T4 solved for kappa x
  mb.kappa_x = (t4.base - t1.base) * (1 / (t1.kx - t4.kx));

  mb.four_terms_kappa = {t1, KappaLinear{mb.E * Rational(-1), 0}, KappaLinear{t3_noE + mb.E, 0}, t4};
  for (const auto& t : mb.four_terms_kappa) mb.four_terms.push_back(t.at(mb.kappa_x));

  mb.prefactor = ExponentForm{{"x", kHalf}, {"w", 1}};
  // T2 = T3 and T1 = T4 by construction
  mb.final = {mb.four_terms[1], mb.four_terms[0]};
  return mb;
}

ExponentForm simplified_bound(const Rational& theta) {
  ConductorProfile prof{theta, std::nullopt};
  auto mb = optimize_main_bound(prof);
  ExponentForm out;
  for (auto t : mb.final) {
    t = t.substitute("c", ExponentForm{{"b", 1}}).substitute("d", ExponentForm{{"a", 1}});
    out = out.terms().empty() ? t : pointwise_max(out, t);
  }
  return out + ExponentForm{{"x", kHalf}};
}

HypotheticalBound hypothetical_improved_bound(const Rational& theta) {
  ConductorProfile{theta, std::nullopt}.validate();
  HypotheticalBound h;
  h.final = {ExponentForm{{"a", Rational(1, 4)}, {"d", Rational(1, 8)}, {"x", -(1 - 2 * theta) / 8}},
             ExponentForm{{"a", Rational(3, 4)}, {"c", theta / 3}, {"x", Rational(-1, 6)}}};
  ExponentForm s;
  for (auto t : h.final) {
    t = t.substitute("c", ExponentForm{{"b", 1}}).substitute("d", ExponentForm{{"a", 1}});
    s = s.terms().empty() ? t : pointwise_max(s, t);
  }
  h.simplified = s + ExponentForm{{"x", kHalf}};
  return h;
}

TruncationParams truncation_params(double C_chi, const Rational& kappa) {
  if (kappa <= Rational(0) || kappa >= Rational(1)) throw KappaRange("kappa must lie in (0, 1)");
  if (!(C_chi >= 1.0)) throw DomainError("C(chi) must be >= 1");
  const double k = boost::rational_cast<double>(kappa);
  return {std::pow(C_chi, -k - 1.0), std::pow(C_chi, k - 1.0)};
}

AmplifierSet amplifier_set(double E, const std::vector<long>& excluded) {
  if (!(E >= 2.0)) throw DomainError("E must be >= 2");
  if (E > 1e9) throw DomainError("E too large for the sieve");
  AmplifierSet s;
  s.E = E;
  const long lo = static_cast<long>(std::ceil(E));
  const long hi = static_cast<long>(std::floor(2.0 * E));
  for (long p : primes_up_to(hi)) {
    if (p < lo) continue;
    if (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) continue;
    s.primes.push_back(p);
  }
  if (E >= 100.0) {
    s.pnt_lower = calib("expo.amplifier.c") * E / std::log(E);
    s.pnt_ok = static_cast<double>(s.primes.size()) >= s.pnt_lower;
  }
  return s;
}

}  // namespace oscwhit
