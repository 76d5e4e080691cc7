#pragma once

// Log-scale exponent bookkeeping for the conductor bounds, in exact
// rationals.  A form sum_s coef_s * s stands for prod C_s^{coef_s}.
//
// Symbols:
//   a  log C(pi_fin)          b  log C(pi_fin)^flat
//   c  log C_fin(pi, chi)     d  log C_fin[pi, chi]
//   x  log C(chi)             w  log C(pi_inf)  (coefficient indeterminate)

#include <boost/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace oscwhit {

using Rational = boost::rational<long long>;

Rational parse_rational(const std::string& s);  // "7/64", "0", "-3"
std::string to_string(const Rational& r);

class ExponentForm {
 public:
  ExponentForm() = default;
  ExponentForm(std::initializer_list<std::pair<const std::string, Rational>> init);

  Rational coef(const std::string& sym) const;
  void set(const std::string& sym, Rational v);
  // zero coefficients are dropped
  const std::map<std::string, Rational>& terms() const { return terms_; }

  ExponentForm& operator+=(const ExponentForm& o);
  ExponentForm& operator-=(const ExponentForm& o);
  ExponentForm& operator*=(const Rational& k);
  friend ExponentForm operator+(ExponentForm a, const ExponentForm& b) { return a += b; }
  friend ExponentForm operator-(ExponentForm a, const ExponentForm& b) { return a -= b; }
  friend ExponentForm operator*(ExponentForm a, const Rational& k) { return a *= k; }
  friend ExponentForm operator*(const Rational& k, ExponentForm a) { return a *= k; }

  // exact equality; w is ignored
  bool equals(const ExponentForm& o) const;
  bool operator==(const ExponentForm& o) const { return terms_ == o.terms_; }

  // replace sym by a form
  ExponentForm substitute(const std::string& sym, const ExponentForm& by) const;
  ExponentForm without(const std::string& sym) const;

  double evaluate(const std::map<std::string, double>& values) const;
  std::string str() const;
  nlohmann::json to_json() const;

 private:
  std::map<std::string, Rational> terms_;
};

// coefficientwise max
ExponentForm pointwise_max(const ExponentForm& f, const ExponentForm& g);

struct ConductorProfile {
  Rational theta{0};
  std::optional<std::map<std::string, double>> numeric;
  void validate() const;
  // advisory: b <= a, c <= b, d <= a
  std::vector<std::string> consistency_warnings() const;
};

// base + k * (kappa x)
struct KappaLinear {
  ExponentForm base;
  Rational kx{0};
  ExponentForm at(const ExponentForm& kappa_x) const { return base + kappa_x * kx; }
};

struct MainBound {
  Rational theta;
  ExponentForm E;
  // kappa = kappa_x / x
  ExponentForm kappa_x;
  // the four-term max before choosing E and kappa (terms 0 and 3 carry kappa x, 1 and 2 carry E)
  std::vector<KappaLinear> four_terms_kappa;
  std::vector<ExponentForm> four_terms;  // after substitution
  ExponentForm prefactor;                // x/2 + w
  std::vector<ExponentForm> final;       // the two max-terms

  double kappa(const std::map<std::string, double>& values) const;  // DegenerateX if x = 0
  nlohmann::json to_json() const;
};

MainBound optimize_main_bound(const ConductorProfile& profile);

// coefficientwise max of the two max-terms after c -> b, d -> a, plus x/2
ExponentForm simplified_bound(const Rational& theta);

struct HypotheticalBound {
  std::vector<ExponentForm> final;
  ExponentForm simplified;
};
HypotheticalBound hypothetical_improved_bound(const Rational& theta);

struct TruncationParams {
  double A, B;
};
TruncationParams truncation_params(double C_chi, const Rational& kappa);

struct AmplifierSet {
  std::vector<long> primes;
  double E = 0.0;
  double pnt_lower = 0.0;  // c E / log E, 0 for E < 100
  bool pnt_ok = true;
};
AmplifierSet amplifier_set(double E, const std::vector<long>& excluded = {});

}  // namespace oscwhit
