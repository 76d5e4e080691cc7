#pragma once

// Implied constants of the "<<" bounds, measured once on reference
// families and stored in a versioned key = value file.

#include <map>
#include <string>

namespace oscwhit {

class Calibration {
 public:
  static constexpr int kVersion = 1;

  static Calibration load(const std::string& path);
  void save(const std::string& path) const;

  double get(const std::string& key) const;
  bool has(const std::string& key) const { return values_.count(key) > 0; }
  void set(const std::string& key, double v) { values_[key] = v; }
  const std::map<std::string, double>& values() const { return values_; }

  // file named by OSCWHIT_CALIBRATION, else the copy in the source tree
  static std::string default_path();
  static const Calibration& global();

 private:
  int version_ = kVersion;
  std::map<std::string, double> values_;
};

// shorthand for Calibration::global().get(key)
double calib(const std::string& key);

}  // namespace oscwhit
