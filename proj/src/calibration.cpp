#include "oscwhit/calibration.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oscwhit/errors.hpp"

#ifndef OSCWHIT_DEFAULT_CALIBRATION
#define OSCWHIT_DEFAULT_CALIBRATION "data/calibration.txt"
#endif

namespace oscwhit {

namespace {
std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

Calibration Calibration::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CalibrationError("cannot open " + path);
  Calibration c;
  c.version_ = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw CalibrationError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    try {
      if (key == "version")
        c.version_ = std::stoi(val);
      else
        c.values_[key] = std::stod(val);
    } catch (const std::exception&) {
      throw CalibrationError(path + ":" + std::to_string(lineno) + ": bad value '" + val + "'");
    }
  }
  if (c.version_ != kVersion)
    throw CalibrationError(path + ": unsupported version " + std::to_string(c.version_));
  return c;
}

void Calibration::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw CalibrationError("cannot write " + path);
  out << "# implied constants, regenerate with `oscwhit calibrate --write`\n";
  out << "version = " << version_ << "\n";
  char buf[64];
  for (const auto& [k, v] : values_) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << k << " = " << buf << "\n";
  }
}

double Calibration::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw CalibrationError("missing calibration key " + key);
  return it->second;
}

std::string Calibration::default_path() {
  if (const char* p = std::getenv("OSCWHIT_CALIBRATION"); p && *p) return p;
  return OSCWHIT_DEFAULT_CALIBRATION;
}

const Calibration& Calibration::global() {
  static const Calibration c = load(default_path());
  return c;
}

double calib(const std::string& key) { return Calibration::global().get(key); }

}  // namespace oscwhit
