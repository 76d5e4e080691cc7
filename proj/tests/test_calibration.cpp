#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "oscwhit/calibration.hpp"
#include "oscwhit/errors.hpp"

using namespace oscwhit;

namespace {

std::string tmp_file(const std::string& name, const std::string& body) {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("save and load round trip") {
  Calibration c = Calibration::load(tmp_file("oscwhit_c1.txt", "version = 1\n"));
  c.set("a.b", 0.1);
  c.set("x", 12345.678901234567);
  std::string path = tmp_file("oscwhit_c2.txt", "");
  c.save(path);
  auto d = Calibration::load(path);
  CHECK(d.get("a.b") == 0.1);
  CHECK(d.get("x") == 12345.678901234567);
  CHECK(d.values().size() == 2);
}

TEST_CASE("errors") {
  auto c = Calibration::load(tmp_file("oscwhit_c3.txt", "# comment\nversion = 1\nk = 2\n"));
  CHECK(c.has("k"));
  CHECK_THROWS_AS(c.get("missing"), CalibrationError);
  CHECK_THROWS_AS(Calibration::load(tmp_file("oscwhit_c4.txt", "version = 2\n")), CalibrationError);
  CHECK_THROWS_AS(Calibration::load(tmp_file("oscwhit_c5.txt", "version = 1\nk 2\n")), CalibrationError);
  CHECK_THROWS_AS(Calibration::load(tmp_file("oscwhit_c6.txt", "version = 1\nk = two\n")), CalibrationError);
  CHECK_THROWS_AS(Calibration::load("/nonexistent/calibration.txt"), CalibrationError);
}

TEST_CASE("default path follows the environment") {
  setenv("OSCWHIT_CALIBRATION", "/some/where.txt", 1);
  CHECK(Calibration::default_path() == "/some/where.txt");
  unsetenv("OSCWHIT_CALIBRATION");
  CHECK(Calibration::default_path() != "/some/where.txt");
}

TEST_CASE("shipped file has every key the library reads") {
  auto c = Calibration::load(Calibration::default_path());
  for (const char* k : {"asym.erdelyi.C", "asym.bessel_k_large.C", "znarch.twisted.C", "expo.amplifier.c",
                        "whit.small_y.C", "zarch.upper.realA.C"})
    CHECK_MESSAGE(c.has(k), k);
}
