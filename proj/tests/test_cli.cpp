#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

std::string tmpdir() { return std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp"; }

Run run(const std::string& args) {
  const char* exe = std::getenv("OSCWHIT_CLI");
  REQUIRE_MESSAGE(exe, "OSCWHIT_CLI is not set");
  const std::string out = tmpdir() + "/oscwhit_cli_out.txt";
  const std::string cmd = std::string(exe) + " " + args + " > " + out + " 2>/dev/null";
  int st = std::system(cmd.c_str());
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, ss.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("optimize reports the simplified x exponent") {
  auto r = run("exponents optimize --theta 0");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "oscwhit/1");
  CHECK(j["subconvex"] == true);
  CHECK(r.out.find("3/8") != std::string::npos);
}

TEST_CASE("amplifier primes") {
  auto r = run("exponents primes --E 10");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["primes"] == nlohmann::json::array({11, 13, 17, 19}));
}

TEST_CASE("Erdelyi expansion table") {
  auto r = run("expand erdelyi --phase exp-model --mu 1e2:1e4:8 --N 3");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 9);
  CHECK(r.out.rfind("mu,expansion_re", 0) == 0);
  CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("output is deterministic") {
  auto a = run("whittaker --place real --tau 3 --y 0.01:10:20");
  auto b = run("whittaker --place real --tau 3 --y 0.01:10:20");
  CHECK(a.code == 0);
  CHECK(count_lines(a.out) == 21);
  CHECK(a.out == b.out);
}

TEST_CASE("Gauss sums for small primes") {
  auto r = run("zeta-nonarch gauss --p-max 7 --r-max 2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p,r,chi_index,abs_value,target,ratio", 0) == 0);
}

TEST_CASE("usage errors exit with 1") {
  const std::string empty = tmpdir() + "/oscwhit_empty.json";
  std::ofstream(empty) << "{\"criteria\": []}";
  CHECK(run("verify-all --config " + empty).code == 1);
  CHECK(run("verify-all --config /nonexistent.json").code == 1);
  CHECK(run("no-such-command").code == 1);
  CHECK(run("exponents truncation --C 100 --kappa 2").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify-all runs a selected criterion") {
  const std::string cfg = tmpdir() + "/oscwhit_c1.json";
  std::ofstream(cfg) << "{\"criteria\": [1, 4]}";
  auto r = run("verify-all --config " + cfg);
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["criteria"].size() == 2);
}
