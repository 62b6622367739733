#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  std::string cmd = std::string(PDMOSC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
  int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

// JSON output is deterministic except for the timestamp line.
std::string strip_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.find("\"timestamp\"") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("spectrum lists the closed-form constant-mass energies") {
  CliResult r = run("spectrum --omega 1 --alpha 0 --l 0 --d 3 --nmax 2 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("1.5") != std::string::npos);
  CHECK(r.out.find("3.5") != std::string::npos);
  CHECK(r.out.find("5.5") != std::string::npos);
}

TEST_CASE("spectrum json and csv agree on the numbers") {
  CliResult j = run("spectrum --omega 1 --alpha 0.5 --l 1 --d 3 --nmax 3 --format json");
  CliResult c = run("spectrum --omega 1 --alpha 0.5 --l 1 --d 3 --nmax 3 --format csv");
  CHECK(j.status == 0);
  CHECK(c.status == 0);
  // every numeric csv cell must appear verbatim in the json document
  std::istringstream in(c.out);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    std::string energy = line.substr(comma + 1);
    CHECK(j.out.find(energy) != std::string::npos);
  }
}

TEST_CASE("verify succeeds across branches and sectors") {
  CHECK(run("verify --omega 1 --alpha 0 --l 0 --d 3 --basis 12").status == 0);
  CHECK(run("verify --omega 1 --alpha 0.5 --l 0 --d 3 --basis 12").status == 0);
  CHECK(run("verify --omega 1 --alpha 0.5 --one-dim even --basis 12").status == 0);
  CHECK(run("verify --omega 1 --alpha 0.5 --one-dim odd --basis 12").status == 0);
}

TEST_CASE("invalid input exits with status 2 and a short message") {
  for (const char* bad : {"spectrum --omega -1 --alpha 0 --l 0 --d 3",
                          "verify --omega 1 --alpha -0.5 --l 0 --d 3",
                          "spectrum --omega 1 --alpha 0 --l 0 --d 1",
                          "verify --no-such-flag"}) {
    CliResult r = run(bad);
    CHECK(r.status == 2);
    CHECK_FALSE(r.out.empty());
  }
}

TEST_CASE("failed checks exit with status 1") {
  // an unachievable tolerance turns every relation into a failure
  CliResult r = run("verify --omega 1 --alpha 0.5 --l 0 --d 3 --basis 12 --tolerance 1e-18");
  CHECK(r.status == 1);
  // a basis too small to leave any trusted block is rejected as invalid input
  CliResult tiny = run("verify --omega 1 --alpha 0.5 --l 0 --d 3 --basis 4");
  CHECK(tiny.status == 2);
}

TEST_CASE("a malformed PDMOSC_TOLERANCE is rejected as invalid input") {
  std::string cmd = std::string("PDMOSC_TOLERANCE=abc ") + PDMOSC_CLI_PATH +
                    " verify --omega 1 --alpha 0 --l 0 --d 3 --basis 12 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (fread(buf.data(), 1, buf.size(), pipe)) {
  }
  int rc = pclose(pipe);
  CHECK(WEXITSTATUS(rc) == 2);
}

TEST_CASE("oracle subcommand validates the constant-mass spectrum") {
  CliResult r = run("oracle --omega 1 --alpha 0 --l 0 --d 3 --count 3 "
                    "--refinements 1000 2000 --radius 15");
  CHECK(r.status == 0);
  CHECK(r.out.find("oracle_extrap_err_n0") != std::string::npos);
}

TEST_CASE("repeated verify runs are byte-identical modulo timestamp") {
  const std::string args = "verify --omega 1 --alpha 0.5 --l 1 --d 3 --basis 12 --format json";
  CliResult a = run(args);
  CliResult b = run(args);
  CHECK(a.status == 0);
  CHECK(b.status == 0);
  CHECK(strip_timestamp(a.out) == strip_timestamp(b.out));
}
