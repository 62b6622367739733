// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "pdmosc/grid.hpp"
#include "pdmosc/oracle.hpp"
#include "pdmosc/states.hpp"

using namespace pdmosc;

namespace {

int failures = 0;

void line(int idx, bool pass, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", idx, pass ? "PASS" : "FAIL", what.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(PDMOSC_CLI_PATH) + " " + args + " 2>&1";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
  int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

std::string strip_timestamp(const std::string& text) {
  std::istringstream in(text);
  std::string l, out;
  while (std::getline(in, l))
    if (l.find("\"timestamp\"") == std::string::npos) out += l + "\n";
  return out;
}

}  // namespace

int main() {
  // 1. su(1,1) suite: commutators, Casimir and ladder actions at alpha = 0.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (double L : {0.0, 1.0, 1.5})
      ok = ok && verify_su11(params_from_L(1.0, 0.0, L), 20).all_pass();
    double dt = seconds_since(t0);
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "su(1,1) relations, L in {0, 1, 1.5}, N=20, tol 1e-8 (%.1fs)", dt);
    line(1, ok && dt < 10, msg);
  }

  // 2. quadratic-algebra commutators over the full parameter matrix.
  std::vector<std::pair<double, double>> matrix;
  for (double a : {0.1, 0.5, 1.0})
    for (double L : {0.0, 1.0, 2.0}) matrix.emplace_back(a, L);
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (auto [a, L] : matrix) ok = ok && verify_qj3(params_from_L(1.0, a, L), 24).all_pass();
    double dt = seconds_since(t0);
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "quadratic algebra, alpha x L matrix, N=24, tol 1e-7 (%.1fs)", dt);
    line(2, ok && dt < 30, msg);
  }

  // 3. deformed su(1,1): orderings, commutators, ladders, Casimir.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (auto [a, L] : matrix)
      ok = ok && verify_deformed(params_from_L(1.0, a, L), 24).all_pass();
    double dt = seconds_since(t0);
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "deformed ladder suite, alpha x L matrix, N=24 (%.1fs)", dt);
    line(3, ok && dt < 60, msg);
  }

  // 4. independent finite-difference spectra, both models.
  {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> M = {1000, 2000, 4000};
    bool ok = compare_to_analytic(params_from_L(1.0, 0.0, 0.0), Model::constant_mass, 5, M)
                  .all_pass();
    ok = ok &&
         compare_to_analytic(params_from_L(1.0, 0.1, 0.0), Model::pdm, 5, M).all_pass();
    double dt = seconds_since(t0);
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "finite-difference cross-check, extrapolated err <= 1e-6, "
                  "order in [1.8, 2.2] (%.1fs)",
                  dt);
    line(4, ok && dt < 120, msg);
  }

  // 5. alpha -> 0 limit of the deformed generators.
  {
    bool ok = verify_limit(1.0, 0.0, {0.1, 0.01, 0.001}, 20).all_pass();
    line(5, ok, "generator deviation decreases along alpha = 0.1, 0.01, 0.001 and is O(alpha)");
  }

  // 6. orthonormality of the first ten states under the quadrature rule.
  {
    bool ok = true;
    for (double alpha : {0.0, 0.5}) {
      OscParams p = params_from_L(1.0, alpha, 1.0);
      Model model = alpha > 0 ? Model::pdm : Model::constant_mass;
      RadialGrid g = build_grid(p, 150, GridScheme::t_mapped_gauss);
      std::vector<StateSample> st;
      for (int n = 0; n < 10; ++n) st.push_back(normalize(sample_state(p, model, n, g), g));
      for (int i = 0; i < 10 && ok; ++i)
        for (int j = 0; j < 10 && ok; ++j)
          ok = std::fabs(inner_product(st[i], st[j], g) - (i == j)) <= 1e-10;
    }
    line(6, ok, "Gram matrix of 10 states equals the identity to 1e-10, both models");
  }

  // 7. 1D sectors: algebra suites verify and the discrete spectra interleave.
  {
    bool ok = run_cli("verify --omega 1 --alpha 0.5 --one-dim even --basis 16").status == 0 &&
              run_cli("verify --omega 1 --alpha 0.5 --one-dim odd --basis 16").status == 0;
    OscParams even = derive_params(1.0, 0.1, 0, 3, OneDimParity::even);
    OscParams odd = derive_params(1.0, 0.1, 0, 3, OneDimParity::odd);
    double R = std::max(required_radius(even, Model::pdm, 4),
                        required_radius(odd, Model::pdm, 4));
    std::vector<double> ee = solve_spectrum(discretize(even, Model::pdm, 4000, R), 3);
    std::vector<double> eo = solve_spectrum(discretize(odd, Model::pdm, 4000, R), 3);
    ok = ok && ee[0] < eo[0] && eo[0] < ee[1] && ee[1] < eo[1] && eo[1] < ee[2] &&
         ee[2] < eo[2];
    line(7, ok, "1D even/odd sectors verify and their 6 lowest levels interleave");
  }

  // 8. deterministic output: repeated runs agree byte-for-byte modulo timestamp.
  {
    const std::string args =
        "verify --omega 1 --alpha 0.5 --l 1 --d 3 --basis 16 --format json";
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    bool ok = a.status == 0 && b.status == 0 &&
              strip_timestamp(a.out) == strip_timestamp(b.out) && !a.out.empty();
    line(8, ok, "repeated CLI verify runs are byte-identical modulo timestamp");
  }

  return failures == 0 ? 0 : 1;
}
