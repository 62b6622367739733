#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdmosc/oracle.hpp"
#include "pdmosc/report.hpp"

namespace {

struct CommonOpts {
  double omega = 1.0;
  double alpha = 0.0;
  int l = 0;
  int d = 3;
  std::string one_dim;  // "", "even", "odd"
  std::string format = "json";
  std::string output;
  double tolerance = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_tolerance = true) {
  cmd->add_option("--omega", o.omega, "angular frequency (> 0)");
  cmd->add_option("--alpha", o.alpha, "deformation parameter (>= 0)");
  cmd->add_option("--l", o.l, "orbital quantum number (>= 0)");
  cmd->add_option("--d", o.d, "spatial dimension (>= 1)");
  cmd->add_option("--one-dim", o.one_dim, "1D sector: even or odd (overrides --l/--d)")
      ->check(CLI::IsMember({"even", "odd"}));
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", o.output, "output path (default: stdout)");
  if (with_tolerance)
    cmd->add_option("--tolerance", o.tolerance, "residual tolerance override (> 0)");
}

pdmosc::OscParams make_params(const CommonOpts& o) {
  std::optional<pdmosc::OneDimParity> parity;
  if (o.one_dim == "even") parity = pdmosc::OneDimParity::even;
  if (o.one_dim == "odd") parity = pdmosc::OneDimParity::odd;
  return pdmosc::derive_params(o.omega, o.alpha, o.l, o.d, parity);
}

double effective_tolerance(const CommonOpts& o) {
  if (o.tolerance > 0) return o.tolerance;
  if (const char* env = std::getenv("PDMOSC_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0))
      throw std::invalid_argument("PDMOSC_TOLERANCE must be a positive number");
    return v;
  }
  return 0;
}

int emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << o.output << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

void merge_into(pdmosc::VerificationReport& dst, const pdmosc::VerificationReport& src) {
  for (const auto& r : src.residuals) dst.residuals.push_back(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pdmosc: deformed radial oscillator spectra and algebra verification"};
  app.require_subcommand(1);

  CommonOpts so, vo, oo, lo;
  int nmax = 9, basis = 24, count = 5;
  std::string scheme = "mapped";
  std::string model_name = "auto";
  std::vector<int> refinements{1000, 2000, 4000};
  std::vector<double> alphas{0.1, 0.01, 0.001};
  double radius = 0;

  CLI::App* spectrum = app.add_subcommand("spectrum", "tabulate the analytic energy levels");
  add_common(spectrum, so, false);
  spectrum->add_option("--nmax", nmax, "highest level n to tabulate");

  CLI::App* verify = app.add_subcommand("verify", "run the algebra verification suites");
  add_common(verify, vo);
  verify->add_option("--basis", basis, "truncated basis size N");
  verify->add_option("--scheme", scheme, "quadrature scheme")
      ->check(CLI::IsMember({"mapped", "uniform"}));

  CLI::App* oracle = app.add_subcommand("oracle", "finite-difference spectrum cross-check");
  add_common(oracle, oo);
  oracle->add_option("--count", count, "number of levels to compare (<= 10)");
  oracle->add_option("--refinements", refinements, "grid sizes M for the sweep");
  oracle->add_option("--radius", radius, "truncation radius R (0 = automatic)");
  oracle->add_option("--model", model_name, "constant-mass or deformed-mass equation")
      ->check(CLI::IsMember({"auto", "const", "pdm"}));

  CLI::App* limit = app.add_subcommand("limit", "alpha -> 0 generator convergence study");
  add_common(limit, lo);
  limit->add_option("--basis", basis, "truncated basis size N");
  limit->add_option("--alphas", alphas, "decreasing alpha sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*spectrum) {
      pdmosc::OscParams p = make_params(so);
      pdmosc::Model model = p.deformed() ? pdmosc::Model::pdm : pdmosc::Model::constant_mass;
      if (nmax < 0) throw std::invalid_argument("--nmax must be >= 0");
      std::string text = so.format == "csv" ? pdmosc::spectrum_csv(p, model, nmax)
                                            : pdmosc::spectrum_json(p, model, nmax);
      return emit(so, text);
    }

    if (*verify) {
      pdmosc::OscParams p = make_params(vo);
      if (basis < 4) throw std::invalid_argument("--basis must be >= 4");
      pdmosc::VerifyOptions opt;
      opt.tolerance = effective_tolerance(vo);
      if (scheme == "uniform") opt.scheme = pdmosc::GridScheme::truncated_uniform;
      pdmosc::VerificationReport rep;
      if (p.deformed()) {
        rep = pdmosc::verify_qj3(p, basis, opt);
        merge_into(rep, pdmosc::verify_deformed(p, basis, opt));
      } else {
        rep = pdmosc::verify_su11(p, basis, opt);
      }
      std::string text = vo.format == "csv" ? pdmosc::to_csv(rep) : pdmosc::to_json(rep);
      int rc = emit(vo, text);
      return rc != 0 ? rc : (rep.all_pass() ? 0 : 1);
    }

    if (*oracle) {
      pdmosc::OscParams p = make_params(oo);
      pdmosc::Model model;
      if (model_name == "const")
        model = pdmosc::Model::constant_mass;
      else if (model_name == "pdm")
        model = pdmosc::Model::pdm;
      else
        model = p.deformed() ? pdmosc::Model::pdm : pdmosc::Model::constant_mass;
      pdmosc::VerificationReport rep =
          pdmosc::compare_to_analytic(p, model, count, refinements, radius);
      std::string text = oo.format == "csv" ? pdmosc::to_csv(rep) : pdmosc::to_json(rep);
      int rc = emit(oo, text);
      return rc != 0 ? rc : (rep.all_pass() ? 0 : 1);
    }

    if (*limit) {
      pdmosc::OscParams p = make_params(lo);
      if (p.deformed())
        throw std::invalid_argument("limit: set --alpha 0; the sweep supplies its own alphas");
      pdmosc::VerifyOptions opt;
      opt.tolerance = effective_tolerance(lo);
      pdmosc::VerificationReport rep = pdmosc::verify_limit(p.omega, p.L, alphas, basis, opt);
      std::string text = lo.format == "csv" ? pdmosc::to_csv(rep) : pdmosc::to_json(rep);
      int rc = emit(lo, text);
      return rc != 0 ? rc : (rep.all_pass() ? 0 : 1);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
