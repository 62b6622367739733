#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdmosc/operators.hpp"
#include "pdmosc/params.hpp"

namespace pdmosc {

struct RelationResidual {
  std::string id;
  double residual = 0;   // relative Frobenius norm on the trusted block
  double tolerance = 0;
  bool pass = false;     // residual <= tolerance
  std::optional<std::string> note;  // e.g. "skipped: singular"
};

struct VerificationReport {
  OscParams params;
  int basis_size = 0;
  int trusted_size = 0;
  std::vector<RelationResidual> residuals;
  std::string timestamp;
  std::string grid_descriptor;

  bool all_pass() const;
};

/// AB - BA, trusted block shrunk by the wider operand band.
OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B);

/// Relative residual ||X - Y||_F / max(1, ||X||_F, ||Y||_F) on the leading
/// m x m block.
double relative_residual(const Matrix& X, const Matrix& Y, int m);

struct VerifyOptions {
  int grid_size = 0;        // 0 = automatic
  double tolerance = 0;     // 0 = per-relation defaults
  GridScheme scheme = GridScheme::t_mapped_gauss;
};

/// su(1,1) suite, alpha = 0 branch: commutators, Hermiticity, Casimir and
/// ladder actions. Default tolerance 1e-8.
VerificationReport verify_su11(const OscParams& p, int N, const VerifyOptions& opt = {});

/// QJ(3) commutation relations for the (K~1, K~2, K~3) generators; requires
/// alpha > 0. Default tolerance 1e-7.
VerificationReport verify_qj3(const OscParams& p, int N, const VerifyOptions& opt = {});

/// Deformed su(1,1) suite: both ladder-factor orderings, commutators, Hermiticity,
/// Casimir n-independence and ladder coefficients. Default tolerance 1e-7
/// (1e-8 for ordering agreement and ladder coefficients).
VerificationReport verify_deformed(const OscParams& p, int N, const VerifyOptions& opt = {});

/// alpha -> 0 limit: max trusted-entry deviation D(alpha) of the deformed
/// generators from the constant-mass ones must decrease along the given
/// (decreasing) alpha sequence with D/alpha bounded.
VerificationReport verify_limit(double omega, double L, const std::vector<double>& alphas,
                                int N, const VerifyOptions& opt = {});

/// ISO-8601 UTC timestamp used in reports.
std::string iso8601_now();

}  // namespace pdmosc
