#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "pdmosc/grid.hpp"
#include "pdmosc/matrix.hpp"
#include "pdmosc/params.hpp"
#include "pdmosc/states.hpp"

namespace pdmosc {

enum class OpLabel {
  pi_r_sq,        // pi_r^2 = -(f^2 psi'' + 2 f f' psi' + (f'^2/4 + f f''/2) psi)
  Ktilde1,        // pi_r^2 + L(L+1)/r^2 + omega^2 r^2 / 4
  Ktilde2,        // multiplication by t
  Ktilde3,        // [Ktilde1, Ktilde2]; real antisymmetric (anti-Hermitian)
  K0_const,       // H / (2 omega), alpha = 0 branch
  Kplus_const,    // su(1,1) raising operator
  Kminus_const,   // su(1,1) lowering operator
  Aplus,          // deformed ladder core, acts on a single eigenstate
  Aminus,
};

std::string op_name(OpLabel op);

enum class DerivativeMode { analytic, finite_difference };

/// Truncated matrix representation of an operator in the orthonormal
/// eigenbasis {psi_n}. `trusted` is the leading block size free of
/// truncation contamination; `band` the coupling width in n (-1 = dense).
struct OperatorMatrix {
  Matrix m;
  int basis_size = 0;
  int trusted = 0;
  int band = 0;
  std::string label;
};

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Applies an operator to a sampled eigenstate, evaluating derivatives
/// analytically through the closed forms (or by central finite differences
/// of the closed forms, for cross-checks).
StateSample apply_operator(OpLabel op, const OscParams& p, const StateSample& state,
                           const RadialGrid& grid,
                           DerivativeMode mode = DerivativeMode::analytic);

/// Quadrature matrix elements <psi_m | Op | psi_n> between normalized states.
OperatorMatrix build_matrix(OpLabel op, const OscParams& p, int N, const RadialGrid& grid);

/// Diagonal matrix of delta eigenvalues s + 2n + L + 1 (the operator square
/// root is defined spectrally on the eigenbasis).
OperatorMatrix delta_matrix(const OscParams& p, int N);

/// Deformed su(1,1) generators. K+ is built as A+(delta+1)sqrt((delta+2)/delta)
/// and K- as (delta+1)sqrt(delta/(delta+2)) A-, the orderings whose diagonal
/// function arguments are positive for every representation here. The other
/// printed ordering of each is evaluated as a cross-check whenever its
/// arguments are valid; ordering_residual_* report the trusted-block
/// agreement, and are empty when the alternate ordering does not exist
/// (delta - 2 < 0 on a needed entry).
struct DeformedLadders {
  OperatorMatrix K0a, Kpa, Kma;
  std::optional<double> ordering_residual_plus;
  std::optional<double> ordering_residual_minus;
};

DeformedLadders build_deformed_ladders(const OscParams& p, int N, const RadialGrid& grid);

}  // namespace pdmosc
