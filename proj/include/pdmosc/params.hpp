#pragma once

#include <optional>

namespace pdmosc {

enum class OneDimParity { even, odd };

/// Physical and derived scalar parameters of one oscillator instance.
/// Immutable after construction via derive_params().
struct OscParams {
  double omega = 0;   // angular frequency, > 0
  double alpha = 0;   // deformation parameter, >= 0
  double L = 0;       // effective angular momentum l + (d-3)/2, or -1/0 in 1D mode
  double Delta = 0;   // sqrt(omega^2 + alpha^2)
  double lambda = 0;  // (alpha + Delta) / 2
  std::optional<double> s;  // lambda / alpha, defined only for alpha > 0
  bool one_dim = false;

  bool deformed() const { return alpha > 0; }
  /// lambda / alpha; throws std::domain_error when alpha == 0.
  double s_value() const;
};

/// Validates (omega, alpha, l, d) and computes all derived quantities.
/// When one_dim is set, l and d are ignored and L is -1 (even) or 0 (odd).
OscParams derive_params(double omega, double alpha, int l, int d,
                        std::optional<OneDimParity> one_dim = std::nullopt);

/// Convenience constructor for a given effective L (used by tests and the
/// verification driver, which sweep half-integer L directly).
OscParams params_from_L(double omega, double alpha, double L);

/// Eigenvalue of the operator delta on psi^(alpha)_{n,L}: s + 2n + L + 1.
/// Computed both from the closed form and from sqrt(E/alpha + s(s-1) + L(L+1));
/// the two routes are asserted to agree to 1e-12 relative.
double delta_eigenvalue(const OscParams& p, int n);

struct LowestWeights {
  double k;                  // (L + 3/2) / 2
  std::optional<double> p0;  // (s + L) / 2, alpha > 0 only
};

LowestWeights lowest_weights(const OscParams& p);

}  // namespace pdmosc
