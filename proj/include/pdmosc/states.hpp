#pragma once

#include <vector>

#include "pdmosc/params.hpp"
#include "pdmosc/profiles.hpp"

namespace pdmosc {

struct RadialGrid;  // grid.hpp

enum class Model { constant_mass, pdm };

/// A radial eigenfunction sampled on a grid.
struct StateSample {
  int n = 0;
  double L = 0;
  Model model = Model::constant_mass;
  std::vector<double> values;
  bool normalized = false;
  double norm_constant = 1.0;  // the factor applied to the raw closed form
};

/// E_{n,L} = omega (2n + L + 3/2).
double energy_const(const OscParams& p, int n);

/// Quadratic PDM spectrum; requires alpha > 0.
double energy_pdm(const OscParams& p, int n);

double energy(const OscParams& p, Model model, int n);

/// t = 1 - 2/f = (-1 + alpha r^2)/(1 + alpha r^2); requires alpha > 0.
double map_t(const OscParams& p, double r);

/// Raw closed-form wavefunction values (normalization constant 1).
double eval_psi_const(const OscParams& p, int n, double r);
double eval_psi_pdm(const OscParams& p, int n, double r);
double eval_psi(const OscParams& p, Model model, int n, double r);

/// psi(r) * exp(log_scale), with the scale applied inside the log-space
/// envelope: the scale may cancel an underflowing tail, so the factors must
/// never be exponentiated separately.
double eval_psi_scaled(const OscParams& p, Model model, int n, double r, double log_scale);

/// Wavefunction with first and second radial derivatives, evaluated
/// analytically through the polynomial derivative identities. Log-space
/// envelope accumulation avoids under/overflow at large r or large s.
struct PsiDerivs {
  double psi, dpsi, d2psi;
};
PsiDerivs eval_psi_derivs(const OscParams& p, Model model, int n, double r,
                          double log_scale = 0);

/// Samples the raw state on a grid (normalization applied separately).
StateSample sample_state(const OscParams& p, Model model, int n, const RadialGrid& grid);

/// Rescales to unit quadrature norm. Sign convention: the value at the last
/// grid node (large r, past every interior zero) is positive, which makes the
/// ladder-action coefficients of both algebras positive.
StateSample normalize(const StateSample& state, const RadialGrid& grid);

/// Closed-form squared norm of the raw state, via log_gamma. Cross-check for
/// the quadrature normalization, not the source of truth.
double norm_squared_closed_form(const OscParams& p, Model model, int n);

/// su(1,1) Casimir eigenvalue: (L + 3/2)(L - 1/2)/4 = k(k-1).
double casimir_value_const(const OscParams& p);

/// Deformed Casimir eigenvalue; requires alpha > 0.
double casimir_value_pdm(const OscParams& p);

}  // namespace pdmosc
