#pragma once

#include <stdexcept>
#include <vector>

#include "pdmosc/algebra.hpp"
#include "pdmosc/params.hpp"
#include "pdmosc/states.hpp"

namespace pdmosc {

/// Flux-form finite-difference Hamiltonian on a uniform grid, symmetric
/// tridiagonal by construction: (H psi)_i = -[a_{i+1/2}(psi_{i+1}-psi_i)
/// - a_{i-1/2}(psi_i-psi_{i-1})]/h^2 + Veff(r_i) psi_i with a = 1/M = f^2.
///
/// Deliberately independent of the analytic eigenfunction and quadrature
/// code: the only shared ingredients are the parameter set and the
/// mass/potential profiles.
struct DiscreteHamiltonian {
  std::vector<double> diag;
  std::vector<double> offdiag;  // size diag.size() - 1
  double h = 0;
  double R = 0;
  Model model = Model::constant_mass;
  // L = -1 (even 1D sector) uses midpoints r_i = (i - 1/2) h with an even
  // reflection at r = 0; all other L use nodes r_i = i h with psi(0) = 0.
  bool staggered = false;
};

struct SolveError : std::runtime_error {
  double achieved;
  SolveError(const std::string& what, double res) : std::runtime_error(what), achieved(res) {}
};

/// Truncation radius large enough that domain-cutoff eigenvalue error is
/// negligible next to the 1e-6 comparison tolerance, for the lowest `count`
/// levels (Gaussian tails when alpha = 0, power-law tails otherwise).
double required_radius(const OscParams& p, Model model, int count);

/// M >= 200 interior resolution; R = 0 selects required_radius(...).
DiscreteHamiltonian discretize(const OscParams& p, Model model, int M, double R = 0);

/// Lowest `count` eigenvalues (ascending, count <= 10), each verified to
/// satisfy ||H v - E v|| <= 1e-10 ||H||; throws SolveError otherwise.
std::vector<double> solve_spectrum(const DiscreteHamiltonian& H, int count);

/// Refinement sweep against the closed-form spectrum: per-level error at
/// each M, Richardson extrapolation from the two finest grids, and observed
/// convergence order. Pass iff every extrapolated relative error <= 1e-6
/// and every order estimate is within [1.8, 2.2].
VerificationReport compare_to_analytic(const OscParams& p, Model model, int count,
                                       const std::vector<int>& refinements, double R = 0);

}  // namespace pdmosc
