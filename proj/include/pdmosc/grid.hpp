#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pdmosc/params.hpp"

namespace pdmosc {

struct StateSample;  // states.hpp

enum class GridScheme { t_mapped_gauss, truncated_uniform };

/// Quadrature rule for integrals over the half-line 0 < r < infinity.
///
/// t_mapped_gauss places Gauss nodes in the Jacobi variable t = 1 - 2/f and
/// pulls them back through r(t) = sqrt((1+t)/(alpha(1-t))); the Gauss weight
/// function is chosen as (1-t)^(s-1/2) (1+t)^(L+1/2), which is exactly the
/// weight the eigenfunction products carry, so products of basis states (and
/// polynomial multiplication operators between them) integrate exactly. For
/// alpha = 0 the same scheme degenerates to Gauss-Legendre on (0, R).
///
/// truncated_uniform is a midpoint rule on (0, R), kept as an independent
/// cross-check scheme.
struct RadialGrid {
  std::vector<double> nodes;    // strictly increasing, > 0
  std::vector<double> weights;  // > 0
  // Per-node log scale folded into sampled states: stored samples are
  // psi(r_i) exp(log_scale_i). The mapped rule keeps weights == 1 and puts
  // half the log quadrature weight here, so the weight (up to exp(+-1700)
  // for steep Jacobi exponents) and the matching decay of psi meet inside
  // a single exponential instead of as inf * 0.
  std::vector<double> log_scale;
  GridScheme scheme = GridScheme::t_mapped_gauss;
  double radius = 0;  // truncation radius (0 for the mapped half-line rule)
  std::string descriptor;
};

/// Raised when a grid cannot integrate the ground-state density to the
/// required accuracy; carries the achieved residual.
struct GridAccuracyError : std::runtime_error {
  double achieved;
  GridAccuracyError(const std::string& what, double res)
      : std::runtime_error(what), achieved(res) {}
};

/// Builds and validates a grid. radius = 0 picks an automatic truncation
/// radius (ignored by the mapped rule when alpha > 0). Validation integrates
/// the raw ground-state density against its closed form; failure to reach
/// 1e-9 relative raises GridAccuracyError.
RadialGrid build_grid(const OscParams& p, int size, GridScheme scheme,
                      double radius = 0);

/// Plain quadrature pairing sum_i w_i f_i g_i.
double inner_product(const StateSample& f, const StateSample& g, const RadialGrid& grid);

/// Gauss nodes/weights on (-1, 1) for weight (1-x)^a (1+x)^b (Golub-Welsch).
/// Weights are returned as logarithms; for large exponents the linear-scale
/// total mass overflows double.
void gauss_jacobi_log(int n, double a, double b, std::vector<double>& nodes,
                      std::vector<double>& log_weights);

}  // namespace pdmosc
