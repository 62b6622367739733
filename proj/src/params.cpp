#include "pdmosc/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pdmosc/states.hpp"

namespace pdmosc {

double OscParams::s_value() const {
  if (!s) throw std::domain_error("s = lambda/alpha is undefined for alpha = 0");
  return *s;
}

static OscParams finish(double omega, double alpha, double L, bool one_dim) {
  OscParams p;
  p.omega = omega;
  p.alpha = alpha;
  p.L = L;
  p.Delta = std::sqrt(omega * omega + alpha * alpha);
  p.lambda = 0.5 * (alpha + p.Delta);
  if (alpha > 0) p.s = p.lambda / alpha;
  p.one_dim = one_dim;
  return p;
}

OscParams derive_params(double omega, double alpha, int l, int d,
                        std::optional<OneDimParity> one_dim) {
  if (!(omega > 0)) throw std::invalid_argument("omega must be > 0");
  if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
  if (one_dim) {
    double L = (*one_dim == OneDimParity::even) ? -1.0 : 0.0;
    return finish(omega, alpha, L, true);
  }
  if (l < 0) throw std::invalid_argument("l must be a nonnegative integer");
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  double L = l + 0.5 * (d - 3);
  return finish(omega, alpha, L, false);
}

OscParams params_from_L(double omega, double alpha, double L) {
  if (!(omega > 0)) throw std::invalid_argument("omega must be > 0");
  if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
  if (L < -0.5 && L != -1.0)
    throw std::invalid_argument("L must be >= -1/2 (or the 1D values -1, 0)");
  return finish(omega, alpha, L, L == -1.0 || L == 0.0);
}

double delta_eigenvalue(const OscParams& p, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  double s = p.s_value();
  double closed = s + 2 * n + p.L + 1;
  double arg = energy_pdm(p, n) / p.alpha + s * (s - 1) + p.L * (p.L + 1);
  double spectral = std::sqrt(arg);
  if (std::fabs(spectral - closed) > 1e-12 * std::fabs(closed))
    throw std::runtime_error("delta_eigenvalue: closed form and spectral route disagree at n=" +
                             std::to_string(n));
  return closed;
}

LowestWeights lowest_weights(const OscParams& p) {
  LowestWeights w;
  w.k = 0.5 * (p.L + 1.5);
  if (p.alpha > 0) w.p0 = 0.5 * (*p.s + p.L);
  return w;
}

}  // namespace pdmosc
