#include "pdmosc/grid.hpp"

#include <lapacke.h>

#include <cmath>

#include "pdmosc/specfun.hpp"
#include "pdmosc/states.hpp"

namespace pdmosc {

void gauss_jacobi_log(int n, double a, double b, std::vector<double>& nodes,
                      std::vector<double>& log_weights) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi_log: n >= 1 required");
  if (a <= -1 || b <= -1) throw std::domain_error("gauss_jacobi_log: a, b > -1 required");
  // Monic three-term recurrence coefficients for the Jacobi weight.
  std::vector<double> diag(n), off(n - 1 > 0 ? n - 1 : 0);
  double ab = a + b;
  diag[0] = (b - a) / (ab + 2);
  for (int k = 1; k < n; ++k) {
    double den = (2 * k + ab) * (2 * k + ab + 2);
    diag[k] = (b * b - a * a) / den;
    double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
    double d2 = (2 * k + ab) * (2 * k + ab);
    off[k - 1] = std::sqrt(num / (d2 * (2 * k + ab + 1) * (2 * k + ab - 1)));
  }
  std::vector<double> alpha_rec(diag), beta_rec(off);
  lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'N', n, diag.data(), off.data(), nullptr, n);
  if (info != 0)
    throw std::runtime_error("gauss_jacobi_log: dstev failed, info=" + std::to_string(info));
  double log_mu0 = (ab + 1) * std::log(2.0) + specfun::log_gamma(a + 1) +
                   specfun::log_gamma(b + 1) - specfun::log_gamma(ab + 2);
  nodes.resize(n);
  log_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = diag[i];
    // Christoffel weights: 1/w = sum of squared orthonormal polynomials at
    // the node. The eigenvector route only gives the first components to
    // absolute accuracy, which is useless for weights as small as e^{-10^3};
    // this sum keeps full relative accuracy, with rescaling against overflow.
    double x = diag[i];
    double p_prev = 0, p_cur = 1, sum = 1, log_off = 0;
    for (int k = 0; k < n - 1; ++k) {
      double p_next = ((x - alpha_rec[k]) * p_cur - (k > 0 ? beta_rec[k - 1] : 0) * p_prev) /
                      beta_rec[k];
      p_prev = p_cur;
      p_cur = p_next;
      sum += p_cur * p_cur;
      if (std::fabs(p_cur) > 1e140) {
        const double c = 1e-140;
        p_prev *= c;
        p_cur *= c;
        sum *= c * c;
        log_off -= std::log(c);
      }
    }
    log_weights[i] = log_mu0 - (std::log(sum) + 2 * log_off);
  }
}

static double auto_radius(const OscParams& p) {
  // Covers constant-mass states up to n ~ 48: classical turning point plus
  // several decay lengths of exp(-omega r^2 / 4).
  double e_hi = p.omega * (2 * 48 + std::fabs(p.L) + 1.5);
  return 2 * std::sqrt(e_hi) / p.omega + 8 / std::sqrt(p.omega);
}

static void validate(const OscParams& p, RadialGrid& grid) {
  Model model = p.alpha > 0 ? Model::pdm : Model::constant_mass;
  double q = 0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    double v = eval_psi_scaled(p, model, 0, grid.nodes[i], grid.log_scale[i]);
    q += grid.weights[i] * v * v;
  }
  double ref = norm_squared_closed_form(p, model, 0);
  double res = std::fabs(q - ref) / ref;
  if (!(res < 1e-9))
    throw GridAccuracyError("build_grid: ground-state density integrates to relative residual " +
                                std::to_string(res) + " (grid " + grid.descriptor + ")",
                            res);
}

RadialGrid build_grid(const OscParams& p, int size, GridScheme scheme, double radius) {
  if (size < 16) throw std::invalid_argument("build_grid: size >= 16 required");
  RadialGrid g;
  g.scheme = scheme;
  if (scheme == GridScheme::t_mapped_gauss && p.alpha > 0) {
    double s = p.s_value();
    double a = s - 0.5, b = p.L + 0.5;
    std::vector<double> t, logw;
    gauss_jacobi_log(size, a, b, t, logw);
    g.nodes.resize(size);
    g.weights.resize(size);
    g.log_scale.assign(size, 0.0);
    for (int i = 0; i < size; ++i) {
      double om = 1 - t[i], op = 1 + t[i];
      g.nodes[i] = std::sqrt(op / (p.alpha * om));
      // w_r = w_t * J(t) / weightfn(t), J = 1/(sqrt(alpha) (1-t)^{3/2} (1+t)^{1/2})
      double lw = logw[i] - (a + 1.5) * std::log(om) - (b + 0.5) * std::log(op) -
                  0.5 * std::log(p.alpha);
      g.weights[i] = 1.0;
      g.log_scale[i] = 0.5 * lw;
    }
    g.radius = 0;
    g.descriptor = "t_mapped_gauss(size=" + std::to_string(size) +
                   ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
  } else if (scheme == GridScheme::t_mapped_gauss) {
    // alpha = 0: no t-map; Gauss-Legendre on (0, R).
    double R = radius > 0 ? radius : auto_radius(p);
    std::vector<double> x, logw;
    gauss_jacobi_log(size, 0.0, 0.0, x, logw);
    g.nodes.resize(size);
    g.weights.resize(size);
    g.log_scale.assign(size, 0.0);
    for (int i = 0; i < size; ++i) {
      g.nodes[i] = 0.5 * R * (x[i] + 1);
      g.weights[i] = std::exp(logw[i]) * 0.5 * R;
    }
    g.radius = R;
    g.descriptor = "gauss_legendre(size=" + std::to_string(size) + ",R=" + std::to_string(R) + ")";
  } else {
    double R = radius > 0 ? radius : auto_radius(p);
    double h = R / size;
    g.nodes.resize(size);
    g.weights.assign(size, h);
    g.log_scale.assign(size, 0.0);
    for (int i = 0; i < size; ++i) g.nodes[i] = (i + 0.5) * h;
    g.radius = R;
    g.descriptor = "truncated_uniform(size=" + std::to_string(size) + ",R=" + std::to_string(R) + ")";
  }
  validate(p, g);
  return g;
}

double inner_product(const StateSample& f, const StateSample& g, const RadialGrid& grid) {
  if (f.values.size() != grid.nodes.size() || g.values.size() != grid.nodes.size())
    throw std::invalid_argument("inner_product: samples not on this grid");
  double acc = 0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    acc += grid.weights[i] * f.values[i] * g.values[i];
  return acc;
}

}  // namespace pdmosc
