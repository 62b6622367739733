#include "pdmosc/states.hpp"

#include <cmath>
#include <stdexcept>

#include "pdmosc/grid.hpp"
#include "pdmosc/specfun.hpp"

namespace pdmosc {

using specfun::jacobi;
using specfun::jacobi_derivative;
using specfun::jacobi_second_derivative;
using specfun::laguerre;
using specfun::laguerre_derivative;
using specfun::laguerre_second_derivative;
using specfun::log_gamma;

double energy_const(const OscParams& p, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return p.omega * (2 * n + p.L + 1.5);
}

double energy_pdm(const OscParams& p, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  double s = p.s_value();
  double L = p.L;
  return p.alpha * (4.0 * n * n + 4.0 * n * (L + 1) + L + 1 + (4.0 * n + 2 * L + 3) * s);
}

double energy(const OscParams& p, Model model, int n) {
  return model == Model::pdm ? energy_pdm(p, n) : energy_const(p, n);
}

double map_t(const OscParams& p, double r) {
  if (!(p.alpha > 0)) throw std::domain_error("map_t: requires alpha > 0");
  if (r < 0) throw std::domain_error("map_t: requires r >= 0");
  double f = 1 + p.alpha * r * r;
  double t1 = 1 - 2 / f;
  double t2 = (-1 + p.alpha * r * r) / f;
  if (std::fabs(t1 - t2) > 1e-15)
    throw std::runtime_error("map_t: the two formulas disagree beyond 1e-15");
  return t1;
}

double eval_psi_const(const OscParams& p, int n, double r) {
  if (!(r > 0)) throw std::domain_error("eval_psi_const: requires r > 0");
  double y = 0.5 * p.omega * r * r;
  double log_env = (p.L + 1) * std::log(r) - 0.5 * y;
  return std::exp(log_env) * laguerre(n, p.L + 0.5, y);
}

double eval_psi_pdm(const OscParams& p, int n, double r) {
  if (!(r > 0)) throw std::domain_error("eval_psi_pdm: requires r > 0");
  double s = p.s_value();
  double f = 1 + p.alpha * r * r;
  double beta = 0.5 * (s + p.L + 2);  // [lambda + (L+2) alpha] / (2 alpha)
  double log_env = (p.L + 1) * std::log(r) - beta * std::log(f);
  double t = map_t(p, r);
  return std::exp(log_env) * jacobi(n, s - 0.5, p.L + 0.5, t);
}

double eval_psi(const OscParams& p, Model model, int n, double r) {
  return model == Model::pdm ? eval_psi_pdm(p, n, r) : eval_psi_const(p, n, r);
}

double eval_psi_scaled(const OscParams& p, Model model, int n, double r, double log_scale) {
  if (!(r > 0)) throw std::domain_error("eval_psi_scaled: requires r > 0");
  double log_env, u;
  if (model == Model::constant_mass) {
    double y = 0.5 * p.omega * r * r;
    log_env = (p.L + 1) * std::log(r) - 0.5 * y;
    u = laguerre(n, p.L + 0.5, y);
  } else {
    double s = p.s_value();
    double f = 1 + p.alpha * r * r;
    double beta = 0.5 * (s + p.L + 2);
    log_env = (p.L + 1) * std::log(r) - beta * std::log(f);
    u = jacobi(n, s - 0.5, p.L + 0.5, map_t(p, r));
  }
  return std::exp(log_env + log_scale) * u;
}

PsiDerivs eval_psi_derivs(const OscParams& p, Model model, int n, double r,
                          double log_scale) {
  if (!(r > 0)) throw std::domain_error("eval_psi_derivs: requires r > 0");
  double L = p.L;
  double u, du, d2u;    // polynomial factor in its own variable
  double v, dv, d2v;    // variable (y or t) and its r-derivatives
  double log_env, lp, lpp;  // log envelope and derivatives of log
  if (model == Model::constant_mass) {
    double w = p.omega;
    double y = 0.5 * w * r * r;
    double a = L + 0.5;
    u = laguerre(n, a, y);
    du = laguerre_derivative(n, a, y);
    d2u = laguerre_second_derivative(n, a, y);
    v = y, dv = w * r, d2v = w;
    log_env = (L + 1) * std::log(r) - 0.5 * y;
    lp = (L + 1) / r - 0.5 * w * r;
    lpp = -(L + 1) / (r * r) - 0.5 * w;
  } else {
    double al = p.alpha;
    double s = p.s_value();
    double f = 1 + al * r * r;
    double fp = 2 * al * r;
    double beta = 0.5 * (s + L + 2);
    double t = map_t(p, r);
    double a = s - 0.5, b = L + 0.5;
    u = jacobi(n, a, b, t);
    du = jacobi_derivative(n, a, b, t);
    d2u = jacobi_second_derivative(n, a, b, t);
    v = t;
    dv = 4 * al * r / (f * f);
    d2v = 4 * al / (f * f) - 16 * al * al * r * r / (f * f * f);
    log_env = (L + 1) * std::log(r) - beta * std::log(f);
    lp = (L + 1) / r - beta * fp / f;
    lpp = -(L + 1) / (r * r) - beta * (2 * al / f - fp * fp / (f * f));
  }
  (void)v;
  double env = std::exp(log_env + log_scale);
  PsiDerivs out;
  out.psi = env * u;
  out.dpsi = env * (lp * u + du * dv);
  out.d2psi = env * ((lpp + lp * lp) * u + 2 * lp * du * dv + d2u * dv * dv + du * d2v);
  return out;
}

StateSample sample_state(const OscParams& p, Model model, int n, const RadialGrid& grid) {
  StateSample st;
  st.n = n;
  st.L = p.L;
  st.model = model;
  st.values.resize(grid.nodes.size());
  for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    st.values[i] = eval_psi_scaled(p, model, n, grid.nodes[i], grid.log_scale[i]);
  return st;
}

StateSample normalize(const StateSample& state, const RadialGrid& grid) {
  if (state.values.size() != grid.nodes.size())
    throw std::invalid_argument("normalize: state sampled on a different grid");
  double nrm2 = 0;
  double peak = 0;
  for (std::size_t i = 0; i < state.values.size(); ++i) {
    nrm2 += grid.weights[i] * state.values[i] * state.values[i];
    peak = std::max(peak, std::fabs(state.values[i]));
  }
  if (!(nrm2 > 0) || !std::isfinite(nrm2))
    throw std::runtime_error("normalize: quadrature norm is zero or not finite");
  // Sign from the last node carrying weight: beyond the outermost zero.
  double sign = 1.0;
  for (std::size_t i = state.values.size(); i-- > 0;) {
    if (std::fabs(state.values[i]) > 1e-13 * peak) {
      sign = state.values[i] > 0 ? 1.0 : -1.0;
      break;
    }
  }
  StateSample out = state;
  out.norm_constant = sign / std::sqrt(nrm2);
  for (double& v : out.values) v *= out.norm_constant;
  out.normalized = true;
  return out;
}

double norm_squared_closed_form(const OscParams& p, Model model, int n) {
  double L = p.L;
  if (model == Model::constant_mass) {
    double w = p.omega;
    double lg = (L + 1) * std::log(2 / w) - 0.5 * std::log(2 * w) +
                log_gamma(n + L + 1.5) - log_gamma(n + 1.0);
    return std::exp(lg);
  }
  double s = p.s_value();
  double lg = -(L + 1.5) * std::log(p.alpha) - std::log(2 * (2 * n + s + L + 1)) +
              log_gamma(n + s + 0.5) + log_gamma(n + L + 1.5) -
              log_gamma(n + s + L + 1) - log_gamma(n + 1.0);
  return std::exp(lg);
}

double casimir_value_const(const OscParams& p) {
  return 0.25 * (p.L + 1.5) * (p.L - 0.5);
}

double casimir_value_pdm(const OscParams& p) {
  double s_check = p.s_value();
  (void)s_check;
  double al = p.alpha, lam = p.lambda, L = p.L;
  return 0.25 * (1 - al / lam) * (L + 1.5) * (L - 0.5) -
         3 * al * al / (16 * lam * lam) * L * (L + 1);
}

}  // namespace pdmosc
