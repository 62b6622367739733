#include "pdmosc/operators.hpp"

#include <cmath>

namespace pdmosc {

std::string op_name(OpLabel op) {
  switch (op) {
    case OpLabel::pi_r_sq: return "pi_r_sq";
    case OpLabel::Ktilde1: return "Ktilde1";
    case OpLabel::Ktilde2: return "Ktilde2";
    case OpLabel::Ktilde3: return "Ktilde3";
    case OpLabel::K0_const: return "K0_const";
    case OpLabel::Kplus_const: return "Kplus_const";
    case OpLabel::Kminus_const: return "Kminus_const";
    case OpLabel::Aplus: return "Aplus";
    case OpLabel::Aminus: return "Aminus";
  }
  return "?";
}

static bool needs_alpha(OpLabel op) {
  switch (op) {
    case OpLabel::Ktilde2:
    case OpLabel::Ktilde3:
    case OpLabel::Aplus:
    case OpLabel::Aminus:
      return true;
    default:
      return false;
  }
}

static int op_band(OpLabel op) {
  switch (op) {
    case OpLabel::Ktilde1:
    case OpLabel::K0_const:
      return 0;
    case OpLabel::pi_r_sq:
      return -1;  // 1/r^2 and r^2 pieces are dense in the eigenbasis
    default:
      return 1;
  }
}

static PsiDerivs derivs_at(const OscParams& p, const StateSample& st, double r,
                           double log_scale, DerivativeMode mode) {
  if (mode == DerivativeMode::analytic) {
    PsiDerivs d = eval_psi_derivs(p, st.model, st.n, r, log_scale);
    d.psi *= st.norm_constant;
    d.dpsi *= st.norm_constant;
    d.d2psi *= st.norm_constant;
    return d;
  }
  double h = 1e-5 * std::max(1.0, r);
  if (r - h <= 0) h = 0.5 * r;
  double fm = eval_psi(p, st.model, st.n, r - h);
  double f0 = eval_psi(p, st.model, st.n, r);
  double fp = eval_psi(p, st.model, st.n, r + h);
  double scale = std::exp(log_scale) * st.norm_constant;
  auto scaled = [&](double v) { return v == 0 ? 0.0 : v * scale; };
  PsiDerivs d;
  d.psi = scaled(f0);
  d.dpsi = scaled((fp - fm) / (2 * h));
  d.d2psi = scaled((fp - 2 * f0 + fm) / (h * h));
  return d;
}

StateSample apply_operator(OpLabel op, const OscParams& p, const StateSample& state,
                           const RadialGrid& grid, DerivativeMode mode) {
  if (state.values.size() != grid.nodes.size())
    throw std::invalid_argument("apply_operator: state not sampled on this grid");
  if (needs_alpha(op) && !(p.alpha > 0))
    throw std::domain_error("apply_operator: " + op_name(op) + " requires alpha > 0");
  double al = p.alpha, w = p.omega, L = p.L;
  double cent = L * (L + 1);
  StateSample out = state;
  out.normalized = false;

  double delta_n = 0, cres = 0;
  if (op == OpLabel::Aplus || op == OpLabel::Aminus) {
    double s = p.s_value();
    delta_n = delta_eigenvalue(p, state.n);
    cres = (s - L - 1) * (s + L);
    double denom = op == OpLabel::Aplus ? 1 + delta_n : 1 - delta_n;
    if (std::fabs(denom) < 1e-12)
      throw SingularityError("apply_operator: 1 -/+ delta vanishes at n=" +
                             std::to_string(state.n));
  }

  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    double r = grid.nodes[i];
    PsiDerivs d = derivs_at(p, state, r, grid.log_scale[i], mode);
    double f = 1 + al * r * r, fp = 2 * al * r, fpp = 2 * al;
    double pirsq = -(f * f * d.d2psi + 2 * f * fp * d.dpsi +
                     (0.25 * fp * fp + 0.5 * f * fpp) * d.psi);
    double v = 0;
    switch (op) {
      case OpLabel::pi_r_sq:
        v = pirsq;
        break;
      case OpLabel::Ktilde1:
        v = pirsq + (cent / (r * r) + 0.25 * w * w * r * r) * d.psi;
        break;
      case OpLabel::Ktilde2:
        v = map_t(p, r) * d.psi;
        break;
      case OpLabel::Ktilde3:
        v = -8 * al * r * d.dpsi - 4 * al * (r * fp / f) * d.psi + 4 * al * map_t(p, r) * d.psi;
        break;
      case OpLabel::K0_const:
        v = (-d.d2psi + (cent / (r * r) + 0.25 * w * w * r * r) * d.psi) / (2 * w);
        break;
      case OpLabel::Kplus_const:
        v = (d.d2psi + (-cent / (r * r) + 0.25 * w * w * r * r) * d.psi -
             w * (r * d.dpsi + 0.5 * d.psi)) /
            (2 * w);
        break;
      case OpLabel::Kminus_const:
        v = (d.d2psi + (-cent / (r * r) + 0.25 * w * w * r * r) * d.psi +
             w * (r * d.dpsi + 0.5 * d.psi)) /
            (2 * w);
        break;
      case OpLabel::Aplus:
      case OpLabel::Aminus: {
        double t = map_t(p, r);
        double k3 = -8 * al * r * d.dpsi - 4 * al * (r * fp / f) * d.psi + 4 * al * t * d.psi;
        double sgn = op == OpLabel::Aplus ? 1.0 : -1.0;
        v = k3 - 4 * al * t * (1 - sgn * delta_n) * d.psi +
            4 * al * cres / (1 + sgn * delta_n) * d.psi;
        break;
      }
    }
    out.values[i] = v;
  }
  return out;
}

OperatorMatrix build_matrix(OpLabel op, const OscParams& p, int N, const RadialGrid& grid) {
  int G = static_cast<int>(grid.nodes.size());
  Matrix bra(N, G);   // w_g * psi_m(r_g)
  Matrix img(N, G);   // (Op psi_n)(r_g)
  for (int n = 0; n < N; ++n) {
    StateSample st = normalize(
        sample_state(p, needs_alpha(op) || p.alpha > 0 ? Model::pdm : Model::constant_mass, n, grid),
        grid);
    StateSample im = apply_operator(op, p, st, grid);
    for (int g = 0; g < G; ++g) {
      bra(n, g) = grid.weights[g] * st.values[g];
      img(n, g) = im.values[g];
    }
  }
  OperatorMatrix out;
  out.m = matmul_nt(bra, img);
  out.basis_size = N;
  out.band = op_band(op);
  out.trusted = out.band >= 0 ? N - out.band : N - 2;
  out.label = op_name(op);
  return out;
}

OperatorMatrix delta_matrix(const OscParams& p, int N) {
  OperatorMatrix out;
  out.m = Matrix(N, N);
  for (int n = 0; n < N; ++n) out.m(n, n) = delta_eigenvalue(p, n);
  out.basis_size = N;
  out.band = 0;
  out.trusted = N;
  out.label = "delta";
  return out;
}

DeformedLadders build_deformed_ladders(const OscParams& p, int N, const RadialGrid& grid) {
  if (!(p.alpha > 0)) throw std::domain_error("build_deformed_ladders: requires alpha > 0");
  if (N < 6) throw std::invalid_argument("build_deformed_ladders: N >= 6 required");
  double al = p.alpha, lam = p.lambda, s = p.s_value(), L = p.L;
  OperatorMatrix T1 = build_matrix(OpLabel::Ktilde1, p, N, grid);
  OperatorMatrix T2 = build_matrix(OpLabel::Ktilde2, p, N, grid);
  OperatorMatrix T3 = build_matrix(OpLabel::Ktilde3, p, N, grid);

  std::vector<double> dl(N);
  for (int n = 0; n < N; ++n) {
    dl[n] = delta_eigenvalue(p, n);
    if (std::fabs(dl[n] - 2) < 1e-12)
      throw SingularityError("build_deformed_ladders: delta - 2 vanishes at entry n=" +
                             std::to_string(n));
    if (std::fabs(1 - dl[n]) < 1e-12 || std::fabs(1 + dl[n]) < 1e-12)
      throw SingularityError("build_deformed_ladders: 1 -/+ delta vanishes at entry n=" +
                             std::to_string(n));
  }
  double cres = (s - L - 1) * (s + L);

  auto build_A = [&](double sgn) {
    std::vector<double> dcol(N), dres(N);
    for (int n = 0; n < N; ++n) {
      dcol[n] = 1 - sgn * dl[n];
      dres[n] = 4 * al * cres / (1 + sgn * dl[n]);
    }
    Matrix A = T3.m - 4 * al * scale_cols(T2.m, dcol);
    for (int n = 0; n < N; ++n) A(n, n) += dres[n];
    return A;
  };
  Matrix Ap = build_A(+1.0), Am = build_A(-1.0);

  std::vector<double> gp(N), gm(N);
  for (int n = 0; n < N; ++n) {
    gp[n] = (dl[n] + 1) * std::sqrt((dl[n] + 2) / dl[n]);
    gm[n] = (dl[n] + 1) * std::sqrt(dl[n] / (dl[n] + 2));
  }
  DeformedLadders out;
  double c16 = 1.0 / (16 * lam);
  out.Kpa.m = c16 * scale_cols(Ap, gp);
  out.Kma.m = (-c16) * scale_rows(gm, Am);
  out.K0a.m = (1.0 / (4 * lam)) * T1.m;
  int trusted = std::min(T2.trusted, T3.trusted);
  for (OperatorMatrix* om : {&out.K0a, &out.Kpa, &out.Kma}) {
    om->basis_size = N;
    om->trusted = trusted;
  }
  out.K0a.band = 0;
  out.K0a.trusted = N;
  out.Kpa.band = out.Kma.band = 1;
  out.K0a.label = "K0_alpha";
  out.Kpa.label = "Kplus_alpha";
  out.Kma.label = "Kminus_alpha";

  // Alternate printed orderings, valid only when delta > 2 entrywise.
  bool alt_ok = true;
  for (int n = 0; n < N; ++n)
    if (dl[n] - 2 < 0) alt_ok = false;
  if (alt_ok) {
    std::vector<double> hp(N), hm(N);
    for (int n = 0; n < N; ++n) {
      hp[n] = (dl[n] - 1) * std::sqrt(dl[n] / (dl[n] - 2));
      hm[n] = (dl[n] - 1) * std::sqrt((dl[n] - 2) / dl[n]);
    }
    Matrix Kpa_alt = c16 * scale_rows(hp, Ap);
    Matrix Kma_alt = (-c16) * scale_cols(Am, hm);
    int m = trusted - 1;
    auto rel = [&](const Matrix& X, const Matrix& Y) {
      double sc = std::max({1.0, frobenius_block(X, m), frobenius_block(Y, m)});
      return frobenius_block(X - Y, m) / sc;
    };
    out.ordering_residual_plus = rel(out.Kpa.m, Kpa_alt);
    out.ordering_residual_minus = rel(out.Kma.m, Kma_alt);
  }
  return out;
}

}  // namespace pdmosc
