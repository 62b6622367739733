#include "pdmosc/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>

namespace pdmosc {

bool VerificationReport::all_pass() const {
  for (const auto& r : residuals)
    if (!r.pass) return false;
  return !residuals.empty();
}

std::string iso8601_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B) {
  if (A.basis_size != B.basis_size)
    throw std::invalid_argument("commutator: basis size mismatch");
  OperatorMatrix out;
  out.m = matmul(A.m, B.m) - matmul(B.m, A.m);
  out.basis_size = A.basis_size;
  int margin = (A.band < 0 || B.band < 0) ? 2 : std::max({A.band, B.band, 1});
  out.trusted = std::min(A.trusted, B.trusted) - margin;
  out.band = (A.band < 0 || B.band < 0) ? -1 : A.band + B.band;
  out.label = "[" + A.label + "," + B.label + "]";
  return out;
}

double relative_residual(const Matrix& X, const Matrix& Y, int m) {
  double sc = std::max({1.0, frobenius_block(X, m), frobenius_block(Y, m)});
  return frobenius_block(X - Y, m) / sc;
}

namespace {

void push(VerificationReport& rep, const std::string& id, double res, double tol) {
  rep.residuals.push_back({id, res, tol, res <= tol, std::nullopt});
}

void push_skipped(VerificationReport& rep, const std::string& id, const std::string& note,
                  double tol) {
  rep.residuals.push_back({id, std::nan(""), tol, false, note});
}

Matrix scaled_identity(int n, double c) {
  Matrix m = Matrix::identity(n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

}  // namespace

VerificationReport verify_su11(const OscParams& p, int N, const VerifyOptions& opt) {
  if (p.alpha != 0)
    throw std::invalid_argument("verify_su11: constant-mass branch requires alpha = 0");
  int G = opt.grid_size > 0 ? opt.grid_size
          : opt.scheme == GridScheme::t_mapped_gauss ? std::max(200, 2 * N + 32)
                                                     : 50000;
  double tol = opt.tolerance > 0 ? opt.tolerance : 1e-8;
  RadialGrid grid = build_grid(p, G, opt.scheme);

  OperatorMatrix K0 = build_matrix(OpLabel::K0_const, p, N, grid);
  OperatorMatrix Kp = build_matrix(OpLabel::Kplus_const, p, N, grid);
  OperatorMatrix Km = build_matrix(OpLabel::Kminus_const, p, N, grid);

  VerificationReport rep;
  rep.params = p;
  rep.basis_size = N;
  rep.grid_descriptor = grid.descriptor;
  rep.timestamp = iso8601_now();
  int m = N - 3;
  rep.trusted_size = m;

  push(rep, "su11_comm_K0_Kplus", relative_residual(commutator(K0, Kp).m, Kp.m, m), tol);
  push(rep, "su11_comm_K0_Kminus", relative_residual(commutator(K0, Km).m, (-1.0) * Km.m, m), tol);
  push(rep, "su11_comm_Kplus_Kminus",
       relative_residual(commutator(Kp, Km).m, (-2.0) * K0.m, m), tol);
  push(rep, "su11_herm_K0", relative_residual(K0.m, K0.m.transposed(), m), tol);
  push(rep, "su11_herm_ladder", relative_residual(Kp.m.transposed(), Km.m, m), tol);

  double k = lowest_weights(p).k;
  Matrix C = (-1.0) * matmul(Kp.m, Km.m) + matmul(K0.m, K0.m - Matrix::identity(N));
  push(rep, "su11_casimir", relative_residual(C, scaled_identity(N, k * (k - 1)), m), tol);

  double devp = 0, devm = 0;
  for (int n = 0; n + 1 < m; ++n) {
    double cp = std::sqrt((n + 1) * (n + p.L + 1.5));
    devp = std::max(devp, std::fabs(Kp.m(n + 1, n) - cp) / cp);
    double cm = std::sqrt((n + 1) * (n + 1 + p.L + 0.5));
    devm = std::max(devm, std::fabs(Km.m(n, n + 1) - cm) / cm);
  }
  push(rep, "su11_ladder_plus", devp, tol);
  push(rep, "su11_ladder_minus", devm, tol);
  return rep;
}

VerificationReport verify_qj3(const OscParams& p, int N, const VerifyOptions& opt) {
  double s = p.s_value();
  int G = opt.grid_size > 0 ? opt.grid_size
          : opt.scheme == GridScheme::t_mapped_gauss ? std::max(80, 2 * N + 32)
                                                     : 50000;
  double tol = opt.tolerance > 0 ? opt.tolerance : 1e-7;
  RadialGrid grid = build_grid(p, G, opt.scheme);
  double al = p.alpha, L = p.L;

  OperatorMatrix T1 = build_matrix(OpLabel::Ktilde1, p, N, grid);
  OperatorMatrix T2 = build_matrix(OpLabel::Ktilde2, p, N, grid);
  OperatorMatrix T3 = build_matrix(OpLabel::Ktilde3, p, N, grid);

  VerificationReport rep;
  rep.params = p;
  rep.basis_size = N;
  rep.grid_descriptor = grid.descriptor;
  rep.timestamp = iso8601_now();
  int m = N - 3;
  rep.trusted_size = m;

  push(rep, "qj3_comm_12", relative_residual(commutator(T1, T2).m, T3.m, m), tol);
  Matrix rhs23 = 8 * al * (Matrix::identity(N) - matmul(T2.m, T2.m));
  push(rep, "qj3_comm_23", relative_residual(commutator(T2, T3).m, rhs23, m), tol);
  double c1 = 16 * al * al * (s * (s - 1) + L * (L + 1) - 1);
  double c2 = 16 * al * al * (s * (s - 1) - L * (L + 1));
  Matrix rhs31 = (-8 * al) * (matmul(T1.m, T2.m) + matmul(T2.m, T1.m)) - c1 * T2.m -
                 scaled_identity(N, c2);
  push(rep, "qj3_comm_31", relative_residual(commutator(T3, T1).m, rhs31, m), tol);
  return rep;
}

VerificationReport verify_deformed(const OscParams& p, int N, const VerifyOptions& opt) {
  double s = p.s_value();
  int G = opt.grid_size > 0 ? opt.grid_size
          : opt.scheme == GridScheme::t_mapped_gauss ? std::max(80, 2 * N + 32)
                                                     : 50000;
  double tol = opt.tolerance > 0 ? opt.tolerance : 1e-7;
  double tol_tight = opt.tolerance > 0 ? opt.tolerance : 1e-8;
  RadialGrid grid = build_grid(p, G, opt.scheme);
  double al = p.alpha, lam = p.lambda, L = p.L;

  VerificationReport rep;
  rep.params = p;
  rep.basis_size = N;
  rep.grid_descriptor = grid.descriptor;
  rep.timestamp = iso8601_now();

  DeformedLadders lad;
  try {
    lad = build_deformed_ladders(p, N, grid);
  } catch (const SingularityError& e) {
    rep.trusted_size = 0;
    push_skipped(rep, "deformed_suite", std::string("skipped: singular (") + e.what() + ")", tol);
    return rep;
  }
  int m = N - 4;
  rep.trusted_size = m;

  // The alternate printed ordering only exists when delta > 2 entrywise
  // (delta_0 = s can drop below 2 for L = -1); there is nothing to check
  // then, so the skip does not count as a failure.
  if (lad.ordering_residual_plus)
    push(rep, "def_ordering_plus", *lad.ordering_residual_plus, tol_tight);
  else
    rep.residuals.push_back({"def_ordering_plus", std::nan(""), tol_tight, true,
                             "skipped: alternate ordering undefined (delta < 2)"});
  if (lad.ordering_residual_minus)
    push(rep, "def_ordering_minus", *lad.ordering_residual_minus, tol_tight);
  else
    rep.residuals.push_back({"def_ordering_minus", std::nan(""), tol_tight, true,
                             "skipped: alternate ordering undefined (delta < 2)"});

  const OperatorMatrix &K0a = lad.K0a, &Kpa = lad.Kpa, &Kma = lad.Kma;
  std::vector<double> dl(N);
  for (int n = 0; n < N; ++n) dl[n] = delta_eigenvalue(p, n);
  std::vector<double> dlp1(N), dlm1(N);
  for (int n = 0; n < N; ++n) dlp1[n] = dl[n] + 1, dlm1[n] = dl[n] - 1;

  double c = al / lam;
  push(rep, "def_comm_0p_right",
       relative_residual(commutator(K0a, Kpa).m, c * scale_cols(Kpa.m, dlp1), m), tol);
  push(rep, "def_comm_0p_left",
       relative_residual(commutator(K0a, Kpa).m, c * scale_rows(dlm1, Kpa.m), m), tol);
  push(rep, "def_comm_0m_right",
       relative_residual(commutator(K0a, Kma).m, (-c) * scale_cols(Kma.m, dlm1), m), tol);
  push(rep, "def_comm_0m_left",
       relative_residual(commutator(K0a, Kma).m, (-c) * scale_rows(dlp1, Kma.m), m), tol);

  Matrix rhs_pm = (-c) * scale_rows(dl, 2.0 * K0a.m + scaled_identity(N, al / (4 * lam)));
  push(rep, "def_comm_pm", relative_residual(commutator(Kpa, Kma).m, rhs_pm, m), tol);

  push(rep, "def_herm_K0", relative_residual(K0a.m, K0a.m.transposed(), m), tol);
  push(rep, "def_herm_ladder", relative_residual(Kpa.m.transposed(), Kma.m, m), tol);

  std::vector<double> d54(N);
  for (int n = 0; n < N; ++n) d54[n] = dl[n] - 1.25;
  Matrix Ca = (-1.0) * matmul(Kpa.m, Kma.m) + matmul(K0a.m, K0a.m) -
              c * scale_rows(d54, K0a.m);
  for (int n = 0; n < N; ++n) Ca(n, n) -= al * al / (8 * lam * lam) * dl[n];
  push(rep, "def_casimir", relative_residual(Ca, scaled_identity(N, casimir_value_pdm(p)), m),
       tol);

  double devp = 0, devm = 0;
  for (int n = 0; n + 1 < m; ++n) {
    double cp = c * std::sqrt((n + 1) * (n + L + 1.5) * (n + s + L + 1) * (n + s + 0.5));
    devp = std::max(devp, std::fabs(Kpa.m(n + 1, n) - cp) / cp);
    int q = n + 1;
    double cm = c * std::sqrt(q * (q + L + 0.5) * (q + s + L) * (q + s - 0.5));
    devm = std::max(devm, std::fabs(Kma.m(q - 1, q) - cm) / cm);
  }
  push(rep, "def_ladder_plus", devp, tol_tight);
  push(rep, "def_ladder_minus", devm, tol_tight);

  double col0 = 0;
  for (int i = 0; i < m; ++i) col0 += Kma.m(i, 0) * Kma.m(i, 0);
  push(rep, "def_annihilation", std::sqrt(col0), tol);
  return rep;
}

VerificationReport verify_limit(double omega, double L, const std::vector<double>& alphas,
                                int N, const VerifyOptions& opt) {
  if (alphas.size() < 2) throw std::invalid_argument("verify_limit: need >= 2 alphas");
  for (std::size_t i = 1; i < alphas.size(); ++i)
    if (!(alphas[i] < alphas[i - 1]) || !(alphas[i] > 0))
      throw std::invalid_argument("verify_limit: alphas must be positive and decreasing");

  OscParams p0 = params_from_L(omega, 0.0, L);
  int G = opt.grid_size > 0 ? opt.grid_size
          : opt.scheme == GridScheme::t_mapped_gauss ? std::max(200, 2 * N + 32)
                                                     : 50000;
  RadialGrid cgrid = build_grid(p0, G, opt.scheme);
  OperatorMatrix K0 = build_matrix(OpLabel::K0_const, p0, N, cgrid);
  OperatorMatrix Kp = build_matrix(OpLabel::Kplus_const, p0, N, cgrid);
  OperatorMatrix Km = build_matrix(OpLabel::Kminus_const, p0, N, cgrid);

  VerificationReport rep;
  rep.params = p0;
  rep.basis_size = N;
  rep.grid_descriptor = cgrid.descriptor;
  rep.timestamp = iso8601_now();
  int m = N - 4;
  rep.trusted_size = m;

  std::vector<double> D;
  for (double al : alphas) {
    OscParams p = params_from_L(omega, al, L);
    RadialGrid grid = build_grid(p, G, opt.scheme);
    DeformedLadders lad = build_deformed_ladders(p, N, grid);
    double d = std::max({max_abs_block(lad.K0a.m - K0.m, m), max_abs_block(lad.Kpa.m - Kp.m, m),
                         max_abs_block(lad.Kma.m - Km.m, m)});
    D.push_back(d);
    char id[64];
    std::snprintf(id, sizeof id, "limit_D_alpha_%g", al);
    // Informational entries: D itself must merely be finite.
    push(rep, id, d, std::numeric_limits<double>::infinity());
  }
  bool monotone = true;
  for (std::size_t i = 1; i < D.size(); ++i)
    if (!(D[i] < D[i - 1])) monotone = false;
  push(rep, "limit_monotone", monotone ? 0.0 : 1.0, 0.5);

  // Empirical first order: D/alpha ratios of consecutive levels within 10x.
  double worst = 1.0;
  for (std::size_t i = 1; i < D.size(); ++i) {
    double q1 = D[i - 1] / alphas[i - 1], q2 = D[i] / alphas[i];
    double ratio = q1 > q2 ? q1 / q2 : q2 / q1;
    worst = std::max(worst, ratio);
  }
  push(rep, "limit_first_order", worst, 10.0);
  return rep;
}

}  // namespace pdmosc
