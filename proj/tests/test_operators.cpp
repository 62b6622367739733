#include <cmath>
#include <vector>

#include "doctest.h"
#include "pdmosc/grid.hpp"
#include "pdmosc/operators.hpp"
#include "pdmosc/states.hpp"

using namespace pdmosc;

namespace {

RadialGrid grid_for(const OscParams& p, int G = 160) {
  return build_grid(p, G, GridScheme::t_mapped_gauss);
}

double pointwise_residual(const StateSample& lhs, double c, const StateSample& rhs) {
  double worst = 0, scale = 0;
  for (double v : rhs.values) scale = std::max(scale, std::fabs(c * v));
  for (std::size_t i = 0; i < lhs.values.size(); ++i)
    worst = std::max(worst, std::fabs(lhs.values[i] - c * rhs.values[i]));
  return worst / std::max(scale, 1.0);
}

}  // namespace

TEST_CASE("Ktilde1 acts diagonally with the closed-form energies") {
  OscParams p = params_from_L(1.0, 0.5, 1.0);
  RadialGrid g = grid_for(p);
  for (int n = 0; n < 4; ++n) {
    StateSample psi = normalize(sample_state(p, Model::pdm, n, g), g);
    StateSample out = apply_operator(OpLabel::Ktilde1, p, psi, g);
    CHECK(pointwise_residual(out, energy_pdm(p, n), psi) < 1e-8);
  }
}

TEST_CASE("constant-mass Hamiltonian eigen-action") {
  OscParams p = params_from_L(2.0, 0.0, 0.0);
  RadialGrid g = grid_for(p);
  for (int n = 0; n < 4; ++n) {
    StateSample psi = normalize(sample_state(p, Model::constant_mass, n, g), g);
    StateSample out = apply_operator(OpLabel::Ktilde1, p, psi, g);
    CHECK(pointwise_residual(out, energy_const(p, n), psi) < 1e-8);
  }
}

TEST_CASE("K0 diagonals: n + k at alpha = 0 and E/(4 lambda) otherwise") {
  OscParams pc = params_from_L(1.0, 0.0, 1.0);
  RadialGrid gc = grid_for(pc);
  OperatorMatrix K0 = build_matrix(OpLabel::K0_const, pc, 12, gc);
  double k = lowest_weights(pc).k;
  for (int n = 0; n < K0.trusted; ++n)
    CHECK(K0.m(n, n) == doctest::Approx(n + k).epsilon(1e-9));

  OscParams pd = params_from_L(1.0, 0.5, 1.0);
  RadialGrid gd = grid_for(pd);
  DeformedLadders D = build_deformed_ladders(pd, 12, gd);
  for (int n = 0; n < D.K0a.trusted; ++n)
    CHECK(D.K0a.m(n, n) ==
          doctest::Approx(energy_pdm(pd, n) / (4 * pd.lambda)).epsilon(1e-9));
}

TEST_CASE("su(1,1) ladder matrix elements and band structure") {
  OscParams p = params_from_L(1.0, 0.0, 0.5);
  RadialGrid g = grid_for(p);
  OperatorMatrix Kp = build_matrix(OpLabel::Kplus_const, p, 12, g);
  OperatorMatrix Km = build_matrix(OpLabel::Kminus_const, p, 12, g);
  for (int n = 0; n + 1 < Kp.trusted; ++n) {
    double c = std::sqrt((n + 1) * (n + 1 + p.L + 0.5));
    CHECK(Kp.m(n + 1, n) == doctest::Approx(c).epsilon(1e-9));
    CHECK(Km.m(n, n + 1) == doctest::Approx(c).epsilon(1e-9));
  }
  // single off-diagonal band; everything else is truncation noise
  for (int i = 0; i < Kp.trusted; ++i)
    for (int j = 0; j < Kp.trusted; ++j)
      if (i != j + 1) CHECK(std::fabs(Kp.m(i, j)) < 1e-9);
  // K- annihilates the lowest state
  for (int i = 0; i < Km.trusted; ++i) CHECK(std::fabs(Km.m(i, 0)) < 1e-9);
}

TEST_CASE("deformed ladder matrix elements") {
  OscParams p = params_from_L(1.0, 1.0, 0.0);
  RadialGrid g = grid_for(p);
  DeformedLadders D = build_deformed_ladders(p, 12, g);
  double s = p.s_value(), c0 = p.alpha / p.lambda;
  for (int n = 0; n + 1 < D.Kpa.trusted; ++n) {
    double c = c0 * std::sqrt((n + 1) * (n + p.L + 1.5) * (n + s + p.L + 1) * (n + s + 0.5));
    CHECK(D.Kpa.m(n + 1, n) == doctest::Approx(c).epsilon(1e-8));
    CHECK(D.Kma.m(n, n + 1) == doctest::Approx(c).epsilon(1e-8));
  }
  for (int i = 0; i < D.Kma.trusted; ++i) CHECK(std::fabs(D.Kma.m(i, 0)) < 1e-8);
  // both printed orderings exist here and agree
  REQUIRE(D.ordering_residual_plus.has_value());
  REQUIRE(D.ordering_residual_minus.has_value());
  CHECK(*D.ordering_residual_plus < 1e-8);
  CHECK(*D.ordering_residual_minus < 1e-8);
}

TEST_CASE("alternate orderings are undefined in the even 1D sector at large alpha") {
  OscParams p = derive_params(1.0, 1.0, 0, 3, OneDimParity::even);  // L = -1, s < 2
  REQUIRE(p.L == -1.0);
  RadialGrid g = grid_for(p);
  DeformedLadders D = build_deformed_ladders(p, 10, g);
  CHECK_FALSE(D.ordering_residual_plus.has_value());
  CHECK_FALSE(D.ordering_residual_minus.has_value());
}

TEST_CASE("Ktilde2 is a contraction and Ktilde3 is antisymmetric") {
  OscParams p = params_from_L(1.0, 0.5, 0.0);
  RadialGrid g = grid_for(p);
  OperatorMatrix T2 = build_matrix(OpLabel::Ktilde2, p, 12, g);
  OperatorMatrix T3 = build_matrix(OpLabel::Ktilde3, p, 12, g);
  for (int n = 0; n < T2.trusted; ++n) {
    CHECK(T2.m(n, n) > -1.0);
    CHECK(T2.m(n, n) < 1.0);
    CHECK(T2.m(n, n) == doctest::Approx(T2.m(n, n)));
  }
  for (int i = 0; i < T2.trusted; ++i)
    for (int j = 0; j < T2.trusted; ++j) {
      CHECK(T2.m(i, j) == doctest::Approx(T2.m(j, i)).epsilon(1e-10).scale(1.0));
      CHECK(T3.m(i, j) == doctest::Approx(-T3.m(j, i)).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("analytic derivatives agree with finite differences of the closed form") {
  OscParams p = params_from_L(1.0, 0.5, 1.0);
  RadialGrid g = grid_for(p, 120);
  StateSample psi = normalize(sample_state(p, Model::pdm, 2, g), g);
  StateSample a = apply_operator(OpLabel::pi_r_sq, p, psi, g, DerivativeMode::analytic);
  StateSample fd = apply_operator(OpLabel::pi_r_sq, p, psi, g, DerivativeMode::finite_difference);
  double worst = 0, scale = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, std::fabs(a.values[i] - fd.values[i]));
    scale = std::max(scale, std::fabs(a.values[i]));
  }
  // the finite-difference step limits agreement to ~1e-4 of the peak
  CHECK(worst / scale < 2e-4);
}

TEST_CASE("delta_matrix diagonal") {
  OscParams p = params_from_L(1.0, 0.5, 1.0);
  OperatorMatrix d = delta_matrix(p, 8);
  double s = p.s_value();
  for (int n = 0; n < 8; ++n)
    CHECK(d.m(n, n) == doctest::Approx(s + 2 * n + p.L + 1).epsilon(1e-13));
}

TEST_CASE("operator labels are distinct and non-empty") {
  CHECK_FALSE(op_name(OpLabel::Ktilde1).empty());
  CHECK(op_name(OpLabel::Kplus_const) != op_name(OpLabel::Kminus_const));
  CHECK(op_name(OpLabel::Aplus) != op_name(OpLabel::Aminus));
}
