#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "pdmosc/params.hpp"

using namespace pdmosc;

TEST_CASE("derive_params validates input") {
  CHECK_THROWS_AS(derive_params(0.0, 0.1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(-1.0, 0.1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(1.0, -0.1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(1.0, 0.1, -1, 3), std::invalid_argument);
  CHECK_THROWS_AS(derive_params(1.0, 0.1, 0, 0), std::invalid_argument);
}

TEST_CASE("effective angular momentum L = l + (d-3)/2") {
  CHECK(derive_params(1, 0, 0, 3).L == doctest::Approx(0.0));
  CHECK(derive_params(1, 0, 2, 3).L == doctest::Approx(2.0));
  CHECK(derive_params(1, 0, 1, 4).L == doctest::Approx(1.5));
  CHECK(derive_params(1, 0, 0, 2).L == doctest::Approx(-0.5));
}

TEST_CASE("one-dimensional sectors map to L = -1 (even) and L = 0 (odd)") {
  OscParams even = derive_params(1, 0.5, 7, 9, OneDimParity::even);
  OscParams odd = derive_params(1, 0.5, 7, 9, OneDimParity::odd);
  CHECK(even.L == doctest::Approx(-1.0));
  CHECK(odd.L == doctest::Approx(0.0));
  CHECK(even.one_dim);
  CHECK(odd.one_dim);
}

TEST_CASE("derived scalars satisfy their defining identities") {
  for (double alpha : {0.001, 0.1, 1.0, 3.0}) {
    for (double omega : {0.5, 1.0, 2.0}) {
      OscParams p = params_from_L(omega, alpha, 1.0);
      CHECK(p.Delta == doctest::Approx(std::sqrt(omega * omega + alpha * alpha)).epsilon(1e-15));
      CHECK(p.lambda == doctest::Approx(0.5 * (alpha + p.Delta)).epsilon(1e-15));
      // lambda (lambda - alpha) = omega^2 / 4
      CHECK(p.lambda * (p.lambda - alpha) == doctest::Approx(omega * omega / 4).epsilon(1e-14));
      // alpha s = lambda exactly as computed
      CHECK(alpha * p.s_value() == doctest::Approx(p.lambda).epsilon(1e-15));
    }
  }
}

TEST_CASE("s is undefined in the constant-mass branch") {
  OscParams p = params_from_L(1.0, 0.0, 0.0);
  CHECK(!p.s);
  CHECK_THROWS_AS(p.s_value(), std::domain_error);
  CHECK(!p.deformed());
  CHECK(params_from_L(1.0, 0.5, 0.0).deformed());
}

TEST_CASE("delta eigenvalues are s + L + 1, s + L + 3, ...") {
  OscParams p = params_from_L(1.0, 1.0, 0.0);
  double s = p.s_value();
  for (int n = 0; n < 12; ++n)
    CHECK(delta_eigenvalue(p, n) == doctest::Approx(s + 2 * n + p.L + 1).epsilon(1e-13));
  CHECK(delta_eigenvalue(p, 5) - delta_eigenvalue(p, 4) == doctest::Approx(2.0));
}

TEST_CASE("lowest weights") {
  OscParams p0 = params_from_L(1.0, 0.0, 0.0);
  LowestWeights w0 = lowest_weights(p0);
  CHECK(w0.k == doctest::Approx(0.75));
  CHECK(!w0.p0);

  OscParams p1 = params_from_L(1.0, 1.0, 0.0);
  LowestWeights w1 = lowest_weights(p1);
  CHECK(w1.k == doctest::Approx(0.75));
  REQUIRE(w1.p0.has_value());
  CHECK(*w1.p0 == doctest::Approx(0.5 * p1.s_value()));
}
