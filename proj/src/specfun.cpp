#include "pdmosc/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace pdmosc::specfun {

static void check_laguerre(double a, double y) {
  if (a <= -1) throw std::domain_error("laguerre: require a > -1");
  if (y < 0) throw std::domain_error("laguerre: require y >= 0");
}

double laguerre(int n, double a, double y) {
  check_laguerre(a, y);
  if (n < 0) throw std::domain_error("laguerre: require n >= 0");
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + a - y;
  for (int k = 2; k <= n; ++k) {
    double lp1 = ((2 * k - 1 + a - y) * l - (k - 1 + a) * lm1) / k;
    lm1 = l;
    l = lp1;
  }
  return l;
}

double laguerre_derivative(int n, double a, double y) {
  check_laguerre(a, y);
  if (n == 0) return 0.0;
  return -laguerre(n - 1, a + 1, y);
}

double laguerre_second_derivative(int n, double a, double y) {
  check_laguerre(a, y);
  if (n < 2) return 0.0;
  return laguerre(n - 2, a + 2, y);
}

static void check_jacobi(double a, double b, double t) {
  if (a <= -1 || b <= -1) throw std::domain_error("jacobi: require a, b > -1");
  if (t < -1 || t > 1) throw std::domain_error("jacobi: require |t| <= 1");
}

double jacobi(int n, double a, double b, double t) {
  check_jacobi(a, b, t);
  if (n < 0) throw std::domain_error("jacobi: require n >= 0");
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = (a + 1) + 0.5 * (a + b + 2) * (t - 1);
  for (int k = 2; k <= n; ++k) {
    double c = 2 * k + a + b;
    double a1 = 2 * k * (k + a + b) * (c - 2);
    double a2 = (c - 1) * (a * a - b * b);
    double a3 = (c - 2) * (c - 1) * c;
    double a4 = 2 * (k + a - 1) * (k + b - 1) * c;
    double pp1 = ((a2 + a3 * t) * p - a4 * pm1) / a1;
    pm1 = p;
    p = pp1;
  }
  return p;
}

double jacobi_derivative(int n, double a, double b, double t) {
  check_jacobi(a, b, t);
  if (n == 0) return 0.0;
  return 0.5 * (n + a + b + 1) * jacobi(n - 1, a + 1, b + 1, t);
}

double jacobi_second_derivative(int n, double a, double b, double t) {
  check_jacobi(a, b, t);
  if (n < 2) return 0.0;
  return 0.25 * (n + a + b + 1) * (n + a + b + 2) * jacobi(n - 2, a + 2, b + 2, t);
}

double log_gamma(double x) {
  if (!(x > 0)) throw std::domain_error("log_gamma: require x > 0");
  // Lanczos, g = 7, 9 terms.
  static const double coef[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  double z = x - 1.0;
  double sum = coef[0];
  for (int i = 1; i < 9; ++i) sum += coef[i] / (z + i);
  double t = z + 7.5;
  return 0.5 * std::log(2 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace pdmosc::specfun
