#pragma once

namespace pdmosc::specfun {

/// Generalized Laguerre polynomial L_n^{(a)}(y), forward three-term recurrence.
/// Requires a > -1, y >= 0.
double laguerre(int n, double a, double y);

/// d/dy L_n^{(a)}(y) = -L_{n-1}^{(a+1)}(y); 0 for n = 0.
double laguerre_derivative(int n, double a, double y);

/// d^2/dy^2 L_n^{(a)}(y) = L_{n-2}^{(a+2)}(y); 0 for n < 2.
double laguerre_second_derivative(int n, double a, double y);

/// Jacobi polynomial P_n^{(a,b)}(t), forward three-term recurrence.
/// Requires a > -1, b > -1, |t| <= 1.
double jacobi(int n, double a, double b, double t);

/// d/dt P_n^{(a,b)}(t) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(t); 0 for n = 0.
double jacobi_derivative(int n, double a, double b, double t);

/// d^2/dt^2 P_n^{(a,b)}(t); 0 for n < 2.
double jacobi_second_derivative(int n, double a, double b, double t);

/// ln Gamma(x) for x > 0 (Lanczos approximation, abs error <= 1e-13 on [0.5, 200]).
double log_gamma(double x);

}  // namespace pdmosc::specfun
