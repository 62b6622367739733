#pragma once

#include <string>
#include <vector>

namespace pdmosc {

/// Dense row-major matrix, just big enough for truncated operator algebra.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Matrix identity(int n);
  Matrix transposed() const;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(double c, const Matrix& x);

/// Frobenius norm of the leading m x m block (m <= rows, cols).
double frobenius_block(const Matrix& x, int m);
double max_abs_block(const Matrix& x, int m);

/// Scale columns (j) or rows (i) by a diagonal vector: X * diag(d), diag(d) * X.
Matrix scale_cols(const Matrix& x, const std::vector<double>& d);
Matrix scale_rows(const std::vector<double>& d, const Matrix& x);

namespace kernels {

/// C = A * B. The parallel version owns one output entry per iteration, so
/// results are bitwise identical to the serial reference at any thread count.
Matrix gemm_serial(const Matrix& A, const Matrix& B);
Matrix gemm_parallel(const Matrix& A, const Matrix& B);

/// C = A * B^T (contraction over the shared trailing index; this is the
/// quadrature matrix-element kernel, A = weighted samples, B = images).
Matrix gemm_nt_serial(const Matrix& A, const Matrix& B);
Matrix gemm_nt_parallel(const Matrix& A, const Matrix& B);

}  // namespace kernels

/// Dispatch used by the library; parallel kernels unless PDMOSC_SERIAL is set.
Matrix matmul(const Matrix& A, const Matrix& B);
Matrix matmul_nt(const Matrix& A, const Matrix& B);

}  // namespace pdmosc
