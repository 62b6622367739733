#include "pdmosc/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace pdmosc {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

static void check_same_shape(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix shape mismatch");
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  check_same_shape(x, y);
  Matrix z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  check_same_shape(x, y);
  Matrix z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

Matrix operator*(double c, const Matrix& x) {
  Matrix z = x;
  for (double& v : z.a) v *= c;
  return z;
}

double frobenius_block(const Matrix& x, int m) {
  double acc = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) acc += x(i, j) * x(i, j);
  return std::sqrt(acc);
}

double max_abs_block(const Matrix& x, int m) {
  double acc = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) acc = std::max(acc, std::fabs(x(i, j)));
  return acc;
}

Matrix scale_cols(const Matrix& x, const std::vector<double>& d) {
  if (static_cast<int>(d.size()) != x.cols)
    throw std::invalid_argument("scale_cols: diagonal length mismatch");
  Matrix z = x;
  for (int i = 0; i < z.rows; ++i)
    for (int j = 0; j < z.cols; ++j) z(i, j) *= d[j];
  return z;
}

Matrix scale_rows(const std::vector<double>& d, const Matrix& x) {
  if (static_cast<int>(d.size()) != x.rows)
    throw std::invalid_argument("scale_rows: diagonal length mismatch");
  Matrix z = x;
  for (int i = 0; i < z.rows; ++i)
    for (int j = 0; j < z.cols; ++j) z(i, j) *= d[i];
  return z;
}

namespace kernels {

static void check_mul(const Matrix& A, const Matrix& B, bool bt) {
  int inner = bt ? B.cols : B.rows;
  if (A.cols != inner) throw std::invalid_argument("gemm: inner dimension mismatch");
}

Matrix gemm_serial(const Matrix& A, const Matrix& B) {
  check_mul(A, B, false);
  Matrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      double acc = 0;
      for (int k = 0; k < A.cols; ++k) acc += A(i, k) * B(k, j);
      C(i, j) = acc;
    }
  return C;
}

Matrix gemm_parallel(const Matrix& A, const Matrix& B) {
  check_mul(A, B, false);
  Matrix C(A.rows, B.cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      double acc = 0;
      for (int k = 0; k < A.cols; ++k) acc += A(i, k) * B(k, j);
      C(i, j) = acc;
    }
  return C;
}

Matrix gemm_nt_serial(const Matrix& A, const Matrix& B) {
  check_mul(A, B, true);
  Matrix C(A.rows, B.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.rows; ++j) {
      double acc = 0;
      for (int k = 0; k < A.cols; ++k) acc += A(i, k) * B(j, k);
      C(i, j) = acc;
    }
  return C;
}

Matrix gemm_nt_parallel(const Matrix& A, const Matrix& B) {
  check_mul(A, B, true);
  Matrix C(A.rows, B.rows);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.rows; ++j) {
      double acc = 0;
      for (int k = 0; k < A.cols; ++k) acc += A(i, k) * B(j, k);
      C(i, j) = acc;
    }
  return C;
}

}  // namespace kernels

static bool use_serial() {
  static const bool flag = std::getenv("PDMOSC_SERIAL") != nullptr;
  return flag;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
  return use_serial() ? kernels::gemm_serial(A, B) : kernels::gemm_parallel(A, B);
}

Matrix matmul_nt(const Matrix& A, const Matrix& B) {
  return use_serial() ? kernels::gemm_nt_serial(A, B) : kernels::gemm_nt_parallel(A, B);
}

}  // namespace pdmosc
