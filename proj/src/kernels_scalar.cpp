#include "tricert/kernels.hpp"

#include <algorithm>

namespace tricert::kern {
namespace {

// std::complex<double> is layout-compatible with double[2]; the kernels work
// on the raw interleaved representation.
inline const double* raw(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(Complex* p) { return reinterpret_cast<double*>(p); }

void matmul_scalar(const Complex* a, const Complex* b, Complex* c, int m, int k, int n) {
  const double* A = raw(a);
  const double* B = raw(b);
  double* C = raw(c);
  for (int i = 0; i < m; ++i) {
    double* crow = C + 2 * std::size_t(n) * i;
    std::fill(crow, crow + 2 * std::size_t(n), 0.0);
    const double* arow = A + 2 * std::size_t(k) * i;
    for (int p = 0; p < k; ++p) {
      const double ar = arow[2 * p];
      const double ai = arow[2 * p + 1];
      const double* brow = B + 2 * std::size_t(n) * p;
      for (int j = 0; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void add_scalar(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
  const double* X = raw(x);
  const double* Y = raw(y);
  double* O = raw(out);
  for (std::size_t i = 0; i < 2 * n; ++i) O[i] = X[i] + Y[i];
}

void sub_scalar(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
  const double* X = raw(x);
  const double* Y = raw(y);
  double* O = raw(out);
  for (std::size_t i = 0; i < 2 * n; ++i) O[i] = X[i] - Y[i];
}

void scale_scalar(Complex alpha, const Complex* x, Complex* out, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  const double* X = raw(x);
  double* O = raw(out);
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = X[2 * i], xi = X[2 * i + 1];
    O[2 * i] = ar * xr - ai * xi;
    O[2 * i + 1] = ar * xi + ai * xr;
  }
}

void axpy_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  const double* X = raw(x);
  double* Y = raw(y);
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = X[2 * i], xi = X[2 * i + 1];
    Y[2 * i] += ar * xr - ai * xi;
    Y[2 * i + 1] += ar * xi + ai * xr;
  }
}

double norm_sq_scalar(const Complex* x, std::size_t n) {
  const double* X = raw(x);
  double s = 0.0;
  for (std::size_t i = 0; i < 2 * n; ++i) s += X[i] * X[i];
  return s;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{
      "scalar", matmul_scalar, add_scalar, sub_scalar, scale_scalar, axpy_scalar, norm_sq_scalar,
  };
  return backend;
}

}  // namespace tricert::kern
