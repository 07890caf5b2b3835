// AVX2+FMA complex kernels. This translation unit is compiled with
// -mavx2 -mfma and only entered after a runtime CPU check (see
// kernels_dispatch.cpp).

#include <immintrin.h>

#include <algorithm>

#include "tricert/kernels.hpp"

namespace tricert::kern {
namespace {

inline const double* raw(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(Complex* p) { return reinterpret_cast<double*>(p); }

// prod = alpha * v for two packed complex doubles: v = [br0 bi0 br1 bi1].
// fmaddsub gives (ar*br - ai*bi, ar*bi + ai*br) per lane pair.
inline __m256d cmul2(__m256d ar, __m256d ai, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swapped));
}

void matmul_avx2(const Complex* a, const Complex* b, Complex* c, int m, int k, int n) {
  const double* A = raw(a);
  const double* B = raw(b);
  double* C = raw(c);
  const int n2 = n & ~1;  // vectorized columns, 2 complex per step
  for (int i = 0; i < m; ++i) {
    double* crow = C + 2 * std::size_t(n) * i;
    std::fill(crow, crow + 2 * std::size_t(n), 0.0);
    const double* arow = A + 2 * std::size_t(k) * i;
    for (int p = 0; p < k; ++p) {
      const double ar = arow[2 * p];
      const double ai = arow[2 * p + 1];
      const __m256d var = _mm256_set1_pd(ar);
      const __m256d vai = _mm256_set1_pd(ai);
      const double* brow = B + 2 * std::size_t(n) * p;
      int j = 0;
      for (; j < n2; j += 2) {
        const __m256d v = _mm256_loadu_pd(brow + 2 * j);
        const __m256d acc = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(acc, cmul2(var, vai, v)));
      }
      for (; j < n; ++j) {
        const double br = brow[2 * j], bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void add_avx2(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
  const double* X = raw(x);
  const double* Y = raw(y);
  double* O = raw(out);
  const std::size_t total = 2 * n;
  std::size_t i = 0;
  for (; i + 4 <= total; i += 4)
    _mm256_storeu_pd(O + i, _mm256_add_pd(_mm256_loadu_pd(X + i), _mm256_loadu_pd(Y + i)));
  for (; i < total; ++i) O[i] = X[i] + Y[i];
}

void sub_avx2(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
  const double* X = raw(x);
  const double* Y = raw(y);
  double* O = raw(out);
  const std::size_t total = 2 * n;
  std::size_t i = 0;
  for (; i + 4 <= total; i += 4)
    _mm256_storeu_pd(O + i, _mm256_sub_pd(_mm256_loadu_pd(X + i), _mm256_loadu_pd(Y + i)));
  for (; i < total; ++i) O[i] = X[i] - Y[i];
}

void scale_avx2(Complex alpha, const Complex* x, Complex* out, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_set1_pd(ai);
  const double* X = raw(x);
  double* O = raw(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    _mm256_storeu_pd(O + 2 * i, cmul2(var, vai, _mm256_loadu_pd(X + 2 * i)));
  for (; i < n; ++i) {
    const double xr = X[2 * i], xi = X[2 * i + 1];
    O[2 * i] = ar * xr - ai * xi;
    O[2 * i + 1] = ar * xi + ai * xr;
  }
}

void axpy_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_set1_pd(ai);
  const double* X = raw(x);
  double* Y = raw(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d acc = _mm256_loadu_pd(Y + 2 * i);
    _mm256_storeu_pd(Y + 2 * i, _mm256_add_pd(acc, cmul2(var, vai, _mm256_loadu_pd(X + 2 * i))));
  }
  for (; i < n; ++i) {
    const double xr = X[2 * i], xi = X[2 * i + 1];
    Y[2 * i] += ar * xr - ai * xi;
    Y[2 * i + 1] += ar * xi + ai * xr;
  }
}

double norm_sq_avx2(const Complex* x, std::size_t n) {
  const double* X = raw(x);
  const std::size_t total = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= total; i += 4) {
    const __m256d v = _mm256_loadu_pd(X + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < total; ++i) s += X[i] * X[i];
  return s;
}

}  // namespace

const Backend* avx2_backend_impl() {
  static const Backend backend{
      "avx2", matmul_avx2, add_avx2, sub_avx2, scale_avx2, axpy_avx2, norm_sq_avx2,
  };
  return &backend;
}

}  // namespace tricert::kern
