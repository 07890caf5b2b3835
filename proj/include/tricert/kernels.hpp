#pragma once

// Dense complex arithmetic kernels. A scalar reference implementation is
// always available; an AVX2+FMA variant is compiled when the toolchain
// supports it and selected at runtime when the CPU does. The two paths are
// equivalence-tested against each other (see tests/test_kernels.cpp).
//
// All arrays are interleaved complex doubles (re, im), row-major for
// matrices. Output buffers must not alias inputs unless stated otherwise.

#include <complex>
#include <cstddef>

namespace tricert::kern {

using Complex = std::complex<double>;

// C (m x n) = A (m x k) * B (k x n). C must not alias A or B.
using MatmulFn = void (*)(const Complex*, const Complex*, Complex*, int, int, int);
// out = x op y, elementwise over n entries. out may alias x or y.
using BinaryFn = void (*)(const Complex*, const Complex*, Complex*, std::size_t);
// out = alpha * x. out may alias x.
using ScaleFn = void (*)(Complex, const Complex*, Complex*, std::size_t);
// y += alpha * x.
using AxpyFn = void (*)(Complex, const Complex*, Complex*, std::size_t);
// sum of |x_i|^2.
using NormSqFn = double (*)(const Complex*, std::size_t);

struct Backend {
  const char* name;
  MatmulFn matmul;
  BinaryFn add;
  BinaryFn sub;
  ScaleFn scale;
  AxpyFn axpy;
  NormSqFn norm_sq;
};

const Backend& scalar_backend();

// AVX2+FMA variant; nullptr when the build or the running CPU lacks support.
const Backend* avx2_backend();

// Backend used by ComplexMatrix arithmetic. Picks the best supported variant
// once per process; the TRICERT_KERNELS environment variable ("scalar" or
// "avx2") pins the choice.
const Backend& active_backend();

}  // namespace tricert::kern
