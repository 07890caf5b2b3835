#pragma once

// Core value types: dense complex matrices, tolerance context, polynomials
// and orthonormal subspace bases. Arithmetic is routed through the kernel
// layer (kernels.hpp).

#include <complex>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricert {

using Complex = std::complex<double>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computed quantity contradicts what the underlying theory
// guarantees; signals a tolerance/conditioning breakdown, not a math failure.
struct NumericalBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleDisagreement : NumericalBreakdown {
  using NumericalBreakdown::NumericalBreakdown;
};

/// Thresholds behind every rank, zero and eigenvalue-cluster decision.
/// All values are relative to the scale of the operand they are applied to.
struct Tolerances {
  double rank_tol;         // singular-value threshold, relative to sigma_max
  double eig_cluster_tol;  // cluster-merge radius, relative to the operator norm
  double zero_tol;         // entrywise / residual zero test, relative

  static Tolerances for_dim(int dim);
};

/// Dense complex matrix, row-major. Operators in this library are square;
/// rectangular shapes appear as subspace bases and internal factors.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int rows, int cols);
  static ComplexMatrix diagonal(const std::vector<Complex>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  int dim() const;  // throws unless square

  Complex& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(Complex alpha) const;
  ComplexMatrix operator-() const;
  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);

  ComplexMatrix adjoint() const;  // conjugate transpose
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix block(int row0, int col0, int nrows, int ncols) const;
  void set_block(int row0, int col0, const ComplexMatrix& values);
  ComplexMatrix column(int j) const;

  bool operator==(const ComplexMatrix& rhs) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

inline ComplexMatrix operator*(Complex alpha, const ComplexMatrix& m) { return m * alpha; }

/// Columns of `a` followed by columns of `b` (row counts must match).
ComplexMatrix hcat(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max |entry| strictly below the main diagonal.
double strict_lower_max_abs(const ComplexMatrix& m);

/// Max |entry| off the main diagonal.
double off_diagonal_max_abs(const ComplexMatrix& m);

/// Monic polynomial, coefficients lowest degree first.
struct Polynomial {
  std::vector<Complex> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex operator()(Complex z) const;
  ComplexMatrix operator()(const ComplexMatrix& m) const;  // Horner
  // Trims exactly-zero leading coefficients and rescales to leading 1.
  void normalize();
};

/// Orthonormal basis of a subspace, with the tolerances that produced it.
struct SubspaceBasis {
  int ambient_dim = 0;
  ComplexMatrix columns;  // ambient_dim x count, orthonormal
  Tolerances tol{};

  int count() const { return columns.cols(); }
  bool trivial() const { return count() == 0; }
  bool full() const { return count() == ambient_dim; }
};

}  // namespace tricert
