#include "tricert/matrix.hpp"

#include <cmath>
#include <limits>

#include "tricert/kernels.hpp"

namespace tricert {

Tolerances Tolerances::for_dim(int dim) {
  return Tolerances{
      .rank_tol = dim * std::numeric_limits<double>::epsilon() * 64.0,
      .eig_cluster_tol = 1e-8,
      .zero_tol = 1e-10,
  };
}

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
  data_.assign(std::size_t(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(std::size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged initializer rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
  const int n = static_cast<int>(entries.size());
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

int ComplexMatrix::dim() const {
  if (!is_square()) throw DimensionMismatch("operator matrix must be square");
  return rows_;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix add: shape mismatch");
  ComplexMatrix out(rows_, cols_);
  kern::active_backend().add(data(), rhs.data(), out.data(), size());
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sub: shape mismatch");
  ComplexMatrix out(rows_, cols_);
  kern::active_backend().sub(data(), rhs.data(), out.data(), size());
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix mul: inner dimension mismatch");
  ComplexMatrix out(rows_, rhs.cols_);
  if (size() != 0 && rhs.size() != 0)
    kern::active_backend().matmul(data(), rhs.data(), out.data(), rows_, cols_, rhs.cols_);
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex alpha) const {
  ComplexMatrix out(rows_, cols_);
  kern::active_backend().scale(alpha, data(), out.data(), size());
  return out;
}

ComplexMatrix ComplexMatrix::operator-() const { return *this * Complex(-1.0, 0.0); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix add: shape mismatch");
  kern::active_backend().add(data(), rhs.data(), data(), size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sub: shape mismatch");
  kern::active_backend().sub(data(), rhs.data(), data(), size());
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  const int n = std::min(rows_, cols_);
  for (int i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kern::active_backend().norm_sq(data(), size()));
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix ComplexMatrix::block(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
    throw DimensionMismatch("block: out of range");
  ComplexMatrix out(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

void ComplexMatrix::set_block(int row0, int col0, const ComplexMatrix& values) {
  if (row0 < 0 || col0 < 0 || row0 + values.rows() > rows_ || col0 + values.cols() > cols_)
    throw DimensionMismatch("set_block: out of range");
  for (int i = 0; i < values.rows(); ++i)
    for (int j = 0; j < values.cols(); ++j) (*this)(row0 + i, col0 + j) = values(i, j);
}

ComplexMatrix ComplexMatrix::column(int j) const { return block(0, j, rows_, 1); }

ComplexMatrix hcat(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw DimensionMismatch("hcat: row mismatch");
  ComplexMatrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

double strict_lower_max_abs(const ComplexMatrix& m) {
  double r = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < std::min(i, m.cols()); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

double off_diagonal_max_abs(const ComplexMatrix& m) {
  double r = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexMatrix Polynomial::operator()(const ComplexMatrix& m) const {
  const int n = m.dim();
  ComplexMatrix acc(n, n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * m;
    for (int i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

void Polynomial::normalize() {
  while (coeffs.size() > 1 && coeffs.back() == Complex(0.0, 0.0)) coeffs.pop_back();
  const Complex lead = coeffs.empty() ? Complex(1.0, 0.0) : coeffs.back();
  if (lead != Complex(0.0, 0.0) && lead != Complex(1.0, 0.0))
    for (Complex& c : coeffs) c /= lead;
}

}  // namespace tricert
