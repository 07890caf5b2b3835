#include "tricert/decomp.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace tricert::decomp {
namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

Svd svd(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> dec(to_eigen(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Svd out;
  out.u = from_eigen(dec.matrixU());
  out.v = from_eigen(dec.matrixV());
  out.singular_values.assign(dec.singularValues().data(),
                             dec.singularValues().data() + dec.singularValues().size());
  return out;
}

SchurForm schur(const ComplexMatrix& m) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> dec(to_eigen(m), true);
  if (dec.info() != Eigen::Success) throw NumericalBreakdown("complex Schur iteration failed");
  return SchurForm{from_eigen(dec.matrixU()), from_eigen(dec.matrixT())};
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& rhs) {
  if (!a.is_square() || a.rows() != rhs.rows()) throw DimensionMismatch("solve: shape mismatch");
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(to_eigen(a));
  return from_eigen(lu.solve(to_eigen(rhs)));
}

double condition_number(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> dec(to_eigen(m));
  const auto& s = dec.singularValues();
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

ComplexMatrix orthonormal_basis(const ComplexMatrix& cols, double rank_tol) {
  if (cols.cols() == 0) return ComplexMatrix(cols.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> dec(to_eigen(cols), Eigen::ComputeFullU);
  const auto& s = dec.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rank_tol * smax) ++rank;
  if (smax == 0.0) rank = 0;
  ComplexMatrix out = from_eigen(dec.matrixU().leftCols(rank));
  canonicalize_phases(out);
  return out;
}

ComplexMatrix orthonormal_complement(const ComplexMatrix& q, int ambient_dim) {
  const int d = q.cols();
  if (d == 0) {
    ComplexMatrix out = ComplexMatrix::identity(ambient_dim);
    return out;
  }
  if (q.rows() != ambient_dim) throw DimensionMismatch("complement: ambient mismatch");
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(q));
  Eigen::MatrixXcd full = qr.householderQ();
  ComplexMatrix out = from_eigen(full.rightCols(ambient_dim - d));
  canonicalize_phases(out);
  return out;
}

void canonicalize_phases(ComplexMatrix& cols) {
  for (int j = 0; j < cols.cols(); ++j) {
    int best = 0;
    double best_abs = 0.0;
    for (int i = 0; i < cols.rows(); ++i) {
      const double a = std::abs(cols(i, j));
      if (a > best_abs * (1.0 + 1e-12)) {
        best_abs = a;
        best = i;
      }
    }
    if (best_abs == 0.0) continue;
    const Complex phase = std::conj(cols(best, j)) / best_abs;
    for (int i = 0; i < cols.rows(); ++i) cols(i, j) *= phase;
  }
}

ComplexMatrix least_squares(const ComplexMatrix& a, const ComplexMatrix& rhs) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> dec(to_eigen(a), Eigen::ComputeThinU | Eigen::ComputeThinV);
  return from_eigen(dec.solve(to_eigen(rhs)));
}

}  // namespace tricert::decomp
