#include "tricert/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tricert/decomp.hpp"

namespace tricert {
namespace {

SubspaceBasis full_space(int n, const Tolerances& tol) {
  return SubspaceBasis{n, ComplexMatrix::identity(n), tol};
}

ComplexMatrix vec_stack(const std::vector<ComplexMatrix>& mats) {
  const int rows = static_cast<int>(mats.front().size());
  ComplexMatrix out(rows, static_cast<int>(mats.size()));
  for (int j = 0; j < out.cols(); ++j)
    for (int i = 0; i < rows; ++i) out(i, j) = mats[j].data()[i];
  return out;
}

// Kernel of the product base^power for a unit-Frobenius-normalized base.
// The rank threshold carries a linear-in-power allowance for the roundoff
// accumulated by repeated multiplication; a plain relative threshold would
// shrink with sigma_max(base^power) and misread the noise floor.
SubspaceBasis kernel_of_power(const ComplexMatrix& base_normalized, int power,
                              const Tolerances& tol) {
  const int n = base_normalized.dim();
  ComplexMatrix p = base_normalized;
  for (int k = 1; k < power; ++k) p = p * base_normalized;
  decomp::Svd dec = decomp::svd(p);
  const double threshold = tol.rank_tol * power;
  int rank = 0;
  for (double s : dec.singular_values)
    if (s > threshold) ++rank;
  ComplexMatrix cols = dec.v.block(0, rank, n, n - rank);
  decomp::canonicalize_phases(cols);
  return SubspaceBasis{n, cols, tol};
}

}  // namespace

ComplexMatrix commutator(const ComplexMatrix& s, const ComplexMatrix& t) {
  if (s.dim() != t.dim()) throw DimensionMismatch("commutator: dimension mismatch");
  return s * t - t * s;
}

Polynomial minimal_polynomial(const ComplexMatrix& m, const Tolerances& tol,
                              MinPolyDiagnostics* diag) {
  const int n = m.dim();
  const double scale = m.frobenius_norm();
  const ComplexMatrix ms = scale > 0.0 ? m * Complex(1.0 / scale, 0.0) : m;

  std::vector<ComplexMatrix> powers;  // I, Ms, Ms^2, ...
  powers.push_back(ComplexMatrix::identity(n));
  const double threshold = tol.rank_tol * std::sqrt(double(n));

  int degree = n;
  ComplexMatrix coeffs_col;
  double accepted_residual = 0.0;
  bool warning = false;

  for (int d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * ms);
    ComplexMatrix krylov = vec_stack(std::vector<ComplexMatrix>(powers.begin(), powers.begin() + d));
    ComplexMatrix target = vec_stack({powers[d]});
    ComplexMatrix c = decomp::least_squares(krylov, target);
    const double residual = (krylov * c - target).frobenius_norm();
    if (residual <= threshold) {
      degree = d;
      coeffs_col = c;
      accepted_residual = residual;
      if (residual > threshold / 10.0) warning = true;
      break;
    }
    if (residual <= 10.0 * threshold) warning = true;  // barely independent power
    if (d == n) {
      // Cayley-Hamilton guarantees dependence at n; accept the best fit.
      degree = n;
      coeffs_col = c;
      accepted_residual = residual;
      warning = true;
    }
  }

  Polynomial p;
  p.coeffs.assign(degree + 1, Complex(0.0, 0.0));
  // Unscale: q(z) = scale^d * p_scaled(z / scale) stays monic.
  double s_pow = 1.0;  // scale^(d-k), built from the top down
  p.coeffs[degree] = 1.0;
  for (int k = degree - 1; k >= 0; --k) {
    s_pow *= (scale > 0.0 ? scale : 1.0);
    p.coeffs[k] = -coeffs_col(k, 0) * s_pow;
  }
  if (diag != nullptr) {
    diag->residual = accepted_residual;
    diag->condition_warning = warning;
  }
  return p;
}

std::optional<int> nilpotency_index(const ComplexMatrix& m, const Tolerances& tol) {
  const int n = m.dim();
  const double scale = m.frobenius_norm();
  if (scale == 0.0) return 1;
  const ComplexMatrix b = m * Complex(1.0 / scale, 0.0);
  ComplexMatrix cur = b;
  for (int k = 1; k <= n; ++k) {
    if (cur.frobenius_norm() <= tol.zero_tol) return k;
    cur = cur * b;
  }
  return std::nullopt;
}

SubspaceBasis kernel(const ComplexMatrix& m, const Tolerances& tol) {
  const int n = m.dim();
  decomp::Svd dec = decomp::svd(m);
  const double smax = dec.singular_values.empty() ? 0.0 : dec.singular_values.front();
  int rank = 0;
  for (double s : dec.singular_values)
    if (smax > 0.0 && s > tol.rank_tol * smax) ++rank;
  ComplexMatrix cols = dec.v.block(0, rank, n, n - rank);
  decomp::canonicalize_phases(cols);
  return SubspaceBasis{n, cols, tol};
}

SubspaceBasis range(const ComplexMatrix& m, const Tolerances& tol) {
  const int n = m.dim();
  decomp::Svd dec = decomp::svd(m);
  const double smax = dec.singular_values.empty() ? 0.0 : dec.singular_values.front();
  int rank = 0;
  for (double s : dec.singular_values)
    if (smax > 0.0 && s > tol.rank_tol * smax) ++rank;
  ComplexMatrix cols = dec.u.block(0, 0, n, rank);
  decomp::canonicalize_phases(cols);
  return SubspaceBasis{n, cols, tol};
}

std::vector<EigenCluster> eigen_decomposition(const ComplexMatrix& m, const Tolerances& tol) {
  const int n = m.dim();
  decomp::SchurForm sf = decomp::schur(m);
  std::vector<Complex> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = sf.t(i, i);

  const double radius = tol.eig_cluster_tol * m.frobenius_norm();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) <= radius) parent[find(i)] = find(j);

  std::vector<EigenCluster> clusters;
  std::vector<int> root_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    int idx = root_of[r];
    if (idx < 0) {
      idx = static_cast<int>(clusters.size());
      root_of[r] = idx;
      clusters.push_back({Complex(0.0, 0.0), 0});
    }
    clusters[idx].value += roots[i];
    clusters[idx].multiplicity += 1;
  }
  for (EigenCluster& c : clusters) c.value /= double(c.multiplicity);
  std::sort(clusters.begin(), clusters.end(), [](const EigenCluster& a, const EigenCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return clusters;
}

SubspaceBasis generalized_eigenspace(const ComplexMatrix& m, Complex lambda, int power,
                                     const Tolerances& tol) {
  if (power < 1) throw PreconditionError("generalized_eigenspace: power must be >= 1");
  const int n = m.dim();
  ComplexMatrix shifted = m;
  for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
  const double scale = shifted.frobenius_norm();
  if (scale == 0.0) return full_space(n, tol);
  return kernel_of_power(shifted * Complex(1.0 / scale, 0.0), power, tol);
}

bool is_normal(const ComplexMatrix& m, const Tolerances& tol) {
  const ComplexMatrix adj = m.adjoint();
  const double defect = (m * adj - adj * m).frobenius_norm();
  const double scale = m.frobenius_norm();
  return defect <= tol.zero_tol * scale * scale;
}

bool is_scalar(const ComplexMatrix& m, const Tolerances& tol) {
  const int n = m.dim();
  const double scale = m.frobenius_norm();
  if (scale == 0.0) return true;
  ComplexMatrix d = m;
  const Complex mu = m.trace() / double(n);
  for (int i = 0; i < n; ++i) d(i, i) -= mu;
  return d.frobenius_norm() <= tol.zero_tol * scale;
}

int eigenvalue_index(const ComplexMatrix& m, Complex lambda, const Tolerances& tol) {
  const int n = m.dim();
  int prev = 0;
  for (int j = 1; j <= n + 1; ++j) {
    const int dj = generalized_eigenspace(m, lambda, j, tol).count();
    if (dj == prev) return j - 1;
    prev = dj;
  }
  return n;  // unreachable: kernels stabilize by power n
}

double commutation_residual(const ComplexMatrix& x, const ComplexMatrix& y) {
  const double sx = x.frobenius_norm(), sy = y.frobenius_norm();
  if (sx == 0.0 || sy == 0.0) return 0.0;
  return commutator(x, y).frobenius_norm() / (sx * sy);
}

double product_residual(const ComplexMatrix& x, const ComplexMatrix& y) {
  const double sx = x.frobenius_norm(), sy = y.frobenius_norm();
  if (sx == 0.0 || sy == 0.0) return 0.0;
  return (x * y).frobenius_norm() / (sx * sy);
}

}  // namespace tricert
