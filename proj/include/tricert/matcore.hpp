#pragma once

// Primitive spectral / rank / polynomial operations on complex operators.
// Every tolerance-sensitive decision made downstream funnels through here.

#include <optional>
#include <vector>

#include "tricert/matrix.hpp"

namespace tricert {

/// [S,T] = S T - T S. Floating arithmetic, no tolerance applied.
ComplexMatrix commutator(const ComplexMatrix& s, const ComplexMatrix& t);

struct MinPolyDiagnostics {
  double residual = 0.0;          // least-squares defect of the accepted degree
  bool condition_warning = false; // dependence decision within 10x of the threshold
};

/// Monic annihilating polynomial of least degree, found by scanning powers
/// I, M, M^2, ... (flattened) for the first numerically dependent one.
Polynomial minimal_polynomial(const ComplexMatrix& m, const Tolerances& tol,
                              MinPolyDiagnostics* diag = nullptr);

/// Least k <= dim with |M^k| <= zero_tol * |M|^k, or nullopt (not nilpotent).
std::optional<int> nilpotency_index(const ComplexMatrix& m, const Tolerances& tol);

/// Null space at numerical rank; count = dim - rank.
SubspaceBasis kernel(const ComplexMatrix& m, const Tolerances& tol);

/// Column space at numerical rank; rank + kernel count = dim.
SubspaceBasis range(const ComplexMatrix& m, const Tolerances& tol);

struct EigenCluster {
  Complex value;     // cluster mean of the characteristic roots
  int multiplicity;  // cluster size; sums to dim over all clusters
};

/// Characteristic roots merged by single linkage at eig_cluster_tol * |M|,
/// sorted by (re, im).
std::vector<EigenCluster> eigen_decomposition(const ComplexMatrix& m, const Tolerances& tol);

/// kernel((M - lambda I)^power); power >= 1.
SubspaceBasis generalized_eigenspace(const ComplexMatrix& m, Complex lambda, int power,
                                     const Tolerances& tol);

/// |M M* - M* M| <= zero_tol * |M|^2.
bool is_normal(const ComplexMatrix& m, const Tolerances& tol);

/// |M - (tr M / n) I| <= zero_tol * |M|; the zero matrix counts as scalar.
bool is_scalar(const ComplexMatrix& m, const Tolerances& tol);

/// Multiplicity of lambda in the minimal polynomial: smallest j with
/// ker (M - lambda)^j = ker (M - lambda)^(j+1). Zero when lambda is not an
/// eigenvalue at tolerance.
int eigenvalue_index(const ComplexMatrix& m, Complex lambda, const Tolerances& tol);

/// |xy - yx| / (|x| |y|), Frobenius; 0 when either operand vanishes.
double commutation_residual(const ComplexMatrix& x, const ComplexMatrix& y);

/// |xy| / (|x| |y|), Frobenius; 0 when either operand vanishes.
double product_residual(const ComplexMatrix& x, const ComplexMatrix& y);

}  // namespace tricert
