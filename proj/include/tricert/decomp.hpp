#pragma once

// Factorizations backing the rank and spectral decisions: SVD, complex Schur,
// LU solves. These wrap mature library routines behind plain value types so
// the rest of the code never touches the backend directly.

#include "tricert/matrix.hpp"

namespace tricert::decomp {

struct Svd {
  ComplexMatrix u;                     // full left singular vectors
  std::vector<double> singular_values; // descending
  ComplexMatrix v;                     // full right singular vectors; m = u diag(s) v^H
};

Svd svd(const ComplexMatrix& m);

struct SchurForm {
  ComplexMatrix q;  // unitary
  ComplexMatrix t;  // upper triangular, m = q t q^H
};

SchurForm schur(const ComplexMatrix& m);

/// Solves a x = rhs for square a (partial-pivot LU).
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& rhs);

/// sigma_max / sigma_min; +inf when singular to working precision.
double condition_number(const ComplexMatrix& m);

/// Orthonormal basis of span(cols); directions with singular value
/// <= rank_tol * sigma_max are dropped. Column phases are canonical.
ComplexMatrix orthonormal_basis(const ComplexMatrix& cols, double rank_tol);

/// Orthonormal basis of the orthogonal complement of ran(q); q must have
/// orthonormal columns. Returns an n x (n - q.cols()) matrix.
ComplexMatrix orthonormal_complement(const ComplexMatrix& q, int ambient_dim);

/// Rotates each column so its largest-magnitude entry is real positive.
void canonicalize_phases(ComplexMatrix& cols);

/// Least squares: minimizes |a x - rhs| columnwise (a may be rectangular).
ComplexMatrix least_squares(const ComplexMatrix& a, const ComplexMatrix& rhs);

}  // namespace tricert::decomp
