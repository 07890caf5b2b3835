#pragma once

// Constructive triangularization: common invariant subspace extraction,
// maximal-chain construction for L-nilpotent families, scalar-diagonal block
// decomposition, and the Shemesh / left-annihilated / normal-pair routes.
// Every producer returns a certificate that certify::verify_certificate can
// re-check from scratch.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tricert/commalg.hpp"

namespace tricert {

/// Strictly increasing chain of common invariant subspaces; endpoints
/// ({0} and the full space) are implicit.
struct InvariantChain {
  int ambient_dim = 0;
  std::vector<SubspaceBasis> subspaces;
  bool maximal = false;  // dims are exactly 1, 2, ..., ambient_dim - 1
};

struct TriangularizationCertificate {
  ComplexMatrix basis_change;                   // invertible P; unitary as produced here
  std::vector<ComplexMatrix> triangular_forms;  // P^-1 T P per member
  double residual = 0.0;       // max relative Frobenius mass below the diagonal
  InvariantChain chain;        // prefixes of the columns of P
  double basis_condition = 1.0;
  std::string route;           // which strategy/case chain produced the result
};

/// Block upper triangular form whose diagonal blocks are scalar.
struct ScalarDiagonalForm {
  std::vector<int> block_dims;  // sums to dim
  ComplexMatrix basis_change;
  // diagonal_scalars[j][i]: scalar of member j on block i.
  std::vector<std::vector<Complex>> diagonal_scalars;
  // nilpotent_parts[j] = P^-1 T_j P - sum_i scalar(i,j) projector(i);
  // strictly block upper triangular within tolerance.
  std::vector<ComplexMatrix> nilpotent_parts;
  std::vector<ComplexMatrix> projectors;  // coordinate projections, new basis
};

/// Induction measures of the decomposition recursion.
struct RecursionMetrics {
  int s_value = 0;  // sum over members of deg(minimal polynomial)
  // (vanishing depth k, sum of nilpotency indices of the nonzero
  // depth-(k-1) commutators); (1, 1) for a commuting family.
  std::pair<int, long long> c_value{1, 1};
};

struct SimultaneousDiagonalization {
  ComplexMatrix unitary;
  std::vector<Complex> eigenvalues_a;
  std::vector<Complex> eigenvalues_b;
  double offdiag_residual = 0.0;
};

/// Block analysis of a pair where one operand is normal and annihilates the
/// commutator on one side. For analyze_normal_pair the splitting refers to
/// ker A; for the dual it refers to ker B and the block roles mirror.
struct NormalPairAnalysis {
  char split_operand = 'A';
  SubspaceBasis kernel_part;
  SubspaceBasis complement_part;
  ComplexMatrix a22, b11, b12, b21, b22;  // blocks in the splitting basis
  double b21_residual = 0.0;              // relative; theorem forces 0
  double block_commutation_residual = 0.0;  // [A22, B22], relative
  double commutator_square_residual = 0.0;  // |[A,B]^2| / |[A,B]|^2
  std::optional<SimultaneousDiagonalization> diagonalization;  // both normal
  TriangularizationCertificate certificate;
};

struct InvariantSubspaceResult {
  std::optional<SubspaceBasis> subspace;
  std::string strategy;  // which search strategy fired, or why none applies
  double invariance_residual = 0.0;
};

/// Searches in proof order: commuting family -> eigenspace of a nonscalar
/// member; L-nilpotent of depth k >= 2 -> kernel of the first nonzero
/// depth-(k-1) commutator; otherwise none (with diagnostic).
InvariantSubspaceResult find_common_invariant_subspace(const OperatorFamily& family,
                                                       const Tolerances& tol);

/// Maximal-chain triangularization of an L-nilpotent family.
TriangularizationCertificate triangularize_l_nilpotent(const OperatorFamily& family,
                                                       const Tolerances& tol);

/// Scalar-diagonal block decomposition of an L-nilpotent family, by the
/// splitting recursion (single-eigenvalue kernel power / eigenvalue-separating
/// kernel power / commutator range). Complements are always orthogonal.
ScalarDiagonalForm scalar_diagonal_decomposition(const OperatorFamily& family,
                                                 const Tolerances& tol);

/// Pair triangularization under A[A,B] = [A,B]B = 0.
TriangularizationCertificate triangularize_shemesh(const ComplexMatrix& a, const ComplexMatrix& b,
                                                   const Tolerances& tol);

/// Pair triangularization under A[A,B] = B[A,B] = 0.
TriangularizationCertificate triangularize_left_annihilated(const ComplexMatrix& a,
                                                             const ComplexMatrix& b,
                                                             const Tolerances& tol);

/// Analysis under: A normal, A[A,B] = 0. Splits on ker A, checks the forced
/// block structure, asserts [A,B]^2 = 0, triangularizes; diagonalizes
/// simultaneously when B is normal too.
NormalPairAnalysis analyze_normal_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                                       const Tolerances& tol);

/// Dual analysis under: B normal, [A,B]B = 0. Delegates to
/// analyze_normal_pair on (B*, A*) and transfers the chain through orthogonal
/// complements in reverse order.
NormalPairAnalysis analyze_normal_pair_dual(const ComplexMatrix& a, const ComplexMatrix& b,
                                            const Tolerances& tol);

RecursionMetrics compute_recursion_metrics(const OperatorFamily& family, const Tolerances& tol);

/// Case selector for a nonscalar product AB: a proper nontrivial eigenspace,
/// invariant under everything commuting with AB. Exposed for direct testing.
SubspaceBasis invariant_subspace_of_nonscalar(const ComplexMatrix& m, const Tolerances& tol);

/// Case selector for AB = cI, c != 0: ker(B - lambda I) for the largest-
/// modulus nonzero eigenvalue of B with a nontrivial proper eigenspace.
SubspaceBasis invariant_subspace_scalar_product(const ComplexMatrix& b, const Tolerances& tol);

}  // namespace tricert
