#pragma once

// Iterated commutator structure of an operator family and the commutation
// predicates hypothesized by the triangularization theorems.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tricert/matcore.hpp"
#include "tricert/matrix.hpp"

namespace tricert {

/// Finite ordered family of same-dimension operators.
struct OperatorFamily {
  std::vector<ComplexMatrix> members;
  std::vector<std::string> labels;  // optional; empty or one per member

  int dim() const;
  int size() const { return static_cast<int>(members.size()); }
  /// Throws unless nonempty, uniformly square and finite.
  void validate() const;
};

OperatorFamily make_family(std::vector<ComplexMatrix> members,
                           std::vector<std::string> labels = {});

/// One element of a commutator layer. For layer k >= 1 the element equals
/// [layers[k-1][parent], family[member]]; layer 0 holds the family itself
/// (parent = -1, member = position).
struct LayerElement {
  ComplexMatrix value;
  int parent = -1;
  int member = -1;
  bool zero = false;  // below tolerance; recorded but not expanded further
};

struct CommutatorLayers {
  std::vector<std::vector<LayerElement>> layers;  // layers[0] = family

  /// Least k >= 1 whose layer is entirely zero, or nullopt.
  std::optional<int> vanishing_depth() const;
};

/// Expands layers up to the first all-zero one or max_depth. Nonzero elements
/// equal within tolerance are stored once (first witness wins); zero elements
/// are recorded but not expanded.
CommutatorLayers iterated_commutators(const OperatorFamily& family, int max_depth,
                                      const Tolerances& tol);

/// Least k <= max_depth with all length-k iterated commutators below
/// tolerance, or nullopt. k = 1 means the family commutes.
std::optional<int> l_nilpotency_length(const OperatorFamily& family, int max_depth,
                                       const Tolerances& tol);

/// Default iteration cap: dim^2 + 1.
int default_max_depth(int dim);

/// Commutation predicates for a pair, all residuals Frobenius and normalized
/// by the product of the operand norms.
struct ConditionReport {
  std::optional<int> l_nilpotent_length;
  bool shemesh_left_right = false;        // A[A,B] = [A,B]B = 0
  bool shemesh_left_left = false;         // A[A,B] = B[A,B] = 0
  bool self_commuting_commutator = false; // [A,[A,B]] = [B,[A,B]] = 0
  std::vector<bool> normal_flags;         // one per operand
  std::map<std::string, double> residual_norms;
};

/// Evaluates every predicate for the pair (A, B). The two equivalent
/// formulations of the left-right condition (annihilation identities vs
/// commuting with the product AB) are both computed and must agree.
ConditionReport check_conditions(const ComplexMatrix& a, const ComplexMatrix& b,
                                 const Tolerances& tol);

}  // namespace tricert
