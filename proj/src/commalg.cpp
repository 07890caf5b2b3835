#include "tricert/commalg.hpp"

#include <algorithm>
#include <cmath>

namespace tricert {
namespace {

// Incremental orthonormal span of flattened matrices. Layer storage keeps a
// spanning subset of each iterated-commutator set: F^[k] vanishes iff its
// span does, brackets are bilinear, so expanding only span-independent
// elements preserves both the vanishing depth and witness validity while
// keeping layer sizes <= dim^2.
class SpanShadow {
 public:
  bool try_add(const ComplexMatrix& m, double rel_tol) {
    const std::size_t len = m.size();
    std::vector<Complex> v(m.data(), m.data() + len);
    double norm0 = 0.0;
    for (const Complex& z : v) norm0 += std::norm(z);
    norm0 = std::sqrt(norm0);
    if (norm0 == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis_) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < len; ++i) dot += std::conj(q[i]) * v[i];
        for (std::size_t i = 0; i < len; ++i) v[i] -= dot * q[i];
      }
    }
    double rnorm = 0.0;
    for (const Complex& z : v) rnorm += std::norm(z);
    rnorm = std::sqrt(rnorm);
    if (rnorm <= rel_tol * norm0) return false;
    for (Complex& z : v) z /= rnorm;
    basis_.push_back(std::move(v));
    return true;
  }

 private:
  std::vector<std::vector<Complex>> basis_;
};

}  // namespace

int OperatorFamily::dim() const {
  if (members.empty()) throw DimensionMismatch("operator family must be nonempty");
  return members.front().dim();
}

void OperatorFamily::validate() const {
  if (members.empty()) throw DimensionMismatch("operator family must be nonempty");
  const int n = members.front().dim();
  for (const ComplexMatrix& m : members) {
    if (m.dim() != n) throw DimensionMismatch("operator family members must share one dimension");
    if (!m.all_finite()) throw DimensionMismatch("operator family member has non-finite entries");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != size())
    throw DimensionMismatch("label count must match member count");
}

OperatorFamily make_family(std::vector<ComplexMatrix> members, std::vector<std::string> labels) {
  OperatorFamily f{std::move(members), std::move(labels)};
  f.validate();
  return f;
}

std::optional<int> CommutatorLayers::vanishing_depth() const {
  for (std::size_t k = 1; k < layers.size(); ++k) {
    const bool all_zero =
        std::all_of(layers[k].begin(), layers[k].end(), [](const LayerElement& e) { return e.zero; });
    if (all_zero) return static_cast<int>(k);
  }
  return std::nullopt;
}

int default_max_depth(int dim) { return dim * dim + 1; }

CommutatorLayers iterated_commutators(const OperatorFamily& family, int max_depth,
                                      const Tolerances& tol) {
  if (max_depth < 1) throw PreconditionError("iterated_commutators: max_depth must be >= 1");
  family.validate();

  CommutatorLayers out;
  std::vector<LayerElement> base;
  for (int i = 0; i < family.size(); ++i) {
    const ComplexMatrix& m = family.members[i];
    base.push_back({m, -1, i, m.frobenius_norm() == 0.0});
  }
  out.layers.push_back(std::move(base));

  for (int k = 1; k <= max_depth; ++k) {
    const std::vector<LayerElement>& prev = out.layers.back();
    std::vector<LayerElement> next;
    SpanShadow shadow;
    bool any_nonzero = false;
    for (int p = 0; p < static_cast<int>(prev.size()); ++p) {
      if (prev[p].zero) continue;
      for (int b = 0; b < family.size(); ++b) {
        ComplexMatrix c = commutator(prev[p].value, family.members[b]);
        const double denom = prev[p].value.frobenius_norm() * family.members[b].frobenius_norm();
        const bool zero = denom == 0.0 || c.frobenius_norm() <= tol.zero_tol * denom;
        if (!zero) {
          any_nonzero = true;
          if (!shadow.try_add(c, tol.rank_tol)) continue;  // spanned already
        }
        next.push_back({std::move(c), p, b, zero});
      }
    }
    out.layers.push_back(std::move(next));
    if (!any_nonzero) break;
  }
  return out;
}

std::optional<int> l_nilpotency_length(const OperatorFamily& family, int max_depth,
                                       const Tolerances& tol) {
  return iterated_commutators(family, max_depth, tol).vanishing_depth();
}

ConditionReport check_conditions(const ComplexMatrix& a, const ComplexMatrix& b,
                                 const Tolerances& tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("check_conditions: dimension mismatch");
  ConditionReport report;

  const ComplexMatrix c = commutator(a, b);
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  const double nc = c.frobenius_norm();
  auto rel = [](double value, double scale) { return scale == 0.0 ? 0.0 : value / scale; };

  // Each residual is normalized by the norms of every operator factor in the
  // expression (A[A,B] is quadratic in A, linear in B). Normalizing by
  // |[A,B]| instead would reject commuting pairs on pure roundoff.
  const double r_a_lc = rel((a * c).frobenius_norm(), na * na * nb);     // A[A,B]
  const double r_lc_b = rel((c * b).frobenius_norm(), na * nb * nb);     // [A,B]B
  const double r_b_lc = rel((b * c).frobenius_norm(), na * nb * nb);     // B[A,B]
  const double r_aab = rel(commutator(a, c).frobenius_norm(), na * na * nb);  // [A,[A,B]]
  const double r_bab = rel(commutator(b, c).frobenius_norm(), na * nb * nb);  // [B,[A,B]]
  const double r_comm = rel(nc, na * nb);

  // Equivalent formulation: A and B both commute with the product AB.
  const ComplexMatrix ab = a * b;
  const double r_a_ab = rel(commutator(a, ab).frobenius_norm(), na * na * nb);
  const double r_b_ab = rel(commutator(b, ab).frobenius_norm(), na * nb * nb);

  report.shemesh_left_right = r_a_lc <= tol.zero_tol && r_lc_b <= tol.zero_tol;
  const bool via_product = r_a_ab <= tol.zero_tol && r_b_ab <= tol.zero_tol;
  if (report.shemesh_left_right != via_product)
    throw NumericalBreakdown(
        "check_conditions: the annihilation and commute-with-product formulations disagree");

  report.shemesh_left_left = r_a_lc <= tol.zero_tol && r_b_lc <= tol.zero_tol;
  report.self_commuting_commutator = r_aab <= tol.zero_tol && r_bab <= tol.zero_tol;
  report.normal_flags = {is_normal(a, tol), is_normal(b, tol)};

  OperatorFamily pair = make_family({a, b});
  report.l_nilpotent_length = l_nilpotency_length(pair, default_max_depth(a.dim()), tol);

  report.residual_norms = {
      {"commutator", r_comm},
      {"a_times_commutator", r_a_lc},
      {"commutator_times_b", r_lc_b},
      {"b_times_commutator", r_b_lc},
      {"a_commutes_with_commutator", r_aab},
      {"b_commutes_with_commutator", r_bab},
      {"a_commutes_with_product", r_a_ab},
      {"b_commutes_with_product", r_b_ab},
      {"normal_defect_a", rel((a * a.adjoint() - a.adjoint() * a).frobenius_norm(), na * na)},
      {"normal_defect_b", rel((b * b.adjoint() - b.adjoint() * b).frobenius_norm(), nb * nb)},
  };
  return report;
}

}  // namespace tricert
