#pragma once

#include <array>
#include <string>
#include <vector>

#include "zdecomp/linalg.hpp"

namespace zdecomp {

/// One sparse structure-constant entry, 1-based: [e_i, e_j] gains v * e_k.
struct BracketEntry {
  int i, j, k;
  double v;
};

/// A finite-dimensional Lie algebra with an inner product that is the
/// identity in the stored basis. Immutable after construction.
struct MetricLieAlgebra {
  int dim = 0;
  Tensor3 c;  // c(i,j,k) = coefficient of e_k in [e_i, e_j], 0-based
  std::string label;

  /// Bilinear extension of the bracket to arbitrary coordinate vectors.
  Vector bracket(const Vector& x, const Vector& y) const;
  double max_abs_c() const { return c.max_abs(); }
};

/// Builds and validates an algebra from sparse 1-based bracket data.
/// Antisymmetry is auto-completed: entry (i,j,k,v) also sets (j,i,k,-v).
/// Throws IndexOutOfRange, ConflictingEntry or JacobiViolation.
MetricLieAlgebra new_algebra(int dim, const std::vector<BracketEntry>& brackets,
                             std::string label = "");

/// Largest |c(i,j,k) + c(j,i,k)| over all indices.
double antisymmetry_residual(const MetricLieAlgebra& alg);

/// Largest Jacobi-sum magnitude; optionally reports the worst 1-based
/// quadruple (i,j,k,l).
double jacobi_residual(const MetricLieAlgebra& alg,
                       std::array<int, 4>* worst = nullptr);

/// True iff every ad_{e_i} is trace-free (within eps_alg).
bool is_unimodular(const MetricLieAlgebra& alg);

/// Block direct sum; brackets between the summands vanish.
MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b);

/// Structure constants of the bracket restricted to a bracket-closed
/// subspace, expressed in the subspace's orthonormal basis.
/// Throws NotASubalgebra if the subspace is not closed.
MetricLieAlgebra restrict_to_subspace(const MetricLieAlgebra& alg,
                                      const Subspace& s);

}  // namespace zdecomp
