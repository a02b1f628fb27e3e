#pragma once

#include <map>
#include <string>
#include <vector>

#include "zdecomp/bivector.hpp"

namespace zdecomp {

/// An irreducible eigen-bivector with its kernel/image split: h0 is the
/// kernel of the skew endomorphism, h1 the orthogonal sum of its rotation
/// planes.
struct HPair {
  Bivector h;
  double lambda = 0.0;
  Subspace h0, h1;
};

/// For every eigen-bivector with nonzero eigenvalue: emit it when
/// irreducible, otherwise replace it recursively by the eigen sub-sums of
/// its Darboux normal form. Throws AmbiguousIrreducibility when a repeated
/// frequency blocks the decision.
std::vector<HPair> irreducible_eigen_system(const SpectralDecomposition& spec);

enum class DecompositionKind { V, Z };

/// How the bracket of two parts sits among the parts.
struct BracketRelation {
  std::string relation;  // "0", "subset_of_k", or "mixed"
  int span_dim = 0;
};

/// Ordered orthogonal splitting of the algebra. Index 0 is reserved for
/// the flat/orthogonal part (possibly zero-dimensional). exists == false
/// means the construction degenerates; reason says why and parts may hold
/// the degenerate layout.
struct SubspaceDecomposition {
  DecompositionKind kind = DecompositionKind::V;
  bool exists = false;
  std::string reason;
  std::vector<Subspace> parts;
  std::map<std::pair<int, int>, BracketRelation> bracket_table;
};

/// Aggregates the image subspaces of the eigen system into maximal linked
/// groups: two pairs are linked when either image fails to sit inside the
/// other's kernel. Each group's image sum is one part; part 0 is the
/// orthogonal complement.
SubspaceDecomposition v_decomposition(const std::vector<HPair>& pairs, int n);

/// Closes every part i >= 1 of the V-decomposition under covariant
/// derivatives with directions drawn from that part, then completes with
/// the orthogonal part Z0. Degenerates (exists = false) when the closures
/// overlap or one of them exhausts the algebra.
SubspaceDecomposition z_decomposition(const MetricLieAlgebra& alg,
                                      const ConnectionTable& conn,
                                      const SubspaceDecomposition& vdec);

struct RelationResidual {
  std::string relation;
  double max_residual = 0.0;
};

/// Residuals of the covariant-derivative containments satisfied by a
/// V-decomposition, one entry per relation family.
std::vector<RelationResidual> verify_v_relations(const MetricLieAlgebra& alg,
                                                 const ConnectionTable& conn,
                                                 const SubspaceDecomposition& vdec);

struct CurvatureSpan {
  std::vector<Matrix> basis;  // orthonormal skew matrices spanning {R(e_i,e_j)}
  int bracket_closure_dim = 0;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Orthonormal spanning set of the curvature endomorphisms R(e_i, e_j),
/// plus the dimension of their closure under iterated commutators.
CurvatureSpan curvature_span(const CurvatureData& curv);

/// Populates the pairwise bracket-containment table of a parts list.
std::map<std::pair<int, int>, BracketRelation> bracket_table(
    const MetricLieAlgebra& alg, const std::vector<Subspace>& parts);

}  // namespace zdecomp
