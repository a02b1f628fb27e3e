#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zdecomp/curvature.hpp"
#include "zdecomp/linalg.hpp"

namespace zdecomp {

/// Number of bivector basis elements, n(n-1)/2.
inline int bivector_dim(int n) { return n * (n - 1) / 2; }

/// The fixed lexicographic pair ordering (0,1), (0,2), ..., (n-2,n-1).
std::vector<std::pair<int, int>> bivector_basis_pairs(int n);

/// Index of e_i ^ e_j (0-based, i < j) in the lexicographic ordering.
int bivector_index(int n, int i, int j);

/// Element of Lambda^2 over the orthonormal basis (e_i ^ e_j)_{i<j}.
struct Bivector {
  int ambient_dim = 0;
  Vector coeffs;

  static Bivector zero(int n);
  static Bivector simple(int n, int i, int j, double value = 1.0);  // 0-based
  /// v ^ w expanded over the basis pairs.
  static Bivector wedge(const Vector& v, const Vector& w);
};

/// Skew-symmetric matrix of a bivector: e_i ^ e_j maps e_i -> e_j and
/// e_j -> -e_i.
Matrix to_skew(const Bivector& h);
Bivector bivector_from_skew(const Matrix& m);

/// One invariant 2-plane of the skew endomorphism together with its
/// rotation frequency: the restriction of to_skew(h) to span{v,w} is
/// rotation by the frequency. frequency * (v ^ w) is the Darboux summand.
struct JordanPlane {
  double frequency = 0.0;
  Vector v, w;  // orthonormal
  bool repeated_frequency = false;  // frequency shared with another plane

  Subspace plane() const;
  Bivector summand() const;  // frequency * (v ^ w)
};

/// Kernel plus invariant planes of the skew endomorphism of a bivector.
struct JordanData {
  Subspace kernel;  // U_0
  std::vector<JordanPlane> planes;

  int rank() const { return static_cast<int>(planes.size()); }
  Bivector reconstruct() const;  // sum of the Darboux summands
};

/// Splits the ambient space into the kernel and rotation planes of the
/// bivector's skew endomorphism, pairing plane vectors deterministically
/// through the eigenspaces of the positive semidefinite square.
JordanData jordan_darboux(const Bivector& h);

/// The symmetric matrix of the curvature operator on Lambda^2:
/// entry ((i,j),(k,l)) = riemann(i,j,k,l) over lexicographic pairs.
Matrix curvature_operator_matrix(const CurvatureData& curv);

struct EigenCluster {
  double lambda = 0.0;
  int multiplicity = 0;
  std::vector<Vector> vectors;  // orthonormal, canonically ordered
};

struct SpectralDecomposition {
  Matrix op;
  double op_max = 0.0;                 // largest |entry| of op
  std::vector<EigenCluster> clusters;  // eigenvalues descending
};

/// Full eigen-decomposition with gap clustering and a deterministic,
/// canonical choice of basis inside each cluster: directions are extracted
/// greedily along coordinate axes and signed so the first coordinate of
/// largest magnitude is positive.
SpectralDecomposition spectrum(const Matrix& symmetric);

enum class Irreducibility { Irreducible, Reducible, Ambiguous };

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::Irreducible;
  /// A proper Darboux sub-sum that is itself an eigenvector, with its
  /// complement, when verdict == Reducible.
  std::optional<std::pair<Bivector, Bivector>> split;
};

/// Decides whether an eigen-bivector of the operator can be split into two
/// eigen sub-sums of its Darboux normal form. Ambiguous is returned when a
/// repeated frequency makes the normal form non-unique and the canonical
/// form shows no split. Throws NotAnEigenvector if h fails the eigen test.
IrreducibilityResult analyze_irreducibility(const Bivector& h, const Matrix& op,
                                            double lambda);

Irreducibility is_irreducible(const Bivector& h, const Matrix& op, double lambda);

}  // namespace zdecomp
