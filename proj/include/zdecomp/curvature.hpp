#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "zdecomp/algebra.hpp"
#include "zdecomp/linalg.hpp"

namespace zdecomp {

/// Levi-Civita connection coefficients gamma(i,j,k) = <nabla_{e_i} e_j, e_k>.
struct ConnectionTable {
  int dim = 0;
  Tensor3 gamma;

  Vector derive(const Vector& x, const Vector& y) const;  // nabla_x y
};

/// All curvature objects of the left-invariant metric. The convention is
/// R(x,y) = nabla_{[x,y]} - nabla_x nabla_y + nabla_y nabla_x, stored as
/// riemann(i,j,k,l) = <R(e_i,e_j)e_k, e_l>, so the sectional curvature of
/// the plane e_i^e_j is riemann(i,j,i,j).
struct CurvatureData {
  int dim = 0;
  Tensor4 riemann;
  Matrix ricci;
  double scalar = 0.0;
  std::optional<Matrix> schouten;  // only for dim >= 3
  std::optional<Tensor4> weyl;     // only for dim >= 3
  std::vector<double> sectional;   // K_{ij} over lexicographic pairs i<j
  double riemann_max = 0.0;        // largest |riemann| component

  const Matrix& schouten_or_throw() const;
  const Tensor4& weyl_or_throw() const;
};

struct SymmetryReport {
  bool is_locally_symmetric = false;
  double max_residual = 0.0;
  std::array<int, 5> witness{0, 0, 0, 0, 0};  // 1-based (m,i,j,k,l)
};

struct WeylDivergence {
  Tensor3 div;  // (x,y,z) -> sum_i (nabla_{e_i} W)(e_i, x, y, z)
  double max_abs = 0.0;
  bool is_c_space = false;
};

ConnectionTable levi_civita(const MetricLieAlgebra& alg);

CurvatureData curvature_tensor(const MetricLieAlgebra& alg,
                               const ConnectionTable& conn);

/// Scans every component of the covariant derivative of the curvature
/// tensor and reports the largest one with its index witness.
SymmetryReport check_locally_symmetric(const MetricLieAlgebra& alg,
                                       const ConnectionTable& conn,
                                       const CurvatureData& curv);

/// True iff the Weyl tensor vanishes (always true for dim 3).
/// Throws DimensionTooSmall for dim < 3.
bool is_conformally_flat(const CurvatureData& curv);

/// Divergence of the Weyl tensor; throws DimensionTooSmall for dim < 4.
WeylDivergence divergence_weyl(const MetricLieAlgebra& alg,
                               const ConnectionTable& conn,
                               const CurvatureData& curv);

/// Component of the covariant derivative of a (0,4)-tensor with constant
/// frame components: (nabla_m T)(i,j,k,l).
double covariant_derivative_component(const ConnectionTable& conn,
                                      const Tensor4& t, int m, int i, int j,
                                      int k, int l);

enum class MilnorKind { Unimodular, Nonunimodular };

/// Left-hand sides of the polynomial systems that cut out the locally
/// symmetric parameter sets of the canonical 3-dimensional frames.
/// Unimodular takes (a,b,c) and returns 3 residuals; Nonunimodular takes
/// (a,b,c,d) with a+d != 0 and ac+bd = 0 and returns 5 residuals.
std::vector<double> milnor_system_residual(MilnorKind kind,
                                           std::span<const double> params);

// Property residuals used by reports and tests.
double connection_torsion_residual(const MetricLieAlgebra& alg,
                                   const ConnectionTable& conn);
double connection_metric_residual(const ConnectionTable& conn);
double riemann_symmetry_residual(const CurvatureData& curv);
double first_bianchi_residual(const CurvatureData& curv);
double weyl_trace_residual(const CurvatureData& curv);          // dim >= 3
double schouten_reconstruction_residual(const CurvatureData& curv);  // dim >= 3

}  // namespace zdecomp
