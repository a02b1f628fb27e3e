#pragma once

#include <Eigen/Dense>
#include <vector>

namespace zdecomp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Shared numeric tolerances. Scale-dependent ones take the relevant magnitude.
inline constexpr double kEpsNum = 1e-9;  // orthonormality / subspace membership

inline double eps_alg(double max_abs_c) { return 1e-9 * (1.0 + max_abs_c); }
inline double eps_sym(double riemann_max) { return 1e-8 * (1.0 + riemann_max); }
inline double eps_cluster(double op_max) { return 1e-7 * (1.0 + op_max); }
inline double eps_spec(double op_max) { return 1e-9 * (1.0 + op_max); }

/// Dense rank-3 array with equal extents, zero-initialized.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), v_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  double& operator()(int i, int j, int k) { return v_[idx(i, j, k)]; }
  double operator()(int i, int j, int k) const { return v_[idx(i, j, k)]; }
  int extent() const { return n_; }
  double max_abs() const;

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  int n_ = 0;
  std::vector<double> v_;
};

/// Dense rank-4 array with equal extents, zero-initialized.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n)
      : n_(n), v_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  double& operator()(int i, int j, int k, int l) { return v_[idx(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return v_[idx(i, j, k, l)]; }
  int extent() const { return n_; }
  double max_abs() const;

 private:
  std::size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_ = 0;
  std::vector<double> v_;
};

/// A linear subspace of R^n held as an orthonormal basis. The basis may be
/// empty (zero subspace). Construction through span_of guarantees
/// orthonormality via rank-revealing modified Gram-Schmidt.
struct Subspace {
  int ambient_dim = 0;
  std::vector<Vector> basis;

  int dim() const { return static_cast<int>(basis.size()); }

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  /// Orthonormalizes the spanning set, dropping directions below the
  /// rank-reveal threshold (1e-9 relative to the input vector's norm).
  static Subspace span_of(int ambient, const std::vector<Vector>& vectors);

  /// Norm of the component of v outside the subspace.
  double residual(const Vector& v) const;
  bool contains(const Vector& v, double tol = kEpsNum) const;
  bool contains(const Subspace& other, double tol = kEpsNum) const;
  /// Largest |cos| of an angle between unit vectors of the two subspaces;
  /// 0 when fully orthogonal.
  double overlap(const Subspace& other) const;

  Matrix projector() const;
  Subspace orthogonal_complement() const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
};

/// Frobenius distance of the orthogonal projectors. Zero iff the subspaces
/// coincide; bounds sin of the largest principal angle from above.
double subspace_mismatch(const Subspace& a, const Subspace& b);

/// Eigen-decomposition of a symmetric matrix, A = V diag(values) V^T.
/// values/columns arrive in the solver's raw (unsorted) order.
struct SymmetricEigen {
  Vector values;
  Matrix vectors;
};

/// Cyclic Jacobi rotations; iterates until the off-diagonal Frobenius norm
/// drops below 1e-13 * ||A||_F. Deterministic sweep order.
SymmetricEigen jacobi_eigen(const Matrix& a);

}  // namespace zdecomp
