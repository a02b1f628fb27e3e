#include "zdecomp/algebra.hpp"

#include <cmath>
#include <utility>

#include "zdecomp/errors.hpp"

namespace zdecomp {

Vector MetricLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector z = Vector::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0.0) continue;
      const double xy = x[i] * y[j];
      for (int k = 0; k < dim; ++k) z[k] += xy * c(i, j, k);
    }
  }
  return z;
}

double antisymmetry_residual(const MetricLieAlgebra& alg) {
  double m = 0.0;
  const int n = alg.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m = std::max(m, std::abs(alg.c(i, j, k) + alg.c(j, i, k)));
  return m;
}

double jacobi_residual(const MetricLieAlgebra& alg, std::array<int, 4>* worst) {
  const int n = alg.dim;
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int p = 0; p < n; ++p) {
            s += alg.c(i, j, p) * alg.c(p, k, l) + alg.c(j, k, p) * alg.c(p, i, l) +
                 alg.c(k, i, p) * alg.c(p, j, l);
          }
          if (std::abs(s) > m) {
            m = std::abs(s);
            if (worst) *worst = {i + 1, j + 1, k + 1, l + 1};
          }
        }
      }
    }
  }
  return m;
}

MetricLieAlgebra new_algebra(int dim, const std::vector<BracketEntry>& brackets,
                             std::string label) {
  if (dim < 1) throw IndexOutOfRange("dimension must be at least 1");
  MetricLieAlgebra alg;
  alg.dim = dim;
  alg.c = Tensor3(dim);
  alg.label = std::move(label);

  std::vector<char> assigned(static_cast<std::size_t>(dim) * dim * dim, 0);
  auto flat = [dim](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * dim + j) * dim + k;
  };

  for (const BracketEntry& e : brackets) {
    if (e.i < 1 || e.i > dim || e.j < 1 || e.j > dim || e.k < 1 || e.k > dim)
      throw IndexOutOfRange("bracket entry (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + "," + std::to_string(e.k) +
                            ") outside 1.." + std::to_string(dim));
    if (e.i == e.j)
      throw IndexOutOfRange("bracket entry with i == j == " + std::to_string(e.i));
    const int i = e.i - 1, j = e.j - 1, k = e.k - 1;
    if (assigned[flat(i, j, k)] && alg.c(i, j, k) != e.v)
      throw ConflictingEntry(e.i, e.j, e.k);
    if (assigned[flat(j, i, k)] && alg.c(j, i, k) != -e.v)
      throw ConflictingEntry(e.j, e.i, e.k);
    alg.c(i, j, k) = e.v;
    alg.c(j, i, k) = -e.v;
    assigned[flat(i, j, k)] = 1;
    assigned[flat(j, i, k)] = 1;
  }

  std::array<int, 4> worst{0, 0, 0, 0};
  const double jr = jacobi_residual(alg, &worst);
  if (jr > eps_alg(alg.max_abs_c()))
    throw JacobiViolation(worst[0], worst[1], worst[2], worst[3], jr);
  return alg;
}

bool is_unimodular(const MetricLieAlgebra& alg) {
  const double tol = eps_alg(alg.max_abs_c());
  for (int i = 0; i < alg.dim; ++i) {
    double trace = 0.0;
    for (int k = 0; k < alg.dim; ++k) trace += alg.c(i, k, k);
    if (std::abs(trace) > tol) return false;
  }
  return true;
}

MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
  MetricLieAlgebra out;
  out.dim = a.dim + b.dim;
  out.c = Tensor3(out.dim);
  if (!a.label.empty() && !b.label.empty())
    out.label = a.label + "+" + b.label;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) out.c(i, j, k) = a.c(i, j, k);
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < b.dim; ++k)
        out.c(a.dim + i, a.dim + j, a.dim + k) = b.c(i, j, k);
  return out;
}

MetricLieAlgebra restrict_to_subspace(const MetricLieAlgebra& alg,
                                      const Subspace& s) {
  const Subspace q = Subspace::span_of(alg.dim, s.basis);
  const int m = q.dim();
  const double tol = eps_alg(alg.max_abs_c());

  // Closure check first, reporting the worst offending pair.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Vector w = alg.bracket(q.basis[i], q.basis[j]);
      const double r = q.residual(w);
      if (r > tol) throw NotASubalgebra(i + 1, j + 1, r);
    }
  }

  MetricLieAlgebra out;
  out.dim = m;
  out.c = Tensor3(m);
  out.label = alg.label.empty() ? "" : alg.label + "|restricted";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Vector w = alg.bracket(q.basis[i], q.basis[j]);
      for (int k = 0; k < m; ++k) out.c(i, j, k) = q.basis[k].dot(w);
    }
  }
  return out;
}

}  // namespace zdecomp
