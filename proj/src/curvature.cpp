#include "zdecomp/curvature.hpp"

#include <cmath>

#include "zdecomp/errors.hpp"

namespace zdecomp {

Vector ConnectionTable::derive(const Vector& x, const Vector& y) const {
  Vector z = Vector::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0.0) continue;
      const double xy = x[i] * y[j];
      for (int k = 0; k < dim; ++k) z[k] += xy * gamma(i, j, k);
    }
  }
  return z;
}

const Matrix& CurvatureData::schouten_or_throw() const {
  if (!schouten)
    throw DimensionTooSmall("Schouten tensor requires dimension >= 3");
  return *schouten;
}

const Tensor4& CurvatureData::weyl_or_throw() const {
  if (!weyl) throw DimensionTooSmall("Weyl tensor requires dimension >= 3");
  return *weyl;
}

ConnectionTable levi_civita(const MetricLieAlgebra& alg) {
  const int n = alg.dim;
  ConnectionTable conn;
  conn.dim = n;
  conn.gamma = Tensor3(n);
  // Koszul formula in an orthonormal left-invariant frame.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        conn.gamma(i, j, k) =
            0.5 * (alg.c(i, j, k) - alg.c(j, k, i) + alg.c(k, i, j));
  return conn;
}

CurvatureData curvature_tensor(const MetricLieAlgebra& alg,
                               const ConnectionTable& conn) {
  const int n = alg.dim;
  const Tensor3& g = conn.gamma;
  CurvatureData curv;
  curv.dim = n;
  curv.riemann = Tensor4(n);

  // R(x,y) = nabla_{[x,y]} - nabla_x nabla_y + nabla_y nabla_x.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m) {
            s += alg.c(i, j, m) * g(m, k, l);
            s -= g(j, k, m) * g(i, m, l);
            s += g(i, k, m) * g(j, m, l);
          }
          curv.riemann(i, j, k, l) = s;
        }
      }
    }
  }
  curv.riemann_max = curv.riemann.max_abs();

  curv.ricci = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += curv.riemann(i, m, j, m);
      curv.ricci(i, j) = s;
    }
  }
  curv.scalar = curv.ricci.trace();

  curv.sectional.clear();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      curv.sectional.push_back(curv.riemann(i, j, i, j));

  if (n >= 3) {
    Matrix a = (curv.ricci -
                (curv.scalar / (2.0 * (n - 1))) * Matrix::Identity(n, n)) /
               static_cast<double>(n - 2);
    curv.schouten = a;
    Tensor4 w(n);
    if (n == 3) {
      // The Weyl tensor vanishes identically in dimension 3.
      curv.weyl = w;
    } else {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
              const double kn = a(i, k) * (j == l ? 1.0 : 0.0) +
                                a(j, l) * (i == k ? 1.0 : 0.0) -
                                a(i, l) * (j == k ? 1.0 : 0.0) -
                                a(j, k) * (i == l ? 1.0 : 0.0);
              w(i, j, k, l) = curv.riemann(i, j, k, l) - kn;
            }
          }
        }
      }
      curv.weyl = w;
    }
  }
  return curv;
}

double covariant_derivative_component(const ConnectionTable& conn,
                                      const Tensor4& t, int m, int i, int j,
                                      int k, int l) {
  const int n = conn.dim;
  double s = 0.0;
  for (int p = 0; p < n; ++p) {
    s -= conn.gamma(m, i, p) * t(p, j, k, l);
    s -= conn.gamma(m, j, p) * t(i, p, k, l);
    s -= conn.gamma(m, k, p) * t(i, j, p, l);
    s -= conn.gamma(m, l, p) * t(i, j, k, p);
  }
  return s;
}

SymmetryReport check_locally_symmetric(const MetricLieAlgebra& alg,
                                       const ConnectionTable& conn,
                                       const CurvatureData& curv) {
  (void)alg;
  const int n = conn.dim;
  SymmetryReport rep;
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            const double v = std::abs(
                covariant_derivative_component(conn, curv.riemann, m, i, j, k, l));
            if (v > rep.max_residual) {
              rep.max_residual = v;
              rep.witness = {m + 1, i + 1, j + 1, k + 1, l + 1};
            }
          }
        }
      }
    }
  }
  rep.is_locally_symmetric = rep.max_residual < eps_sym(curv.riemann_max);
  return rep;
}

bool is_conformally_flat(const CurvatureData& curv) {
  if (curv.dim < 3)
    throw DimensionTooSmall("conformal flatness requires dimension >= 3");
  if (curv.dim == 3) return true;
  return curv.weyl_or_throw().max_abs() < eps_sym(curv.riemann_max);
}

WeylDivergence divergence_weyl(const MetricLieAlgebra& alg,
                               const ConnectionTable& conn,
                               const CurvatureData& curv) {
  (void)alg;
  if (curv.dim < 4)
    throw DimensionTooSmall("harmonic-Weyl check requires dimension >= 4");
  const int n = curv.dim;
  const Tensor4& w = curv.weyl_or_throw();
  WeylDivergence out;
  out.div = Tensor3(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        double s = 0.0;
        for (int m = 0; m < n; ++m)
          s += covariant_derivative_component(conn, w, m, m, x, y, z);
        out.div(x, y, z) = s;
      }
    }
  }
  out.max_abs = out.div.max_abs();
  out.is_c_space = out.max_abs < eps_sym(curv.riemann_max);
  return out;
}

std::vector<double> milnor_system_residual(MilnorKind kind,
                                           std::span<const double> params) {
  if (kind == MilnorKind::Unimodular) {
    if (params.size() != 3)
      throw ConstraintViolation("unimodular frame takes parameters (a,b,c)");
    const double a = params[0], b = params[1], c = params[2];
    return {
        (a - b) * (a + b - c) * (a + b - c),
        (c - a) * (a - b + c) * (a - b + c),
        (c - b) * (a - b - c) * (a - b - c),
    };
  }
  if (params.size() != 4)
    throw ConstraintViolation("nonunimodular frame takes parameters (a,b,c,d)");
  const double a = params[0], b = params[1], c = params[2], d = params[3];
  double scale = 0.0;
  for (double p : params) scale = std::max(scale, std::abs(p));
  const double tol = 1e-9 * (1.0 + scale);
  if (std::abs(a + d) <= tol)
    throw ConstraintViolation("nonunimodular frame requires a + d != 0");
  if (std::abs(a * c + b * d) > tol)
    throw ConstraintViolation("nonunimodular frame requires ac + bd = 0");
  const double q1 = a * a + b * b - a * d + b * c;
  const double q2 = c * c + d * d - a * d + b * c;
  return {
      (b - c) * (a * a + b * b - c * c - d * d),
      (b + c) * q1,
      d * q1 * q1,
      a * q2,
      (b + c) * q2,
  };
}

double connection_torsion_residual(const MetricLieAlgebra& alg,
                                   const ConnectionTable& conn) {
  const int n = alg.dim;
  double m = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m = std::max(m, std::abs(conn.gamma(i, j, k) - conn.gamma(j, i, k) -
                                 alg.c(i, j, k)));
  return m;
}

double connection_metric_residual(const ConnectionTable& conn) {
  const int n = conn.dim;
  double m = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m = std::max(m, std::abs(conn.gamma(i, j, k) + conn.gamma(i, k, j)));
  return m;
}

double riemann_symmetry_residual(const CurvatureData& curv) {
  const int n = curv.dim;
  const Tensor4& r = curv.riemann;
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          m = std::max(m, std::abs(r(i, j, k, l) + r(j, i, k, l)));
          m = std::max(m, std::abs(r(i, j, k, l) + r(i, j, l, k)));
          m = std::max(m, std::abs(r(i, j, k, l) - r(k, l, i, j)));
        }
      }
    }
  }
  return m;
}

double first_bianchi_residual(const CurvatureData& curv) {
  const int n = curv.dim;
  const Tensor4& r = curv.riemann;
  double m = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          m = std::max(m, std::abs(r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l)));
  return m;
}

double weyl_trace_residual(const CurvatureData& curv) {
  const int n = curv.dim;
  const Tensor4& w = curv.weyl_or_throw();
  double m = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += w(i, j, i, l);
      m = std::max(m, std::abs(s));
    }
  }
  return m;
}

double schouten_reconstruction_residual(const CurvatureData& curv) {
  const int n = curv.dim;
  const Matrix& a = curv.schouten_or_throw();
  const Tensor4& w = curv.weyl_or_throw();
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const double kn = a(i, k) * (j == l ? 1.0 : 0.0) +
                            a(j, l) * (i == k ? 1.0 : 0.0) -
                            a(i, l) * (j == k ? 1.0 : 0.0) -
                            a(j, k) * (i == l ? 1.0 : 0.0);
          m = std::max(m, std::abs(curv.riemann(i, j, k, l) - w(i, j, k, l) - kn));
        }
      }
    }
  }
  return m;
}

}  // namespace zdecomp
