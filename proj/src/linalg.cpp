#include "zdecomp/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "zdecomp/errors.hpp"

namespace zdecomp {

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

double Tensor4::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

Subspace Subspace::zero(int ambient) { return Subspace{ambient, {}}; }

Subspace Subspace::full(int ambient) {
  Subspace s{ambient, {}};
  for (int i = 0; i < ambient; ++i) {
    Vector e = Vector::Zero(ambient);
    e[i] = 1.0;
    s.basis.push_back(e);
  }
  return s;
}

namespace {

// Two-pass modified Gram-Schmidt step: remove the components of v along the
// accumulated basis. Two passes keep orthogonality near machine precision.
Vector project_out(const std::vector<Vector>& basis, Vector v) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& q : basis) v -= q.dot(v) * q;
  }
  return v;
}

}  // namespace

Subspace Subspace::span_of(int ambient, const std::vector<Vector>& vectors) {
  Subspace s{ambient, {}};
  for (const Vector& v : vectors) {
    Vector r = project_out(s.basis, v);
    const double thresh = 1e-9 * (1.0 + v.norm());
    if (r.norm() > thresh) s.basis.push_back(r.normalized());
  }
  return s;
}

double Subspace::residual(const Vector& v) const {
  return project_out(basis, v).norm();
}

bool Subspace::contains(const Vector& v, double tol) const {
  return residual(v) <= tol * (1.0 + v.norm());
}

bool Subspace::contains(const Subspace& other, double tol) const {
  for (const Vector& q : other.basis) {
    if (!contains(q, tol)) return false;
  }
  return true;
}

double Subspace::overlap(const Subspace& other) const {
  double m = 0.0;
  for (const Vector& a : basis) {
    for (const Vector& b : other.basis) m = std::max(m, std::abs(a.dot(b)));
  }
  return m;
}

Matrix Subspace::projector() const {
  Matrix p = Matrix::Zero(ambient_dim, ambient_dim);
  for (const Vector& q : basis) p += q * q.transpose();
  return p;
}

Subspace Subspace::orthogonal_complement() const {
  Subspace accumulated = *this;
  Subspace comp{ambient_dim, {}};
  for (int k = 0; k < ambient_dim; ++k) {
    Vector e = Vector::Zero(ambient_dim);
    e[k] = 1.0;
    Vector r = project_out(accumulated.basis, e);
    if (r.norm() > 1e-9 * 2.0) {
      Vector q = r.normalized();
      accumulated.basis.push_back(q);
      comp.basis.push_back(q);
    }
  }
  return comp;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  std::vector<Vector> all = a.basis;
  all.insert(all.end(), b.basis.begin(), b.basis.end());
  return Subspace::span_of(a.ambient_dim, all);
}

double subspace_mismatch(const Subspace& a, const Subspace& b) {
  return (a.projector() - b.projector()).norm();
}

SymmetricEigen jacobi_eigen(const Matrix& a_in) {
  const int n = static_cast<int>(a_in.rows());
  Matrix a = 0.5 * (a_in + a_in.transpose());
  Matrix v = Matrix::Identity(n, n);
  SymmetricEigen out;
  if (n == 0) {
    out.values = Vector();
    out.vectors = v;
    return out;
  }
  const double total_norm = a.norm();
  const double stop = 1e-13 * total_norm;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    off = std::sqrt(off);
    if (off <= stop || total_norm == 0.0) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  out.values = a.diagonal();
  out.vectors = v;
  return out;
}

}  // namespace zdecomp
