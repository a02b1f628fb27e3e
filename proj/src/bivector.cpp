#include "zdecomp/bivector.hpp"

#include <algorithm>
#include <cmath>

#include "zdecomp/errors.hpp"

namespace zdecomp {

std::vector<std::pair<int, int>> bivector_basis_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(bivector_dim(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

int bivector_index(int n, int i, int j) {
  // Offset of row i in the lexicographic ordering plus position of j.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Bivector Bivector::zero(int n) {
  return Bivector{n, Vector::Zero(bivector_dim(n))};
}

Bivector Bivector::simple(int n, int i, int j, double value) {
  Bivector h = zero(n);
  h.coeffs[bivector_index(n, i, j)] = value;
  return h;
}

Bivector Bivector::wedge(const Vector& v, const Vector& w) {
  const int n = static_cast<int>(v.size());
  Bivector h = zero(n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h.coeffs[idx++] = v[i] * w[j] - v[j] * w[i];
  return h;
}

Matrix to_skew(const Bivector& h) {
  const int n = h.ambient_dim;
  Matrix m = Matrix::Zero(n, n);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = h.coeffs[idx++];
      m(j, i) += v;
      m(i, j) -= v;
    }
  }
  return m;
}

Bivector bivector_from_skew(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  Bivector h = Bivector::zero(n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h.coeffs[idx++] = m(j, i);
  return h;
}

Subspace JordanPlane::plane() const {
  return Subspace::span_of(static_cast<int>(v.size()), {v, w});
}

Bivector JordanPlane::summand() const {
  Bivector s = Bivector::wedge(v, w);
  s.coeffs *= frequency;
  return s;
}

Bivector JordanData::reconstruct() const {
  const int n = kernel.ambient_dim;
  Bivector h = Bivector::zero(n);
  for (const JordanPlane& p : planes) h.coeffs += p.summand().coeffs;
  return h;
}

namespace {

// Clusters the (descending-sorted) eigenvalue order given by `order` with
// the gap tolerance, then replaces each cluster's vectors by the canonical
// greedy coordinate-aligned orthonormal basis with normalized signs.
struct RawCluster {
  double lambda;
  std::vector<int> members;
};

std::vector<Vector> canonical_cluster_basis(const Matrix& vectors,
                                            const std::vector<int>& members) {
  const int n = static_cast<int>(vectors.rows());
  Matrix p = Matrix::Zero(n, n);
  for (int m : members) p += vectors.col(m) * vectors.col(m).transpose();

  std::vector<Vector> out;
  for (std::size_t step = 0; step < members.size(); ++step) {
    int best_k = 0;
    double best_norm = -1.0;
    for (int k = 0; k < n; ++k) {
      const double nk = p.col(k).norm();
      if (nk > best_norm + 1e-14) {
        best_norm = nk;
        best_k = k;
      }
    }
    Vector u = p.col(best_k);
    // Re-orthogonalize against previous picks for numerical hygiene.
    for (const Vector& q : out) u -= q.dot(u) * q;
    u.normalize();
    out.push_back(u);
    p -= u * u.transpose();
  }

  for (Vector& u : out) {
    int arg = 0;
    double mx = -1.0;
    for (int k = 0; k < n; ++k) {
      if (std::abs(u[k]) > mx + 1e-14) {
        mx = std::abs(u[k]);
        arg = k;
      }
    }
    if (u[arg] < 0.0) u = -u;
  }
  return out;
}

std::vector<RawCluster> gap_cluster(const Vector& values,
                                    const std::vector<int>& order, double tol) {
  std::vector<RawCluster> clusters;
  for (int idx : order) {
    const double lam = values[idx];
    if (!clusters.empty() &&
        std::abs(clusters.back().lambda - lam) <= tol) {
      clusters.back().members.push_back(idx);
    } else {
      clusters.push_back({lam, {idx}});
    }
  }
  // Use the cluster mean as the reported eigenvalue.
  for (RawCluster& c : clusters) {
    double s = 0.0;
    for (int m : c.members) s += values[m];
    c.lambda = s / static_cast<double>(c.members.size());
  }
  return clusters;
}

}  // namespace

SpectralDecomposition spectrum(const Matrix& symmetric) {
  SpectralDecomposition out;
  out.op = 0.5 * (symmetric + symmetric.transpose());
  const int n = static_cast<int>(out.op.rows());
  out.op_max = n == 0 ? 0.0 : out.op.cwiseAbs().maxCoeff();
  if (n == 0) return out;

  const SymmetricEigen eig = jacobi_eigen(out.op);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (eig.values[a] != eig.values[b]) return eig.values[a] > eig.values[b];
    return a < b;
  });

  for (const RawCluster& rc :
       gap_cluster(eig.values, order, eps_cluster(out.op_max))) {
    EigenCluster c;
    c.lambda = rc.lambda;
    c.multiplicity = static_cast<int>(rc.members.size());
    c.vectors = canonical_cluster_basis(eig.vectors, rc.members);
    out.clusters.push_back(std::move(c));
  }
  return out;
}

Matrix curvature_operator_matrix(const CurvatureData& curv) {
  const int n = curv.dim;
  const auto pairs = bivector_basis_pairs(n);
  const int nn = static_cast<int>(pairs.size());
  Matrix op(nn, nn);
  for (int r = 0; r < nn; ++r)
    for (int s = 0; s < nn; ++s)
      op(r, s) = curv.riemann(pairs[r].first, pairs[r].second, pairs[s].first,
                              pairs[s].second);
  return op;
}

JordanData jordan_darboux(const Bivector& h) {
  const int n = h.ambient_dim;
  const Matrix skew = to_skew(h);
  const Matrix square = -skew * skew;  // positive semidefinite

  const SymmetricEigen eig = jacobi_eigen(square);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (eig.values[a] != eig.values[b]) return eig.values[a] > eig.values[b];
    return a < b;
  });

  const double sq_max = n == 0 ? 0.0 : square.cwiseAbs().maxCoeff();
  // Repeated frequencies of genuine multiplicity agree to machine
  // precision, while sqrt would lift eigenvalue noise (~1e-16 * scale)
  // to ~1e-8 phantom frequencies. Both the grouping and the kernel test
  // therefore work on the squared-eigenvalue scale with a tight margin.
  const double sq_tol = 1e-11 * (1.0 + sq_max);

  JordanData jd;
  std::vector<Vector> kernel_vecs;
  for (const RawCluster& rc : gap_cluster(eig.values, order, sq_tol)) {
    const double nu = std::sqrt(std::max(0.0, rc.lambda));
    const double nu_tol = kEpsNum * (1.0 + nu);
    std::vector<Vector> basis = canonical_cluster_basis(eig.vectors, rc.members);
    if (rc.lambda <= sq_tol) {
      kernel_vecs.insert(kernel_vecs.end(), basis.begin(), basis.end());
      continue;
    }
    // Invariant eigenspace of even dimension: consume it two vectors at a
    // time, completing each pick v with w = skew(v)/nu.
    const bool repeated = basis.size() > 2;
    while (!basis.empty()) {
      JordanPlane plane;
      plane.frequency = nu;
      plane.repeated_frequency = repeated;
      plane.v = basis.front();
      Vector w = skew * plane.v;
      if (w.norm() <= sq_tol) {  // defensive: degenerate direction
        kernel_vecs.push_back(plane.v);
        basis.erase(basis.begin());
        continue;
      }
      plane.w = w / w.norm();
      std::vector<Vector> rest;
      for (std::size_t t = 1; t < basis.size(); ++t) {
        Vector r = basis[t];
        for (int pass = 0; pass < 2; ++pass) {
          r -= plane.v.dot(r) * plane.v;
          r -= plane.w.dot(r) * plane.w;
          for (const Vector& q : rest) r -= q.dot(r) * q;
        }
        if (r.norm() > nu_tol) rest.push_back(r.normalized());
      }
      basis = std::move(rest);
      jd.planes.push_back(std::move(plane));
    }
  }
  jd.kernel = Subspace::span_of(n, kernel_vecs);
  return jd;
}

namespace {

double eigen_residual(const Matrix& op, const Vector& v, double lambda) {
  return (op * v - lambda * v).norm();
}

}  // namespace

IrreducibilityResult analyze_irreducibility(const Bivector& h, const Matrix& op,
                                            double lambda) {
  // Eigenvector membership is judged at clustering resolution: vectors of a
  // gap-clustered near-degenerate eigenvalue are eigenvectors only up to
  // the cluster width.
  const double tol =
      eps_cluster(op.rows() == 0 ? 0.0 : op.cwiseAbs().maxCoeff());
  const double hn = h.coeffs.norm();
  if (eigen_residual(op, h.coeffs, lambda) > tol * (1.0 + hn))
    throw NotAnEigenvector("bivector is not an eigenvector for eigenvalue " +
                           std::to_string(lambda));

  IrreducibilityResult res;
  const JordanData jd = jordan_darboux(h);
  const int q = jd.rank();

  // A single rotation plane cannot split; this also covers the
  // 4-dimensional shortcut (kernel of dimension 2 forces rank 1).
  if (q <= 1) return res;
  if (h.ambient_dim == 4 && jd.kernel.dim() == 2) return res;

  std::vector<Bivector> summands;
  summands.reserve(q);
  for (const JordanPlane& p : jd.planes) summands.push_back(p.summand());

  for (unsigned mask = 1; mask + 1 < (1u << q); ++mask) {
    Bivector part = Bivector::zero(h.ambient_dim);
    for (int k = 0; k < q; ++k)
      if (mask & (1u << k)) part.coeffs += summands[k].coeffs;
    Bivector rest = h;
    rest.coeffs -= part.coeffs;
    // Both halves must carry weight and pass the eigen test; splitting off
    // a numerically negligible summand would only recreate the input.
    const double weight_floor = 1e-6 * hn;
    if (part.coeffs.norm() < weight_floor || rest.coeffs.norm() < weight_floor)
      continue;
    if (eigen_residual(op, part.coeffs, lambda) <
            tol * (1.0 + part.coeffs.norm()) &&
        eigen_residual(op, rest.coeffs, lambda) <
            tol * (1.0 + rest.coeffs.norm())) {
      res.verdict = Irreducibility::Reducible;
      res.split = {std::move(part), std::move(rest)};
      return res;
    }
  }

  for (const JordanPlane& p : jd.planes) {
    if (p.repeated_frequency) {
      res.verdict = Irreducibility::Ambiguous;
      return res;
    }
  }
  return res;
}

Irreducibility is_irreducible(const Bivector& h, const Matrix& op,
                              double lambda) {
  return analyze_irreducibility(h, op, lambda).verdict;
}

}  // namespace zdecomp
