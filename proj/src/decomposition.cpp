#include "zdecomp/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "zdecomp/errors.hpp"

namespace zdecomp {

namespace {

HPair make_pair_for(const Bivector& h, double lambda) {
  HPair p;
  p.h = h;
  p.h.coeffs.normalize();
  p.lambda = lambda;
  const JordanData jd = jordan_darboux(p.h);
  p.h0 = jd.kernel;
  std::vector<Vector> image;
  for (const JordanPlane& pl : jd.planes) {
    image.push_back(pl.v);
    image.push_back(pl.w);
  }
  p.h1 = Subspace::span_of(p.h.ambient_dim, image);
  return p;
}

}  // namespace

std::vector<HPair> irreducible_eigen_system(const SpectralDecomposition& spec) {
  std::vector<HPair> out;
  const double zero_tol = eps_spec(spec.op_max);
  for (const EigenCluster& cluster : spec.clusters) {
    if (std::abs(cluster.lambda) <= zero_tol) continue;
    for (const Vector& v : cluster.vectors) {
      const int n =
          static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * v.size())) / 2.0 + 0.5);
      std::deque<Bivector> work;
      work.push_back(Bivector{n, v});
      while (!work.empty()) {
        Bivector h = work.front();
        work.pop_front();
        IrreducibilityResult res =
            analyze_irreducibility(h, spec.op, cluster.lambda);
        switch (res.verdict) {
          case Irreducibility::Irreducible:
            out.push_back(make_pair_for(h, cluster.lambda));
            break;
          case Irreducibility::Reducible:
            work.push_back(res.split->first);
            work.push_back(res.split->second);
            break;
          case Irreducibility::Ambiguous:
            throw AmbiguousIrreducibility(cluster.lambda);
        }
      }
    }
  }
  return out;
}

SubspaceDecomposition v_decomposition(const std::vector<HPair>& pairs, int n) {
  SubspaceDecomposition dec;
  dec.kind = DecompositionKind::V;

  const int rho = static_cast<int>(pairs.size());
  if (rho == 0) {
    dec.exists = false;
    dec.reason = "curvature operator has no nonzero eigenvalue";
    dec.parts = {Subspace::full(n)};
    return dec;
  }

  // Union-find over the linkage relation.
  std::vector<int> parent(rho);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < rho; ++a) {
    for (int b = a + 1; b < rho; ++b) {
      const bool linked = !pairs[b].h0.contains(pairs[a].h1) ||
                          !pairs[a].h0.contains(pairs[b].h1);
      if (linked) parent[find(a)] = find(b);
    }
  }

  // Group in order of first appearance for a deterministic part order.
  std::vector<int> roots;
  std::vector<std::vector<int>> groups;
  for (int a = 0; a < rho; ++a) {
    const int r = find(a);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      groups.push_back({a});
    } else {
      groups[static_cast<std::size_t>(it - roots.begin())].push_back(a);
    }
  }

  std::vector<Subspace> parts;
  for (const std::vector<int>& g : groups) {
    std::vector<Vector> span;
    for (int idx : g)
      span.insert(span.end(), pairs[idx].h1.basis.begin(),
                  pairs[idx].h1.basis.end());
    parts.push_back(Subspace::span_of(n, span));
  }

  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      if (parts[a].overlap(parts[b]) > kEpsNum) {
        dec.exists = false;
        dec.reason = "linked groups produced non-orthogonal parts";
        dec.parts = parts;
        return dec;
      }
    }
  }

  Subspace all = Subspace::zero(n);
  for (const Subspace& p : parts) all = sum(all, p);
  Subspace v0 = all.orthogonal_complement();

  if (parts.size() == 1 && parts[0].dim() == n) {
    dec.exists = false;
    dec.reason = "a single part exhausts the algebra";
    dec.parts = {Subspace::zero(n), parts[0]};
    return dec;
  }

  dec.exists = true;
  dec.parts.push_back(v0);
  dec.parts.insert(dec.parts.end(), parts.begin(), parts.end());
  return dec;
}

SubspaceDecomposition z_decomposition(const MetricLieAlgebra& alg,
                                      const ConnectionTable& conn,
                                      const SubspaceDecomposition& vdec) {
  if (!vdec.exists)
    throw Error("z_decomposition requires an existing V-decomposition");
  const int n = alg.dim;
  SubspaceDecomposition dec;
  dec.kind = DecompositionKind::Z;

  std::vector<Subspace> closures;
  for (std::size_t i = 1; i < vdec.parts.size(); ++i) {
    const Subspace& vi = vdec.parts[i];
    Subspace s = vi;
    bool stable = false;
    // The dimension strictly grows until the closure stabilizes, so n
    // steps always suffice.
    for (int step = 0; step <= n && !stable; ++step) {
      std::vector<Vector> extended = s.basis;
      for (const Vector& dir : vi.basis)
        for (const Vector& x : s.basis) extended.push_back(conn.derive(dir, x));
      Subspace next = Subspace::span_of(n, extended);
      stable = next.dim() == s.dim();
      s = std::move(next);
    }
    if (!stable)
      throw Error("derivative closure failed to stabilize within " +
                  std::to_string(n) + " steps");
    closures.push_back(s);
  }

  for (std::size_t a = 0; a < closures.size(); ++a) {
    for (std::size_t b = a + 1; b < closures.size(); ++b) {
      const double ov = closures[a].overlap(closures[b]);
      if (ov > kEpsNum) {
        dec.exists = false;
        dec.reason = "derivative closures of parts " + std::to_string(a + 1) +
                     " and " + std::to_string(b + 1) +
                     " are not orthogonal (overlap " + std::to_string(ov) + ")";
        dec.parts = closures;
        return dec;
      }
    }
  }
  for (std::size_t a = 0; a < closures.size(); ++a) {
    if (closures[a].dim() == n) {
      dec.exists = false;
      dec.reason =
          "derivative closure of part " + std::to_string(a + 1) +
          " exhausts the algebra";
      dec.parts = closures;
      return dec;
    }
  }

  Subspace all = Subspace::zero(n);
  for (const Subspace& zpart : closures) all = sum(all, zpart);
  Subspace z0 = all.orthogonal_complement();

  dec.exists = true;
  dec.parts.push_back(z0);
  dec.parts.insert(dec.parts.end(), closures.begin(), closures.end());
  dec.bracket_table = bracket_table(alg, dec.parts);
  return dec;
}

std::vector<RelationResidual> verify_v_relations(
    const MetricLieAlgebra& alg, const ConnectionTable& conn,
    const SubspaceDecomposition& vdec) {
  (void)alg;
  if (!vdec.exists)
    throw Error("verify_v_relations requires an existing V-decomposition");
  const std::vector<Subspace>& parts = vdec.parts;
  const std::size_t np = parts.size();

  auto max_out = [&](const Subspace& dirs, const Subspace& args,
                     const Subspace& target) {
    double m = 0.0;
    for (const Vector& u : dirs.basis)
      for (const Vector& x : args.basis)
        m = std::max(m, target.residual(conn.derive(u, x)));
    return m;
  };

  std::vector<RelationResidual> out;
  RelationResidual r00{"cov_V0_V0_in_V0", max_out(parts[0], parts[0], parts[0])};
  out.push_back(r00);

  RelationResidual r0i{"cov_V0_Vi_in_Vi", 0.0};
  RelationResidual rii{"cov_Vi_Vi_in_V0+Vi", 0.0};
  RelationResidual ri0{"cov_Vi_V0_in_V0+Vi", 0.0};
  RelationResidual rij{"cov_Vi_Vj_in_Vj", 0.0};
  for (std::size_t i = 1; i < np; ++i) {
    const Subspace v0i = sum(parts[0], parts[i]);
    r0i.max_residual =
        std::max(r0i.max_residual, max_out(parts[0], parts[i], parts[i]));
    rii.max_residual =
        std::max(rii.max_residual, max_out(parts[i], parts[i], v0i));
    ri0.max_residual =
        std::max(ri0.max_residual, max_out(parts[i], parts[0], v0i));
    for (std::size_t j = 1; j < np; ++j) {
      if (i == j) continue;
      rij.max_residual =
          std::max(rij.max_residual, max_out(parts[i], parts[j], parts[j]));
    }
  }
  out.push_back(r0i);
  out.push_back(rii);
  out.push_back(ri0);
  out.push_back(rij);
  return out;
}

CurvatureSpan curvature_span(const CurvatureData& curv) {
  const int n = curv.dim;
  CurvatureSpan span;

  auto inner = [](const Matrix& x, const Matrix& y) {
    return 0.5 * (x.transpose() * y).trace();
  };

  auto add_if_independent = [&](Matrix m, std::vector<Matrix>& basis) {
    const double scale = m.cwiseAbs().maxCoeff();
    for (int pass = 0; pass < 2; ++pass)
      for (const Matrix& q : basis) m -= inner(q, m) * q;
    const double norm = std::sqrt(std::max(0.0, inner(m, m)));
    if (norm > 1e-9 * (1.0 + scale)) {
      basis.push_back(m / norm);
      return true;
    }
    return false;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Matrix m = Matrix::Zero(n, n);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m(l, k) = curv.riemann(i, j, k, l);
      if (m.cwiseAbs().maxCoeff() == 0.0) continue;
      add_if_independent(m, span.basis);
    }
  }

  std::vector<Matrix> closure = span.basis;
  const int max_dim = bivector_dim(n);
  bool grew = true;
  while (grew && static_cast<int>(closure.size()) < max_dim) {
    grew = false;
    const std::size_t sz = closure.size();
    for (std::size_t a = 0; a < sz && !grew; ++a) {
      for (std::size_t b = a + 1; b < sz && !grew; ++b) {
        Matrix comm = closure[a] * closure[b] - closure[b] * closure[a];
        if (comm.cwiseAbs().maxCoeff() == 0.0) continue;
        grew = add_if_independent(comm, closure);
      }
    }
  }
  span.bracket_closure_dim = static_cast<int>(closure.size());
  return span;
}

std::map<std::pair<int, int>, BracketRelation> bracket_table(
    const MetricLieAlgebra& alg, const std::vector<Subspace>& parts) {
  std::map<std::pair<int, int>, BracketRelation> table;
  const double tol = eps_alg(alg.max_abs_c());
  const int n = alg.dim;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a; b < parts.size(); ++b) {
      std::vector<Vector> brackets;
      for (const Vector& u : parts[a].basis)
        for (const Vector& v : parts[b].basis)
          brackets.push_back(alg.bracket(u, v));
      bool all_zero = true;
      for (const Vector& w : brackets)
        if (w.norm() > tol) all_zero = false;

      BracketRelation rel;
      if (all_zero) {
        rel.relation = "0";
        rel.span_dim = 0;
      } else {
        const Subspace bspan = Subspace::span_of(n, brackets);
        rel.span_dim = bspan.dim();
        rel.relation = "mixed";
        for (std::size_t k = 0; k < parts.size(); ++k) {
          if (parts[k].contains(bspan)) {
            rel.relation = "subset_of_" + std::to_string(k);
            break;
          }
        }
      }
      table[{static_cast<int>(a), static_cast<int>(b)}] = rel;
    }
  }
  return table;
}

}  // namespace zdecomp
