#pragma once

// Shared fixtures and samplers for the test binaries.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zdecomp/bivector.hpp"
#include "zdecomp/catalog.hpp"
#include "zdecomp/linalg.hpp"
#include "zdecomp/rng.hpp"

namespace zdecomp::testing {

/// Subspace spanned by coordinate directions, 1-based indices.
inline Subspace coord_span(int n, std::initializer_list<int> axes) {
  std::vector<Vector> basis;
  for (int a : axes) {
    Vector e = Vector::Zero(n);
    e[a - 1] = 1.0;
    basis.push_back(e);
  }
  return Subspace::span_of(n, basis);
}

/// Random parameters satisfying an entry's restrictions.
inline catalog::Params sample_params(const catalog::CatalogEntry& entry,
                                     Rng& rng) {
  catalog::Params p;
  if (entry.name == "milnor-nonuni") {
    double a = 0.0, t = 0.0;
    do { a = rng.uniform(-2.0, 2.0); } while (std::abs(a) < 0.2);
    do { t = rng.uniform(-2.0, 2.0); } while (std::abs(1.0 + t) < 0.2);
    const double b = rng.uniform(-2.0, 2.0);
    p = {{"a", a}, {"b", b}, {"c", -t * b}, {"d", t * a}};
    return p;
  }
  for (const catalog::ParamSpec& ps : entry.params) {
    if (ps.constraint.find("> 0") != std::string::npos) {
      p[ps.name] = rng.uniform(0.3, 2.2);
    } else if (ps.constraint.find("!= 1") != std::string::npos) {
      p[ps.name] = rng.unit() < 0.5 ? rng.uniform(0.2, 0.8)
                                    : rng.uniform(1.2, 2.5);
    } else {
      p[ps.name] = rng.uniform(-1.5, 1.5);
    }
  }
  return p;
}

struct MilnorDraw {
  std::vector<double> params;
  bool on_solution_set = false;
};

/// Random unimodular frame parameters (a,b,c); roughly half of the draws
/// land exactly on a locally symmetric family.
inline MilnorDraw draw_unimodular(Rng& rng) {
  MilnorDraw d;
  if (rng.unit() < 0.5) {
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    switch (rng.uniform_int(0, 3)) {
      case 0: d.params = {a, a, 0.0}; break;
      case 1: d.params = {a, 0.0, a}; break;
      case 2: d.params = {0.0, b, b}; break;
      default: d.params = {a, a, a}; break;
    }
    d.on_solution_set = true;
  } else {
    d.params = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                rng.uniform(-2.0, 2.0)};
  }
  return d;
}

/// Random nonunimodular frame parameters (a,b,c,d) with a+d != 0 and
/// ac+bd = 0; roughly half of the draws land on a symmetric family.
inline MilnorDraw draw_nonunimodular(Rng& rng) {
  MilnorDraw d;
  const double coin = rng.unit();
  if (coin < 0.5) {
    d.on_solution_set = true;
    double a = 0.0;
    do { a = rng.uniform(-2.0, 2.0); } while (std::abs(a) < 0.2);
    if (coin < 0.17) {
      d.params = {a, 0.0, 0.0, 0.0};
    } else if (coin < 0.34) {
      d.params = {0.0, 0.0, 0.0, a};
    } else {
      const double b = rng.uniform(-2.0, 2.0);
      d.params = {a, b, -b, a};
    }
  } else {
    double a = 0.0, t = 0.0;
    do { a = rng.uniform(-2.0, 2.0); } while (std::abs(a) < 0.2);
    do { t = rng.uniform(-2.0, 2.0); } while (std::abs(1.0 + t) < 0.2);
    const double b = rng.uniform(-2.0, 2.0);
    d.params = {a, b, -t * b, t * a};
  }
  return d;
}

inline MetricLieAlgebra milnor_algebra(MilnorKind kind,
                                       const std::vector<double>& p) {
  if (kind == MilnorKind::Unimodular)
    return new_algebra(
        3, {{1, 2, 3, p[0]}, {2, 3, 1, p[2]}, {3, 1, 2, p[1]}}, "milnor-uni");
  return new_algebra(
      3, {{1, 2, 2, p[0]}, {1, 2, 3, p[1]}, {1, 3, 2, p[2]}, {1, 3, 3, p[3]}},
      "milnor-nonuni");
}

/// Eigenvalues of a spectral decomposition expanded by multiplicity,
/// descending.
inline std::vector<double> expanded_eigenvalues(
    const SpectralDecomposition& spec) {
  std::vector<double> out;
  for (const EigenCluster& c : spec.clusters)
    out.insert(out.end(), c.multiplicity, c.lambda);
  return out;
}

inline std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

}  // namespace zdecomp::testing
