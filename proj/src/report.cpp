#include "zdecomp/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zdecomp/errors.hpp"

namespace zdecomp {

Stage stage_from_string(const std::string& s) {
  if (s == "curvature") return Stage::Curvature;
  if (s == "spectrum") return Stage::Spectrum;
  if (s == "vdecomp") return Stage::VDecomp;
  if (s == "zdecomp") return Stage::ZDecomp;
  if (s == "all") return Stage::All;
  throw ConstraintViolation("unknown stage '" + s + "'");
}

double round12(double x) {
  if (x == 0.0) return 0.0;  // also normalizes -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return std::strtod(buf, nullptr);
}

std::string format_real(double x) {
  const double r = round12(x);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", r);
  if (buf[0] == '-' && std::strtod(buf, nullptr) == 0.0) return buf + 1;
  return buf;
}

namespace {

Json jnum(double x) { return Json(round12(x)); }

Json jvector(const Vector& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(jnum(v[i]));
  return a;
}

Json jmatrix(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(jnum(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json jsubspace(const Subspace& s) {
  Json a = Json::array();
  for (const Vector& q : s.basis) a.push_back(jvector(q));
  return a;
}

Json jdecomposition(const SubspaceDecomposition& dec) {
  Json j;
  j["kind"] = dec.kind == DecompositionKind::V ? "V" : "Z";
  j["exists"] = dec.exists;
  if (!dec.reason.empty()) j["reason"] = dec.reason;
  Json parts = Json::array();
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    Json p;
    p["index"] = static_cast<int>(i);
    p["basis"] = jsubspace(dec.parts[i]);
    parts.push_back(p);
  }
  j["parts"] = parts;
  Json br = Json::object();
  for (const auto& [key, rel] : dec.bracket_table) {
    br["(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")"] =
        rel.relation;
  }
  j["brackets"] = br;
  return j;
}

std::string pair_label(int i, int j) {
  return "e" + std::to_string(i + 1) + "^e" + std::to_string(j + 1);
}

}  // namespace

AnalysisResult analyze(const MetricLieAlgebra& alg, Stage stage) {
  AnalysisResult r;
  r.stage = stage;
  const int n = alg.dim;

  r.conn = levi_civita(alg);
  r.curv = curvature_tensor(alg, r.conn);
  r.symmetry = check_locally_symmetric(alg, r.conn, r.curv);
  if (n >= 3) r.conformally_flat = is_conformally_flat(r.curv);
  if (n >= 4) r.weyl_div = divergence_weyl(alg, r.conn, r.curv);

  r.residuals.antisymmetry = antisymmetry_residual(alg);
  r.residuals.jacobi = jacobi_residual(alg);
  r.residuals.torsion = connection_torsion_residual(alg, r.conn);
  r.residuals.metric_compatibility = connection_metric_residual(r.conn);
  r.residuals.riemann_symmetry = riemann_symmetry_residual(r.curv);
  r.residuals.first_bianchi = first_bianchi_residual(r.curv);
  if (n >= 3) {
    r.residuals.weyl_trace = weyl_trace_residual(r.curv);
    r.residuals.schouten_reconstruction = schouten_reconstruction_residual(r.curv);
  }
  if (stage == Stage::Curvature) return r;

  if (bivector_dim(n) >= 1) {
    const Matrix op = curvature_operator_matrix(r.curv);
    r.spectral = spectrum(op);
    r.residuals.operator_symmetry = (op - op.transpose()).cwiseAbs().maxCoeff();
    double trace_diff = op.trace();
    for (double k : r.curv.sectional) trace_diff -= k;
    r.residuals.trace_identity = std::abs(trace_diff);
  }
  if (stage == Stage::Spectrum) return r;

  r.span = curvature_span(r.curv);
  if (r.spectral) {
    try {
      r.pairs = irreducible_eigen_system(*r.spectral);
    } catch (const AmbiguousIrreducibility& e) {
      r.ambiguity_error = e.what();
      return r;
    }
  } else {
    r.pairs = std::vector<HPair>{};  // no bivectors at all in dimension 1
  }
  SubspaceDecomposition vdec = v_decomposition(*r.pairs, n);
  vdec.bracket_table = bracket_table(alg, vdec.parts);
  if (vdec.exists) r.v_relations = verify_v_relations(alg, r.conn, vdec);
  r.vdec = std::move(vdec);
  if (stage == Stage::VDecomp) return r;

  if (r.vdec && r.vdec->exists) {
    r.zdec = z_decomposition(alg, r.conn, *r.vdec);
  } else {
    SubspaceDecomposition z;
    z.kind = DecompositionKind::Z;
    z.exists = false;
    z.reason = "no V-decomposition";
    r.zdec = std::move(z);
  }
  return r;
}

Json algebra_json(const MetricLieAlgebra& alg) {
  Json j;
  j["dim"] = alg.dim;
  j["label"] = alg.label;
  Json brackets = Json::array();
  for (int i = 0; i < alg.dim; ++i) {
    for (int jj = i + 1; jj < alg.dim; ++jj) {
      for (int k = 0; k < alg.dim; ++k) {
        if (alg.c(i, jj, k) != 0.0) {
          Json e;
          e["i"] = i + 1;
          e["j"] = jj + 1;
          e["k"] = k + 1;
          e["v"] = jnum(alg.c(i, jj, k));
          brackets.push_back(e);
        }
      }
    }
  }
  j["brackets"] = brackets;
  return j;
}

MetricLieAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("dim"))
    throw ConstraintViolation("algebra JSON is missing 'dim'");
  const int dim = j.at("dim").get<int>();
  std::string label = j.value("label", std::string());
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    for (const Json& e : j.at("brackets")) {
      entries.push_back(BracketEntry{e.at("i").get<int>(), e.at("j").get<int>(),
                                     e.at("k").get<int>(),
                                     e.at("v").get<double>()});
    }
  }
  return new_algebra(dim, entries, std::move(label));
}

MetricLieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstraintViolation("cannot open algebra file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConstraintViolation("cannot parse algebra file '" + path +
                              "': " + e.what());
  }
  return algebra_from_json(j);
}

Json report_json(const MetricLieAlgebra& alg, const AnalysisResult& r) {
  const int n = alg.dim;
  Json j;
  j["algebra"] = algebra_json(alg);

  Json curv;
  curv["ricci"] = jmatrix(r.curv.ricci);
  curv["scalar"] = jnum(r.curv.scalar);
  Json sect = Json::object();
  {
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int jj = i + 1; jj < n; ++jj)
        sect[std::to_string(i + 1) + std::to_string(jj + 1)] =
            jnum(r.curv.sectional[idx++]);
  }
  curv["sectional"] = sect;
  curv["locally_symmetric"] = r.symmetry.is_locally_symmetric;
  curv["max_residual"] = jnum(r.symmetry.max_residual);
  curv["conformally_flat"] =
      r.conformally_flat ? Json(*r.conformally_flat) : Json(nullptr);
  curv["c_space"] = r.weyl_div ? Json(r.weyl_div->is_c_space) : Json(nullptr);
  j["curvature"] = curv;

  if (r.spectral) {
    Json spec;
    Json basis = Json::array();
    for (const auto& [a, b] : bivector_basis_pairs(n))
      basis.push_back(pair_label(a, b));
    spec["basis"] = basis;
    spec["matrix"] = jmatrix(r.spectral->op);
    Json clusters = Json::array();
    for (const EigenCluster& c : r.spectral->clusters) {
      Json jc;
      jc["lambda"] = jnum(c.lambda);
      jc["mult"] = c.multiplicity;
      Json vecs = Json::array();
      for (const Vector& v : c.vectors) vecs.push_back(jvector(v));
      jc["vectors"] = vecs;
      clusters.push_back(jc);
    }
    spec["clusters"] = clusters;
    j["spectrum"] = spec;
  } else {
    j["spectrum"] = nullptr;
  }

  if (!r.ambiguity_error.empty()) {
    j["irreducible_system"] = Json{{"error", r.ambiguity_error}};
  } else if (r.pairs) {
    Json sys;
    Json jp = Json::array();
    for (const HPair& p : *r.pairs) {
      Json e;
      e["lambda"] = jnum(p.lambda);
      e["h"] = jvector(p.h.coeffs);
      e["h1"] = jsubspace(p.h1);
      e["h0"] = jsubspace(p.h0);
      jp.push_back(e);
    }
    sys["pairs"] = jp;
    sys["curvature_span_dim"] = r.span ? r.span->dim() : 0;
    sys["bracket_closure_dim"] = r.span ? r.span->bracket_closure_dim : 0;
    j["irreducible_system"] = sys;
  } else {
    j["irreducible_system"] = nullptr;
  }

  j["v_decomposition"] = r.vdec ? jdecomposition(*r.vdec) : Json(nullptr);
  if (r.v_relations) {
    Json rel = Json::array();
    for (const RelationResidual& rr : *r.v_relations) {
      Json e;
      e["relation"] = rr.relation;
      e["max_residual"] = jnum(rr.max_residual);
      rel.push_back(e);
    }
    j["v_relations"] = rel;
  } else {
    j["v_relations"] = nullptr;
  }
  j["z_decomposition"] = r.zdec ? jdecomposition(*r.zdec) : Json(nullptr);

  Json res;
  res["antisymmetry"] = jnum(r.residuals.antisymmetry);
  res["jacobi"] = jnum(r.residuals.jacobi);
  res["torsion"] = jnum(r.residuals.torsion);
  res["metric_compatibility"] = jnum(r.residuals.metric_compatibility);
  res["riemann_symmetry"] = jnum(r.residuals.riemann_symmetry);
  res["first_bianchi"] = jnum(r.residuals.first_bianchi);
  res["weyl_trace"] =
      r.residuals.weyl_trace ? jnum(*r.residuals.weyl_trace) : Json(nullptr);
  res["schouten_reconstruction"] = r.residuals.schouten_reconstruction
                                       ? jnum(*r.residuals.schouten_reconstruction)
                                       : Json(nullptr);
  res["operator_symmetry"] = r.residuals.operator_symmetry
                                 ? jnum(*r.residuals.operator_symmetry)
                                 : Json(nullptr);
  res["trace_identity"] = r.residuals.trace_identity
                              ? jnum(*r.residuals.trace_identity)
                              : Json(nullptr);
  j["residuals"] = res;
  return j;
}

namespace {

std::string subspace_text(const Subspace& s) {
  if (s.dim() == 0) return "0";
  std::ostringstream out;
  out << "span{";
  for (int i = 0; i < s.dim(); ++i) {
    if (i) out << ", ";
    // Print pure coordinate directions compactly.
    const Vector& q = s.basis[i];
    int nz = 0, last = 0;
    for (int k = 0; k < q.size(); ++k)
      if (std::abs(q[k]) > 1e-9) {
        ++nz;
        last = k;
      }
    if (nz == 1) {
      out << (q[last] < 0 ? "-" : "") << "e" << last + 1;
    } else {
      out << "(";
      for (int k = 0; k < q.size(); ++k) {
        if (k) out << ",";
        out << format_real(q[k]);
      }
      out << ")";
    }
  }
  out << "}";
  return out.str();
}

std::string decomposition_text(const char* name,
                               const SubspaceDecomposition& dec) {
  std::ostringstream out;
  out << name << ": ";
  if (!dec.exists) {
    out << "none (" << dec.reason << ")\n";
    return out.str();
  }
  const char letter = dec.kind == DecompositionKind::V ? 'V' : 'Z';
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    if (i) out << ", ";
    out << letter << i << " = " << subspace_text(dec.parts[i]);
  }
  out << "\n";
  for (const auto& [key, rel] : dec.bracket_table) {
    if (key.first == key.second) continue;
    out << "  [" << letter << key.first << "," << letter << key.second
        << "] = " << (rel.relation == "0" ? "0" : rel.relation) << "\n";
  }
  return out.str();
}

}  // namespace

std::string report_text(const MetricLieAlgebra& alg, const AnalysisResult& r) {
  std::ostringstream out;
  out << "algebra: " << (alg.label.empty() ? "(unnamed)" : alg.label)
      << " (dim " << alg.dim << ")\n";
  out << "scalar curvature: " << format_real(r.curv.scalar) << "\n";
  out << "sectional curvatures:";
  {
    int idx = 0;
    for (int i = 0; i < alg.dim; ++i)
      for (int j = i + 1; j < alg.dim; ++j)
        out << " K" << i + 1 << j + 1 << "="
            << format_real(r.curv.sectional[idx++]);
  }
  out << "\n";
  out << "locally symmetric: "
      << (r.symmetry.is_locally_symmetric ? "yes" : "no")
      << " (max |cov.deriv.| = " << format_real(r.symmetry.max_residual)
      << ")\n";
  if (r.conformally_flat)
    out << "conformally flat: " << (*r.conformally_flat ? "yes" : "no") << "\n";
  if (r.weyl_div)
    out << "harmonic Weyl: " << (r.weyl_div->is_c_space ? "yes" : "no") << "\n";
  if (r.spectral) {
    out << "curvature operator spectrum:";
    for (const EigenCluster& c : r.spectral->clusters)
      out << " " << format_real(c.lambda) << " (x" << c.multiplicity << ")";
    out << "\n";
  }
  if (!r.ambiguity_error.empty())
    out << "irreducible system: ambiguous (" << r.ambiguity_error << ")\n";
  else if (r.pairs)
    out << "irreducible eigen-bivectors with nonzero eigenvalue: "
        << r.pairs->size() << "\n";
  if (r.vdec) out << decomposition_text("V-decomposition", *r.vdec);
  if (r.zdec) out << decomposition_text("Z-decomposition", *r.zdec);
  return out.str();
}

}  // namespace zdecomp
