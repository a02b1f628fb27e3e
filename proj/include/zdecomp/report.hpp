#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "zdecomp/decomposition.hpp"

namespace zdecomp {

using Json = nlohmann::ordered_json;

enum class Stage { Curvature, Spectrum, VDecomp, ZDecomp, All };

Stage stage_from_string(const std::string& s);

/// Everything the pipeline produced for one algebra. Later stages are
/// empty when the requested stage stops earlier, when the dimension is too
/// small for them, or when a prerequisite does not exist.
struct AnalysisResult {
  Stage stage = Stage::All;
  ConnectionTable conn;
  CurvatureData curv;
  SymmetryReport symmetry;
  std::optional<bool> conformally_flat;       // dim >= 3
  std::optional<WeylDivergence> weyl_div;     // dim >= 4
  std::optional<SpectralDecomposition> spectral;
  std::optional<std::vector<HPair>> pairs;
  std::optional<CurvatureSpan> span;
  std::string ambiguity_error;  // nonempty when irreducibility was ambiguous
  std::optional<SubspaceDecomposition> vdec;
  std::optional<std::vector<RelationResidual>> v_relations;
  std::optional<SubspaceDecomposition> zdec;

  struct Residuals {
    double antisymmetry = 0.0;
    double jacobi = 0.0;
    double torsion = 0.0;
    double metric_compatibility = 0.0;
    double riemann_symmetry = 0.0;
    double first_bianchi = 0.0;
    std::optional<double> weyl_trace;
    std::optional<double> schouten_reconstruction;
    std::optional<double> operator_symmetry;
    std::optional<double> trace_identity;
  } residuals;
};

/// Runs the pipeline: connection, curvature tensors and verdicts, operator
/// spectrum, irreducible eigen system, V- and Z-decompositions. Partial
/// results are retained whenever a stage reports non-existence.
AnalysisResult analyze(const MetricLieAlgebra& alg, Stage stage = Stage::All);

// Deterministic number handling: values are rounded to 12 significant
// digits (with -0 normalized to 0) before serialization.
double round12(double x);
std::string format_real(double x);

Json algebra_json(const MetricLieAlgebra& alg);
MetricLieAlgebra algebra_from_json(const Json& j);
MetricLieAlgebra load_algebra_file(const std::string& path);

Json report_json(const MetricLieAlgebra& alg, const AnalysisResult& result);
std::string report_text(const MetricLieAlgebra& alg, const AnalysisResult& result);

}  // namespace zdecomp
