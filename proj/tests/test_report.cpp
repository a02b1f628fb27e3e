#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "zdecomp/errors.hpp"
#include "zdecomp/report.hpp"

using namespace zdecomp;
using namespace zdecomp::testing;

TEST_CASE("real formatting uses at most 12 significant digits") {
  CHECK(format_real(0.25) == "0.25");
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-1.75) == "-1.75");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(round12(-0.0) == 0.0);
  CHECK(!std::signbit(round12(-0.0)));
  CHECK(round12(0.1234567890123456) == doctest::Approx(0.123456789012).epsilon(1e-13));
}

TEST_CASE("algebra JSON round trip") {
  const MetricLieAlgebra alg =
      catalog::build("A_{3,3}+A_1", {{"a", 1.5}, {"b", 0.5}});
  const Json j = algebra_json(alg);
  CHECK(j.at("dim") == 4);
  CHECK(j.at("label") == "A_{3,3}+A_1");
  const MetricLieAlgebra back = algebra_from_json(j);
  REQUIRE(back.dim == alg.dim);
  for (int i = 0; i < 4; ++i)
    for (int jj = 0; jj < 4; ++jj)
      for (int k = 0; k < 4; ++k)
        CHECK(back.c(i, jj, k) == doctest::Approx(alg.c(i, jj, k)).epsilon(1e-12));
}

TEST_CASE("reports are byte-deterministic and round-trip through the algebra") {
  const MetricLieAlgebra a1 = catalog::build("2A_2", {{"a", 1.0}, {"b", 2.0}});
  const std::string r1 = report_json(a1, analyze(a1)).dump(2);
  const MetricLieAlgebra a2 = catalog::build("2A_2", {{"a", 1.0}, {"b", 2.0}});
  const std::string r2 = report_json(a2, analyze(a2)).dump(2);
  CHECK(r1 == r2);

  // Re-serialized algebra re-validates and produces an identical report.
  const MetricLieAlgebra back = algebra_from_json(algebra_json(a1));
  const std::string r3 = report_json(back, analyze(back)).dump(2);
  CHECK(r1 == r3);
}

TEST_CASE("report structure follows the documented shape") {
  const MetricLieAlgebra alg = catalog::build("2A_2");
  const Json j = report_json(alg, analyze(alg));

  REQUIRE(j.contains("curvature"));
  const Json& curv = j.at("curvature");
  CHECK(curv.at("ricci").size() == 4);
  CHECK(curv.contains("scalar"));
  CHECK(curv.at("sectional").contains("12"));
  CHECK(curv.at("sectional").contains("34"));
  CHECK(curv.at("locally_symmetric") == true);
  CHECK(curv.at("conformally_flat") == false);
  CHECK(curv.at("c_space") == true);

  const Json& spec = j.at("spectrum");
  CHECK(spec.at("basis")[0] == "e1^e2");
  CHECK(spec.at("basis")[5] == "e3^e4");
  CHECK(spec.at("matrix").size() == 6);
  CHECK(spec.at("clusters").size() >= 2);

  CHECK(j.at("v_decomposition").at("exists") == true);
  CHECK(j.at("z_decomposition").at("exists") == true);
  CHECK(j.at("z_decomposition").at("kind") == "Z");
  CHECK(j.at("z_decomposition").at("brackets").contains("(1,2)"));
  CHECK(j.at("residuals").at("first_bianchi").get<double>() < 1e-10);
}

TEST_CASE("stage gating stops the pipeline early") {
  const MetricLieAlgebra alg = catalog::build("2A_2");
  const AnalysisResult curv_only = analyze(alg, Stage::Curvature);
  CHECK_FALSE(curv_only.spectral.has_value());
  CHECK_FALSE(curv_only.vdec.has_value());

  const AnalysisResult spec_only = analyze(alg, Stage::Spectrum);
  CHECK(spec_only.spectral.has_value());
  CHECK_FALSE(spec_only.vdec.has_value());

  const AnalysisResult vstage = analyze(alg, Stage::VDecomp);
  CHECK(vstage.vdec.has_value());
  CHECK_FALSE(vstage.zdec.has_value());

  const AnalysisResult all = analyze(alg, Stage::All);
  CHECK(all.zdec.has_value());

  CHECK_THROWS_AS(stage_from_string("nonsense"), ConstraintViolation);
}

TEST_CASE("ambiguous irreducibility is retained as a partial result") {
  const MetricLieAlgebra alg = catalog::build("A_{4,9}^beta");
  const AnalysisResult r = analyze(alg);
  CHECK_FALSE(r.ambiguity_error.empty());
  CHECK(r.spectral.has_value());
  CHECK_FALSE(r.vdec.has_value());
  const Json j = report_json(alg, r);
  CHECK(j.at("irreducible_system").contains("error"));
  CHECK(j.at("v_decomposition").is_null());
}

TEST_CASE("low-dimensional reports leave undefined verdicts null") {
  const MetricLieAlgebra alg = new_algebra(2, {{1, 2, 1, 1.0}});
  const Json j = report_json(alg, analyze(alg));
  CHECK(j.at("curvature").at("conformally_flat").is_null());
  CHECK(j.at("curvature").at("c_space").is_null());

  // Dimension 1 has no bivectors at all; the decompositions degenerate
  // but are still reported.
  const AnalysisResult line = analyze(new_algebra(1, {}));
  REQUIRE(line.vdec.has_value());
  CHECK_FALSE(line.vdec->exists);
  REQUIRE(line.zdec.has_value());
  CHECK_FALSE(line.zdec->exists);
  const MetricLieAlgebra alg3 = catalog::build("su(2)");
  const Json j3 = report_json(alg3, analyze(alg3));
  CHECK(j3.at("curvature").at("conformally_flat") == true);
  CHECK(j3.at("curvature").at("c_space").is_null());
}

TEST_CASE("text report is stable and readable") {
  const MetricLieAlgebra alg = catalog::build("2A_2");
  const AnalysisResult r = analyze(alg);
  const std::string text = report_text(alg, r);
  CHECK(text.find("locally symmetric: yes") != std::string::npos);
  CHECK(text.find("Z-decomposition") != std::string::npos);
  CHECK(text == report_text(alg, r));
}

TEST_CASE("loading rejects malformed files") {
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/file.json"),
                  ConstraintViolation);
  CHECK_THROWS_AS(algebra_from_json(Json::object()), ConstraintViolation);
}
