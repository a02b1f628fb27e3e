#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zdecomp/batch.hpp"
#include "zdecomp/errors.hpp"
#include "zdecomp/report.hpp"

namespace {

using namespace zdecomp;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitAmbiguous = 3;

void emit_error(const std::string& type, const std::string& message) {
  Json j;
  j["error"] = type;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

catalog::Params parse_params(const std::vector<std::string>& kvs) {
  catalog::Params p;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConstraintViolation("parameter '" + kv + "' is not of the form key=value");
    std::size_t used = 0;
    const std::string val = kv.substr(eq + 1);
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      throw ConstraintViolation("parameter value '" + val + "' is not a number");
    }
    if (used != val.size())
      throw ConstraintViolation("parameter value '" + val + "' is not a number");
    p[kv.substr(0, eq)] = v;
  }
  return p;
}

struct AnalyzeOptions {
  std::string catalog_name;
  std::string variant;
  std::string file;
  std::vector<std::string> params;
  std::string format = "json";
  std::string stage = "all";
  bool emit_algebra = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  if (opt.catalog_name.empty() == opt.file.empty()) {
    emit_error("usage", "analyze needs exactly one of --catalog or --file");
    return kExitValidation;
  }
  if (!opt.file.empty() && !opt.params.empty()) {
    emit_error("usage", "-p parameters only apply to --catalog input");
    return kExitValidation;
  }
  MetricLieAlgebra alg;
  try {
    alg = opt.file.empty()
              ? catalog::build(opt.catalog_name, parse_params(opt.params),
                               opt.variant)
              : load_algebra_file(opt.file);
  } catch (const Error& e) {
    emit_error("validation", e.what());
    return kExitValidation;
  }

  if (opt.emit_algebra) {
    std::cout << algebra_json(alg).dump(2) << "\n";
    return kExitOk;
  }

  const AnalysisResult result = analyze(alg, stage_from_string(opt.stage));
  if (opt.format == "text")
    std::cout << report_text(alg, result);
  else
    std::cout << report_json(alg, result).dump(2) << "\n";

  if (!result.ambiguity_error.empty()) {
    emit_error("ambiguous", result.ambiguity_error);
    return kExitAmbiguous;
  }
  return kExitOk;
}

struct SweepOptions {
  std::string catalog_name;
  std::string variant;
  std::vector<std::string> params;
  std::vector<std::string> grids;
  std::string format = "csv";
  bool serial = false;
};

int run_sweep_cmd(const SweepOptions& opt) {
  SweepSpec spec;
  spec.catalog_name = opt.catalog_name;
  spec.variant = opt.variant;
  try {
    spec.base_params = parse_params(opt.params);
    for (const std::string& g : opt.grids) {
      const auto eq = g.find('=');
      if (eq == std::string::npos)
        throw ConstraintViolation("grid '" + g + "' is not of the form key=v1,v2,...");
      std::vector<double> values;
      std::string rest = g.substr(eq + 1);
      std::size_t pos = 0;
      while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        const std::string tok =
            rest.substr(pos, comma == std::string::npos ? rest.size() - pos
                                                        : comma - pos);
        if (tok.empty())
          throw ConstraintViolation("grid '" + g + "' has an empty value");
        values.push_back(std::stod(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      spec.axes.emplace_back(g.substr(0, eq), values);
    }
    if (sweep_size(spec) == 0) throw ConstraintViolation("sweep grid is empty");
    catalog::find_entry(spec.catalog_name, spec.variant);
  } catch (const Error& e) {
    emit_error("validation", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    emit_error("validation", e.what());
    return kExitValidation;
  }

  const std::vector<SweepRow> rows = run_sweep(
      spec, opt.serial ? ExecutionMode::Serial : ExecutionMode::Parallel);
  std::cout << (opt.format == "json" ? sweep_json(spec, rows)
                                     : sweep_csv(spec, rows));
  return kExitOk;
}

int run_catalog_list(const std::string& format) {
  if (format == "json") {
    Json j = Json::array();
    for (const catalog::CatalogEntry& e : catalog::list_entries()) {
      Json je;
      je["name"] = e.name;
      if (!e.variant.empty()) je["variant"] = e.variant;
      je["dim"] = e.dim;
      je["description"] = e.description;
      Json params = Json::array();
      for (const catalog::ParamSpec& ps : e.params) {
        Json jp;
        jp["name"] = ps.name;
        jp["default"] = ps.default_value;
        jp["constraint"] = ps.constraint;
        params.push_back(jp);
      }
      je["params"] = params;
      j.push_back(je);
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const catalog::CatalogEntry& e : catalog::list_entries()) {
    std::cout << e.display_name() << "  (dim " << e.dim << ")";
    if (!e.params.empty()) {
      std::cout << "  params:";
      for (const catalog::ParamSpec& ps : e.params) {
        std::cout << " " << ps.name << "=" << format_real(ps.default_value);
        if (!ps.constraint.empty()) std::cout << " [" << ps.constraint << "]";
      }
    }
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "curvature, spectral and subspace-decomposition analysis of metric Lie "
      "algebras given by structure constants in an orthonormal basis"};
  app.require_subcommand(1);

  AnalyzeOptions aopt;
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "run the full analysis pipeline on one algebra");
  analyze_cmd->add_option("--catalog", aopt.catalog_name, "catalog entry name");
  analyze_cmd->add_option("--variant", aopt.variant, "catalog entry variant");
  analyze_cmd->add_option("--file", aopt.file, "algebra JSON file");
  analyze_cmd->add_option("-p,--param", aopt.params, "parameter key=value");
  analyze_cmd->add_option("--format", aopt.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze_cmd
      ->add_option("--stage", aopt.stage,
                   "curvature|spectrum|vdecomp|zdecomp|all")
      ->check(CLI::IsMember({"curvature", "spectrum", "vdecomp", "zdecomp", "all"}));
  analyze_cmd->add_flag("--emit-algebra", aopt.emit_algebra,
                        "print the validated algebra JSON instead of a report");

  SweepOptions sopt;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "evaluate a parameter grid of one family");
  sweep_cmd->add_option("--catalog", sopt.catalog_name, "catalog entry name")
      ->required();
  sweep_cmd->add_option("--variant", sopt.variant, "catalog entry variant");
  sweep_cmd->add_option("-p,--param", sopt.params, "fixed parameter key=value");
  sweep_cmd->add_option("--grid", sopt.grids, "swept axis key=v1,v2,...");
  sweep_cmd->add_option("--format", sopt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_flag("--serial", sopt.serial, "disable parallel evaluation");

  std::string list_format = "text";
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "catalog inspection");
  CLI::App* list_cmd =
      catalog_cmd->add_subcommand("list", "list all catalog entries");
  list_cmd->add_option("--format", list_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return run_analyze(aopt);
    if (*sweep_cmd) return run_sweep_cmd(sopt);
    if (*catalog_cmd) return run_catalog_list(list_format);
  } catch (const AmbiguousIrreducibility& e) {
    emit_error("ambiguous", e.what());
    return kExitAmbiguous;
  } catch (const Error& e) {
    emit_error("validation", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return kExitValidation;
  }
  return kExitOk;
}
