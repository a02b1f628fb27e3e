#include "zdecomp/batch.hpp"

#include <sstream>

#include "zdecomp/report.hpp"

namespace zdecomp {

std::size_t sweep_size(const SweepSpec& spec) {
  std::size_t total = 1;
  for (const auto& [name, values] : spec.axes) total *= values.size();
  return total;
}

namespace {

catalog::Params params_for_index(const SweepSpec& spec, std::size_t index) {
  catalog::Params p = spec.base_params;
  // Row-major: the last axis varies fastest.
  std::size_t rest = index;
  for (std::size_t a = spec.axes.size(); a-- > 0;) {
    const auto& [name, values] = spec.axes[a];
    p[name] = values[rest % values.size()];
    rest /= values.size();
  }
  return p;
}

SweepRow evaluate_row(const SweepSpec& spec, std::size_t index) {
  SweepRow row;
  row.index = static_cast<int>(index);
  row.params = params_for_index(spec, index);
  try {
    const MetricLieAlgebra alg =
        catalog::build(spec.catalog_name, row.params, spec.variant);
    const AnalysisResult res = analyze(alg, Stage::All);
    row.ok = true;
    row.locally_symmetric = res.symmetry.is_locally_symmetric;
    row.max_residual = res.symmetry.max_residual;
    row.conformally_flat = res.conformally_flat;
    if (res.weyl_div) row.c_space = res.weyl_div->is_c_space;
    if (res.zdec) row.z_exists = res.zdec->exists;
    // An ambiguous splitting keeps the curvature verdicts but is surfaced.
    row.error = res.ambiguity_error;
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, ExecutionMode mode) {
  const std::size_t total = sweep_size(spec);
  std::vector<SweepRow> rows(total);
  if (mode == ExecutionMode::Serial) {
    for (std::size_t i = 0; i < total; ++i) rows[i] = evaluate_row(spec, i);
    return rows;
  }
  const long count = static_cast<long>(total);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i)
    rows[static_cast<std::size_t>(i)] =
        evaluate_row(spec, static_cast<std::size_t>(i));
  return rows;
}

namespace {

std::vector<std::string> param_columns(const SweepSpec& spec) {
  std::vector<std::string> cols;
  const auto& entry = catalog::find_entry(spec.catalog_name, spec.variant);
  for (const auto& ps : entry.params) cols.push_back(ps.name);
  return cols;
}

std::string opt_bool(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

}  // namespace

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  const std::vector<std::string> cols = param_columns(spec);
  std::ostringstream out;
  out << "index";
  for (const std::string& c : cols) out << "," << c;
  out << ",locally_symmetric,max_residual,conformally_flat,c_space,z_exists,error\n";
  for (const SweepRow& row : rows) {
    out << row.index;
    for (const std::string& c : cols) {
      auto it = row.params.find(c);
      out << "," << (it == row.params.end() ? "" : format_real(it->second));
    }
    if (row.ok) {
      out << "," << (row.locally_symmetric ? "true" : "false") << ","
          << format_real(row.max_residual) << "," << opt_bool(row.conformally_flat)
          << "," << opt_bool(row.c_space) << "," << opt_bool(row.z_exists) << ",";
      if (!row.error.empty()) out << "\"" << row.error << "\"";
    } else {
      out << ",,,,,,\"" << row.error << "\"";
    }
    out << "\n";
  }
  return out.str();
}

std::string sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  Json j = Json::array();
  const std::vector<std::string> cols = param_columns(spec);
  for (const SweepRow& row : rows) {
    Json r;
    r["index"] = row.index;
    Json p = Json::object();
    for (const std::string& c : cols) {
      auto it = row.params.find(c);
      if (it != row.params.end()) p[c] = round12(it->second);
    }
    r["params"] = p;
    if (row.ok) {
      r["locally_symmetric"] = row.locally_symmetric;
      r["max_residual"] = round12(row.max_residual);
      r["conformally_flat"] =
          row.conformally_flat ? Json(*row.conformally_flat) : Json(nullptr);
      r["c_space"] = row.c_space ? Json(*row.c_space) : Json(nullptr);
      r["z_exists"] = row.z_exists ? Json(*row.z_exists) : Json(nullptr);
      if (!row.error.empty()) r["error"] = row.error;
    } else {
      r["error"] = row.error;
    }
    j.push_back(r);
  }
  return j.dump(2) + "\n";
}

}  // namespace zdecomp
