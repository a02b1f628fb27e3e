#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdecomp/catalog.hpp"

namespace zdecomp {

/// A parameter sweep over a catalog family: fixed base parameters plus
/// one value list per swept axis. Rows enumerate the cartesian product in
/// row-major order (first axis slowest).
struct SweepSpec {
  std::string catalog_name;
  std::string variant;
  catalog::Params base_params;
  std::vector<std::pair<std::string, std::vector<double>>> axes;
};

struct SweepRow {
  int index = 0;
  catalog::Params params;  // fully resolved parameter values
  bool ok = false;
  std::string error;
  bool locally_symmetric = false;
  double max_residual = 0.0;
  std::optional<bool> conformally_flat;
  std::optional<bool> c_space;
  std::optional<bool> z_exists;
};

enum class ExecutionMode { Serial, Parallel };

/// Number of grid points the sweep enumerates.
std::size_t sweep_size(const SweepSpec& spec);

/// Evaluates every grid point. Rows are independent; Parallel runs them
/// under OpenMP and the output order is by grid index either way.
/// Per-row failures are captured in the row, not thrown.
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                ExecutionMode mode = ExecutionMode::Parallel);

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::string sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace zdecomp
