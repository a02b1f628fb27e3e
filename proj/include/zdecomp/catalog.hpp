#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdecomp/algebra.hpp"

namespace zdecomp::catalog {

using Params = std::map<std::string, double>;

struct ParamSpec {
  std::string name;
  double default_value = 1.0;
  std::string constraint;  // human-readable restriction, "" if free
};

/// A parametric family of metric Lie algebras with its recorded reference
/// facts (spectrum closed forms, splitting behaviour) where known.
struct CatalogEntry {
  std::string name;      // ASCII, e.g. "A_{3,3}+A_1"
  std::string variant;   // "" or "table5-first"/"table5-second"
  int dim = 0;
  std::string description;
  std::vector<ParamSpec> params;
  std::function<MetricLieAlgebra(const Params&)> make;
  /// Closed-form curvature-operator spectrum, unsorted, when the family is
  /// conformally flat and the spectrum is known.
  std::function<std::vector<double>(const Params&)> reference_spectrum;
  std::optional<bool> conformally_flat;
  std::optional<bool> c_space;
  std::optional<bool> z_exists;  // unset when parameter-dependent or unknown

  std::string display_name() const {
    return variant.empty() ? name : name + " [" + variant + "]";
  }
};

const std::vector<CatalogEntry>& list_entries();

/// Resolves a name (exact, or unique prefix such as "A_{4,6}") and variant,
/// fills missing parameters with defaults, checks the family's restrictions
/// and builds the algebra. Throws ConstraintViolation on violated
/// restrictions or unknown names/parameters.
MetricLieAlgebra build(const std::string& name, Params params = {},
                       const std::string& variant = "");

const CatalogEntry& find_entry(const std::string& name,
                               const std::string& variant = "");

struct Verdict {
  enum Kind { Yes, No, ParameterDependent } kind = Yes;
  std::string condition;  // for ParameterDependent: when the metric is symmetric
  /// Evaluates the recorded classification at concrete parameters; empty
  /// when the record does not decide that parameter point.
  std::function<std::optional<bool>(const Params&)> predict;
};

/// The recorded local-symmetry classification of a family.
/// Throws NoVerdictRecorded when the family carries none.
Verdict expected_verdict(const std::string& name);

}  // namespace zdecomp::catalog
