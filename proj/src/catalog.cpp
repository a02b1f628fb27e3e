#include "zdecomp/catalog.hpp"

#include <cmath>

#include "zdecomp/curvature.hpp"
#include "zdecomp/errors.hpp"

namespace zdecomp::catalog {

namespace {

double get(const Params& p, const std::string& key) { return p.at(key); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstraintViolation("constraint violated: " + what);
}

MetricLieAlgebra make(int dim, const std::string& label,
                      std::vector<BracketEntry> entries) {
  return new_algebra(dim, entries, label);
}

std::vector<CatalogEntry> build_registry() {
  std::vector<CatalogEntry> reg;

  // --- 3-dimensional families -------------------------------------------

  reg.push_back(CatalogEntry{
      "R^3", "", 3, "abelian 3-dimensional algebra (flat)", {},
      [](const Params&) { return make(3, "R^3", {}); },
      nullptr, true, std::nullopt, std::nullopt});

  reg.push_back(CatalogEntry{
      "R^2xso(2)", "", 3,
      "euclidean-motion type: C_{1,2}^3 = C_{3,1}^2 = a",
      {{"a", 1.0, "a > 0"}},
      [](const Params& p) {
        const double a = get(p, "a");
        require(a > 0, "a > 0");
        return make(3, "R^2xso(2)", {{1, 2, 3, a}, {3, 1, 2, a}});
      },
      nullptr, std::nullopt, std::nullopt, std::nullopt});

  reg.push_back(CatalogEntry{
      "su(2)", "", 3,
      "round form: C_{1,2}^3 = C_{2,3}^1 = C_{3,1}^2 = a",
      {{"a", 1.0, "a > 0"}},
      [](const Params& p) {
        const double a = get(p, "a");
        require(a > 0, "a > 0");
        return make(3, "su(2)", {{1, 2, 3, a}, {2, 3, 1, a}, {3, 1, 2, a}});
      },
      nullptr, std::nullopt, std::nullopt, std::nullopt});

  reg.push_back(CatalogEntry{
      "milnor-uni", "", 3,
      "generic unimodular frame: C_{1,2}^3 = a, C_{2,3}^1 = c, C_{3,1}^2 = b",
      {{"a", 1.0, ""}, {"b", 1.0, ""}, {"c", 1.0, ""}},
      [](const Params& p) {
        return make(3, "milnor-uni",
                    {{1, 2, 3, get(p, "a")},
                     {2, 3, 1, get(p, "c")},
                     {3, 1, 2, get(p, "b")}});
      },
      nullptr, std::nullopt, std::nullopt, std::nullopt});

  reg.push_back(CatalogEntry{
      "milnor-nonuni", "", 3,
      "generic nonunimodular frame: C_{1,2}^2 = a, C_{1,2}^3 = b, "
      "C_{1,3}^2 = c, C_{1,3}^3 = d",
      {{"a", 1.0, "a + d != 0"},
       {"b", 1.0, ""},
       {"c", -1.0, "ac + bd = 0"},
       {"d", 1.0, ""}},
      [](const Params& p) {
        const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c"),
                     d = get(p, "d");
        double scale = std::max({std::abs(a), std::abs(b), std::abs(c),
                                 std::abs(d)});
        const double tol = 1e-9 * (1.0 + scale);
        require(std::abs(a + d) > tol, "a + d != 0");
        require(std::abs(a * c + b * d) <= tol, "ac + bd = 0");
        return make(3, "milnor-nonuni",
                    {{1, 2, 2, a}, {1, 2, 3, b}, {1, 3, 2, c}, {1, 3, 3, d}});
      },
      nullptr, std::nullopt, std::nullopt, std::nullopt});

  reg.push_back(CatalogEntry{
      "g_I", "", 3, "C_{1,2}^2 = C_{1,3}^3 = a",
      {{"a", 1.0, "a > 0"}},
      [](const Params& p) {
        const double a = get(p, "a");
        require(a > 0, "a > 0");
        return make(3, "g_I", {{1, 2, 2, a}, {1, 3, 3, a}});
      },
      nullptr, std::nullopt, std::nullopt, std::nullopt});

  reg.push_back(CatalogEntry{
      "g_D", "", 3,
      "C_{1,2}^2 = C_{1,3}^3 = a, C_{1,2}^3 = -C_{1,3}^2 = b "
      "(also normalized elsewhere with the single constant C_{1,3}^2 = a)",
      {{"a", 1.0, "a > 0"}, {"b", 1.0, "b > 0"}},
      [](const Params& p) {
        const double a = get(p, "a"), b = get(p, "b");
        require(a > 0, "a > 0");
        require(b > 0, "b > 0");
        return make(3, "g_D",
                    {{1, 2, 2, a}, {1, 3, 3, a}, {1, 2, 3, b}, {1, 3, 2, -b}});
      },
      nullptr, std::nullopt, std::nullopt, std::nullopt});

  // --- 4-dimensional families -------------------------------------------

  reg.push_back(CatalogEntry{
      "A_2+2A_1", "", 4, "C_{1,2}^1 = a, C_{1,2}^4 = b",
      {{"a", 1.0, "a > 0"}, {"b", 1.0, ""}},
      [](const Params& p) {
        const double a = get(p, "a");
        require(a > 0, "a > 0");
        return make(4, "A_2+2A_1", {{1, 2, 1, a}, {1, 2, 4, get(p, "b")}});
      },
      nullptr, std::nullopt, std::nullopt, true});

  reg.push_back(CatalogEntry{
      "A_{3,1}+A_1", "", 4, "C_{2,3}^1 = a",
      {{"a", 1.0, "a > 0"}},
      [](const Params& p) {
        const double a = get(p, "a");
        require(a > 0, "a > 0");
        return make(4, "A_{3,1}+A_1", {{2, 3, 1, a}});
      },
      nullptr, std::nullopt, std::nullopt, true});

  reg.push_back(CatalogEntry{
      "A_{3,3}+A_1", "", 4, "C_{1,3}^1 = C_{2,3}^2 = a, C_{3,4}^1 = b",
      {{"a", 1.0, "a > 0"}, {"b", 1.0, ""}},
      [](const Params& p) {
        const double a = get(p, "a");
        require(a > 0, "a > 0");
        return make(4, "A_{3,3}+A_1",
                    {{1, 3, 1, a}, {2, 3, 2, a}, {3, 4, 1, get(p, "b")}});
      },
      nullptr, std::nullopt, std::nullopt, std::nullopt});

  reg.push_back(CatalogEntry{
      "4A_1", "", 4, "abelian 4-dimensional algebra (flat)", {},
      [](const Params&) { return make(4, "4A_1", {}); },
      [](const Params&) { return std::vector<double>(6, 0.0); },
      true, true, false});

  reg.push_back(CatalogEntry{
      "2A_2", "", 4, "C_{1,2}^2 = a, C_{3,4}^4 = b",
      {{"a", 1.0, "a > 0"}, {"b", 1.0, "b > 0"}},
      [](const Params& p) {
        const double a = get(p, "a"), b = get(p, "b");
        require(a > 0, "a > 0");
        require(b > 0, "b > 0");
        return make(4, "2A_2", {{1, 2, 2, a}, {3, 4, 4, b}});
      },
      nullptr, false, true, true});

  reg.push_back(CatalogEntry{
      "A_{3,6}+A_1", "", 4, "C_{2,3}^1 = c, C_{1,3}^2 = -c",
      {{"c", 1.0, "c > 0"}},
      [](const Params& p) {
        const double c = get(p, "c");
        require(c > 0, "c > 0");
        return make(4, "A_{3,6}+A_1", {{2, 3, 1, c}, {1, 3, 2, -c}});
      },
      [](const Params&) { return std::vector<double>(6, 0.0); },
      true, true, false});

  reg.push_back(CatalogEntry{
      "A_{3,7}^alpha+A_1", "", 4,
      "C_{1,3}^1 = C_{2,3}^2 = alpha*a, C_{2,3}^1 = -C_{1,3}^2 = a",
      {{"a", 1.0, "a > 0"}, {"alpha", 2.0, "alpha > 0"}},
      [](const Params& p) {
        const double a = get(p, "a"), al = get(p, "alpha");
        require(a > 0, "a > 0");
        require(al > 0, "alpha > 0");
        return make(4, "A_{3,7}^alpha+A_1",
                    {{1, 3, 1, al * a},
                     {2, 3, 2, al * a},
                     {2, 3, 1, a},
                     {1, 3, 2, -a}});
      },
      [](const Params& p) {
        const double a = get(p, "a"), al = get(p, "alpha");
        const double k = -al * al * a * a;
        return std::vector<double>{k, k, 0.0, k, 0.0, 0.0};
      },
      true, true, true});

  reg.push_back(CatalogEntry{
      "A_{3,9}+A_1", "", 4,
      "C_{1,3}^2 = a*s, C_{1,2}^3 = C_{2,3}^1 = -a*s, "
      "C_{2,4}^1 = -C_{1,4}^2 = a*m*s with s = sqrt(1+m^2)",
      {{"a", 1.0, "a > 0"}, {"m", 1.0, ""}},
      [](const Params& p) {
        const double a = get(p, "a"), m = get(p, "m");
        require(a > 0, "a > 0");
        const double s = a * std::sqrt(1.0 + m * m);
        const double t = m * s;
        return make(4, "A_{3,9}+A_1",
                    {{1, 3, 2, s},
                     {1, 2, 3, -s},
                     {2, 3, 1, -s},
                     {2, 4, 1, t},
                     {1, 4, 2, -t}});
      },
      [](const Params& p) {
        const double a = get(p, "a"), m = get(p, "m");
        const double k = a * a * (1.0 + m * m) / 4.0;
        return std::vector<double>{k, k, 0.0, k, 0.0, 0.0};
      },
      true, true, true});

  reg.push_back(CatalogEntry{
      "A_{4,5}^{alpha,beta}", "", 4,
      "C_{1,4}^1 = C_{2,4}^2 = C_{3,4}^3 = a (alpha = beta = 1)",
      {{"a", 1.0, "a > 0"}},
      [](const Params& p) {
        const double a = get(p, "a");
        require(a > 0, "a > 0");
        return make(4, "A_{4,5}^{alpha,beta}",
                    {{1, 4, 1, a}, {2, 4, 2, a}, {3, 4, 3, a}});
      },
      [](const Params& p) {
        const double a = get(p, "a");
        return std::vector<double>(6, -a * a);
      },
      true, true, false});

  reg.push_back(CatalogEntry{
      "A_{4,6}^{alpha,beta}", "table5-first", 4,
      "C_{1,4}^1 = alpha*a, C_{2,4}^3 = -a, C_{3,4}^2 = a",
      {{"a", 1.0, "a > 0"}, {"alpha", 2.0, "alpha != 1"}},
      [](const Params& p) {
        const double a = get(p, "a"), al = get(p, "alpha");
        require(a > 0, "a > 0");
        require(al != 1.0, "alpha != 1");
        return make(4, "A_{4,6}^{alpha,beta}",
                    {{1, 4, 1, al * a}, {2, 4, 3, -a}, {3, 4, 2, a}});
      },
      nullptr, std::nullopt, true, true});

  reg.push_back(CatalogEntry{
      "A_{4,6}^{alpha,beta}", "table5-second", 4,
      "C_{1,4}^1 = C_{2,4}^2 = C_{3,4}^3 = beta*a, C_{2,4}^3 = -a, "
      "C_{3,4}^2 = a",
      {{"a", 1.0, "a > 0"}, {"beta", 1.0, "beta > 0"}},
      [](const Params& p) {
        const double a = get(p, "a"), be = get(p, "beta");
        require(a > 0, "a > 0");
        require(be > 0, "beta > 0");
        return make(4, "A_{4,6}^{alpha,beta}",
                    {{1, 4, 1, be * a},
                     {2, 4, 2, be * a},
                     {3, 4, 3, be * a},
                     {2, 4, 3, -a},
                     {3, 4, 2, a}});
      },
      [](const Params& p) {
        const double a = get(p, "a"), be = get(p, "beta");
        return std::vector<double>(6, -be * be * a * a);
      },
      true, true, false});

  reg.push_back(CatalogEntry{
      "A_{4,9}^beta", "", 4,
      "C_{1,4}^1 = C_{2,3}^1 = 2a, C_{2,4}^2 = C_{3,4}^3 = a (beta = 1); "
      "eigen-bivectors of the nonzero eigenvalues have trivial kernel, so "
      "the splitting analysis stops at an ambiguous Darboux frequency",
      {{"a", 1.0, "a > 0"}},
      [](const Params& p) {
        const double a = get(p, "a");
        require(a > 0, "a > 0");
        return make(4, "A_{4,9}^beta",
                    {{1, 4, 1, 2 * a}, {2, 3, 1, 2 * a}, {2, 4, 2, a},
                     {3, 4, 3, a}});
      },
      nullptr, std::nullopt, true, std::nullopt});

  reg.push_back(CatalogEntry{
      "A_{4,11}^alpha", "", 4,
      "C_{1,4}^1 = C_{2,3}^1 = 2a*alpha, C_{2,4}^2 = C_{3,4}^3 = a*alpha, "
      "C_{2,4}^3 = -a, C_{3,4}^2 = a; like A_{4,9}^beta the splitting "
      "analysis stops at an ambiguous Darboux frequency",
      {{"a", 1.0, "a > 0"}, {"alpha", 2.0, "alpha > 0"}},
      [](const Params& p) {
        const double a = get(p, "a"), al = get(p, "alpha");
        require(a > 0, "a > 0");
        require(al > 0, "alpha > 0");
        return make(4, "A_{4,11}^alpha",
                    {{1, 4, 1, 2 * a * al},
                     {2, 3, 1, 2 * a * al},
                     {2, 4, 2, a * al},
                     {3, 4, 3, a * al},
                     {2, 4, 3, -a},
                     {3, 4, 2, a}});
      },
      nullptr, std::nullopt, true, std::nullopt});

  reg.push_back(CatalogEntry{
      "A_{4,12}", "", 4,
      "C_{1,3}^1 = C_{2,3}^2 = s, C_{2,4}^1 = -C_{1,4}^2 = a*d/s, "
      "C_{2,3}^1 = -C_{1,3}^2 = b*d/s with s = sqrt(a^2+b^2)",
      {{"a", 1.0, "a > 0"}, {"b", 1.0, ""}, {"d", 1.0, "d > 0"}},
      [](const Params& p) {
        const double a = get(p, "a"), b = get(p, "b"), d = get(p, "d");
        require(a > 0, "a > 0");
        require(d > 0, "d > 0");
        const double s = std::sqrt(a * a + b * b);
        return make(4, "A_{4,12}",
                    {{1, 3, 1, s},
                     {2, 3, 2, s},
                     {2, 4, 1, a * d / s},
                     {1, 4, 2, -a * d / s},
                     {2, 3, 1, b * d / s},
                     {1, 3, 2, -b * d / s}});
      },
      [](const Params& p) {
        const double a = get(p, "a"), b = get(p, "b");
        const double k = -(a * a + b * b);
        return std::vector<double>{k, k, 0.0, k, 0.0, 0.0};
      },
      true, true, true});

  return reg;
}

}  // namespace

const std::vector<CatalogEntry>& list_entries() {
  static const std::vector<CatalogEntry> registry = build_registry();
  return registry;
}

const CatalogEntry& find_entry(const std::string& name,
                               const std::string& variant) {
  const CatalogEntry* match = nullptr;
  int count = 0;
  for (const CatalogEntry& e : list_entries()) {
    const bool name_ok =
        e.name == name ||
        (e.name.size() > name.size() && e.name.compare(0, name.size(), name) == 0 &&
         e.name[name.size()] == '^');
    if (!name_ok) continue;
    if (!variant.empty() && e.variant != variant) continue;
    if (variant.empty() && !e.variant.empty() && e.variant != "table5-first")
      continue;  // default variant
    ++count;
    match = &e;
  }
  if (count == 0)
    throw ConstraintViolation("unknown catalog entry '" + name + "'" +
                              (variant.empty() ? "" : " variant '" + variant + "'"));
  if (count > 1)
    throw ConstraintViolation("ambiguous catalog entry '" + name + "'");
  return *match;
}

MetricLieAlgebra build(const std::string& name, Params params,
                       const std::string& variant) {
  const CatalogEntry& entry = find_entry(name, variant);
  Params full;
  for (const ParamSpec& ps : entry.params) {
    auto it = params.find(ps.name);
    full[ps.name] = it == params.end() ? ps.default_value : it->second;
    if (it != params.end()) params.erase(it);
  }
  if (!params.empty())
    throw ConstraintViolation("unknown parameter '" + params.begin()->first +
                              "' for catalog entry '" + entry.name + "'");
  return entry.make(full);
}

Verdict expected_verdict(const std::string& name) {
  auto always = [](bool value) {
    return [value](const Params&) { return std::optional<bool>(value); };
  };

  if (name == "R^3" || name == "R^2xso(2)" || name == "su(2)" ||
      name == "g_I" || name == "g_D")
    return Verdict{Verdict::Yes, "", always(true)};

  if (name == "A_{3,1}+A_1") return Verdict{Verdict::No, "", always(false)};

  if (name == "2A_2" || name == "A_{3,9}+A_1" || name == "A_{3,7}^alpha+A_1" ||
      name == "A_{4,12}" || name == "A_{4,6}" ||
      name == "A_{4,6}^{alpha,beta}")
    return Verdict{Verdict::Yes, "", always(true)};

  if (name == "A_2+2A_1")
    return Verdict{Verdict::ParameterDependent, "b = 0",
                   [](const Params& p) {
                     return std::optional<bool>(p.at("b") == 0.0);
                   }};

  if (name == "A_{3,3}+A_1")
    return Verdict{Verdict::ParameterDependent,
                   "b = 0 (recorded as sufficient; b != 0 is left to the "
                   "direct check)",
                   [](const Params& p) -> std::optional<bool> {
                     if (p.at("b") == 0.0) return true;
                     return std::nullopt;
                   }};

  if (name == "milnor-uni")
    return Verdict{Verdict::ParameterDependent,
                   "(a,b,c) in the solution set of the unimodular system",
                   [](const Params& p) -> std::optional<bool> {
                     const double v[3] = {p.at("a"), p.at("b"), p.at("c")};
                     for (double r :
                          milnor_system_residual(MilnorKind::Unimodular, v))
                       if (std::abs(r) > 1e-8) return false;
                     return true;
                   }};

  if (name == "milnor-nonuni")
    return Verdict{Verdict::ParameterDependent,
                   "(a,b,c,d) in the solution set of the nonunimodular system",
                   [](const Params& p) -> std::optional<bool> {
                     const double v[4] = {p.at("a"), p.at("b"), p.at("c"),
                                          p.at("d")};
                     for (double r :
                          milnor_system_residual(MilnorKind::Nonunimodular, v))
                       if (std::abs(r) > 1e-8) return false;
                     return true;
                   }};

  throw NoVerdictRecorded("no local-symmetry classification recorded for '" +
                          name + "'");
}

}  // namespace zdecomp::catalog
