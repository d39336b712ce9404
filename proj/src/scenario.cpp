#include "adcap/scenario.hpp"

#include "adcap/adelic.hpp"
#include "adcap/capacity.hpp"
#include "adcap/errors.hpp"
#include "adcap/fekete.hpp"
#include "adcap/game.hpp"
#include "adcap/green.hpp"
#include "adcap/oracle.hpp"
#include "adcap/skolem.hpp"

#include <json.hpp>

#include <cmath>
#include <ostream>
#include <sstream>

namespace adcap {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Field access with path-carrying schema errors.

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what);
}

const json& require_field(const json& obj, const std::string& path, const char* name) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) schema_fail(path + "." + name, "missing");
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) schema_fail(path, "expected a number");
  return v.get<double>();
}

long long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_fail(path, "expected an integer");
  return v.get<long long>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) schema_fail(path, "expected a boolean");
  return v.get<bool>();
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return rational_from_double(v.get<double>());
  schema_fail(path, "expected a number or a \"p/q\" string");
}

// Square matrix given as an array of rows.
std::vector<double> as_square_matrix(const json& v, const std::string& path, int* size) {
  if (!v.is_array() || v.empty()) schema_fail(path, "expected a nonempty array of rows");
  int n = static_cast<int>(v.size());
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const json& row = v[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      schema_fail(path + "[" + std::to_string(i) + "]", "expected a row of length " +
                                                            std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      entries.push_back(as_number(row[j], path + "[" + std::to_string(i) + "][" +
                                              std::to_string(j) + "]"));
    }
  }
  *size = n;
  return entries;
}

// 1-based index lists (orbits, permutations) -> 0-based.
std::vector<std::vector<int>> as_index_lists(const json& v, const std::string& path, int n) {
  if (!v.is_array()) schema_fail(path, "expected an array");
  std::vector<std::vector<int>> lists;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& inner = v[i];
    std::string inner_path = path + "[" + std::to_string(i) + "]";
    if (!inner.is_array()) schema_fail(inner_path, "expected an array of 1-based indices");
    std::vector<int> indices;
    for (std::size_t j = 0; j < inner.size(); ++j) {
      long long idx = as_integer(inner[j], inner_path + "[" + std::to_string(j) + "]");
      if (idx < 1 || idx > n) schema_fail(inner_path, "index out of range 1.." + std::to_string(n));
      indices.push_back(static_cast<int>(idx - 1));
    }
    lists.push_back(std::move(indices));
  }
  return lists;
}

RadiusAssignment as_radii(const json& v, const std::string& path, int dimension) {
  if (!v.is_array()) schema_fail(path, "expected an array of {place, value} pairs");
  RadiusAssignment radii(dimension);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& pair = v[i];
    std::string pair_path = path + "[" + std::to_string(i) + "]";
    const json& place_field = require_field(pair, pair_path, "place");
    std::string place_text = place_field.is_string()
                                 ? place_field.get<std::string>()
                                 : std::to_string(as_integer(place_field, pair_path + ".place"));
    Place place = Place::parse(place_text);
    const json& value_field = require_field(pair, pair_path, "value");
    if (place.is_archimedean()) {
      double value = as_number(value_field, pair_path + ".value");
      radii.set_archimedean(value);
    } else {
      radii.set_finite(place.prime(), as_rational(value_field, pair_path + ".value"));
    }
  }
  return radii;
}

Value radii_echo(const RadiusAssignment& radii) {
  Value list = Value::array();
  Value arch = Value::object();
  arch.add("place", Value::str("inf"));
  arch.add("value", Value::real(radii.archimedean()));
  list.push(std::move(arch));
  for (const auto& [p, value] : radii.finite_support()) {
    Value entry = Value::object();
    entry.add("place", Value::str(std::to_string(p)));
    entry.add("value", Value::str(rational_to_string(value)));
    list.push(std::move(entry));
  }
  return list;
}

Value real_array(const std::vector<double>& values) {
  Value list = Value::array();
  for (double v : values) list.push(Value::real(v));
  return list;
}

Value int_lists_echo(const std::vector<std::vector<int>>& lists) {
  Value outer = Value::array();
  for (const auto& inner : lists) {
    Value row = Value::array();
    for (int i : inner) row.push(Value::integer(i + 1));
    outer.push(std::move(row));
  }
  return outer;
}

// ---------------------------------------------------------------------------
// Tolerances: library defaults, overridable per scenario and by --tol.

struct EffectiveTolerances {
  GreenTolerances green;
  GameTolerances game;
  double compare_rel = 1e-12;
};

EffectiveTolerances effective_tolerances(const json& scenario, const RunOptions& options) {
  EffectiveTolerances tol;
  if (options.tol_override) tol.compare_rel = *options.tol_override;
  auto it = scenario.find("tolerances");
  if (it == scenario.end()) return tol;
  if (!it->is_object()) schema_fail("tolerances", "expected an object");
  for (const auto& [key, value] : it->items()) {
    double x = as_number(value, "tolerances." + key);
    if (key == "equal_components") tol.green.equal_components = x;
    else if (key == "symmetry") tol.green.symmetry = x;
    else if (key == "condition_cap") tol.green.condition_cap = x;
    else if (key == "minor_rel") tol.green.minor_rel = x;
    else if (key == "pivot") tol.game.pivot = x;
    else if (key == "max_pivots") tol.game.max_pivots = static_cast<long long>(x);
    else if (key == "compare_rel") tol.compare_rel = x;
    else schema_fail("tolerances." + key, "unknown tolerance");
  }
  return tol;
}

// ---------------------------------------------------------------------------
// Handlers, one per scenario kind.

void handle_green(const json& scenario, const EffectiveTolerances& tol, bool with_oracle,
                  Report* report) {
  int n = 0;
  std::vector<double> entries =
      as_square_matrix(require_field(scenario, "green", "entries"), "green.entries", &n);
  std::vector<std::vector<int>> orbits;
  if (scenario.contains("orbits")) {
    orbits = as_index_lists(scenario["orbits"], "green.orbits", n);
  }
  std::vector<std::vector<int>> generators;
  if (scenario.contains("generators")) {
    generators = as_index_lists(scenario["generators"], "green.generators", n);
  }
  std::vector<double> weights;
  if (scenario.contains("weights")) {
    const json& w = scenario["weights"];
    if (!w.is_array() || static_cast<int>(w.size()) != n) {
      schema_fail("green.weights", "expected an array of length " + std::to_string(n));
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      weights.push_back(as_number(w[i], "green.weights[" + std::to_string(i) + "]"));
    }
  }
  bool require_equilibrium = scenario.contains("require_equilibrium") &&
                             as_bool(scenario["require_equilibrium"], "green.require_equilibrium");

  report->scenario.add("kind", Value::str("green"));
  {
    Value rows = Value::array();
    for (int i = 0; i < n; ++i) {
      Value row = Value::array();
      for (int j = 0; j < n; ++j) row.push(Value::real(entries[static_cast<std::size_t>(i) * n + j]));
      rows.push(std::move(row));
    }
    report->scenario.add("entries", std::move(rows));
    if (!orbits.empty()) report->scenario.add("orbits", int_lists_echo(orbits));
    if (!generators.empty()) report->scenario.add("generators", int_lists_echo(generators));
    if (!weights.empty()) report->scenario.add("weights", real_array(weights));
  }

  GreensMatrix matrix(n, entries, orbits);
  validate(matrix, generators);

  report->results.add("n", Value::integer(n));
  bool nd = is_negative_definite(matrix, tol.green.minor_rel);
  report->results.add("negative_definite", Value::boolean(nd));

  GameMatrix game(n, entries);
  double val = game_value(game, tol.game).value;
  report->results.add("game_value", Value::real(val));
  report->results.add("gamma_CR", Value::real(std::exp(-val)));

  if (!weights.empty()) {
    WeightVector divisor{weights, WeightVector::Normalization::Divisor};
    double s_gamma = sectional_capacity_from_weights(matrix, divisor);
    report->results.add("S_gamma", Value::real(s_gamma));
  }

  if (nd || require_equilibrium) {
    Equilibrium eq = equilibrium_weights(matrix, tol.green);
    report->results.add("s_hat", real_array(eq.s_hat.values));
    report->results.add("lambda", Value::real(eq.lambda));
    report->results.add("S_plus", Value::real(std::exp(-eq.lambda)));
    report->results.add("lambda_matches_game_value",
                        Value::boolean(std::abs(eq.lambda - val) <= 1e-6));
  }

  if (with_oracle && n <= 4) {
    Value oracle_block = Value::object();
    oracle::GridMax grid = oracle::grid_max_quadratic(matrix, oracle::GridSpec(n, 1e-3));
    oracle_block.add("grid_value", Value::real(grid.value));
    oracle_block.add("grid_argmax", real_array(grid.argmax));
    if (n == 2) {
      oracle_block.add("game_value_2x2", Value::real(oracle::game_value_2x2(game)));
    }
    report->oracle = std::move(oracle_block);
  }
}

void handle_game(const json& scenario, const EffectiveTolerances& tol, bool with_oracle,
                 Report* report) {
  int n = 0;
  std::vector<double> entries =
      as_square_matrix(require_field(scenario, "game", "entries"), "game.entries", &n);
  report->scenario.add("kind", Value::str("game"));
  {
    Value rows = Value::array();
    for (int i = 0; i < n; ++i) {
      Value row = Value::array();
      for (int j = 0; j < n; ++j) row.push(Value::real(entries[static_cast<std::size_t>(i) * n + j]));
      rows.push(std::move(row));
    }
    report->scenario.add("entries", std::move(rows));
  }
  std::optional<double> shift;
  if (scenario.contains("shift")) {
    shift = as_number(scenario["shift"], "game.shift");
    report->scenario.add("shift", Value::real(*shift));
  }

  GameMatrix game(n, entries);
  GameSolution solution = game_value(game, tol.game);
  report->results.add("value", Value::real(solution.value));
  report->results.add("row_strategy", real_array(solution.row_strategy));
  report->results.add("col_strategy", real_array(solution.col_strategy));
  if (shift) {
    double shifted = shifted_value(game, *shift, tol.game);
    report->results.add("shifted_value", Value::real(shifted));
    report->results.add("shift_identity_gap",
                        Value::real(std::abs(shifted - solution.value - *shift)));
  }

  if (with_oracle && n <= 3) {
    Value oracle_block = Value::object();
    if (n == 2) oracle_block.add("closed_form_2x2", Value::real(oracle::game_value_2x2(game)));
    auto [lower, upper] = oracle::game_value_grid_bounds(game, 1e-3);
    oracle_block.add("grid_lower", Value::real(lower));
    oracle_block.add("grid_upper", Value::real(upper));
    report->oracle = std::move(oracle_block);
  }
}

void handle_polydisk(const json& scenario, bool with_oracle, Report* report) {
  int d = static_cast<int>(as_integer(require_field(scenario, "polydisk", "d"), "polydisk.d"));
  RadiusAssignment radii =
      as_radii(require_field(scenario, "polydisk", "radii"), "polydisk.radii", d);
  report->scenario.add("kind", Value::str("polydisk"));
  report->scenario.add("d", Value::integer(d));
  report->scenario.add("radii", radii_echo(radii));

  report->results.add("radius_norm", Value::real(radii.norm()));
  report->results.add("capacity", Value::real(polydisk_sectional_capacity(d, radii)));
  report->results.add("log_capacity", Value::real(polydisk_log_capacity(d, radii)));

  if (with_oracle) {
    Value oracle_block = Value::object();
    long double extended = oracle::polydisk_capacity_extended(d, radii);
    oracle_block.add("extended_precision", Value::real(static_cast<double>(extended)));
    report->oracle = std::move(oracle_block);
  }
}

PullbackCandidate parse_candidate(const json& obj, const std::string& path) {
  int d = static_cast<int>(as_integer(require_field(obj, path, "d"), path + ".d"));
  long long degree = as_integer(require_field(obj, path, "degree"), path + ".degree");
  long long multiplicity =
      as_integer(require_field(obj, path, "multiplicity"), path + ".multiplicity");
  std::optional<double> divisor_degree;
  if (obj.contains("divisor_degree")) {
    divisor_degree = as_number(obj["divisor_degree"], path + ".divisor_degree");
  }
  RadiusAssignment radii = as_radii(require_field(obj, path, "radii"), path + ".radii", d);
  return PullbackCandidate(MorphismDescriptor(d, degree, multiplicity, divisor_degree),
                           std::move(radii));
}

void handle_pullback(const json& scenario, bool with_oracle, Report* report) {
  PullbackCandidate candidate = parse_candidate(scenario, "pullback");
  report->scenario.add("kind", Value::str("pullback"));
  report->scenario.add("d", Value::integer(candidate.morphism.d));
  report->scenario.add("degree", Value::integer(candidate.morphism.degree));
  report->scenario.add("multiplicity", Value::integer(candidate.morphism.multiplicity));
  if (candidate.morphism.divisor_degree) {
    report->scenario.add("divisor_degree", Value::real(*candidate.morphism.divisor_degree));
  }
  report->scenario.add("radii", radii_echo(candidate.radii));

  double capacity = pullback_sectional_capacity(candidate);
  report->results.add("capacity", Value::real(capacity));
  report->results.add("log_capacity", Value::real(pullback_log_capacity(candidate)));
  if (candidate.morphism.divisor_degree) {
    double exponent = adjusted_exponent(candidate.morphism.d, *candidate.morphism.divisor_degree);
    report->results.add("adjusted_exponent", Value::real(exponent));
    report->results.add("normalized_capacity",
                        Value::real(std::exp(exponent * pullback_log_capacity(candidate))));
  }

  if (with_oracle) {
    Value oracle_block = Value::object();
    long double extended = oracle::pullback_capacity_extended(candidate);
    oracle_block.add("extended_precision", Value::real(static_cast<double>(extended)));
    report->oracle = std::move(oracle_block);
  }
}

void handle_fm_bound(const json& scenario, Report* report) {
  const json& list = require_field(scenario, "fm_bound", "candidates");
  if (!list.is_array()) schema_fail("fm_bound.candidates", "expected an array");
  std::vector<PullbackCandidate> candidates;
  std::vector<bool> certified;
  Value echo = Value::array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string path = "fm_bound.candidates[" + std::to_string(i) + "]";
    candidates.push_back(parse_candidate(list[i], path));
    certified.push_back(as_bool(require_field(list[i], path, "certified"), path + ".certified"));
    Value entry = Value::object();
    entry.add("d", Value::integer(candidates.back().morphism.d));
    entry.add("degree", Value::integer(candidates.back().morphism.degree));
    entry.add("multiplicity", Value::integer(candidates.back().morphism.multiplicity));
    entry.add("radii", radii_echo(candidates.back().radii));
    entry.add("certified", Value::boolean(certified.back()));
    echo.push(std::move(entry));
  }
  report->scenario.add("kind", Value::str("fm_bound"));
  report->scenario.add("candidates", std::move(echo));

  double bound = finite_morphism_capacity_lower_bound(candidates, [&](const PullbackCandidate& c) {
    return certified[static_cast<std::size_t>(&c - candidates.data())];
  });

  Value values = Value::array();
  long long certified_count = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    values.push(Value::real(pullback_sectional_capacity(candidates[i])));
    if (certified[i]) ++certified_count;
  }
  report->results.add("lower_bound", Value::real(bound));
  report->results.add("certified_count", Value::integer(certified_count));
  report->results.add("candidate_values", std::move(values));
}

void handle_witness(const json& scenario, Report* report) {
  int d = static_cast<int>(as_integer(require_field(scenario, "witness", "d"), "witness.d"));
  RadiusAssignment radii = as_radii(require_field(scenario, "witness", "radii"), "witness.radii", d);
  long long count = as_integer(require_field(scenario, "witness", "count"), "witness.count");
  if (count < 0) schema_fail("witness.count", "must be nonnegative");
  report->scenario.add("kind", Value::str("witness"));
  report->scenario.add("d", Value::integer(d));
  report->scenario.add("radii", radii_echo(radii));
  report->scenario.add("count", Value::integer(count));

  WitnessScaling scaling = find_scaling(radii);
  report->results.add("alpha", Value::str(scaling.alpha.to_string()));
  report->results.add("n", Value::integer(scaling.root_exponent));
  Value scaled = Value::array();
  for (const auto& [place, value] : scaling.scaled_view()) {
    Value entry = Value::object();
    entry.add("place", Value::str(place.to_string()));
    entry.add("value", Value::real(value));
    scaled.push(std::move(entry));
  }
  report->results.add("scaled_radii", std::move(scaled));

  std::vector<WitnessPoint> points = enumerate_witnesses(scaling, static_cast<int>(count));
  bool all_verified = true;
  Value points_echo = Value::array();
  for (const auto& point : points) {
    all_verified = all_verified && verify_point(point, radii);
    Value coords = Value::array();
    for (const auto& coordinate : point.coordinates) {
      Value c = Value::object();
      c.add("order", Value::integer(coordinate.order));
      c.add("index", Value::integer(coordinate.index));
      coords.push(std::move(c));
    }
    points_echo.push(std::move(coords));
  }
  report->results.add("points", std::move(points_echo));
  report->results.add("all_points_verified", Value::boolean(all_verified));
}

void handle_exponents(const json& scenario, Report* report) {
  const json& list = require_field(scenario, "exponents", "points");
  if (!list.is_array() || list.empty()) {
    schema_fail("exponents.points", "expected a nonempty array of tuples");
  }
  std::vector<std::vector<long long>> points;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& tuple = list[i];
    std::string path = "exponents.points[" + std::to_string(i) + "]";
    if (!tuple.is_array() || tuple.empty()) schema_fail(path, "expected a nonempty tuple");
    std::vector<long long> point;
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      point.push_back(as_integer(tuple[j], path + "[" + std::to_string(j) + "]"));
    }
    points.push_back(std::move(point));
  }
  int n = static_cast<int>(points.front().size());

  report->scenario.add("kind", Value::str("exponents"));
  {
    Value echo = Value::array();
    for (const auto& point : points) {
      Value tuple = Value::array();
      for (long long c : point) tuple.push(Value::integer(c));
      echo.push(std::move(tuple));
    }
    report->scenario.add("points", std::move(echo));
  }

  ExponentSet sigma(n, points);
  std::vector<long long> m = monomial_exponents(sigma);
  Value m_echo = Value::array();
  for (long long v : m) m_echo.push(Value::integer(v));
  report->results.add("m", std::move(m_echo));
}

void handle_charpoly(const json& scenario, Report* report) {
  const json& rows = require_field(scenario, "charpoly", "entries");
  if (!rows.is_array() || rows.empty()) schema_fail("charpoly.entries", "expected rows");
  int r = static_cast<int>(rows.size());
  std::vector<Rational> entries;
  for (int i = 0; i < r; ++i) {
    const json& row = rows[i];
    std::string path = "charpoly.entries[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != r) {
      schema_fail(path, "expected a row of length " + std::to_string(r));
    }
    for (int j = 0; j < r; ++j) {
      entries.push_back(as_rational(row[j], path + "[" + std::to_string(j) + "]"));
    }
  }

  report->scenario.add("kind", Value::str("charpoly"));
  {
    Value echo = Value::array();
    for (int i = 0; i < r; ++i) {
      Value row = Value::array();
      for (int j = 0; j < r; ++j) {
        row.push(Value::str(rational_to_string(entries[static_cast<std::size_t>(i) * r + j])));
      }
      echo.push(std::move(row));
    }
    report->scenario.add("entries", std::move(echo));
  }

  MultiplicationMatrix z(r, entries);
  std::vector<Rational> coefficients = char_poly(z);
  Value coeff_echo = Value::array();
  for (const Rational& c : coefficients) coeff_echo.push(Value::str(rational_to_string(c)));
  report->results.add("coefficients_ascending", std::move(coeff_echo));
  report->results.add("cayley_hamilton", Value::boolean(poly_annihilates(coefficients, z)));
  report->results.add("leading_unit", Value::boolean(leading_unit_check(coefficients)));
}

void handle_compare(const json& scenario, const EffectiveTolerances& tol, Report* report) {
  double fm = as_number(require_field(scenario, "compare", "fm_lower_bound"),
                        "compare.fm_lower_bound");
  double sectional = as_number(require_field(scenario, "compare", "sectional"),
                               "compare.sectional");
  bool pullback_polydisk =
      scenario.contains("pullback_polydisk") &&
      as_bool(scenario["pullback_polydisk"], "compare.pullback_polydisk");

  report->scenario.add("kind", Value::str("compare"));
  report->scenario.add("fm_lower_bound", Value::real(fm));
  report->scenario.add("sectional", Value::real(sectional));
  if (pullback_polydisk) report->scenario.add("pullback_polydisk", Value::boolean(true));

  bool bound_holds = theorem_compare_check(fm, sectional);
  bool equality = std::abs(fm - sectional) <= tol.compare_rel * std::abs(sectional);
  report->results.add("bound_holds", Value::boolean(bound_holds));
  report->results.add("equality", Value::boolean(equality));
  report->results.add("consistent", Value::boolean(bound_holds && (!pullback_polydisk || equality)));
}

Value status_value(const Report& report) {
  Value status = Value::object();
  status.add("ok", Value::boolean(report.ok));
  if (!report.ok) {
    Value error = Value::object();
    error.add("code", Value::str(report.error_code));
    error.add("message", Value::str(report.error_message));
    if (report.error_detail) error.add("detail", *report.error_detail);
    status.add("error", std::move(error));
  }
  return status;
}

}  // namespace

std::string Report::to_json() const {
  Value root = Value::object();
  root.add("scenario", scenario);
  if (ok) {
    root.add("results", results);
    if (oracle) root.add("oracle", *oracle);
  }
  root.add("status", status_value(*this));
  std::string out;
  root.write_json(&out);
  return out;
}

std::string Report::to_text() const {
  std::string out;
  scenario.write_text("scenario", &out);
  if (ok) {
    results.write_text("results", &out);
    if (oracle) oracle->write_text("oracle", &out);
    out += "status = ok\n";
  } else {
    out += "status = error(" + error_code + "): " + error_message + "\n";
  }
  return out;
}

Report run_scenario(const std::string& scenario_json, const RunOptions& options) {
  json scenario;
  try {
    scenario = json::parse(scenario_json);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
  }

  Report report;
  try {
    if (!scenario.is_object()) schema_fail("scenario", "expected an object");
    std::string kind;
    {
      const json& kind_field = require_field(scenario, "scenario", "kind");
      if (!kind_field.is_string()) schema_fail("scenario.kind", "expected a string");
      kind = kind_field.get<std::string>();
    }
    EffectiveTolerances tol = effective_tolerances(scenario, options);

    if (kind == "green") handle_green(scenario, tol, options.with_oracle, &report);
    else if (kind == "game") handle_game(scenario, tol, options.with_oracle, &report);
    else if (kind == "polydisk") handle_polydisk(scenario, options.with_oracle, &report);
    else if (kind == "pullback") handle_pullback(scenario, options.with_oracle, &report);
    else if (kind == "fm_bound") handle_fm_bound(scenario, &report);
    else if (kind == "witness") handle_witness(scenario, &report);
    else if (kind == "exponents") handle_exponents(scenario, &report);
    else if (kind == "charpoly") handle_charpoly(scenario, &report);
    else if (kind == "compare") handle_compare(scenario, tol, &report);
    else schema_fail("scenario.kind", "unknown kind \"" + kind + "\"");
  } catch (const BoundaryOptimumError& e) {
    report.ok = false;
    report.error_code = error_code_name(e.code());
    report.error_message = e.what();
    report.exit_class = error_exit_class(e.code());
    Value detail = Value::object();
    detail.add("s_hat", real_array(e.stationary_point()));
    report.error_detail = std::move(detail);
  } catch (const Error& e) {
    report.ok = false;
    report.error_code = error_code_name(e.code());
    report.error_message = e.what();
    report.exit_class = error_exit_class(e.code());
  }
  return report;
}

std::vector<Report> run_batch(const std::string& input_text, const RunOptions& options) {
  json input;
  try {
    input = json::parse(input_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("invalid JSON input: ") + e.what());
  }
  std::vector<Report> reports;
  if (input.is_array()) {
    for (const json& scenario : input) reports.push_back(run_scenario(scenario.dump(), options));
  } else {
    reports.push_back(run_scenario(input.dump(), options));
  }
  return reports;
}

int batch_exit_code(const std::vector<Report>& reports) {
  for (const Report& report : reports) {
    if (!report.ok) return report.exit_class;
  }
  return 0;
}

void write_reports(const std::vector<Report>& reports, const RunOptions& options,
                   std::ostream& out) {
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (options.format == RunOptions::Format::Json) {
      out << reports[i].to_json() << "\n";
    } else {
      if (i > 0) out << "\n";
      out << reports[i].to_text();
    }
  }
}

std::string schema_text() {
  return R"(adcap scenario schema
=====================

Input: one scenario object, or an array of scenario objects.  Every
scenario has a "kind" plus kind-specific fields.  Rationals may be given
as numbers or as exact "p/q" strings; finite-place radii and charpoly
entries are parsed exactly.  Optional "tolerances" object per scenario:
{equal_components, symmetry, condition_cap, minor_rel, pivot, max_pivots,
compare_rel}.

Radius assignments: "radii": [{"place": "inf"|<prime>, "value": v}, ...]
with value 1 assumed off support.  Places serialize as "inf" or the
decimal prime, archimedean first, then primes ascending.

kinds
-----
green     {entries: [[...]] square, orbits?: [[1-based indices]],
           generators?: [[1-based one-line permutations]],
           weights?: [positive divisor weights], require_equilibrium?: bool}
          -> n, negative_definite, game_value, gamma_CR, S_gamma (with
          weights), s_hat/lambda/S_plus (negative definite case)
game      {entries: [[...]] square, shift?: number}
          -> value, row_strategy, col_strategy, shifted_value (with shift)
polydisk  {d, radii} -> radius_norm, capacity = |r|^d, log_capacity
pullback  {d, degree, multiplicity, radii, divisor_degree?}
          -> capacity = |r|^{d deg/m^{d+1}}, log_capacity,
          adjusted_exponent and normalized_capacity (with divisor_degree)
fm_bound  {candidates: [{d, degree, multiplicity, radii, certified}]}
          -> lower_bound (sup over certified candidates; 0 if none),
          certified_count, candidate_values
witness   {d, radii, count} -> alpha, n, scaled_radii, points (root-of-unity
          coordinates as {order, index}, meaning zeta * alpha^{-1/n}),
          all_points_verified
exponents {points: [[nonnegative ints]]} -> m (injective linear form)
charpoly  {entries: [[rationals]]} -> coefficients_ascending,
          cayley_hamilton, leading_unit
compare   {fm_lower_bound, sectional, pullback_polydisk?: bool}
          -> bound_holds, equality, consistent

exit codes
----------
0 every scenario ok
1 schema violation / invalid input (DomainError, DimensionMismatch,
  AsymmetricMatrix, SymmetryViolation, ScaleCap, SchemaError)
2 numeric failure (NotNegativeDefinite, SingularMatrix, NumericFailure)
3 domain-hypothesis failure (BoundaryOptimum, NotSupercritical,
  SearchExhausted)
On mixed batches the first failing scenario in input order decides.

flags
-----
--with-oracle  attach brute-force cross-check blocks to reports
--format json|text
--tol <x>      override the report comparison tolerance (compare_rel)
)";
}

}  // namespace adcap
