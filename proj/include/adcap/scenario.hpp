#pragma once

#include "adcap/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace adcap {

struct RunOptions {
  bool with_oracle = false;
  enum class Format { Json, Text } format = Format::Json;
  std::optional<double> tol_override;  // replaces the report comparison tolerance
};

struct Report {
  Value scenario = Value::object();  // canonical echo
  Value results = Value::object();
  std::optional<Value> oracle;
  bool ok = true;
  std::string error_code;
  std::string error_message;
  std::optional<Value> error_detail;
  int exit_class = 0;  // 0 ok, else 1/2/3

  std::string to_json() const;
  std::string to_text() const;
};

// One scenario object -> one report.  Library errors become error reports,
// never exceptions; malformed JSON structure raises SchemaError upstream.
Report run_scenario(const std::string& scenario_json, const RunOptions& options);

// Input is one scenario object or an array of them; reports come back in
// input order.  Throws Error(SchemaError) when the input is not JSON.
std::vector<Report> run_batch(const std::string& input_text, const RunOptions& options);

// Process exit code for a batch: 0 when every report is ok, otherwise the
// exit class of the first failing report in input order.
int batch_exit_code(const std::vector<Report>& reports);

void write_reports(const std::vector<Report>& reports, const RunOptions& options,
                   std::ostream& out);

// The scenario vocabulary, printed by the `schema` subcommand.
std::string schema_text();

}  // namespace adcap
