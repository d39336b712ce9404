#include "adcap/errors.hpp"
#include "adcap/scenario.hpp"
#include "adcap/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int run_command(const std::string& input_path, const adcap::RunOptions& options) {
  std::string input;
  if (input_path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    input = buffer.str();
  } else {
    std::ifstream file(input_path);
    if (!file) {
      std::cerr << "adcap: cannot open " << input_path << "\n";
      return 1;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    input = buffer.str();
  }

  try {
    std::vector<adcap::Report> reports = adcap::run_batch(input, options);
    adcap::write_reports(reports, options, std::cout);
    int code = adcap::batch_exit_code(reports);
    if (code != 0) {
      for (const auto& report : reports) {
        if (!report.ok) {
          std::cerr << "adcap: " << report.error_code << ": " << report.error_message << "\n";
        }
      }
    }
    return code;
  } catch (const adcap::Error& e) {
    std::cerr << "adcap: " << adcap::error_code_name(e.code()) << ": " << e.what() << "\n";
    return adcap::error_exit_class(e.code());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capacity-theory calculator: adelic polydisks, Green's-matrix games, witnesses"};
  app.require_subcommand(1);

  std::string input_path = "-";
  std::string format = "json";
  bool with_oracle = false;
  double tol = 0.0;
  bool tol_set = false;

  CLI::App* run = app.add_subcommand("run", "evaluate scenarios from a file or stdin");
  run->add_option("input", input_path, "scenario file (\"-\" for stdin)");
  run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  run->add_flag("--with-oracle", with_oracle, "attach brute-force cross-check blocks");
  run->add_option("--tol", tol, "override the report comparison tolerance")
      ->each([&](const std::string&) { tol_set = true; });

  CLI::App* selftest = app.add_subcommand("selftest", "run the full invariant suite");
  CLI::App* schema = app.add_subcommand("schema", "print the scenario schema");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    adcap::RunOptions options;
    options.with_oracle = with_oracle;
    options.format = format == "text" ? adcap::RunOptions::Format::Text
                                      : adcap::RunOptions::Format::Json;
    if (tol_set) options.tol_override = tol;
    return run_command(input_path, options);
  }
  if (selftest->parsed()) {
    auto results = adcap::selftest::run_acceptance(&std::cout);
    return adcap::selftest::all_passed(results) ? 0 : 1;
  }
  if (schema->parsed()) {
    std::cout << adcap::schema_text();
    return 0;
  }
  return 0;
}
