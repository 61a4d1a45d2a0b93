// Copyright 2026 The schmidt-modes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "report.h"
#include "schmidt/errors.h"
#include "schmidt/fixtures.h"
#include "schmidt/ketparse.h"

namespace schmidt::cli {

namespace {

struct Flags {
  std::string expr;
  std::string file;
  std::string name;
  std::string format = "table";
  double tolerance = 1e-12;
  double rank_threshold = kDefaultRankThreshold;
  bool strict_norm = false;
  bool no_modes = false;
};

void add_output_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  cmd->add_option("--tolerance", flags.tolerance,
                  "Eigensolver off-diagonal tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--rank-threshold", flags.rank_threshold,
                  "Eigenvalues above this count toward the Schmidt rank")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--strict-norm", flags.strict_norm,
                "Reject states whose norm differs from 1 instead of rescaling");
  cmd->add_flag("--no-modes", flags.no_modes, "Do not print Schmidt modes");
}

AnalysisOptions options_from(const Flags& flags) {
  AnalysisOptions o;
  o.eigen_tolerance = flags.tolerance;
  o.rank_threshold = flags.rank_threshold;
  o.strict_norm = flags.strict_norm;
  o.include_modes = !flags.no_modes;
  return o;
}

BipartitePureState load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot read '" + path + "'");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
  return state_from_json(doc);
}

void emit(const AnalysisReport& report, const Flags& flags, std::ostream& out) {
  if (flags.format == "json") {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    print_table(out, report);
  }
}

std::string known_example_names() {
  std::string names;
  for (const auto& n : fixtures::state_names()) names += n + ", ";
  return names + "bell, classical";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schmidt-mode analysis of two-party pure states", "schmidt"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze a state");
  auto* expr_opt =
      analyze_cmd->add_option("--expr", flags.expr, "State in ket-v1 notation, e.g. "
                                                    "\"(|a> + |b>)(x)|alpha>\"");
  auto* file_opt = analyze_cmd->add_option(
      "--file", flags.file, "schmidt-state-v1 or schmidt-report-v1 JSON file");
  expr_opt->excludes(file_opt);
  add_output_flags(analyze_cmd, flags);

  CLI::App* examples_cmd = app.add_subcommand("examples", "Run a built-in example");
  examples_cmd->add_option("name", flags.name, known_example_names())->required();
  add_output_flags(examples_cmd, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (expr_opt->count() + file_opt->count() != 1) {
        err << "error: analyze needs exactly one of --expr or --file\n";
        return kExitInputError;
      }
      const BipartitePureState state =
          file_opt->count() > 0 ? load_file(flags.file) : parse_state(flags.expr);
      emit(analyze(state, options_from(flags)), flags, out);
      return kExitOk;
    }

    if (const auto expression = fixtures::expression(flags.name)) {
      emit(analyze(parse_state(*expression), options_from(flags)), flags, out);
      return kExitOk;
    }
    if (flags.name == "bell" || flags.name == "classical") {
      if (flags.format == "json") {
        out << density_comparison_json().dump(2) << "\n";
      } else {
        print_density_comparison(out);
      }
      return kExitOk;
    }
    err << "error: unknown example '" << flags.name << "'; valid names: "
        << known_example_names() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position() << ": " << e.message() << "\n";
    return kExitInputError;
  } catch (const ConvergenceError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace schmidt::cli
