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

// Analysis reports: the aggregate printed by the command-line tool, plus the
// schmidt-state-v1 / schmidt-report-v1 JSON encodings.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "schmidt/schmidt.h"

namespace schmidt::cli {

inline constexpr const char* kStateFormat = "schmidt-state-v1";
inline constexpr const char* kReportFormat = "schmidt-report-v1";
inline constexpr const char* kDensityFormat = "schmidt-density-comparison-v1";
inline constexpr double kMaxReconstructionResidual = 1e-9;

struct AnalysisOptions {
  double eigen_tolerance = 1e-12;
  double rank_threshold = kDefaultRankThreshold;
  bool strict_norm = false;
  bool include_modes = true;
};

struct AnalysisReport {
  /// The state exactly as supplied, before normalization.
  BipartitePureState input;
  std::string expression;
  SchmidtDecomposition decomposition;
  double schmidt_number = 0.0;
  double entropy = 0.0;
  bool entangled = false;
  /// Largest entrywise |reconstruct(d) - C| over the normalized amplitudes.
  double reconstruction_residual = 0.0;
  AnalysisOptions options;
};

/// Normalizes (or, with strict_norm, validates) the state and runs the full
/// Schmidt analysis. Throws ConvergenceError if the eigensolver fails or the
/// reconstruction residual exceeds kMaxReconstructionResidual.
AnalysisReport analyze(const BipartitePureState& input, const AnalysisOptions& options);

nlohmann::ordered_json state_to_json(const BipartitePureState& state);

/// Accepts a schmidt-state-v1 document or a schmidt-report-v1 document, whose
/// input.state is used. Throws ValidationError on malformed documents.
BipartitePureState state_from_json(const nlohmann::json& doc);

nlohmann::ordered_json report_to_json(const AnalysisReport& report);

/// Human-readable report with 6 significant digits.
void print_table(std::ostream& out, const AnalysisReport& report);

/// rho_CL and rho_QM with their partial traces and the states of B after
/// finding A horizontally polarized.
nlohmann::ordered_json density_comparison_json();
void print_density_comparison(std::ostream& out);

}  // namespace schmidt::cli
