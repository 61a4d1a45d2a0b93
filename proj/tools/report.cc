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

#include "report.h"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "schmidt/density.h"
#include "schmidt/errors.h"
#include "schmidt/fixtures.h"
#include "schmidt/ketparse.h"

namespace schmidt::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson complex_json(Complex z) { return ojson::array({z.real(), z.imag()}); }

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson modes_json(const std::vector<Vector>& modes, const std::vector<double>& lambdas,
                 const std::vector<std::string>& labels) {
  ojson out = ojson::array();
  for (std::size_t s = 0; s < modes.size(); ++s) {
    ojson components = ojson::array();
    for (std::size_t k = 0; k < labels.size(); ++k) {
      components.push_back({{"label", labels[k]}, {"value", complex_json(modes[s][k])}});
    }
    out.push_back({{"lambda", lambdas[s]}, {"components", std::move(components)}});
  }
  return out;
}

std::string number6(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string complex6(Complex z) {
  if (z.imag() == 0.0) return number6(z.real());
  if (z.real() == 0.0) return number6(z.imag()) + "i";
  std::ostringstream os;
  os << std::setprecision(6) << "(" << z.real() << (z.imag() < 0 ? "-" : "+")
     << std::abs(z.imag()) << "i)";
  return os.str();
}

std::string mode_text(const Vector& mode, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < mode.size(); ++k) {
    if (std::abs(mode[k]) < 5e-7) continue;
    Complex z = mode[k];
    const bool negative = z.imag() == 0.0 && z.real() < 0.0;
    if (!out.empty()) out += negative ? " - " : " + ";
    if (negative && out.empty()) out += "-";
    if (negative) z = -z;
    out += complex6(z) + "|" + labels[k] + ">";
  }
  return out.empty() ? "0" : out;
}

void print_matrix(std::ostream& out, const std::string& indent, const Matrix& m,
                  const std::vector<std::string>& labels) {
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent;
    if (!labels.empty()) out << std::left << std::setw(label_width + 2) << labels[i];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << std::right << std::setw(12) << complex6(m(i, j));
    }
    out << std::left << "\n";
  }
}

const char* require_string(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw ValidationError(std::string("JSON document needs a string field '") + key + "'");
  }
  return doc[key].get_ref<const std::string&>().c_str();
}

std::vector<std::string> labels_from_json(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ValidationError(std::string("JSON state needs an array '") + key + "'");
  }
  std::vector<std::string> out;
  for (const auto& item : doc[key]) {
    if (!item.is_string()) {
      throw ValidationError(std::string("'") + key + "' must contain strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

AnalysisReport analyze(const BipartitePureState& input, const AnalysisOptions& options) {
  const BipartitePureState state =
      input.normalized(options.strict_norm ? NormPolicy::kStrict : NormPolicy::kRescale);
  SchmidtDecomposition d =
      schmidt_decompose(state, options.rank_threshold, options.eigen_tolerance);
  const double residual = max_abs_diff(reconstruct(d), state.amplitudes());
  if (!(residual <= kMaxReconstructionResidual)) {
    throw ConvergenceError("reconstruction residual " + std::to_string(residual) +
                               " exceeds " + std::to_string(kMaxReconstructionResidual),
                           residual);
  }
  AnalysisReport report{input, format_state(input), std::move(d), 0.0, 0.0, false, 0.0, options};
  report.schmidt_number = schmidt_number(report.decomposition);
  report.entropy = entanglement_entropy(report.decomposition);
  report.entangled = is_entangled(report.decomposition);
  report.reconstruction_residual = residual;
  return report;
}

nlohmann::ordered_json state_to_json(const BipartitePureState& state) {
  return {{"format", kStateFormat},
          {"latin_labels", state.latin_labels()},
          {"greek_labels", state.greek_labels()},
          {"amplitudes", matrix_json(state.amplitudes())}};
}

BipartitePureState state_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ValidationError("JSON input must be an object");
  }
  const std::string format = require_string(doc, "format");
  if (format == kReportFormat) {
    if (!doc.contains("input") || !doc["input"].is_object() || !doc["input"].contains("state")) {
      throw ValidationError("report document has no input.state");
    }
    return state_from_json(doc["input"]["state"]);
  }
  if (format != kStateFormat) {
    throw ValidationError("unsupported JSON format '" + format + "', expected " + kStateFormat +
                          " or " + kReportFormat);
  }
  auto latin = labels_from_json(doc, "latin_labels");
  auto greek = labels_from_json(doc, "greek_labels");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw ValidationError("JSON state needs an 'amplitudes' array");
  }
  const auto& rows = doc["amplitudes"];
  if (rows.size() != latin.size()) {
    throw ValidationError("'amplitudes' has " + std::to_string(rows.size()) + " rows for " +
                          std::to_string(latin.size()) + " Latin labels");
  }
  Matrix c(latin.size(), greek.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != greek.size()) {
      throw ValidationError("amplitude row " + std::to_string(i) + " must have " +
                            std::to_string(greek.size()) + " entries");
    }
    for (std::size_t j = 0; j < greek.size(); ++j) {
      const auto& z = rows[i][j];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ValidationError("amplitude [" + std::to_string(i) + "][" + std::to_string(j) +
                              "] must be a [re, im] pair");
      }
      c(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return BipartitePureState(std::move(latin), std::move(greek), std::move(c));
}

nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
  const SchmidtDecomposition& d = report.decomposition;
  ojson out = {
      {"format", kReportFormat},
      {"grammar", std::string(kKetGrammarVersion)},
      {"input", {{"expression", report.expression}, {"state", state_to_json(report.input)}}},
      {"normalization", report.input.original_norm()},
      {"dimensions", {{"latin", d.latin_dim}, {"greek", d.greek_dim}}},
      {"diagonalized", d.diagonalized == Side::kLatin ? "latin" : "greek"},
      {"lambdas", d.lambdas},
      {"schmidt_number", report.schmidt_number},
      {"entropy_bits", report.entropy},
      {"rank", d.rank},
      {"entangled", report.entangled},
      {"rank_threshold", d.threshold},
      {"eigen_tolerance", report.options.eigen_tolerance},
      {"eigen_residual", d.eigen_residual},
      {"reconstruction_residual", report.reconstruction_residual},
  };
  if (report.options.include_modes) {
    out["latin_modes"] = modes_json(d.latin_modes, d.lambdas, report.input.latin_labels());
    out["greek_modes"] = modes_json(d.greek_modes, d.lambdas, report.input.greek_labels());
  }
  return out;
}

void print_table(std::ostream& out, const AnalysisReport& report) {
  const SchmidtDecomposition& d = report.decomposition;
  std::string lambdas;
  for (const double lambda : d.lambdas) {
    if (!lambdas.empty()) lambdas += "  ";
    lambdas += number6(lambda);
  }
  const auto row = [&out](const char* key, const std::string& value) {
    out << "  " << std::left << std::setw(16) << key << value << "\n";
  };
  out << "Schmidt analysis (" << kKetGrammarVersion << ")\n";
  row("state", report.expression);
  row("normalization", number6(report.input.original_norm()));
  row("dimensions", std::to_string(d.latin_dim) + " x " + std::to_string(d.greek_dim) +
                        " (Latin x Greek)");
  row("diagonalized", d.diagonalized == Side::kLatin ? "Latin" : "Greek");
  row("lambdas", lambdas);
  row("K", number6(report.schmidt_number));
  row("entropy", number6(report.entropy) + " bits");
  row("rank", std::to_string(d.rank) + " (threshold " + number6(d.threshold) + ")");
  row("entangled", report.entangled ? "yes" : "no");
  row("residual", number6(report.reconstruction_residual));

  if (report.options.include_modes) {
    out << "\nLatin modes |F^s>\n";
    for (std::size_t s = 0; s < d.latin_modes.size(); ++s) {
      out << "  s=" << s + 1 << "  lambda=" << number6(d.lambdas[s]) << "  "
          << mode_text(d.latin_modes[s], report.input.latin_labels()) << "\n";
    }
    out << "Greek modes |Phi^s>\n";
    for (std::size_t s = 0; s < d.greek_modes.size(); ++s) {
      out << "  s=" << s + 1 << "  lambda=" << number6(d.lambdas[s]) << "  "
          << mode_text(d.greek_modes[s], report.input.greek_labels()) << "\n";
    }
  }
}

namespace {

struct DensityCase {
  const char* key;
  const char* title;
  DensityMatrix rho;
};

std::vector<DensityCase> density_cases() {
  return {{"classical", "rho_CL (classical mixture)", fixtures::rho_classical()},
          {"entangled", "rho_QM (Bell state)", fixtures::rho_entangled()}};
}

const BipartiteDims kQubits{2, 2};
const Vector kHorizontal = {1.0, 0.0};

}  // namespace

nlohmann::ordered_json density_comparison_json() {
  ojson out = {{"format", kDensityFormat},
               {"basis", {"HH", "HV", "VH", "VV"}},
               {"conditioning", "A projected on H"}};
  std::vector<Matrix> rhos;
  for (const auto& c : density_cases()) {
    const auto cond = conditional_state(c.rho, kHorizontal, kQubits);
    out[c.key] = {
        {"rho", matrix_json(c.rho.matrix())},
        {"purity", purity(c.rho)},
        {"reduced_a", matrix_json(partial_trace(c.rho, Subsystem::kA, kQubits).matrix())},
        {"reduced_b", matrix_json(partial_trace(c.rho, Subsystem::kB, kQubits).matrix())},
        {"conditional_b", {{"probability", cond.probability},
                           {"state", matrix_json(cond.state.matrix())}}},
    };
    rhos.push_back(c.rho.matrix());
  }
  ojson support = ojson::array();
  const Matrix diff = rhos[1] - rhos[0];
  const std::vector<std::string> basis = {"HH", "HV", "VH", "VV"};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (std::abs(diff(i, j)) > 1e-12) support.push_back({basis[i], basis[j]});
    }
  }
  out["difference_support"] = std::move(support);
  return out;
}

void print_density_comparison(std::ostream& out) {
  const std::vector<std::string> basis = {"HH", "HV", "VH", "VV"};
  const std::vector<std::string> hv = {"H", "V"};
  for (const auto& c : density_cases()) {
    out << c.title << ", purity " << number6(purity(c.rho)) << "\n";
    print_matrix(out, "  ", c.rho.matrix(), basis);
    out << "  reduced state of A\n";
    print_matrix(out, "    ", partial_trace(c.rho, Subsystem::kA, kQubits).matrix(), hv);
    out << "  reduced state of B\n";
    print_matrix(out, "    ", partial_trace(c.rho, Subsystem::kB, kQubits).matrix(), hv);
    const auto cond = conditional_state(c.rho, kHorizontal, kQubits);
    out << "  B given A found H (probability " << number6(cond.probability) << ")\n";
    print_matrix(out, "    ", cond.state.matrix(), hv);
    out << "\n";
  }
  const auto j = density_comparison_json();
  out << "rho_QM - rho_CL is non-zero at:";
  for (const auto& pos : j["difference_support"]) {
    out << " " << pos[0].get<std::string>() << "-" << pos[1].get<std::string>();
  }
  out << "\n";
}

}  // namespace schmidt::cli
