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

#include "schmidt/schmidt.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "schmidt/density.h"
#include "schmidt/errors.h"

namespace schmidt {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* side) {
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw ValidationError(std::string("empty ") + side + " label");
    }
    if (!seen.insert(label).second) {
      throw ValidationError(std::string("duplicate ") + side + " label '" + label + "'");
    }
  }
}

void require_normalized(const BipartitePureState& state) {
  if (state.norm() == 0.0) {
    throw ValidationError("state has zero norm");
  }
  if (!state.is_normalized()) {
    throw ValidationError("state is not normalized (norm " + std::to_string(state.norm()) +
                          ")");
  }
}

}  // namespace

BipartitePureState::BipartitePureState(std::vector<std::string> latin_labels,
                                       std::vector<std::string> greek_labels,
                                       Matrix amplitudes)
    : latin_labels_(std::move(latin_labels)),
      greek_labels_(std::move(greek_labels)),
      amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.rows() == 0 || amplitudes_.cols() == 0) {
    throw ShapeError("amplitude matrix must be non-empty, got " + amplitudes_.shape_string());
  }
  if (amplitudes_.rows() != latin_labels_.size() || amplitudes_.cols() != greek_labels_.size()) {
    throw ShapeError("amplitude matrix " + amplitudes_.shape_string() + " does not match " +
                     std::to_string(latin_labels_.size()) + " Latin and " +
                     std::to_string(greek_labels_.size()) + " Greek labels");
  }
  for (const auto& z : amplitudes_.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("amplitudes must be finite");
    }
  }
  check_labels(latin_labels_, "Latin");
  check_labels(greek_labels_, "Greek");
  original_norm_ = norm();
}

double BipartitePureState::norm() const { return std::sqrt(frobenius_norm_sq(amplitudes_)); }

bool BipartitePureState::is_normalized(double tolerance) const {
  return std::abs(norm() - 1.0) <= tolerance;
}

BipartitePureState BipartitePureState::normalized(NormPolicy policy) const {
  const double n = norm();
  if (n == 0.0) {
    throw ValidationError("cannot normalize a zero state");
  }
  if (policy == NormPolicy::kStrict && std::abs(n - 1.0) > kNormTolerance) {
    throw ValidationError("state norm " + std::to_string(n) + " differs from 1");
  }
  BipartitePureState out = *this;
  out.amplitudes_ *= 1.0 / n;
  return out;
}

DensityMatrix gram_latin(const BipartitePureState& state) {
  require_normalized(state);
  const Matrix& c = state.amplitudes();
  return DensityMatrix(mat_mul(c, adjoint(c)), state.latin_labels());
}

DensityMatrix gram_greek(const BipartitePureState& state) {
  require_normalized(state);
  const Matrix& c = state.amplitudes();
  return DensityMatrix(mat_mul(transpose(c), adjoint(transpose(c))), state.greek_labels());
}

SchmidtDecomposition schmidt_decompose(const BipartitePureState& state, double threshold,
                                       std::optional<double> eigen_tolerance) {
  require_normalized(state);
  if (!(threshold > 0.0)) {
    throw ValidationError("rank threshold must be positive");
  }
  const Matrix& c = state.amplitudes();

  SchmidtDecomposition d;
  d.threshold = threshold;
  d.latin_dim = state.latin_dim();
  d.greek_dim = state.greek_dim();
  d.diagonalized = d.latin_dim <= d.greek_dim ? Side::kLatin : Side::kGreek;

  // Latin side: f^s from C C^dagger, phi^s = C^dagger f^s / sqrt(lambda).
  // Greek side: phi^s from C^dagger C, f^s = C phi^s / sqrt(lambda).
  // In both cases the Greek Schmidt mode is Phi^s = (phi^s)^*.
  const bool latin = d.diagonalized == Side::kLatin;
  const Matrix gram = latin ? mat_mul(c, adjoint(c)) : mat_mul(adjoint(c), c);
  EigenSystem eig = hermitian_eigen(gram, eigen_tolerance);
  d.eigen_residual = eig.residual;
  d.lambdas = eig.eigenvalues;

  const Matrix partner_map = latin ? adjoint(c) : c;
  for (std::size_t s = 0; s < eig.eigenvalues.size(); ++s) {
    const double lambda = eig.eigenvalues[s];
    if (!(lambda > threshold)) {
      break;
    }
    const Vector& own = eig.eigenvectors[s];
    Vector partner = mat_vec(partner_map, own);
    const double scale = 1.0 / std::sqrt(lambda);
    for (auto& z : partner) {
      z *= scale;
    }
    Vector conj_phi = latin ? std::move(partner) : own;
    for (auto& z : conj_phi) {
      z = std::conj(z);
    }
    if (latin) {
      d.latin_modes.push_back(own);
      d.greek_modes.push_back(std::move(conj_phi));
    } else {
      d.latin_modes.push_back(std::move(partner));
      d.greek_modes.push_back(std::move(conj_phi));
    }
    ++d.rank;
  }

  d.lambdas.resize(std::max(d.latin_dim, d.greek_dim), 0.0);
  return d;
}

double schmidt_number(const SchmidtDecomposition& d) {
  double sum_sq = 0.0;
  for (const double lambda : d.lambdas) {
    sum_sq += lambda * lambda;
  }
  return 1.0 / sum_sq;
}

double entanglement_entropy(const SchmidtDecomposition& d) {
  if (d.rank <= 1) {
    return 0.0;
  }
  double entropy = 0.0;
  for (const double lambda : d.lambdas) {
    if (lambda > d.threshold) {
      entropy -= lambda * std::log2(lambda);
    }
  }
  return std::max(entropy, 0.0);
}

bool is_entangled(const SchmidtDecomposition& d) { return d.rank >= 2; }

Matrix reconstruct(const SchmidtDecomposition& d, std::size_t latin_dim, std::size_t greek_dim) {
  if (d.latin_modes.size() < d.rank || d.greek_modes.size() < d.rank ||
      d.lambdas.size() < d.rank) {
    throw ValidationError("decomposition of rank " + std::to_string(d.rank) + " carries only " +
                          std::to_string(std::min(d.latin_modes.size(), d.greek_modes.size())) +
                          " mode pairs");
  }
  Matrix out(latin_dim, greek_dim);
  for (std::size_t s = 0; s < d.rank; ++s) {
    const Vector& f = d.latin_modes[s];
    const Vector& phi = d.greek_modes[s];
    if (f.size() != latin_dim || phi.size() != greek_dim) {
      throw ShapeError("mode pair " + std::to_string(s) + " has lengths " +
                       std::to_string(f.size()) + "/" + std::to_string(phi.size()) +
                       ", expected " + std::to_string(latin_dim) + "/" +
                       std::to_string(greek_dim));
    }
    const double weight = std::sqrt(std::max(d.lambdas[s], 0.0));
    for (std::size_t n = 0; n < latin_dim; ++n) {
      for (std::size_t nu = 0; nu < greek_dim; ++nu) {
        out(n, nu) += weight * f[n] * phi[nu];
      }
    }
  }
  return out;
}

}  // namespace schmidt
