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

// Density matrices for two-party systems: pure-state projectors, classical
// mixtures of product states, partial traces, purity and post-measurement
// conditional states.
//
// Product-basis convention: the composite index of |n> (x) |nu> is
// n * greek_dim + nu, so for two qubits the order is HH, HV, VH, VV.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "schmidt/numlin.h"

namespace schmidt {

class BipartitePureState;

inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kImpossibleOutcome = 1e-12;

/// Hermitian, unit-trace, positive-semidefinite matrix with optional basis
/// labels. The constructor enforces all three properties to within
/// kDensityTolerance and throws ValidationError otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix matrix, std::vector<std::string> basis_labels = {});

  const Matrix& matrix() const { return matrix_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }
  std::size_t dim() const { return matrix_.rows(); }

  const Complex& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

 private:
  Matrix matrix_;
  std::vector<std::string> basis_labels_;
};

struct BipartiteDims {
  std::size_t latin = 0;
  std::size_t greek = 0;
  std::size_t total() const { return latin * greek; }
};

enum class Subsystem { kA, kB };

/// |Psi><Psi| over the product basis, labeled by concatenated basis labels.
/// Throws ValidationError if the state is not normalized.
DensityMatrix pure_density(const BipartitePureState& state);

struct MixtureTerm {
  double weight = 0.0;
  std::string latin_label;
  std::string greek_label;
};

/// sum_k w_k |a_k b_k><a_k b_k| over the product of the two given bases.
/// Weights must be non-negative and sum to 1; labels must belong to their
/// basis. Violations throw ValidationError.
DensityMatrix classical_mixture(std::span<const MixtureTerm> terms,
                                const std::vector<std::string>& latin_basis,
                                const std::vector<std::string>& greek_basis);

/// Traces out the subsystem not named by `keep`. `kept_labels`, when
/// non-empty, labels the result. Throws ShapeError if rho.dim() differs from
/// dims.total() or the label count is wrong.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep, BipartiteDims dims,
                            std::vector<std::string> kept_labels = {});

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

struct ConditionalOutcome {
  double probability = 0.0;
  DensityMatrix state;
};

/// Projects subsystem A onto |p> and returns the outcome probability together
/// with the renormalized state of B.
///
/// Throws ValidationError if |p| is not a unit vector of length dims.latin,
/// ShapeError on a dimension mismatch and ImpossibleOutcomeError when the
/// probability is below kImpossibleOutcome.
ConditionalOutcome conditional_state(const DensityMatrix& rho, std::span<const Complex> p,
                                     BipartiteDims dims,
                                     std::vector<std::string> greek_labels = {});

}  // namespace schmidt
