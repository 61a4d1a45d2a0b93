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

// Schmidt-mode analysis of two-party pure states.
//
// A state sum_{n,nu} C(n,nu) |n> (x) |nu> is described by its amplitude
// matrix C, with rows indexed by the "Latin" basis of subsystem A and columns
// by the "Greek" basis of subsystem B. Diagonalizing the reduced density
// matrix of either side yields the information eigenvalues lambda_s and the
// paired modes |F^s>, |Phi^s> such that
//
//   |Psi> = sum_s sqrt(lambda_s) |F^s> (x) |Phi^s>.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/numlin.h"

namespace schmidt {

class DensityMatrix;

inline constexpr double kDefaultRankThreshold = 1e-10;
inline constexpr double kNormTolerance = 1e-9;

enum class NormPolicy {
  kRescale,  ///< divide amplitudes by their norm
  kStrict,   ///< reject states whose norm differs from 1 by more than kNormTolerance
};

enum class Side { kLatin, kGreek };

/// Labeled amplitude matrix of a two-party pure state.
///
/// Construction validates shapes and label uniqueness and records the
/// Euclidean norm of the amplitudes; it does not rescale. Use normalized()
/// to obtain the unit-norm state. original_norm() survives normalization so
/// prefactors like sqrt(12) remain reportable.
class BipartitePureState {
 public:
  BipartitePureState(std::vector<std::string> latin_labels,
                     std::vector<std::string> greek_labels, Matrix amplitudes);

  const std::vector<std::string>& latin_labels() const { return latin_labels_; }
  const std::vector<std::string>& greek_labels() const { return greek_labels_; }
  const Matrix& amplitudes() const { return amplitudes_; }

  std::size_t latin_dim() const { return amplitudes_.rows(); }
  std::size_t greek_dim() const { return amplitudes_.cols(); }

  /// Euclidean norm of the amplitudes as first constructed.
  double original_norm() const { return original_norm_; }
  /// Euclidean norm of the current amplitudes.
  double norm() const;
  bool is_normalized(double tolerance = kNormTolerance) const;

  /// Throws ValidationError for a zero state, or under kStrict for any norm
  /// further than kNormTolerance from 1.
  BipartitePureState normalized(NormPolicy policy = NormPolicy::kRescale) const;

 private:
  std::vector<std::string> latin_labels_;
  std::vector<std::string> greek_labels_;
  Matrix amplitudes_;
  double original_norm_;
};

struct SchmidtDecomposition {
  /// Eigenvalues of the diagonalized reduced density matrix, descending,
  /// padded with zeros up to max(latin_dim, greek_dim).
  std::vector<double> lambdas;
  /// |F^s> for the first `rank` lambdas, in the Latin basis.
  std::vector<Vector> latin_modes;
  /// |Phi^s> for the first `rank` lambdas, in the Greek basis.
  std::vector<Vector> greek_modes;
  std::size_t rank = 0;
  double threshold = kDefaultRankThreshold;
  std::size_t latin_dim = 0;
  std::size_t greek_dim = 0;
  /// Which reduced density matrix was handed to the eigensolver.
  Side diagonalized = Side::kLatin;
  /// Off-diagonal residual reported by the eigensolver.
  double eigen_residual = 0.0;
};

/// rho_L = C C^dagger. Requires a normalized state.
DensityMatrix gram_latin(const BipartitePureState& state);

/// Reduced density matrix of subsystem B, Tr_A |Psi><Psi| = (C^dagger C)^T.
/// Equal to C^dagger C whenever the amplitudes are real.
DensityMatrix gram_greek(const BipartitePureState& state);

/// Diagonalizes the smaller reduced density matrix (the Latin one on ties) and
/// builds partner modes through |Phi^s> ~ C^T |F^s>^* / sqrt(lambda_s) or
/// |F^s> = C |Phi^s>^* / sqrt(lambda_s). No modes are built for eigenvalues at
/// or below `threshold`.
///
/// Throws ValidationError for a zero or unnormalized state, or a non-positive
/// threshold; propagates ConvergenceError from the eigensolver.
SchmidtDecomposition schmidt_decompose(const BipartitePureState& state,
                                       double threshold = kDefaultRankThreshold,
                                       std::optional<double> eigen_tolerance = std::nullopt);

/// K = 1 / sum_s lambda_s^2.
double schmidt_number(const SchmidtDecomposition& d);

/// -sum lambda log2 lambda over lambdas above the threshold, in bits.
double entanglement_entropy(const SchmidtDecomposition& d);

bool is_entangled(const SchmidtDecomposition& d);

/// C(n,nu) = sum_s sqrt(lambda_s) F^s_n Phi^s_nu.
/// Throws ValidationError if fewer modes than `rank` are present, ShapeError
/// if the modes do not fit latin_dim x greek_dim.
Matrix reconstruct(const SchmidtDecomposition& d, std::size_t latin_dim, std::size_t greek_dim);
inline Matrix reconstruct(const SchmidtDecomposition& d) {
  return reconstruct(d, d.latin_dim, d.greek_dim);
}

}  // namespace schmidt
