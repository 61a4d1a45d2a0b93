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

#include "schmidt/density.h"

#include <algorithm>
#include <cmath>

#include "schmidt/errors.h"
#include "schmidt/schmidt.h"

namespace schmidt {

DensityMatrix::DensityMatrix(Matrix matrix, std::vector<std::string> basis_labels)
    : matrix_(std::move(matrix)), basis_labels_(std::move(basis_labels)) {
  if (!matrix_.is_square() || matrix_.empty()) {
    throw ShapeError("density matrix must be square and non-empty, got " +
                     matrix_.shape_string());
  }
  if (!basis_labels_.empty() && basis_labels_.size() != matrix_.rows()) {
    throw ShapeError(std::to_string(basis_labels_.size()) + " labels for a " +
                     matrix_.shape_string() + " density matrix");
  }
  const double defect = hermiticity_defect(matrix_);
  if (defect > kDensityTolerance) {
    throw ValidationError("density matrix is not Hermitian (defect " + std::to_string(defect) +
                          ")");
  }
  const double tr = trace(matrix_).real();
  if (std::abs(tr - 1.0) > kDensityTolerance) {
    throw ValidationError("density matrix trace is " + std::to_string(tr) + ", expected 1");
  }
  const EigenSystem eig = hermitian_eigen(matrix_);
  if (eig.eigenvalues.back() < -kDensityTolerance) {
    throw ValidationError("density matrix has negative eigenvalue " +
                          std::to_string(eig.eigenvalues.back()));
  }
}

DensityMatrix pure_density(const BipartitePureState& state) {
  if (!state.is_normalized()) {
    throw ValidationError("pure_density needs a normalized state (norm " +
                          std::to_string(state.norm()) + ")");
  }
  const std::vector<Complex> psi(state.amplitudes().entries().begin(),
                                 state.amplitudes().entries().end());
  std::vector<std::string> labels;
  labels.reserve(psi.size());
  for (const auto& a : state.latin_labels()) {
    for (const auto& b : state.greek_labels()) {
      labels.push_back(a + b);
    }
  }
  return DensityMatrix(outer(psi, psi), std::move(labels));
}

DensityMatrix classical_mixture(std::span<const MixtureTerm> terms,
                                const std::vector<std::string>& latin_basis,
                                const std::vector<std::string>& greek_basis) {
  if (terms.empty()) {
    throw ValidationError("classical mixture needs at least one term");
  }
  const auto index_of = [](const std::vector<std::string>& basis, const std::string& label,
                           const char* side) {
    const auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end()) {
      throw ValidationError(std::string("label '") + label + "' is not in the " + side +
                            " basis");
    }
    return static_cast<std::size_t>(it - basis.begin());
  };

  const std::size_t greek_dim = greek_basis.size();
  Matrix rho(latin_basis.size() * greek_dim, latin_basis.size() * greek_dim);
  double total = 0.0;
  for (const auto& term : terms) {
    if (!(term.weight >= 0.0)) {
      throw ValidationError("mixture weight " + std::to_string(term.weight) +
                            " is negative");
    }
    const std::size_t k = index_of(latin_basis, term.latin_label, "Latin") * greek_dim +
                          index_of(greek_basis, term.greek_label, "Greek");
    rho(k, k) += term.weight;
    total += term.weight;
  }
  if (std::abs(total - 1.0) > kDensityTolerance) {
    throw ValidationError("mixture weights sum to " + std::to_string(total) + ", expected 1");
  }

  std::vector<std::string> labels;
  for (const auto& a : latin_basis) {
    for (const auto& b : greek_basis) {
      labels.push_back(a + b);
    }
  }
  return DensityMatrix(std::move(rho), std::move(labels));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep, BipartiteDims dims,
                            std::vector<std::string> kept_labels) {
  if (rho.dim() != dims.total()) {
    throw ShapeError("density matrix of dimension " + std::to_string(rho.dim()) +
                     " does not factor as " + std::to_string(dims.latin) + "x" +
                     std::to_string(dims.greek));
  }
  const std::size_t g = dims.greek;
  Matrix out;
  if (keep == Subsystem::kA) {
    out = Matrix(dims.latin, dims.latin);
    for (std::size_t n = 0; n < dims.latin; ++n) {
      for (std::size_t m = 0; m < dims.latin; ++m) {
        for (std::size_t nu = 0; nu < g; ++nu) {
          out(n, m) += rho(n * g + nu, m * g + nu);
        }
      }
    }
  } else {
    out = Matrix(g, g);
    for (std::size_t nu = 0; nu < g; ++nu) {
      for (std::size_t mu = 0; mu < g; ++mu) {
        for (std::size_t n = 0; n < dims.latin; ++n) {
          out(nu, mu) += rho(n * g + nu, n * g + mu);
        }
      }
    }
  }
  return DensityMatrix(std::move(out), std::move(kept_labels));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return frobenius_norm_sq(rho.matrix());
}

ConditionalOutcome conditional_state(const DensityMatrix& rho, std::span<const Complex> p,
                                     BipartiteDims dims, std::vector<std::string> greek_labels) {
  if (rho.dim() != dims.total()) {
    throw ShapeError("density matrix of dimension " + std::to_string(rho.dim()) +
                     " does not factor as " + std::to_string(dims.latin) + "x" +
                     std::to_string(dims.greek));
  }
  if (p.size() != dims.latin) {
    throw ShapeError("projector vector has length " + std::to_string(p.size()) +
                     ", Latin dimension is " + std::to_string(dims.latin));
  }
  if (std::abs(norm(p) - 1.0) > kNormTolerance) {
    throw ValidationError("projector vector is not normalized");
  }

  const std::size_t g = dims.greek;
  Matrix sigma(g, g);
  for (std::size_t nu = 0; nu < g; ++nu) {
    for (std::size_t mu = 0; mu < g; ++mu) {
      Complex sum = 0.0;
      for (std::size_t n = 0; n < dims.latin; ++n) {
        for (std::size_t m = 0; m < dims.latin; ++m) {
          sum += std::conj(p[n]) * rho(n * g + nu, m * g + mu) * p[m];
        }
      }
      sigma(nu, mu) = sum;
    }
  }
  const double probability = trace(sigma).real();
  if (probability < kImpossibleOutcome) {
    throw ImpossibleOutcomeError(
        "conditioning on an outcome of probability " + std::to_string(probability), probability);
  }
  sigma *= 1.0 / probability;
  return {probability, DensityMatrix(std::move(sigma), std::move(greek_labels))};
}

}  // namespace schmidt
