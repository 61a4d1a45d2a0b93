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

#include "schmidt/fixtures.h"

#include <cmath>

#include "schmidt/ketparse.h"

namespace schmidt::fixtures {

const std::vector<std::string>& state_names() {
  static const std::vector<std::string> names = {"psi0", "psi1", "psi2", "psi3"};
  return names;
}

std::optional<std::string_view> expression(std::string_view name) {
  if (name == "psi0") return kPsi0;
  if (name == "psi1") return kPsi1;
  if (name == "psi2") return kPsi2;
  if (name == "psi3") return kPsi3;
  return std::nullopt;
}

std::vector<BipartitePureState> bell_states() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<std::string> a = {"H_A", "V_A"};
  const std::vector<std::string> b = {"H_B", "V_B"};
  return {
      BipartitePureState(a, b, Matrix{{0.0, r}, {r, 0.0}}),
      BipartitePureState(a, b, Matrix{{0.0, r}, {-r, 0.0}}),
      BipartitePureState(a, b, Matrix{{r, 0.0}, {0.0, r}}),
      BipartitePureState(a, b, Matrix{{r, 0.0}, {0.0, -r}}),
  };
}

BipartitePureState bell_hv() { return bell_states().front(); }

DensityMatrix rho_entangled() {
  // Same matrix as pure_density(bell_hv()), labeled with the bare HV names.
  const DensityMatrix rho = pure_density(bell_hv());
  return DensityMatrix(rho.matrix(), {"HH", "HV", "VH", "VV"});
}

DensityMatrix rho_classical() {
  const MixtureTerm terms[] = {{0.5, "H", "V"}, {0.5, "V", "H"}};
  return classical_mixture(terms, kPolarization, kPolarization);
}

}  // namespace schmidt::fixtures
