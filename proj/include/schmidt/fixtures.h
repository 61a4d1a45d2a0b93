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

// Built-in example states: the atom-photon states psi0..psi3 and the
// polarization Bell pair with its classically correlated counterpart.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schmidt/density.h"
#include "schmidt/schmidt.h"

namespace schmidt::fixtures {

inline constexpr std::string_view kPsi0 =
    "(2|a> + |b>)(x)|alpha> + (|a> + 2|b>)(x)|beta> + (|a> + |b>)(x)|gamma>";
inline constexpr std::string_view kPsi1 =
    "(2|a> + |b>)(x)|alpha> + (|a> + 2|b>)(x)|beta> + (|a> - |b>)(x)|gamma>";
inline constexpr std::string_view kPsi2 =
    "(2|a> + |b>)(x)|alpha> + (|a> + 2|b>)(x)|beta> + (|a> - |b>)(x)(|gamma> - |delta>)";
inline constexpr std::string_view kPsi3 =
    "(2|a> + i|b>)(x)|alpha> + (i|a> + 2|b>)(x)|beta> + (|a> + |b>)(x)|gamma>";

/// Names accepted by lookup(), in display order.
const std::vector<std::string>& state_names();

/// The unnormalized expression text of a named state, if it exists.
std::optional<std::string_view> expression(std::string_view name);

/// |H_A V_B> +/- |V_A H_B> and |H_A H_B> +/- |V_A V_B>, normalized, over
/// the bases {H_A, V_A} and {H_B, V_B}.
std::vector<BipartitePureState> bell_states();

/// (|H_A V_B> + |V_A H_B>) / sqrt(2).
BipartitePureState bell_hv();

inline const std::vector<std::string> kPolarization = {"H", "V"};

/// rho_QM = |Bell><Bell| over HH, HV, VH, VV.
DensityMatrix rho_entangled();

/// rho_CL = (|HV><HV| + |VH><VH|) / 2 over HH, HV, VH, VV.
DensityMatrix rho_classical();

}  // namespace schmidt::fixtures
