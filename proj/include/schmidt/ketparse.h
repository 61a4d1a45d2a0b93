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

// Text format for two-party states ("ket-v1").
//
//   state   := ['-'] term (('+' | '-') term)*
//   term    := [scalar ['*']] factor TENSOR factor
//   factor  := ket | '(' linear ')'
//   linear  := ['-'] sterm (('+' | '-') sterm)*
//   sterm   := [scalar ['*']] ket
//   ket     := '|' LABEL '>'             LABEL = letter (letter | digit | '_')*
//   scalar  := real | [real] 'i' | real '/' real | real '/sqrt(' real ')'
//            | 'sqrt(' real ')' | '(' ['-'] real ('+' | '-') [real] 'i' ')'
//   TENSOR  := '(x)' | 'x' | '⊗'
//
// The left factor of every term lives in subsystem A (Latin), the right one in
// subsystem B (Greek). Basis order is order of first appearance. Whitespace
// between tokens is ignored. Example:
//
//   (2|a> + |b>)(x)|alpha> + (|a> + 2|b>)(x)|beta> + (|a> + |b>)(x)|gamma>

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "schmidt/schmidt.h"

namespace schmidt {

inline constexpr std::string_view kKetGrammarVersion = "ket-v1";

class ParseError : public std::invalid_argument {
 public:
  enum class Kind { kLexical, kSyntax, kLabelOnBothSides, kMissingTensor };

  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  /// Byte offset into the input.
  std::size_t position() const { return position_; }
  /// The message without the "at position N" prefix.
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::string message_;
};

/// Parses a ket-v1 expression. The result is not normalized; its
/// original_norm() is the norm of the amplitudes as written.
BipartitePureState parse_state(std::string_view text);

/// Canonical ket-v1 text: one term per Greek ket in basis order, each holding
/// the parenthesized Latin combination. Coefficients are printed as integers
/// when integral, otherwise with 12 significant digits. Zero coefficients are
/// kept where needed so that every label survives in its basis position.
std::string format_state(const BipartitePureState& state);

/// Formats one coefficient as a ket-v1 scalar (no sign handling).
std::string format_scalar(Complex z);

}  // namespace schmidt
