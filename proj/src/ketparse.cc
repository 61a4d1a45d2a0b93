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

#include "schmidt/ketparse.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schmidt/errors.h"

namespace schmidt {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::invalid_argument("position " + std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position),
      message_(message) {}

namespace {

enum class Tok { kNumber, kIdent, kBar, kGt, kLParen, kRParen, kPlus, kMinus, kStar, kSlash,
                 kOtimes, kEnd };

struct Token {
  Tok type;
  std::size_t pos;
  std::string text;
  double value = 0.0;
};

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view s) {
  static constexpr std::string_view kOtimes = "\xE2\x8A\x97";
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c) || (c == '.' && i + 1 < s.size() && is_digit(s[i + 1]))) {
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        if (j < s.size() && is_digit(s[j])) {
          i = j;
          while (i < s.size() && is_digit(s[i])) ++i;
        }
      }
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, value);
      if (ec != std::errc() || ptr != s.data() + i || !std::isfinite(value)) {
        throw ParseError(ParseError::Kind::kLexical, start,
                         "invalid number '" + std::string(s.substr(start, i - start)) + "'");
      }
      out.push_back({Tok::kNumber, start, std::string(s.substr(start, i - start)), value});
      continue;
    }
    if (is_letter(c)) {
      while (i < s.size() && (is_letter(s[i]) || is_digit(s[i]) || s[i] == '_')) ++i;
      out.push_back({Tok::kIdent, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (s.substr(i, kOtimes.size()) == kOtimes) {
      i += kOtimes.size();
      out.push_back({Tok::kOtimes, start, std::string(kOtimes)});
      continue;
    }
    Tok type;
    switch (c) {
      case '|': type = Tok::kBar; break;
      case '>': type = Tok::kGt; break;
      case '(': type = Tok::kLParen; break;
      case ')': type = Tok::kRParen; break;
      case '+': type = Tok::kPlus; break;
      case '-': type = Tok::kMinus; break;
      case '*': type = Tok::kStar; break;
      case '/': type = Tok::kSlash; break;
      default: {
        const unsigned char u = static_cast<unsigned char>(c);
        std::string shown = (u >= 0x20 && u < 0x7F) ? std::string(1, c) : [u] {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%02X", u);
          return std::string(buf);
        }();
        throw ParseError(ParseError::Kind::kLexical, start,
                         "unexpected character '" + shown + "'");
      }
    }
    ++i;
    out.push_back({type, start, std::string(1, c)});
  }
  out.push_back({Tok::kEnd, s.size(), ""});
  return out;
}

// One side's contribution to a term: coefficient per basis index.
using Combination = std::vector<std::pair<Complex, std::size_t>>;

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  BipartitePureState parse() {
    if (peek().type == Tok::kEnd) {
      throw syntax("empty expression");
    }
    double sign = 1.0;
    if (peek().type == Tok::kMinus || peek().type == Tok::kPlus) {
      sign = next().type == Tok::kMinus ? -1.0 : 1.0;
    }
    while (true) {
      parse_term(sign);
      const Token& t = peek();
      if (t.type == Tok::kPlus || t.type == Tok::kMinus) {
        sign = next().type == Tok::kMinus ? -1.0 : 1.0;
        continue;
      }
      if (t.type == Tok::kEnd) {
        break;
      }
      if (is_tensor_here()) {
        throw syntax("a term may contain only one tensor operator");
      }
      throw syntax("expected '+', '-' or end of input");
    }
    return build();
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(cursor_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& next() {
    const Token& t = tokens_[cursor_];
    if (cursor_ + 1 < tokens_.size()) ++cursor_;
    return t;
  }
  bool is_ident(const Token& t, std::string_view name) const {
    return t.type == Tok::kIdent && t.text == name;
  }

  ParseError syntax(const std::string& message) const {
    return ParseError(ParseError::Kind::kSyntax, peek().pos, message);
  }

  void expect(Tok type, const char* what) {
    if (peek().type != type) {
      throw syntax(std::string("expected ") + what);
    }
    next();
  }

  double expect_number() {
    if (peek().type != Tok::kNumber) {
      throw syntax("expected a number");
    }
    return next().value;
  }

  bool is_tensor_here() const {
    const Token& t = peek();
    if (t.type == Tok::kOtimes || is_ident(t, "x")) return true;
    return t.type == Tok::kLParen && is_ident(peek(1), "x") && peek(2).type == Tok::kRParen;
  }

  // Tries '(' ['-'] real ('+'|'-') [real] 'i' ')' without consuming on failure.
  std::optional<Complex> try_complex_literal() {
    const std::size_t saved = cursor_;
    if (peek().type != Tok::kLParen) return std::nullopt;
    next();
    double re_sign = 1.0;
    if (peek().type == Tok::kMinus) {
      next();
      re_sign = -1.0;
    }
    if (peek().type != Tok::kNumber) {
      cursor_ = saved;
      return std::nullopt;
    }
    const double re = re_sign * next().value;
    if (peek().type != Tok::kPlus && peek().type != Tok::kMinus) {
      cursor_ = saved;
      return std::nullopt;
    }
    const double im_sign = next().type == Tok::kMinus ? -1.0 : 1.0;
    double im = 1.0;
    if (peek().type == Tok::kNumber) {
      im = next().value;
    }
    if (!is_ident(peek(), "i") || peek(1).type != Tok::kRParen) {
      cursor_ = saved;
      return std::nullopt;
    }
    next();
    next();
    return Complex(re, im_sign * im);
  }

  double parse_sqrt_argument() {
    expect(Tok::kLParen, "'(' after sqrt");
    const double arg = expect_number();
    expect(Tok::kRParen, "')'");
    return std::sqrt(arg);
  }

  bool at_scalar_start() const {
    const Token& t = peek();
    return t.type == Tok::kNumber || is_ident(t, "i") || is_ident(t, "sqrt");
  }

  // Scalars other than the parenthesized complex literal.
  Complex parse_plain_scalar() {
    const Token& t = peek();
    if (is_ident(t, "i")) {
      next();
      return Complex(0.0, 1.0);
    }
    if (is_ident(t, "sqrt")) {
      next();
      return parse_sqrt_argument();
    }
    const double x = expect_number();
    if (is_ident(peek(), "i")) {
      next();
      return Complex(0.0, x);
    }
    if (peek().type == Tok::kSlash) {
      next();
      if (is_ident(peek(), "sqrt")) {
        next();
        const double root = parse_sqrt_argument();
        if (root == 0.0) throw syntax("division by sqrt(0)");
        return x / root;
      }
      const double y = expect_number();
      if (y == 0.0) throw syntax("division by zero");
      return x / y;
    }
    return x;
  }

  void skip_optional_star() {
    if (peek().type == Tok::kStar) next();
  }

  std::size_t register_label(const Token& t, Side side) {
    auto& own = side == Side::kLatin ? latin_ : greek_;
    auto& other = side == Side::kLatin ? greek_ : latin_;
    if (other.index.count(t.text) != 0) {
      throw ParseError(ParseError::Kind::kLabelOnBothSides, t.pos,
                       "label '" + t.text + "' appears on both sides of the tensor product");
    }
    const auto [it, inserted] = own.index.emplace(t.text, own.labels.size());
    if (inserted) own.labels.push_back(t.text);
    return it->second;
  }

  std::size_t parse_ket(Side side) {
    expect(Tok::kBar, "'|'");
    if (peek().type != Tok::kIdent) {
      throw syntax("expected a basis label");
    }
    const Token label = next();
    expect(Tok::kGt, "'>' closing the ket");
    return register_label(label, side);
  }

  Combination parse_linear(Side side) {
    Combination out;
    double sign = 1.0;
    if (peek().type == Tok::kMinus || peek().type == Tok::kPlus) {
      sign = next().type == Tok::kMinus ? -1.0 : 1.0;
    }
    while (true) {
      Complex coeff = sign;
      if (peek().type == Tok::kLParen) {
        const auto literal = try_complex_literal();
        if (!literal) throw syntax("expected a complex literal such as (1+2i)");
        coeff *= *literal;
        skip_optional_star();
      } else if (at_scalar_start()) {
        coeff *= parse_plain_scalar();
        skip_optional_star();
      }
      out.emplace_back(coeff, parse_ket(side));
      if (peek().type == Tok::kPlus || peek().type == Tok::kMinus) {
        sign = next().type == Tok::kMinus ? -1.0 : 1.0;
        continue;
      }
      return out;
    }
  }

  Combination parse_factor(Side side) {
    if (peek().type == Tok::kBar) {
      return {{Complex(1.0), parse_ket(side)}};
    }
    if (peek().type == Tok::kLParen) {
      next();
      Combination c = parse_linear(side);
      expect(Tok::kRParen, "')' closing the linear combination");
      return c;
    }
    throw syntax("expected a ket or '('");
  }

  void parse_term(double sign) {
    Complex coeff = sign;
    if (peek().type == Tok::kLParen) {
      if (const auto literal = try_complex_literal()) {
        coeff *= *literal;
        skip_optional_star();
      }
    } else if (at_scalar_start()) {
      coeff *= parse_plain_scalar();
      skip_optional_star();
    }
    const Combination left = parse_factor(Side::kLatin);
    if (!is_tensor_here()) {
      throw ParseError(ParseError::Kind::kMissingTensor, peek().pos,
                       "missing tensor operator '(x)' in term");
    }
    if (peek().type == Tok::kLParen) {
      next();
      next();
    }
    const std::size_t tensor_pos = peek().pos;
    next();
    const Combination right = parse_factor(Side::kGreek);
    for (const auto& [ca, a] : left) {
      for (const auto& [cb, b] : right) {
        Complex& slot = amplitudes_[{a, b}];
        slot += coeff * ca * cb;
        if (!std::isfinite(slot.real()) || !std::isfinite(slot.imag())) {
          throw ParseError(ParseError::Kind::kSyntax, tensor_pos, "coefficient overflow");
        }
      }
    }
  }

  BipartitePureState build() const {
    Matrix c(latin_.labels.size(), greek_.labels.size());
    for (const auto& [key, value] : amplitudes_) {
      c(key.first, key.second) = value;
    }
    return BipartitePureState(latin_.labels, greek_.labels, std::move(c));
  }

  struct Basis {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
  };

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  Basis latin_;
  Basis greek_;
  std::map<std::pair<std::size_t, std::size_t>, Complex> amplitudes_;
};

std::string format_real(double x) {
  char buf[64];
  if (x == std::floor(x) && std::abs(x) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g", x);
  }
  return buf;
}

// Splits a coefficient into a sign and the text that multiplies the ket,
// where an empty body means a unit coefficient.
std::pair<bool, std::string> signed_body(Complex z) {
  if (z.imag() == 0.0) {
    const double mag = std::abs(z.real());
    return {z.real() < 0.0, mag == 1.0 ? "" : format_real(mag)};
  }
  if (z.real() == 0.0) {
    const double mag = std::abs(z.imag());
    return {z.imag() < 0.0, (mag == 1.0 ? "" : format_real(mag)) + "i"};
  }
  return {false, format_scalar(z)};
}

}  // namespace

BipartitePureState parse_state(std::string_view text) { return Parser(text).parse(); }

std::string format_scalar(Complex z) {
  if (z.imag() == 0.0) return format_real(z.real());
  const double im = std::abs(z.imag());
  const std::string im_text = (im == 1.0 ? "" : format_real(im)) + "i";
  if (z.real() == 0.0) return (z.imag() < 0.0 ? "-" : "") + im_text;
  return "(" + format_real(z.real()) + (z.imag() < 0.0 ? "-" : "+") + im_text + ")";
}

std::string format_state(const BipartitePureState& state) {
  const Matrix& c = state.amplitudes();
  const auto& latin = state.latin_labels();
  const auto& greek = state.greek_labels();
  const auto ket = [](const std::string& label) { return "|" + label + ">"; };

  std::string out;
  bool first_term = true;
  for (std::size_t nu = 0; nu < c.cols(); ++nu) {
    // The first column lists every Latin ket so that basis order and membership
    // survive a round trip even when amplitudes vanish.
    std::vector<std::size_t> rows;
    for (std::size_t n = 0; n < c.rows(); ++n) {
      if (nu == 0 || c(n, nu) != Complex(0.0)) rows.push_back(n);
    }

    std::string body;
    bool negative = false;
    if (rows.empty()) {
      body = "0" + ket(latin[0]);
    } else if (rows.size() == 1) {
      auto [neg, scalar] = signed_body(c(rows[0], nu));
      negative = neg;
      body = scalar + ket(latin[rows[0]]);
    } else {
      body = "(";
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto [neg, scalar] = signed_body(c(rows[k], nu));
        if (k == 0) {
          body += neg ? "-" : "";
        } else {
          body += neg ? " - " : " + ";
        }
        body += scalar + ket(latin[rows[k]]);
      }
      body += ")";
    }
    body += "(x)" + ket(greek[nu]);

    if (first_term) {
      out += (negative ? "-" : "") + body;
      first_term = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace schmidt
