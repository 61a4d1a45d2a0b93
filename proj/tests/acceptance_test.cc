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

// Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if any
// criterion fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schmidt/density.h"
#include "schmidt/errors.h"
#include "schmidt/fixtures.h"
#include "schmidt/ketparse.h"
#include "schmidt/numlin.h"
#include "schmidt/schmidt.h"
#include "test_util.h"

using namespace schmidt;

namespace {

constexpr Complex I(0.0, 1.0);

// Collects the first few failure reasons of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(17);
    s << what << ": got " << got << ", want " << want << " +/- " << tol;
    expect(std::abs(got - want) <= tol, s.str());
  }
  void within(double deviation, double tol, const std::string& what) {
    std::ostringstream s;
    s << what << ": deviation " << deviation << " > " << tol;
    expect(deviation <= tol, s.str());
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const { return notes_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

BipartitePureState make(const Matrix& c, std::vector<std::string> greek = {"alpha", "beta",
                                                                         "gamma"}) {
  return BipartitePureState({"a", "b"}, std::move(greek), c);
}

std::vector<double> eigenvalues(const DensityMatrix& rho) {
  return hermitian_eigen(rho.matrix()).eigenvalues;
}

Matrix half_identity() { return Matrix{{0.5, 0.0}, {0.0, 0.5}}; }

void psi0_spectrum_and_modes(Check& c) {
  const auto s = make(Matrix{{2, 1, 1}, {1, 2, 1}}).normalized();
  const auto latin = eigenvalues(gram_latin(s));
  const auto greek = eigenvalues(gram_greek(s));
  const std::vector<double> want = {11.0 / 12, 1.0 / 12, 0.0};
  for (std::size_t k = 0; k < 2; ++k) c.near(latin[k], want[k], 1e-10, "latin eigenvalue");
  for (std::size_t k = 0; k < 3; ++k) c.near(greek[k], want[k], 1e-10, "greek eigenvalue");

  const auto d = schmidt_decompose(s);
  for (std::size_t k = 0; k < 3; ++k) c.near(d.lambdas[k], want[k], 1e-10, "lambda");
  c.near(schmidt_number(d), 144.0 / 122, 1e-9, "K");

  const double r2 = 1 / std::sqrt(2.0), r22 = 1 / std::sqrt(22.0);
  c.expect(d.rank == 2, "rank");
  if (d.rank != 2) return;
  c.within(test_util::max_abs_diff(d.latin_modes[0], {r2, r2}), 1e-9, "F1");
  c.within(test_util::max_abs_diff(d.latin_modes[1], {r2, -r2}), 1e-9, "F2");
  c.within(test_util::max_abs_diff(d.greek_modes[0], {3 * r22, 3 * r22, 2 * r22}), 1e-9, "Phi1");
  c.within(test_util::max_abs_diff(d.greek_modes[1], {r2, -r2, 0.0}), 1e-9, "Phi2");
}

void psi0_reconstruction(Check& c) {
  const auto s = make(Matrix{{2, 1, 1}, {1, 2, 1}}).normalized();
  const Matrix rebuilt = std::sqrt(12.0) * reconstruct(schmidt_decompose(s));
  c.within(max_abs_diff(rebuilt, Matrix{{2, 1, 1}, {1, 2, 1}}), 1e-9, "reconstruction");
}

void psi1(Check& c) {
  const auto s = make(Matrix{{2, 1, 1}, {1, 2, -1}}).normalized();
  const auto d = schmidt_decompose(s);
  const std::vector<double> want = {0.75, 0.25, 0.0};
  for (std::size_t k = 0; k < 3; ++k) c.near(d.lambdas[k], want[k], 1e-10, "lambda");
  c.near(schmidt_number(d), 1.6, 1e-9, "K");
  const Matrix greek_gram = (1.0 / 12) * Matrix{{5, 4, 1}, {4, 5, -1}, {1, -1, 2}};
  c.within(max_abs_diff(gram_greek(s).matrix(), greek_gram), 1e-12, "greek Gram");
}

void psi2(Check& c) {
  const Matrix raw{{2, 1, 1, -1}, {1, 2, -1, 1}};
  const auto unnormalized = make(raw, {"alpha", "beta", "gamma", "delta"});
  const auto s = unnormalized.normalized();

  // Normalization from unit trace of the Greek Gram numerator.
  const Matrix numerator{{5, 4, 1, -1}, {4, 5, -1, 1}, {1, -1, 2, -2}, {-1, 1, -2, 2}};
  const double n_sq = trace(numerator).real();
  c.near(n_sq, 14.0, 0.0, "N^2 from trace");
  c.near(unnormalized.original_norm() * unnormalized.original_norm(), n_sq, 1e-12, "N^2");
  c.within(max_abs_diff(gram_greek(s).matrix(), (1.0 / n_sq) * numerator), 1e-12, "greek Gram");

  const auto d = schmidt_decompose(s);
  c.expect(d.rank == 2, "rank " + std::to_string(d.rank) + " != 2");

  // Independent oracle: closed-form eigenvalues of the 2x2 Latin Gram matrix.
  const Matrix g = (1.0 / n_sq) * (raw * adjoint(raw));
  const auto l = test_util::eig2_closed_form(g(0, 0).real(), g(0, 1), g(1, 1).real());
  const double k_oracle = 1.0 / (l[0] * l[0] + l[1] * l[1]);
  c.near(k_oracle, 196.0 / 106, 1e-9, "oracle K");
  c.near(schmidt_number(d), k_oracle, 1e-9, "K");
}

void psi3(Check& c) {
  const auto s = make(Matrix{{2, I, 1}, {I, 2, 1}}).normalized();
  c.near(schmidt_number(schmidt_decompose(s)), 144.0 / 74, 1e-9, "K");
}

void bell(Check& c) {
  const BipartiteDims dims{2, 2};
  for (const auto& s : fixtures::bell_states()) {
    const auto d = schmidt_decompose(s);
    c.near(schmidt_number(d), 2.0, 1e-9, "K");
    c.near(entanglement_entropy(d), 1.0, 1e-9, "entropy");
    const auto rho = pure_density(s);
    c.within(max_abs_diff(partial_trace(rho, Subsystem::kA, dims).matrix(), half_identity()),
             1e-10, "rho_A");
    c.within(max_abs_diff(partial_trace(rho, Subsystem::kB, dims).matrix(), half_identity()),
             1e-10, "rho_B");
  }
}

void classical_vs_entangled(Check& c) {
  const Matrix printed_cl = 0.5 * Matrix{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}};
  const Matrix printed_qm = 0.5 * Matrix{{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}};
  const auto cl = fixtures::rho_classical();
  const auto qm = fixtures::rho_entangled();
  c.within(max_abs_diff(cl.matrix(), printed_cl), 1e-12, "rho_CL");
  c.within(max_abs_diff(qm.matrix(), printed_qm), 1e-12, "rho_QM");

  const Vector h = {1.0, 0.0};
  const Matrix v_projector{{0, 0}, {0, 1}};
  for (const auto* rho : {&cl, &qm}) {
    const auto outcome = conditional_state(*rho, h, BipartiteDims{2, 2});
    c.near(outcome.probability, 0.5, 1e-12, "P(H_A)");
    c.within(max_abs_diff(outcome.state.matrix(), v_projector), 1e-12, "conditional state");
  }

  // HV and VH sit at product indices 1 and 2.
  const Matrix diff = qm.matrix() - cl.matrix();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const bool support = (i == 1 && j == 2) || (i == 2 && j == 1);
      if (support) {
        c.expect(std::abs(diff(i, j)) > 0.25, "difference missing at support");
      } else {
        c.within(std::abs(diff(i, j)), 1e-12, "difference off support");
      }
    }
  }
}

void properties(Check& c) {
  std::mt19937_64 rng(20260101);
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const std::string shape = std::to_string(m) + "x" + std::to_string(n);
      for (int trial = 0; trial < 200; ++trial) {
        const auto s = test_util::random_state(rng, m, n);
        const auto d = schmidt_decompose(s);
        double sum = 0.0;
        for (double l : d.lambdas) sum += l;
        c.near(sum, 1.0, 1e-10, shape + " sum lambda");

        const auto latin = eigenvalues(gram_latin(s));
        const auto greek = eigenvalues(gram_greek(s));
        for (std::size_t k = 0; k < std::min(m, n); ++k) {
          c.near(latin[k], greek[k], 1e-10, shape + " spectra");
        }
        for (std::size_t k = std::min(m, n); k < std::max(m, n); ++k) {
          c.within(std::abs((m > n ? latin : greek)[k]), 1e-10, shape + " excess spectrum");
        }

        const double k_val = schmidt_number(d);
        c.expect(k_val >= 1.0 - 1e-9 && k_val <= static_cast<double>(std::min(m, n)) + 1e-9,
                 shape + " K out of range");
        c.within(max_abs_diff(reconstruct(d), s.amplitudes()), 1e-9, shape + " reconstruction");

        const Matrix rotated = test_util::random_unitary(rng, m) * s.amplitudes() *
                               transpose(test_util::random_unitary(rng, n));
        const BipartitePureState moved(s.latin_labels(), s.greek_labels(), rotated);
        c.near(schmidt_number(schmidt_decompose(moved)), k_val, 1e-9, shape + " local unitary");

        c.near(purity(gram_latin(s)), 1.0 / k_val, 1e-9, shape + " purity A");
        c.near(purity(gram_greek(s)), 1.0 / k_val, 1e-9, shape + " purity B");
      }
    }
  }
}

void equal_coefficients(Check& c) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Matrix amp(6, 6);
    for (std::size_t k = 0; k < n; ++k) amp(k, k) = 1.0 / std::sqrt(static_cast<double>(n));
    const BipartitePureState s(test_util::labels("a", 6), test_util::labels("g", 6), amp);
    c.near(schmidt_number(schmidt_decompose(s)), static_cast<double>(n), 1e-9,
           "K for N=" + std::to_string(n));
  }
}

void parser(Check& c) {
  const std::vector<std::pair<std::string_view, Matrix>> cases = {
      {fixtures::kPsi0, Matrix{{2, 1, 1}, {1, 2, 1}}},
      {fixtures::kPsi1, Matrix{{2, 1, 1}, {1, 2, -1}}},
      {fixtures::kPsi2, Matrix{{2, 1, 1, -1}, {1, 2, -1, 1}}},
      {fixtures::kPsi3, Matrix{{2, I, 1}, {I, 2, 1}}},
  };
  for (const auto& [text, want] : cases) {
    const auto s = parse_state(text);
    c.expect(s.amplitudes() == want, "amplitudes of " + std::string(text));
  }

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const auto s = test_util::random_state(rng, m, n);
    const auto back = parse_state(format_state(s));
    c.expect(back.latin_labels() == s.latin_labels() && back.greek_labels() == s.greek_labels(),
             "round-trip labels");
    if (back.amplitudes().rows() == m && back.amplitudes().cols() == n) {
      c.within(max_abs_diff(back.amplitudes(), s.amplitudes()), 1e-12, "round-trip amplitudes");
    } else {
      c.expect(false, "round-trip shape");
    }
  }

  const std::string alphabet = "|<>()+-*/x0123456789.eEi abgsqrt\t\xe2\x8a\x97";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> length(0, 40);
  for (int trial = 0; trial < 10000; ++trial) {
    std::string text;
    for (int k = length(rng); k > 0; --k) text += alphabet[pick(rng)];
    try {
      (void)parse_state(text);
    } catch (const std::invalid_argument&) {
      // ParseError, ShapeError and ValidationError are all expected outcomes.
    } catch (const std::exception& e) {
      c.expect(false, std::string("fuzz escaped: ") + e.what());
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"psi0 spectra, K and modes", psi0_spectrum_and_modes},
      {"psi0 reconstruction", psi0_reconstruction},
      {"psi1 spectrum, K and Greek Gram", psi1},
      {"psi2 normalization, rank and K", psi2},
      {"psi3 K", psi3},
      {"Bell states", bell},
      {"classical vs entangled density", classical_vs_entangled},
      {"random-state properties", properties},
      {"equal coefficients give K = N", equal_coefficients},
      {"parser", parser},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    try {
      criteria[k].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("threw: ") + e.what());
    }
    std::printf("[%s] %2zu. %s%s%s\n", check.ok() ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), check.ok() ? "" : " -- ", check.notes().c_str());
    if (!check.ok()) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
