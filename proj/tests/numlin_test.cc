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

#include "schmidt/numlin.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "schmidt/errors.h"
#include "test_util.h"

using namespace schmidt;

namespace {

const Complex I(0.0, 1.0);

Matrix psi0_amplitudes() {
  return (1.0 / std::sqrt(12.0)) * Matrix{{2, 1, 1}, {1, 2, 1}};
}

Matrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  const Matrix m = test_util::random_matrix(rng, n, n);
  return 0.5 * (m + adjoint(m));
}

}  // namespace

TEST(numlin, adjoint_examples) {
  const Matrix c = psi0_amplitudes();
  const Matrix expected = (1.0 / std::sqrt(12.0)) * Matrix{{2, 1}, {1, 2}, {1, 1}};
  EXPECT_EQ(adjoint(c).rows(), 3u);
  EXPECT_EQ(adjoint(c).cols(), 2u);
  EXPECT_LE(max_abs_diff(adjoint(c), expected), 1e-15);

  EXPECT_EQ(adjoint(Matrix{{2.5}}), Matrix{{2.5}});
  EXPECT_EQ(adjoint(Matrix{{I}}), Matrix{{-I}});
}

TEST(numlin, adjoint_is_involution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = test_util::random_matrix(rng, 1 + trial % 4, 1 + trial % 5);
    EXPECT_EQ(adjoint(adjoint(m)), m);
  }
}

TEST(numlin, conj_is_exact_involution) {
  const Complex z(0.1, -3.7e-200);
  EXPECT_EQ(std::conj(std::conj(z)), z);
  EXPECT_GE(std::norm(z), 0.0);
}

TEST(numlin, mat_mul_gram_products) {
  const Matrix c = psi0_amplitudes();
  EXPECT_LE(max_abs_diff(c * adjoint(c), (1.0 / 12) * Matrix{{6, 5}, {5, 6}}), 1e-15);
  EXPECT_LE(max_abs_diff(adjoint(c) * c,
                         (1.0 / 12) * Matrix{{5, 4, 3}, {4, 5, 3}, {3, 3, 2}}),
            1e-15);
  EXPECT_EQ(Matrix::identity(2) * c, c);
}

TEST(numlin, mat_mul_shape_error_names_shapes) {
  try {
    mat_mul(Matrix(2, 3), Matrix(2, 3));
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("2x3"), std::string::npos);
  }
}

TEST(numlin, matrix_constructor_checks_entry_count) {
  EXPECT_THROW(Matrix(2, 2, {1, 2, 3}), ShapeError);
  EXPECT_THROW((Matrix{{1, 2}, {3}}), ShapeError);
}

TEST(numlin, eigen_of_latin_gram) {
  const EigenSystem eig = hermitian_eigen((1.0 / 12) * Matrix{{6, 5}, {5, 6}});
  ASSERT_EQ(eig.eigenvalues.size(), 2u);
  EXPECT_NEAR(eig.eigenvalues[0], 11.0 / 12, 1e-14);
  EXPECT_NEAR(eig.eigenvalues[1], 1.0 / 12, 1e-14);
  // Phase convention: first significant component real positive.
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_LE(test_util::max_abs_diff(eig.eigenvectors[0], {r, r}), 1e-12);
  EXPECT_LE(test_util::max_abs_diff(eig.eigenvectors[1], {r, -r}), 1e-12);
}

TEST(numlin, eigen_of_identity) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const EigenSystem eig = hermitian_eigen(Matrix::identity(n));
    for (const double lambda : eig.eigenvalues) EXPECT_EQ(lambda, 1.0);
    EXPECT_EQ(eig.sweeps, 0);
  }
}

TEST(numlin, eigen_of_greek_gram_matches_characteristic_polynomial) {
  const Matrix h = (1.0 / 12) * Matrix{{5, 4, 3}, {4, 5, 3}, {3, 3, 2}};
  // By hand: trace 1, principal minors (9 + 1 + 1)/144, det 0, so
  // lambda (lambda^2 - lambda + 11/144) = 0 with roots 11/12, 1/12, 0.
  const auto coeffs = test_util::char_poly3(h);
  EXPECT_NEAR(coeffs[0], 1.0, 1e-15);
  EXPECT_NEAR(coeffs[1], 11.0 / 144, 1e-15);
  EXPECT_NEAR(coeffs[2], 0.0, 1e-15);
  const auto roots = test_util::cubic_roots(coeffs[0], coeffs[1], coeffs[2]);
  EXPECT_NEAR(roots[0], 11.0 / 12, 1e-12);
  EXPECT_NEAR(roots[1], 1.0 / 12, 1e-12);
  EXPECT_NEAR(roots[2], 0.0, 1e-12);

  const EigenSystem eig = hermitian_eigen(h);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(eig.eigenvalues[k], roots[k], 1e-12);
}

TEST(numlin, eigen_agrees_with_cubic_oracle_on_random_hermitian) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix h = random_hermitian(rng, 3);
    const auto c = test_util::char_poly3(h);
    const auto roots = test_util::cubic_roots(c[0], c[1], c[2]);
    const EigenSystem eig = hermitian_eigen(h);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(eig.eigenvalues[k], roots[k], 1e-9);
  }
}

TEST(numlin, eigen_2x2_complex_matches_closed_form) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix h = random_hermitian(rng, 2);
    const auto expected = test_util::eig2_closed_form(h(0, 0).real(), h(0, 1), h(1, 1).real());
    const EigenSystem eig = hermitian_eigen(h);
    EXPECT_NEAR(eig.eigenvalues[0], expected[0], 1e-12);
    EXPECT_NEAR(eig.eigenvalues[1], expected[1], 1e-12);
  }
}

TEST(numlin, eigensystem_properties_on_random_hermitian) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix h = random_hermitian(rng, n);
      const EigenSystem eig = hermitian_eigen(h);
      double sum = 0.0;
      Matrix rebuilt(n, n);
      for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
          EXPECT_GE(eig.eigenvalues[k - 1], eig.eigenvalues[k]);
        }
        EXPECT_NEAR(norm(eig.eigenvectors[k]), 1.0, 1e-12);
        for (std::size_t j = 0; j < k; ++j) {
          EXPECT_LE(std::abs(inner(eig.eigenvectors[j], eig.eigenvectors[k])), 1e-10);
        }
        sum += eig.eigenvalues[k];
        rebuilt += eig.eigenvalues[k] * outer(eig.eigenvectors[k], eig.eigenvectors[k]);
      }
      EXPECT_NEAR(sum, trace(h).real(), 1e-10);
      EXPECT_LE(max_abs_diff(rebuilt, h), 1e-9);
      EXPECT_LE(eig.residual, 1e-12 * max_abs(h));
    }
  }
}

TEST(numlin, gram_spectra_agree_after_padding) {
  std::mt19937_64 rng(13);
  for (std::size_t rows = 1; rows <= 5; ++rows) {
    for (std::size_t cols = 1; cols <= 5; ++cols) {
      const Matrix m = test_util::random_matrix(rng, rows, cols);
      const auto left = hermitian_eigen(m * adjoint(m)).eigenvalues;
      const auto right = hermitian_eigen(adjoint(m) * m).eigenvalues;
      const auto& shorter = left.size() <= right.size() ? left : right;
      const auto& longer = left.size() <= right.size() ? right : left;
      for (std::size_t k = 0; k < shorter.size(); ++k) {
        EXPECT_NEAR(shorter[k], longer[k], 1e-10);
      }
      for (std::size_t k = shorter.size(); k < longer.size(); ++k) {
        EXPECT_LE(std::abs(longer[k]), 1e-10);
      }
      for (const double lambda : left) EXPECT_GE(lambda, -1e-12);
    }
  }
}

TEST(numlin, degenerate_eigenspace_projector_is_stable) {
  // diag(1, 1, 0) rotated by a random unitary: the top eigenspace projector
  // is basis independent even though individual vectors are not.
  std::mt19937_64 rng(17);
  const Matrix u = test_util::random_unitary(rng, 3);
  Matrix d(3, 3);
  d(0, 0) = d(1, 1) = 1.0;
  const Matrix h = u * d * adjoint(u);
  const EigenSystem eig = hermitian_eigen(h);
  const Matrix projector = outer(eig.eigenvectors[0], eig.eigenvectors[0]) +
                           outer(eig.eigenvectors[1], eig.eigenvectors[1]);
  EXPECT_LE(max_abs_diff(projector, h), 1e-10);
}

TEST(numlin, eigen_errors) {
  EXPECT_THROW(hermitian_eigen(Matrix(2, 3)), ShapeError);
  EXPECT_THROW(hermitian_eigen(Matrix{{1, 2}, {0, 1}}), ValidationError);
  // Hermitian to within the tolerance is accepted.
  EXPECT_NO_THROW(hermitian_eigen(Matrix{{1, 1e-12}, {0, 1}}));
  EXPECT_THROW(hermitian_eigen(Matrix::identity(2), -1.0), ValidationError);
}

TEST(numlin, convergence_error_carries_residual) {
  std::mt19937_64 rng(19);
  const Matrix h = random_hermitian(rng, 8);
  try {
    hermitian_eigen(h, std::nullopt, 1);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.residual(), 1e-12 * max_abs(h));
  }
  EXPECT_NO_THROW(hermitian_eigen(h, std::nullopt, kMaxJacobiSweeps));
}

TEST(numlin, eigen_rejects_non_finite_entries) {
  Matrix h = Matrix::identity(2);
  h(0, 0) = std::nan("");
  EXPECT_THROW(hermitian_eigen(h), ValidationError);
}

TEST(numlin, fix_phase_makes_first_component_real_positive) {
  Vector v = {Complex(0, 0), Complex(0, -2), Complex(1, 1)};
  fix_phase(v);
  EXPECT_EQ(v[0], Complex(0));
  EXPECT_NEAR(v[1].real(), 2.0, 1e-15);
  EXPECT_NEAR(v[1].imag(), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v[2]), std::sqrt(2.0), 1e-15);
}
