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

// Dense complex linear algebra for the small matrices that show up in
// two-party state analysis: amplitude matrices, their Gram products and the
// Hermitian eigenproblems built from them.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schmidt {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Row-major dense complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  Vector column(std::size_t c) const;

  /// "rows x cols", used in error messages.
  std::string shape_string() const;

  Matrix& operator*=(Complex s);
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

Matrix operator*(Complex s, Matrix m);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);

/// Conjugate transpose.
Matrix adjoint(const Matrix& m);

/// Plain transpose without conjugation.
Matrix transpose(const Matrix& m);

/// Standard product. Throws ShapeError when a.cols() != b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Vector mat_vec(const Matrix& m, std::span<const Complex> v);

/// |v><w|
Matrix outer(std::span<const Complex> v, std::span<const Complex> w);

Complex trace(const Matrix& m);

/// Largest entry magnitude.
double max_abs(const Matrix& m);

/// Largest entrywise difference magnitude. Throws ShapeError on mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// max |m - m^dagger|, or ShapeError for non-square input.
double hermiticity_defect(const Matrix& m);

/// Sum of squared entry magnitudes.
double frobenius_norm_sq(const Matrix& m);

/// <a|b>, conjugating the left argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

/// Multiplies v by a unit phase so that its first component with magnitude
/// above `cutoff` is real and positive.
void fix_phase(std::span<Complex> v, double cutoff = 1e-9);

/// Eigenvalues are sorted non-increasing; eigenvectors[k] belongs to
/// eigenvalues[k] and has unit norm.
struct EigenSystem {
  std::vector<double> eigenvalues;
  std::vector<Vector> eigenvectors;
  /// Largest off-diagonal magnitude when the iteration stopped.
  double residual = 0.0;
  int sweeps = 0;
};

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kHermitianTolerance = 1e-10;

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Rotations are applied until the largest off-diagonal magnitude is at most
/// `tol`, which defaults to 1e-12 times the largest entry magnitude. Each
/// eigenvector is phase-fixed with fix_phase(). Eigenvectors of degenerate
/// eigenvalues are an arbitrary orthonormal basis of their eigenspace.
///
/// Throws ShapeError for non-square input, ValidationError when
/// hermiticity_defect(h) exceeds kHermitianTolerance or an entry is not
/// finite, and ConvergenceError after `max_sweeps` sweeps.
EigenSystem hermitian_eigen(const Matrix& h, std::optional<double> tol = std::nullopt,
                            int max_sweeps = kMaxJacobiSweeps);

}  // namespace schmidt
