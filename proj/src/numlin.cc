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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "schmidt/errors.h"

namespace schmidt {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("matrix " + shape_string() + " needs " +
                     std::to_string(rows_ * cols_) + " entries, got " +
                     std::to_string(entries_.size()));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw ShapeError("ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

std::string Matrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

Matrix& Matrix::operator*=(Complex s) {
  for (auto& z : entries_) {
    z *= s;
  }
  return *this;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeError("cannot add " + other.shape_string() + " to " + shape_string());
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += other.entries_[k];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeError("cannot subtract " + other.shape_string() + " from " + shape_string());
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] -= other.entries_[k];
  }
  return *this;
}

Matrix operator*(Complex s, Matrix m) {
  m *= s;
  return m;
}

Matrix operator+(Matrix a, const Matrix& b) {
  a += b;
  return a;
}

Matrix operator-(Matrix a, const Matrix& b) {
  a -= b;
  return a;
}

Matrix adjoint(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(j, i) = std::conj(m(i, j));
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(j, i) = m(i, j);
    }
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("cannot multiply " + a.shape_string() + " by " + b.shape_string());
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector mat_vec(const Matrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) {
    throw ShapeError("cannot apply " + m.shape_string() + " to a vector of length " +
                     std::to_string(v.size()));
  }
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

Matrix outer(std::span<const Complex> v, std::span<const Complex> w) {
  Matrix out(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      out(i, j) = v[i] * std::conj(w[j]);
    }
  }
  return out;
}

Complex trace(const Matrix& m) {
  if (!m.is_square()) {
    throw ShapeError("trace of non-square " + m.shape_string() + " matrix");
  }
  Complex t = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    t += m(i, i);
  }
  return t;
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (const auto& z : m.entries()) {
    best = std::max(best, std::abs(z));
  }
  return best;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("cannot compare " + a.shape_string() + " with " + b.shape_string());
  }
  double best = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    best = std::max(best, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return best;
}

double hermiticity_defect(const Matrix& m) {
  if (!m.is_square()) {
    throw ShapeError("expected a square matrix, got " + m.shape_string());
  }
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return best;
}

double frobenius_norm_sq(const Matrix& m) {
  double sum = 0.0;
  for (const auto& z : m.entries()) {
    sum += std::norm(z);
  }
  return sum;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw ShapeError("inner product of vectors of length " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()));
  }
  Complex sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum += std::conj(a[k]) * b[k];
  }
  return sum;
}

double norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const auto& z : v) {
    sum += std::norm(z);
  }
  return std::sqrt(sum);
}

void fix_phase(std::span<Complex> v, double cutoff) {
  for (const auto& z : v) {
    const double mag = std::abs(z);
    if (mag > cutoff) {
      const Complex phase = std::conj(z) / mag;
      for (auto& w : v) {
        w *= phase;
      }
      return;
    }
  }
}

namespace {

double max_off_diagonal(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      best = std::max(best, std::abs(a(i, j)));
    }
  }
  return best;
}

// Annihilates a(p,q) with the unitary U = diag(1, conj(e)) * R, where e is the
// phase of a(p,q) and R the real Jacobi rotation of the resulting real
// symmetric 2x2 block. Applies a <- U^dagger a U and v <- v U.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) {
    return;
  }
  const Complex e = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex u_pp = c;
  const Complex u_pq = s;
  const Complex u_qp = -s * std::conj(e);
  const Complex u_qq = c * std::conj(e);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }
}

}  // namespace

EigenSystem hermitian_eigen(const Matrix& h, std::optional<double> tol, int max_sweeps) {
  const double defect = hermiticity_defect(h);
  for (const auto& z : h.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("matrix has a non-finite entry");
    }
  }
  if (defect > kHermitianTolerance) {
    throw ValidationError("matrix is not Hermitian: max |H - H^dagger| = " +
                          std::to_string(defect));
  }
  if (tol && !(*tol >= 0.0)) {
    throw ValidationError("eigensolver tolerance must be non-negative");
  }
  const std::size_t n = h.rows();
  const double threshold = tol.value_or(1e-12 * max_abs(h));

  // Work on the exactly Hermitian part.
  Matrix a = h;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  Matrix v = Matrix::identity(n);

  EigenSystem out;
  for (int sweep = 0;; ++sweep) {
    out.residual = max_off_diagonal(a);
    out.sweeps = sweep;
    if (out.residual <= threshold) {
      break;
    }
    if (sweep >= max_sweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge after " +
                                 std::to_string(max_sweeps) +
                                 " sweeps (residual " + std::to_string(out.residual) + ")",
                             out.residual);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (const std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k).real());
    Vector vec = v.column(k);
    fix_phase(vec);
    out.eigenvectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace schmidt
