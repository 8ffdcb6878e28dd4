// Copyright 2026 The torus-ppt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torus_ppt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "torus_ppt/error.hpp"

namespace torus_ppt {

BasisIndex BasisIndex::make(int i, int j, int d) {
  if (d < 1 || i < 1 || i > d || j < 1 || j > d) {
    throw Error(ErrorCode::kBadParameter, "basis label out of range 1..d");
  }
  return {i, j, ket(i - 1, j - 1, d)};
}

BasisIndex BasisIndex::from_flat(std::size_t flat, int d) {
  const auto dd = static_cast<std::size_t>(d);
  if (d < 1 || flat >= dd * dd) {
    throw Error(ErrorCode::kBadParameter, "flat index out of range 0..d^2-1");
  }
  return {static_cast<int>(flat / dd) + 1, static_cast<int>(flat % dd) + 1, flat};
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "data length " + std::to_string(data_.size()) + " != rows*cols");
  }
  if (!all_finite(*this)) throw Error(ErrorCode::kNonFinite, "matrix entry is NaN or Inf");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum of different shapes");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix difference of different shapes");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs += rhs; }
DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs -= rhs; }
DenseMatrix operator*(Complex scale, DenseMatrix m) { return m *= scale; }

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product inner dimensions differ");
  }
  DenseMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex x = lhs(r, k);
      if (x == Complex{}) continue;
      for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, c) += x * rhs(k, c);
    }
  }
  return out;
}

DenseMatrix adjoint(const DenseMatrix& m) {
  DenseMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  }
  return out;
}

double frobenius(const DenseMatrix& m) {
  double sum = 0.0;
  for (const auto& x : m.data()) sum += std::norm(x);
  return std::sqrt(sum);
}

Complex trace(const DenseMatrix& m) {
  Complex t{};
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < n; ++k) t += m(k, k);
  return t;
}

bool all_finite(const DenseMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Complex& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

double hermiticity_defect(const DenseMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "hermiticity of a non-square matrix");
  double worst = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) {
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return worst;
}

bool is_hermitian(const DenseMatrix& m, double rel_tol) {
  return m.square() && hermiticity_defect(m) <= rel_tol * std::max(1.0, frobenius(m));
}

DenseMatrix hermitian_part(const DenseMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "Hermitian part of a non-square matrix");
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
      out(c, r) = std::conj(out(r, c));
    }
  }
  return out;
}

DenseMatrix outer(std::span<const Complex> v) {
  DenseMatrix out(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) out(r, c) = v[r] * std::conj(v[c]);
  }
  return out;
}

std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

double norm2(std::span<const Complex> v) {
  double sum = 0.0;
  for (const auto& x : v) sum += std::norm(x);
  return std::sqrt(sum);
}

namespace {

double off_diagonal_norm2(const DenseMatrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t q = p + 1; q < a.cols(); ++q) sum += std::norm(a(p, q));
  }
  return sum;
}

// One complex Jacobi rotation annihilating a(p,q). The entry is first made
// real by a diagonal phase on index q, then a real Givens rotation finishes
// the job; both transformations are accumulated into v.
void jacobi_rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const double mag = std::abs(a(p, q));
  const Complex phase = a(p, q) / mag;
  for (std::size_t k = 0; k < n; ++k) {
    a(k, q) *= std::conj(phase);
    v(k, q) *= std::conj(phase);
  }
  for (std::size_t k = 0; k < n; ++k) a(q, k) *= phase;
  a(q, q) = a(q, q).real();
  a(p, q) = mag;
  a(q, p) = mag;

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const DenseMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "eigenproblem of a non-square matrix");
  if (m.rows() > kMaxEigenDimension) {
    throw Error(ErrorCode::kDimensionTooLarge,
                std::to_string(m.rows()) + "x" + std::to_string(m.rows()) + " exceeds 64x64");
  }
  if (!all_finite(m)) throw Error(ErrorCode::kNonFinite, "matrix entry is NaN or Inf");
  if (!is_hermitian(m)) throw Error(ErrorCode::kNonHermitian, "eigenproblem input is not Hermitian");

  const std::size_t n = m.rows();
  DenseMatrix a = m;
  for (std::size_t p = 0; p < n; ++p) {
    a(p, p) = a(p, p).real();
    for (std::size_t q = p + 1; q < n; ++q) {
      a(p, q) = 0.5 * (a(p, q) + std::conj(a(q, p)));
      a(q, p) = std::conj(a(p, q));
    }
  }
  DenseMatrix v = DenseMatrix::identity(n);

  const double scale2 = std::pow(frobenius(a), 2);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm2(a);
    if (off == 0.0 || off <= 1e-34 * scale2) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Past the first few sweeps, entries negligible against both diagonal
        // neighbours are dropped instead of rotated.
        if (sweep > 3 && mag < 1e-18 * std::abs(a(p, p)) && mag < 1e-18 * std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        jacobi_rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigensystem out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m) {
  return hermitian_eigensystem(m).values;
}

PsdCheck is_psd(const DenseMatrix& m, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kBadParameter, "PSD tolerance must be positive");
  const auto values = hermitian_eigenvalues(m);
  const double min_eig = values.empty() ? 0.0 : values.front();
  return {min_eig >= -tol * std::max(1.0, frobenius(m)), min_eig};
}

DenseMatrix partial_transpose_dense(const DenseMatrix& m, int d) {
  const auto dd = static_cast<std::size_t>(d);
  if (d < 1 || m.rows() != dd * dd || m.cols() != dd * dd) {
    throw Error(ErrorCode::kDimensionMismatch, "partial transpose needs a d^2 x d^2 matrix");
  }
  DenseMatrix out(m.rows(), m.cols());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) out(ket(i, j, d), ket(k, l, d)) = m(ket(i, l, d), ket(k, j, d));
      }
    }
  }
  return out;
}

std::vector<double> schmidt_coefficients(std::span<const Complex> v, int d) {
  const auto dd = static_cast<std::size_t>(d);
  if (d < 1 || v.size() != dd * dd) {
    throw Error(ErrorCode::kDimensionMismatch, "Schmidt decomposition needs a length-d^2 vector");
  }
  if (2 * dd > kMaxEigenDimension) {
    throw Error(ErrorCode::kDimensionTooLarge, "Schmidt decomposition supports d <= 32");
  }
  // Eigenvalues of [[0, R], [R^dag, 0]] are +-sigma_k. Working on this
  // embedding keeps small singular values at absolute accuracy eps*|R|,
  // where the Gram matrix R R^dag would square them into the noise floor.
  DenseMatrix embed(2 * dd, 2 * dd);
  for (std::size_t i = 0; i < dd; ++i) {
    for (std::size_t j = 0; j < dd; ++j) {
      embed(i, dd + j) = v[i * dd + j];
      embed(dd + j, i) = std::conj(v[i * dd + j]);
    }
  }
  const auto values = hermitian_eigenvalues(embed);
  std::vector<double> sigma(values.rbegin(), values.rbegin() + static_cast<std::ptrdiff_t>(dd));
  for (auto& s : sigma) s = std::max(s, 0.0);
  return sigma;
}

int schmidt_rank(std::span<const Complex> v, int d, double tol) {
  if (norm2(v) == 0.0) throw Error(ErrorCode::kZeroVector, "Schmidt rank of the zero vector");
  const auto sigma = schmidt_coefficients(v, d);
  const double cutoff = tol * sigma.front();
  return static_cast<int>(std::count_if(sigma.begin(), sigma.end(),
                                        [cutoff](double s) { return s > cutoff; }));
}

}  // namespace torus_ppt
