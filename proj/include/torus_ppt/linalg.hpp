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

#pragma once

// Dense complex linear algebra for operators on C^d (x) C^d.
//
// Everything here works on small row-major matrices (at most 64x64). The
// Hermitian eigensolver is a cyclic complex Jacobi iteration and doubles as
// the brute-force oracle that the closed-form criteria in states.hpp are
// checked against.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace torus_ppt {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxEigenDimension = 64;

/// Product-basis label |ij> with 1-based i, j in 1..d and flat storage
/// index (i-1)*d + (j-1).
struct BasisIndex {
  int i = 1;
  int j = 1;
  std::size_t flat = 0;

  static BasisIndex make(int i, int j, int d);
  static BasisIndex from_flat(std::size_t flat, int d);
};

/// Flat index of |ij> for 0-based i, j.
constexpr std::size_t ket(int i, int j, int d) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(d) + static_cast<std::size_t>(j);
}

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Throws kDimensionMismatch on a length mismatch and kNonFinite on NaN/Inf.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(Complex scale);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs);
DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs);
DenseMatrix operator*(Complex scale, DenseMatrix m);
DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);

DenseMatrix adjoint(const DenseMatrix& m);
double frobenius(const DenseMatrix& m);
Complex trace(const DenseMatrix& m);
bool all_finite(const DenseMatrix& m);

/// max_{ij} |M_ij - conj(M_ji)|; requires a square matrix.
double hermiticity_defect(const DenseMatrix& m);

/// Hermitian when the defect is at most rel_tol * max(1, frobenius(M)).
bool is_hermitian(const DenseMatrix& m, double rel_tol = 1e-12);

/// (M + M^dag) / 2.
DenseMatrix hermitian_part(const DenseMatrix& m);

/// Rank-one operator |v><v|.
DenseMatrix outer(std::span<const Complex> v);

/// Tensor product of two vectors, first factor major.
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);

double norm2(std::span<const Complex> v);

struct HermitianEigensystem {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column k pairs with values[k]
};

/// Throws kNonHermitian if the hermiticity invariant fails and
/// kDimensionTooLarge above 64x64.
HermitianEigensystem hermitian_eigensystem(const DenseMatrix& m);
std::vector<double> hermitian_eigenvalues(const DenseMatrix& m);

struct PsdCheck {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

/// PSD when the smallest eigenvalue is >= -tol * max(1, frobenius(M)).
PsdCheck is_psd(const DenseMatrix& m, double tol);

/// Transpose on the second tensor factor: N[(i,j),(k,l)] = M[(i,l),(k,j)].
DenseMatrix partial_transpose_dense(const DenseMatrix& m, int d);

/// Singular values (descending) of the d x d reshape R[i][j] = v[(i,j)].
std::vector<double> schmidt_coefficients(std::span<const Complex> v, int d);

/// Number of Schmidt coefficients above tol * (largest coefficient).
int schmidt_rank(std::span<const Complex> v, int d, double tol);

}  // namespace torus_ppt
