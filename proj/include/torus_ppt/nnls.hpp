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

// Non-negative least squares: min_{x >= 0} |A x - b|_2.
//
// Lawson-Hanson active-set iteration. Sized for the separability searches:
// a few dozen rows, up to a couple of thousand columns.

#include <cstddef>
#include <span>
#include <vector>

namespace torus_ppt {

/// Dense real matrix stored column-major, so each column is contiguous.
class ColumnMatrix {
 public:
  ColumnMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }
  std::span<double> column(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
  std::span<const double> column(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

struct NnlsOptions {
  int max_iterations = 0;  // 0 selects 3 * cols
  double tolerance = 1e-12;
};

struct NnlsResult {
  std::vector<double> x;
  double residual_norm = 0.0;
  /// max over j of |w_j| where x_j > 0 and max(w_j, 0) where x_j = 0, for
  /// the gradient w = A^T (b - A x).
  double kkt_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

NnlsResult nnls(const ColumnMatrix& a, std::span<const double> b, const NnlsOptions& options = {});

}  // namespace torus_ppt
