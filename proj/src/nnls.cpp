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

#include "torus_ppt/nnls.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "torus_ppt/error.hpp"

namespace torus_ppt {

namespace {

using Eigen::Map;
using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd gradient(const Map<const MatrixXd>& a, const Map<const VectorXd>& b, const VectorXd& x) {
  return a.transpose() * (b - a * x);
}

// Least squares restricted to the passive columns.
VectorXd solve_passive(const Map<const MatrixXd>& a, const Map<const VectorXd>& b,
                       const std::vector<Eigen::Index>& passive) {
  MatrixXd sub(a.rows(), static_cast<Eigen::Index>(passive.size()));
  for (std::size_t k = 0; k < passive.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = a.col(passive[k]);
  return sub.colPivHouseholderQr().solve(b);
}

}  // namespace

NnlsResult nnls(const ColumnMatrix& a_in, std::span<const double> b_in, const NnlsOptions& options) {
  if (b_in.size() != a_in.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "NNLS right-hand side length != rows");
  }
  const auto m = static_cast<Eigen::Index>(a_in.rows());
  const auto n = static_cast<Eigen::Index>(a_in.cols());
  const Map<const MatrixXd> a(a_in.data().data(), m, n);
  const Map<const VectorXd> b(b_in.data(), m);

  const int max_iter = options.max_iterations > 0 ? options.max_iterations : static_cast<int>(3 * n + 10);
  double col_scale = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) col_scale = std::max(col_scale, a.col(j).norm());
  const double w_tol = options.tolerance * std::max(1.0, col_scale * b.norm());

  VectorXd x = VectorXd::Zero(n);
  std::vector<bool> is_passive(static_cast<std::size_t>(n), false);
  std::vector<bool> blocked(static_cast<std::size_t>(n), false);
  NnlsResult result;

  VectorXd w = gradient(a, b, x);
  int iter = 0;
  while (iter < max_iter) {
    Eigen::Index t = -1;
    double best = w_tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!is_passive[j] && !blocked[j] && w(j) > best) {
        best = w(j);
        t = j;
      }
    }
    if (t < 0) {
      result.converged = true;
      break;
    }
    is_passive[t] = true;

    while (iter++ < max_iter) {
      std::vector<Eigen::Index> passive;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (is_passive[j]) passive.push_back(j);
      }
      const VectorXd z_p = solve_passive(a, b, passive);
      VectorXd z = VectorXd::Zero(n);
      for (std::size_t k = 0; k < passive.size(); ++k) z(passive[k]) = z_p(static_cast<Eigen::Index>(k));

      bool feasible = true;
      for (Eigen::Index j : passive) feasible = feasible && z(j) > 0.0;
      if (feasible) {
        x = z;
        break;
      }
      // Step from x toward z until the first passive coordinate hits zero.
      double step = std::numeric_limits<double>::infinity();
      for (Eigen::Index j : passive) {
        if (z(j) <= 0.0) step = std::min(step, x(j) / (x(j) - z(j)));
      }
      x += step * (z - x);
      for (Eigen::Index j : passive) {
        if (x(j) <= 1e-15 * std::max(1.0, x.cwiseAbs().maxCoeff())) {
          x(j) = 0.0;
          is_passive[j] = false;
        }
      }
    }
    // A column that re-enters and immediately drops out would cycle; bar it
    // until some other column changes the active set.
    if (!is_passive[t]) {
      blocked[t] = true;
    } else {
      std::fill(blocked.begin(), blocked.end(), false);
    }
    w = gradient(a, b, x);
  }

  w = gradient(a, b, x);
  double kkt = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    kkt = std::max(kkt, x(j) > 0.0 ? std::abs(w(j)) : std::max(w(j), 0.0));
  }
  result.x.assign(x.data(), x.data() + n);
  result.residual_norm = (a * x - b).norm();
  result.kkt_residual = kkt;
  result.iterations = iter;
  return result;
}

}  // namespace torus_ppt
