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

// The two torus-invariant classes of bipartite d x d states.
//
// Isotropic-like (U_x (x) conj(U_x) invariant):
//   rho = sum_{ij} a_ij |ii><jj| + sum_{i!=j} c_ij |ij><ij|
// Werner-like (U_x (x) U_x invariant):
//   rho = sum_{ij} b_ij |ij><ji| + sum_{i!=j} c_ij |ij><ij|
//
// Partial transposition maps one class onto the other with the parameter
// matrices unchanged, which is why positivity of one class and PPT of the
// other are decided by the same inequalities.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "torus_ppt/linalg.hpp"

namespace torus_ppt {

inline constexpr double kDefaultTol = 1e-9;

/// Real d x d matrix, row-major. Used for the c_ij populations.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  int size() const noexcept { return n_; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

double frobenius(const RealMatrix& m);

class IsotropicLikeState {
 public:
  /// Validates d >= 2, a Hermitian within 1e-12 (then stored exactly
  /// Hermitian), c with zero diagonal, all entries finite.
  IsotropicLikeState(int d, DenseMatrix a, RealMatrix c);

  int d() const noexcept { return d_; }
  const DenseMatrix& a() const noexcept { return a_; }
  const RealMatrix& c() const noexcept { return c_; }

  friend bool operator==(const IsotropicLikeState&, const IsotropicLikeState&) = default;

 private:
  int d_;
  DenseMatrix a_;
  RealMatrix c_;
};

class WernerLikeState {
 public:
  WernerLikeState(int d, DenseMatrix b, RealMatrix c);

  int d() const noexcept { return d_; }
  const DenseMatrix& b() const noexcept { return b_; }
  const RealMatrix& c() const noexcept { return c_; }

  friend bool operator==(const WernerLikeState&, const WernerLikeState&) = default;

 private:
  int d_;
  DenseMatrix b_;
  RealMatrix c_;
};

using ClassState = std::variant<IsotropicLikeState, WernerLikeState>;

struct Slack {
  std::string label;
  double value = 0.0;
};

/// Margins of every inequality in a criterion. Slacks are expressed in units
/// of the parameter scale max(1, |a or b|_F, |c|_F): linear conditions are
/// divided by the scale and the quadratic pair conditions by its square, so
/// un-normalized family members are judged on the same footing.
struct CriterionReport {
  bool verdict = false;
  double tol = kDefaultTol;
  double scale = 1.0;
  std::vector<Slack> slacks;

  double min_slack() const;
  const Slack* find(const std::string& label) const;
};

DenseMatrix to_density(const IsotropicLikeState& s);
DenseMatrix to_density(const WernerLikeState& s);
DenseMatrix to_density(const ClassState& s);

/// Reads a_ij = <ii|sigma|jj>, c_ij = <ij|sigma|ij>.
IsotropicLikeState project_isotropic(const DenseMatrix& sigma, int d);
/// Reads b_ij = <ij|sigma|ji>, c_ij = <ij|sigma|ij>.
WernerLikeState project_werner(const DenseMatrix& sigma, int d);

CriterionReport check_positive(const IsotropicLikeState& s, double tol = kDefaultTol);
CriterionReport check_positive(const WernerLikeState& s, double tol = kDefaultTol);
CriterionReport check_positive(const ClassState& s, double tol = kDefaultTol);

CriterionReport check_ppt(const IsotropicLikeState& s, double tol = kDefaultTol);
CriterionReport check_ppt(const WernerLikeState& s, double tol = kDefaultTol);
CriterionReport check_ppt(const ClassState& s, double tol = kDefaultTol);

WernerLikeState partial_transpose_symbolic(const IsotropicLikeState& s);
IsotropicLikeState partial_transpose_symbolic(const WernerLikeState& s);
ClassState partial_transpose_symbolic(const ClassState& s);

double state_trace(const IsotropicLikeState& s);
double state_trace(const WernerLikeState& s);
double state_trace(const ClassState& s);

/// Divides every parameter by the trace; throws kNonPositiveTrace.
IsotropicLikeState normalize(const IsotropicLikeState& s);
WernerLikeState normalize(const WernerLikeState& s);
ClassState normalize(const ClassState& s);

double parameter_scale(const IsotropicLikeState& s);
double parameter_scale(const WernerLikeState& s);

/// The operator X_ij of (1 (x) T) rho restricted to span{|ij>, |ji>}, i < j
/// (1-based labels): [[c_ij, a_ij], [conj(a_ij), c_ji]].
struct PairBlock {
  int i = 0;
  int j = 0;
  DenseMatrix block;
};

std::vector<PairBlock> x_blocks(const IsotropicLikeState& s);

enum class Invariance { kUU, kUUStar };

/// Samples `trials` diagonal unitaries U_x = exp(-i diag(x)) and checks
/// |[U_x (x) U_x^(*), sigma]|_F <= 1e-10 |sigma|_F for each.
bool check_torus_invariance(const DenseMatrix& sigma, int d, Invariance mode, int trials,
                            std::uint64_t seed);

}  // namespace torus_ppt
