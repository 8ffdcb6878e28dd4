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

#include "torus_ppt/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "torus_ppt/error.hpp"

namespace torus_ppt {

namespace {

std::string label(const char* name, int i, int j) {
  return std::string(name) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

void validate_parameters(int d, DenseMatrix& m, const RealMatrix& c, const char* name) {
  if (d < 2) throw Error(ErrorCode::kBadParameter, "local dimension d must be >= 2");
  const auto dd = static_cast<std::size_t>(d);
  if (m.rows() != dd || m.cols() != dd || c.size() != d) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(name) + " and c must be d x d");
  }
  if (!all_finite(m) || !std::all_of(c.data().begin(), c.data().end(),
                                     [](double x) { return std::isfinite(x); })) {
    throw Error(ErrorCode::kNonFinite, "state parameter is NaN or Inf");
  }
  if (!is_hermitian(m, 1e-12)) {
    throw Error(ErrorCode::kNonHermitian, std::string(name) + " is not Hermitian");
  }
  for (int i = 0; i < d; ++i) {
    if (c(i, i) != 0.0) throw Error(ErrorCode::kBadParameter, "c must have a zero diagonal");
  }
  // Store an exactly Hermitian matrix; a no-op on exactly Hermitian input.
  for (std::size_t i = 0; i < dd; ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < dd; ++j) {
      m(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(j, i) = std::conj(m(i, j));
    }
  }
}

double scale_of(const DenseMatrix& m, const RealMatrix& c) {
  return std::max({1.0, frobenius(m), frobenius(c)});
}

CriterionReport finish(CriterionReport report) {
  report.verdict = std::all_of(report.slacks.begin(), report.slacks.end(),
                               [&](const Slack& s) { return s.value >= -report.tol; });
  return report;
}

// "matrix >= 0 and c >= 0": isotropic positivity, Werner PPT.
CriterionReport psd_matrix_criterion(const DenseMatrix& m, const RealMatrix& c, const char* name,
                                     double tol) {
  CriterionReport report;
  report.tol = tol;
  report.scale = scale_of(m, c);
  const double s = report.scale;
  const int d = c.size();
  report.slacks.push_back({std::string("min_eig(") + name + ")", hermitian_eigenvalues(m).front() / s});
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) report.slacks.push_back({label("c", i, j), c(i, j) / s});
    }
  }
  return finish(std::move(report));
}

// Diagonal entries >= 0 plus every 2x2 block [[c_ij, m_ij], [conj, c_ji]]
// PSD: isotropic PPT, Werner positivity.
CriterionReport pair_block_criterion(const DenseMatrix& m, const RealMatrix& c, const char* name,
                                     double tol) {
  CriterionReport report;
  report.tol = tol;
  report.scale = scale_of(m, c);
  const double s = report.scale;
  const int d = c.size();
  for (int i = 0; i < d; ++i) report.slacks.push_back({label(name, i, i), m(i, i).real() / s});
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) report.slacks.push_back({label("c", i, j), c(i, j) / s});
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double det = c(i, j) * c(j, i) - std::norm(m(i, j));
      report.slacks.push_back({label("pair", i, j), det / (s * s)});
    }
  }
  return finish(std::move(report));
}

void check_trace_positive(double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::kNonPositiveTrace, "state trace must be positive");
}

RealMatrix scaled(const RealMatrix& c, double factor) {
  RealMatrix out(c.size());
  for (int i = 0; i < c.size(); ++i) {
    for (int j = 0; j < c.size(); ++j) out(i, j) = c(i, j) * factor;
  }
  return out;
}

void require_square_d2(const DenseMatrix& sigma, int d) {
  const auto dd = static_cast<std::size_t>(d);
  if (d < 2 || sigma.rows() != dd * dd || sigma.cols() != dd * dd) {
    throw Error(ErrorCode::kDimensionMismatch, "projection needs a d^2 x d^2 matrix");
  }
  if (!is_hermitian(sigma, 1e-12)) {
    throw Error(ErrorCode::kNonHermitian, "projection input is not Hermitian");
  }
}

}  // namespace

double frobenius(const RealMatrix& m) {
  double sum = 0.0;
  for (double x : m.data()) sum += x * x;
  return std::sqrt(sum);
}

IsotropicLikeState::IsotropicLikeState(int d, DenseMatrix a, RealMatrix c)
    : d_(d), a_(std::move(a)), c_(std::move(c)) {
  validate_parameters(d_, a_, c_, "a");
}

WernerLikeState::WernerLikeState(int d, DenseMatrix b, RealMatrix c)
    : d_(d), b_(std::move(b)), c_(std::move(c)) {
  validate_parameters(d_, b_, c_, "b");
}

double CriterionReport::min_slack() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : slacks) m = std::min(m, s.value);
  return m;
}

const Slack* CriterionReport::find(const std::string& name) const {
  for (const auto& s : slacks) {
    if (s.label == name) return &s;
  }
  return nullptr;
}

DenseMatrix to_density(const IsotropicLikeState& s) {
  const int d = s.d();
  DenseMatrix rho(static_cast<std::size_t>(d * d), static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      rho(ket(i, i, d), ket(j, j, d)) = s.a()(i, j);
      if (i != j) rho(ket(i, j, d), ket(i, j, d)) = s.c()(i, j);
    }
  }
  return rho;
}

DenseMatrix to_density(const WernerLikeState& s) {
  const int d = s.d();
  DenseMatrix rho(static_cast<std::size_t>(d * d), static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      rho(ket(i, j, d), ket(j, i, d)) = s.b()(i, j);
      if (i != j) rho(ket(i, j, d), ket(i, j, d)) += s.c()(i, j);
    }
  }
  return rho;
}

DenseMatrix to_density(const ClassState& s) {
  return std::visit([](const auto& x) { return to_density(x); }, s);
}

IsotropicLikeState project_isotropic(const DenseMatrix& sigma, int d) {
  require_square_d2(sigma, d);
  const auto dd = static_cast<std::size_t>(d);
  DenseMatrix a(dd, dd);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      a(i, j) = 0.5 * (sigma(ket(i, i, d), ket(j, j, d)) + std::conj(sigma(ket(j, j, d), ket(i, i, d))));
      if (i != j) c(i, j) = sigma(ket(i, j, d), ket(i, j, d)).real();
    }
  }
  return {d, std::move(a), std::move(c)};
}

WernerLikeState project_werner(const DenseMatrix& sigma, int d) {
  require_square_d2(sigma, d);
  const auto dd = static_cast<std::size_t>(d);
  DenseMatrix b(dd, dd);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      b(i, j) = 0.5 * (sigma(ket(i, j, d), ket(j, i, d)) + std::conj(sigma(ket(j, i, d), ket(i, j, d))));
      if (i != j) c(i, j) = sigma(ket(i, j, d), ket(i, j, d)).real();
    }
  }
  return {d, std::move(b), std::move(c)};
}

CriterionReport check_positive(const IsotropicLikeState& s, double tol) {
  return psd_matrix_criterion(s.a(), s.c(), "a", tol);
}

CriterionReport check_positive(const WernerLikeState& s, double tol) {
  return pair_block_criterion(s.b(), s.c(), "b", tol);
}

CriterionReport check_positive(const ClassState& s, double tol) {
  return std::visit([tol](const auto& x) { return check_positive(x, tol); }, s);
}

CriterionReport check_ppt(const IsotropicLikeState& s, double tol) {
  return pair_block_criterion(s.a(), s.c(), "a", tol);
}

CriterionReport check_ppt(const WernerLikeState& s, double tol) {
  return psd_matrix_criterion(s.b(), s.c(), "b", tol);
}

CriterionReport check_ppt(const ClassState& s, double tol) {
  return std::visit([tol](const auto& x) { return check_ppt(x, tol); }, s);
}

WernerLikeState partial_transpose_symbolic(const IsotropicLikeState& s) {
  return {s.d(), s.a(), s.c()};
}

IsotropicLikeState partial_transpose_symbolic(const WernerLikeState& s) {
  return {s.d(), s.b(), s.c()};
}

ClassState partial_transpose_symbolic(const ClassState& s) {
  return std::visit([](const auto& x) -> ClassState { return partial_transpose_symbolic(x); }, s);
}

double state_trace(const IsotropicLikeState& s) {
  double t = trace(s.a()).real();
  for (double x : s.c().data()) t += x;
  return t;
}

double state_trace(const WernerLikeState& s) {
  double t = trace(s.b()).real();
  for (double x : s.c().data()) t += x;
  return t;
}

double state_trace(const ClassState& s) {
  return std::visit([](const auto& x) { return state_trace(x); }, s);
}

IsotropicLikeState normalize(const IsotropicLikeState& s) {
  const double t = state_trace(s);
  check_trace_positive(t);
  return {s.d(), Complex(1.0 / t) * s.a(), scaled(s.c(), 1.0 / t)};
}

WernerLikeState normalize(const WernerLikeState& s) {
  const double t = state_trace(s);
  check_trace_positive(t);
  return {s.d(), Complex(1.0 / t) * s.b(), scaled(s.c(), 1.0 / t)};
}

ClassState normalize(const ClassState& s) {
  return std::visit([](const auto& x) -> ClassState { return normalize(x); }, s);
}

double parameter_scale(const IsotropicLikeState& s) { return scale_of(s.a(), s.c()); }
double parameter_scale(const WernerLikeState& s) { return scale_of(s.b(), s.c()); }

std::vector<PairBlock> x_blocks(const IsotropicLikeState& s) {
  std::vector<PairBlock> blocks;
  const int d = s.d();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      DenseMatrix x(2, 2);
      x(0, 0) = s.c()(i, j);
      x(0, 1) = s.a()(i, j);
      x(1, 0) = std::conj(s.a()(i, j));
      x(1, 1) = s.c()(j, i);
      blocks.push_back({i + 1, j + 1, std::move(x)});
    }
  }
  return blocks;
}

bool check_torus_invariance(const DenseMatrix& sigma, int d, Invariance mode, int trials,
                            std::uint64_t seed) {
  const auto dd = static_cast<std::size_t>(d);
  if (d < 1 || sigma.rows() != dd * dd || sigma.cols() != dd * dd) {
    throw Error(ErrorCode::kDimensionMismatch, "invariance test needs a d^2 x d^2 matrix");
  }
  const double bound = 1e-10 * frobenius(sigma);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const double sign = mode == Invariance::kUU ? 1.0 : -1.0;

  std::vector<double> x(dd);
  std::vector<Complex> phase(dd * dd);
  for (int t = 0; t < trials; ++t) {
    for (auto& xi : x) xi = angle(rng);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) phase[ket(i, j, d)] = std::polar(1.0, -(x[i] + sign * x[j]));
    }
    // U is diagonal, so [U, sigma]_{rs} = (U_r - U_s) sigma_rs.
    double sum = 0.0;
    for (std::size_t r = 0; r < dd * dd; ++r) {
      for (std::size_t c = 0; c < dd * dd; ++c) {
        sum += std::norm((phase[r] - phase[c]) * sigma(r, c));
      }
    }
    if (std::sqrt(sum) > bound) return false;
  }
  return true;
}

}  // namespace torus_ppt
