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

#include "torus_ppt/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "torus_ppt/error.hpp"

namespace torus_ppt {

namespace {

void require_d(int d, int min_d = 2) {
  if (d < min_d) {
    throw Error(ErrorCode::kBadParameter, "family needs d >= " + std::to_string(min_d));
  }
}

DenseMatrix square(int d) {
  return DenseMatrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
}

std::string canonical_name(std::string name) {
  std::replace(name.begin(), name.end(), '_', '-');
  return name;
}

// Adds |z><z| for z = x|p,q> + y|q,p> (0-based, p != q) in Werner-like form.
void add_swap_pair(DenseMatrix& b, RealMatrix& c, int p, int q, double x, double y) {
  c(p, q) += x * x;
  c(q, p) += y * y;
  b(p, q) += x * y;
  b(q, p) += x * y;
}

}  // namespace

double FamilyDescriptor::scalar(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw Error(ErrorCode::kBadParameter, "missing parameter '" + key + "'");
  if (const auto* x = std::get_if<double>(&it->second)) return *x;
  const auto& v = std::get<std::vector<double>>(it->second);
  if (v.size() == 1) return v.front();
  throw Error(ErrorCode::kBadParameter, "parameter '" + key + "' must be a scalar");
}

const std::vector<double>& FamilyDescriptor::vector(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw Error(ErrorCode::kBadParameter, "missing parameter '" + key + "'");
  if (const auto* v = std::get_if<std::vector<double>>(&it->second)) return *v;
  throw Error(ErrorCode::kBadParameter, "parameter '" + key + "' must be a list");
}

WernerLikeState werner(int d, double p) {
  require_d(d);
  const double dd = d;
  const double x_plus = (1.0 - p) / (dd * dd + dd) + p / (dd * dd - dd);
  const double x_minus = (1.0 - p) / (dd * dd + dd) - p / (dd * dd - dd);
  DenseMatrix b = square(d);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      b(i, j) = i == j ? x_minus + x_plus : x_minus;
      if (i != j) c(i, j) = x_plus;
    }
  }
  return {d, std::move(b), std::move(c)};
}

IsotropicLikeState isotropic(int d, double lambda) {
  require_d(d);
  const double dd = d;
  DenseMatrix a = square(d);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      a(i, j) = lambda / dd + (i == j ? (1.0 - lambda) / (dd * dd) : 0.0);
      if (i != j) c(i, j) = (1.0 - lambda) / (dd * dd);
    }
  }
  return {d, std::move(a), std::move(c)};
}

WernerLikeState shor_family(int d, double b, double c) {
  require_d(d);
  const double a = 1.0 / d - (d - 1) * (b + c) / 2.0;
  DenseMatrix bm = square(d);
  RealMatrix cm(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      bm(i, j) = i == j ? a : (c - b) / 2.0;
      if (i != j) cm(i, j) = (c + b) / 2.0;
    }
  }
  return {d, std::move(bm), std::move(cm)};
}

IsotropicLikeState horodecki_sigma(double alpha) {
  constexpr int d = 3;
  DenseMatrix a = square(d);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = 2.0 / 21.0;
    c(i, oplus(i + 1, 1, d) - 1) = alpha / 21.0;
    c(oplus(i + 1, 1, d) - 1, i) = (5.0 - alpha) / 21.0;
  }
  return {d, std::move(a), std::move(c)};
}

IsotropicLikeState diagonal_family(int d, const std::vector<double>& weights) {
  require_d(d);
  if (weights.size() != static_cast<std::size_t>(d)) {
    throw Error(ErrorCode::kBadWeights, "diagonal family needs d weights");
  }
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w >= 0.0); })) {
    throw Error(ErrorCode::kBadWeights, "weights must be non-negative");
  }
  if (std::abs(std::accumulate(weights.begin(), weights.end(), 0.0) - 1.0) > 1e-12) {
    throw Error(ErrorCode::kBadWeights, "weights must sum to 1");
  }
  DenseMatrix a = square(d);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = weights[0] / d;
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = 2; j <= d; ++j) c(i - 1, oplus(i, j - 1, d) - 1) += weights[j - 1] / d;
  }
  return {d, std::move(a), std::move(c)};
}

bool diagonal_family_sufficient_condition(const std::vector<double>& weights) {
  const int d = static_cast<int>(weights.size());
  const double a1_sq = weights.empty() ? 0.0 : weights[0] * weights[0];
  for (int i = 1; i <= d - 1; ++i) {
    if (weights[i] * weights[d - i] < a1_sq) return false;
  }
  return true;
}

IsotropicLikeState stormer(int d, const std::vector<double>& c_upper, double alpha) {
  require_d(d);
  if (!(alpha > 0.0)) throw Error(ErrorCode::kBadParameter, "Stormer alpha must be positive");
  if (c_upper.size() != static_cast<std::size_t>(d * (d - 1) / 2)) {
    throw Error(ErrorCode::kBadParameter, "Stormer needs d(d-1)/2 upper-triangle entries");
  }
  DenseMatrix a = square(d);
  RealMatrix c(d);
  std::size_t k = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = alpha;
    for (int j = i + 1; j < d; ++j) {
      const double cij = c_upper[k++];
      if (!(cij > 0.0)) throw Error(ErrorCode::kBadParameter, "Stormer c entries must be positive");
      c(i, j) = cij;
      c(j, i) = alpha * alpha / cij;
    }
  }
  return {d, std::move(a), std::move(c)};
}

HaLambdas ha_lambdas(int d, double gamma) {
  if (!(gamma > 0.0)) throw Error(ErrorCode::kBadParameter, "gamma must be positive");
  return {(gamma * gamma + d - 1) / d, (1.0 / (gamma * gamma) + d - 1) / d};
}

IsotropicLikeState ha_gamma(int d, double gamma) {
  // For d = 2 the pairs (i, i(+)1) and (i(+)1, i) coincide and the pattern is
  // contradictory.
  require_d(d, 3);
  const auto [lambda, lambda_prime] = ha_lambdas(d, gamma);
  DenseMatrix a = square(d);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      a(i, j) = 1.0;
      if (i != j) c(i, j) = 1.0;
    }
  }
  for (int i = 1; i <= d; ++i) {
    c(oplus(i, 1, d) - 1, i - 1) = lambda;
    c(i - 1, oplus(i, 1, d) - 1) = lambda_prime;
  }
  return {d, std::move(a), std::move(c)};
}

WernerLikeState ha_bs(int d, double s) {
  require_d(d);
  if (!(s > 0.0)) throw Error(ErrorCode::kBadParameter, "s must be positive");
  DenseMatrix b = square(d);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    b(i, i) += 1.0;
    add_swap_pair(b, c, i, oplus(i + 1, 1, d) - 1, s, 1.0 / s);
  }
  return {d, std::move(b), std::move(c)};
}

IsotropicLikeState lambda_vector(const std::vector<Complex>& l) {
  const int d = static_cast<int>(l.size());
  require_d(d);
  if (std::abs(norm2(l) - 1.0) > 1e-12) {
    throw Error(ErrorCode::kNotNormalized, "lambda vector must have unit norm");
  }
  DenseMatrix a = square(d);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      a(i, j) = l[i] * std::conj(l[j]);
      if (i != j) c(i, j) = std::abs(l[i] * std::conj(l[j]));
    }
  }
  return {d, std::move(a), std::move(c)};
}

DenseMatrix horodecki_rho_a_prime(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorCode::kBadParameter, "a must lie in [0, 1]");
  constexpr int d = 3;
  const double alpha = 1.0 / (8.0 * a + 1.0);
  DenseMatrix rho(9, 9);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      rho(ket(i, i, d), ket(j, j, d)) = alpha * a;
      if (i != j) rho(ket(i, j, d), ket(i, j, d)) = alpha * a;
    }
  }
  return rho;
}

DenseMatrix horodecki_rho_a(double a, bool renormalize) {
  DenseMatrix rho = horodecki_rho_a_prime(a);
  constexpr int d = 3;
  const double alpha = 1.0 / (8.0 * a + 1.0);
  const double off = alpha / 2.0 * std::sqrt(1.0 - a * a);
  rho(ket(2, 0, d), ket(2, 2, d)) += off;
  rho(ket(2, 2, d), ket(2, 0, d)) += off;
  if (renormalize) {
    const double t = trace(rho).real();
    if (!(t > 0.0)) throw Error(ErrorCode::kNonPositiveTrace, "rho_a has zero trace at a = 0");
    rho *= 1.0 / t;
  }
  return rho;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "werner", "isotropic", "shor-family", "horodecki-sigma", "diagonal-family",
      "stormer", "ha-gamma", "ha-bs", "lambda-vector"};
  return names;
}

ClassState make_family(const FamilyDescriptor& desc) {
  const std::string name = canonical_name(desc.name);
  ClassState state = [&]() -> ClassState {
    if (name == "werner") return werner(desc.d, desc.scalar("p"));
    if (name == "isotropic") return isotropic(desc.d, desc.scalar("lambda"));
    if (name == "shor-family") return shor_family(desc.d, desc.scalar("b"), desc.scalar("c"));
    if (name == "horodecki-sigma") {
      if (desc.d != 0 && desc.d != 3) {
        throw Error(ErrorCode::kBadParameter, "horodecki-sigma is defined for d = 3 only");
      }
      return horodecki_sigma(desc.scalar("alpha"));
    }
    if (name == "diagonal-family") return diagonal_family(desc.d, desc.vector("weights"));
    if (name == "stormer") {
      const double alpha = desc.has("alpha") ? desc.scalar("alpha") : 1.0;
      if (desc.has("c-upper")) return stormer(desc.d, desc.vector("c-upper"), alpha);
      require_d(desc.d);
      const std::vector<double> c_upper(static_cast<std::size_t>(desc.d * (desc.d - 1) / 2),
                                        2.0 * desc.scalar("mu"));
      return stormer(desc.d, c_upper, alpha);
    }
    if (name == "ha-gamma") return ha_gamma(desc.d, desc.scalar("gamma"));
    if (name == "ha-bs") return ha_bs(desc.d, desc.scalar("s"));
    if (name == "lambda-vector") {
      const auto& re = desc.vector("lambda-re");
      const std::vector<double> im = desc.has("lambda-im") ? desc.vector("lambda-im")
                                                           : std::vector<double>(re.size(), 0.0);
      if (im.size() != re.size()) {
        throw Error(ErrorCode::kBadParameter, "lambda-re and lambda-im lengths differ");
      }
      if (desc.d != 0 && static_cast<std::size_t>(desc.d) != re.size()) {
        throw Error(ErrorCode::kBadParameter, "lambda vector length must equal d");
      }
      std::vector<Complex> l(re.size());
      for (std::size_t k = 0; k < re.size(); ++k) l[k] = {re[k], im[k]};
      return lambda_vector(l);
    }
    throw Error(ErrorCode::kBadParameter, "unknown family '" + desc.name + "'");
  }();
  return desc.normalized ? normalize(state) : state;
}

FamilyThresholds analytic_thresholds(const std::string& family, int d, const std::string& param) {
  const std::string name = canonical_name(family);
  FamilyThresholds t;
  const double dd = d;
  if (name == "werner" && param == "p") {
    t.ppt_upper = 0.5;
    t.positive_lower = 0.0;
    t.positive_upper = 1.0;
  } else if (name == "isotropic" && param == "lambda") {
    t.ppt_upper = 1.0 / (dd + 1.0);
    t.positive_lower = -1.0 / (dd * dd - 1.0);
    t.positive_upper = 1.0;
  } else if (name == "horodecki-sigma" && param == "alpha") {
    // PPT region is [1, 4]; on the family's domain [2, 5] only the upper edge shows.
    t.ppt_upper = 4.0;
    t.positive_lower = 0.0;
    t.positive_upper = 5.0;
  }
  return t;
}

}  // namespace torus_ppt
