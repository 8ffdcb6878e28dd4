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

// Named families of torus-invariant states.
//
// Index conventions follow the 1-based product basis. `oplus(i, k, d)` is
// cyclic addition on 1..d (d (+) 1 = 1).

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torus_ppt/states.hpp"

namespace torus_ppt {

constexpr int oplus(int i, int k, int d) { return ((i - 1 + k) % d + d) % d + 1; }

using FamilyParam = std::variant<double, std::vector<double>>;

struct FamilyDescriptor {
  std::string name;
  int d = 0;
  std::map<std::string, FamilyParam> params;
  bool normalized = false;

  double scalar(const std::string& key) const;
  const std::vector<double>& vector(const std::string& key) const;
  bool has(const std::string& key) const { return params.count(key) != 0; }
};

/// (1-p) Q+ + p Q-; b_ij = x-, b_ii = x- + x+, c_ij = x+ with
/// x+- = (1-p)/(d^2+d) +- p/(d^2-d).
WernerLikeState werner(int d, double p);

/// (1-lambda)/d^2 I + lambda/d sum_ij |ii><jj|.
IsotropicLikeState isotropic(int d, double lambda);

/// a sum_i |ii><ii| + b sum_{i<j} |psi-_ij><psi-_ij| + c sum_{i<j} |psi+_ij><psi+_ij|
/// with a fixed by unit trace: a = 1/d - (d-1)(b+c)/2.
WernerLikeState shor_family(int d, double b, double c);

/// d = 3 Horodecki family: (2/7) P+ + (alpha/7) sigma+ + ((5-alpha)/7) sigma-.
IsotropicLikeState horodecki_sigma(double alpha);

/// (a_1/d) sum_ij |ii><jj| + sum_i sum_{j>=2} (a_j/d) |i, i(+)(j-1)><i, i(+)(j-1)|.
/// Weights must be non-negative and sum to 1 (kBadWeights).
IsotropicLikeState diagonal_family(int d, const std::vector<double>& weights);

/// Printed sufficient PPT condition a_{i+1} a_{d-i+1} >= a_1^2, read for
/// i = 1..d-1. Advisory only; the family's verdict comes from check_ppt.
bool diagonal_family_sufficient_condition(const std::vector<double>& weights);

/// a_ij = alpha, c_ij = c_upper (i<j, row-major), c_ji = alpha^2 / c_ij.
/// Un-normalized; every PPT pair condition holds with equality.
IsotropicLikeState stormer(int d, const std::vector<double>& c_upper, double alpha);

/// a_ij = 1, c_{i(+)1,i} = lambda, c_{i,i(+)1} = lambda', remaining c = 1, with
/// lambda = (gamma^2+d-1)/d, lambda' = (gamma^-2+d-1)/d. Requires d >= 3.
IsotropicLikeState ha_gamma(int d, double gamma);

struct HaLambdas {
  double lambda;
  double lambda_prime;
};
HaLambdas ha_lambdas(int d, double gamma);

/// B_s = sum_i |u_i><u_i| + |z_i><z_i| with u_i = |ii>,
/// z_i = s^-1 |i(+)1, i> + s |i, i(+)1>, accumulated into Werner-like form.
WernerLikeState ha_bs(int d, double s);

/// a_ij = l_i conj(l_j), c_ij = |l_i conj(l_j)| for a unit vector l.
IsotropicLikeState lambda_vector(const std::vector<Complex>& l);

/// 3x3 Horodecki state written as rho'_a + rho''_a with alpha = 1/(8a+1):
///   rho'_a  = alpha a (sum_ij |ii><jj| + sum_{i!=j} |ij><ij|)
///   rho''_a = (alpha/2) sqrt(1-a^2) (|31><33| + |33><31|)
/// Returned exactly as written (trace 9a/(8a+1)) unless `renormalize`.
DenseMatrix horodecki_rho_a(double a, bool renormalize = false);

/// The isotropic-like part rho'_a alone, as a dense matrix.
DenseMatrix horodecki_rho_a_prime(double a);

/// Names accepted by make_family, in CLI spelling.
const std::vector<std::string>& family_names();

/// Builds any family from a descriptor; throws kBadParameter on an unknown
/// name or missing/invalid parameter. Applies normalize() when requested.
ClassState make_family(const FamilyDescriptor& desc);

/// Analytic thresholds the scan driver reports next to the observed flips.
struct FamilyThresholds {
  std::optional<double> ppt_upper;       // PPT iff param <= ppt_upper
  std::optional<double> positive_lower;  // positive iff lower <= param <= upper
  std::optional<double> positive_upper;
};
FamilyThresholds analytic_thresholds(const std::string& family, int d, const std::string& param);

}  // namespace torus_ppt
