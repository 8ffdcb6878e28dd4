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

// Separability and Schmidt-number cone certificates for the torus classes.
//
// V_k is the cone of positive operators with Schmidt number <= k; A lies in
// V^k when A is PPT and (1 (x) T)A lies in V_k. A certificate is an explicit
// list of weighted pure terms whose sum reproduces the target operator and
// whose Schmidt ranks respect the claimed cone, so it can be checked
// without trusting the code that produced it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torus_ppt/execution.hpp"
#include "torus_ppt/nnls.hpp"
#include "torus_ppt/random.hpp"
#include "torus_ppt/states.hpp"

namespace torus_ppt {

struct ProductVectorPair {
  std::vector<Complex> alpha;
  std::vector<Complex> beta;

  std::vector<Complex> product() const { return kron(alpha, beta); }
};

struct SchmidtTwoQuadruple {
  std::vector<Complex> alpha;
  std::vector<Complex> beta;
  std::vector<Complex> psi;
  std::vector<Complex> phi;

  /// alpha (x) beta + psi (x) phi.
  std::vector<Complex> combined() const;
};

enum class ConeClaim { kSeparable, kV2, kVUpper2 };

const char* to_string(ConeClaim claim);
ConeClaim cone_claim_from_string(const std::string& s);
int max_schmidt_rank(ConeClaim claim);

struct CertificateTerm {
  double weight = 0.0;
  std::vector<Complex> vector;
  int schmidt_rank = 0;
};

struct DecompositionCertificate {
  ConeClaim claim = ConeClaim::kSeparable;
  int d = 0;
  /// Frobenius distance between sum_k w_k |v_k><v_k| and the target.
  double residual = 0.0;
  std::vector<CertificateTerm> terms;

  DenseMatrix reconstruct() const;
};

struct CertificateCheck {
  bool ok = false;
  double residual = 0.0;
  int max_rank = 0;
};

/// Independent re-check: recomputes the sum of terms, its distance to
/// `target`, and every term's Schmidt rank at `rank_tol`.
CertificateCheck verify_certificate(const DecompositionCertificate& cert, const DenseMatrix& target,
                                    double residual_bound, double rank_tol = 1e-9);

/// Class projection of |alpha (x) beta><alpha (x) beta|.
IsotropicLikeState separable_from_product(const ProductVectorPair& p);

/// Class projection of (1/2)|w><w| with w = alpha (x) beta + psi (x) phi.
IsotropicLikeState v2_candidate(const SchmidtTwoQuadruple& q);

/// Certificate that (1 (x) T) rho is in V_2, i.e. rho is in V^2. The
/// operator splits into a_ii |ii><ii| and 2x2 blocks on span{|ij>, |ji>},
/// each eigendecomposed. Throws kNotPPT.
DecompositionCertificate v_upper2_certificate(const IsotropicLikeState& s, double tol = kDefaultTol);

/// Certificate that a positive Werner-like rho is in V_2. Throws kNotPositive.
DecompositionCertificate v2_certificate_werner(const WernerLikeState& s, double tol = kDefaultTol);

/// Real coordinates of an isotropic-like state: diag(a) ascending, then the
/// strict upper triangle of a row-major as (re, im) pairs, then off-diagonal
/// c row-major. Length 2 d^2 - d.
std::vector<double> real_parameters(const IsotropicLikeState& s);

/// The 3^(d-1) phased copies (U_x (x) conj(U_x)) v for x on the grid
/// {0, 2pi/3, 4pi/3}^d with x_1 = 0. Averaging |v><v| over them equals the
/// class projection exactly, and every copy keeps the Schmidt rank of v.
std::vector<std::vector<Complex>> torus_orbit(const std::vector<Complex>& v, int d);

struct SearchOptions {
  int n_samples = 500;
  std::uint64_t seed = 0;
  double eps = 1e-6;
  Execution execution = Execution::kParallel;
};

/// Fits a trace-1 isotropic-like state as a non-negative combination of
/// projected random product states. Returns a SEPARABLE certificate when the
/// fit residual and trace defect are both <= eps. A miss proves nothing.
/// Throws kBadTrace unless the state has unit trace within 1e-9.
std::optional<DecompositionCertificate> separability_search(
    const IsotropicLikeState& s, const SearchOptions& options,
    const std::vector<ProductVectorPair>& extra_generators = {});

/// Same search over projected Schmidt-rank-2 generators, alternating generic
/// quadruples with alpha (x) conj(alpha) + psi (x) conj(psi), alpha _|_ psi; returns a V2 certificate.
std::optional<DecompositionCertificate> v2_search(const IsotropicLikeState& s,
                                                  const SearchOptions& options,
                                                  const std::vector<SchmidtTwoQuadruple>& extra_generators = {});

/// Generator columns of the search matrix: real_parameters of each
/// projected, trace-normalized generator. Parallel and serial paths agree
/// bitwise.
ColumnMatrix product_columns(const std::vector<ProductVectorPair>& pairs, int d, Execution execution);
ColumnMatrix rank2_columns(const std::vector<SchmidtTwoQuadruple>& quads, int d, Execution execution);

ProductVectorPair random_product_pair(int d, Rng& rng);
SchmidtTwoQuadruple random_quadruple(int d, Rng& rng);

}  // namespace torus_ppt
