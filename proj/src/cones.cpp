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

#include "torus_ppt/cones.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "torus_ppt/error.hpp"

namespace torus_ppt {

namespace {

constexpr double kRankTol = 1e-9;

// weight * P(|v><v|) for a length-d^2 vector v.
IsotropicLikeState project_pure(const std::vector<Complex>& v, int d, double weight) {
  const auto dd = static_cast<std::size_t>(d);
  DenseMatrix a(dd, dd);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      a(i, j) = weight * v[ket(i, i, d)] * std::conj(v[ket(j, j, d)]);
      if (i != j) c(i, j) = weight * std::norm(v[ket(i, j, d)]);
    }
  }
  return {d, std::move(a), std::move(c)};
}

int local_dimension(std::initializer_list<const std::vector<Complex>*> parts) {
  const std::size_t d = (*parts.begin())->size();
  for (const auto* p : parts) {
    if (p->size() != d) throw Error(ErrorCode::kDimensionMismatch, "local vectors differ in length");
  }
  if (d < 2) throw Error(ErrorCode::kBadParameter, "local dimension must be >= 2");
  return static_cast<int>(d);
}

std::vector<Complex> normalized(std::vector<Complex> v) {
  const double len = norm2(v);
  if (len == 0.0) throw Error(ErrorCode::kZeroVector, "generator vector is zero");
  for (auto& x : v) x /= len;
  return v;
}

// Pure terms for diag(m) on |ii> plus the 2x2 blocks [[c_ij, m_ij], [conj, c_ji]]
// on span{|ij>, |ji>}. This is (1 (x) T) rho for an isotropic-like rho with
// m = a, and rho itself for a Werner-like rho with m = b.
DecompositionCertificate block_certificate(const DenseMatrix& m, const RealMatrix& c, int d,
                                           ConeClaim claim, const DenseMatrix& target, double scale) {
  const auto dd = static_cast<std::size_t>(d);
  const double drop = 1e-14 * scale;
  DecompositionCertificate cert;
  cert.claim = claim;
  cert.d = d;
  for (int i = 0; i < d; ++i) {
    const double w = m(i, i).real();
    if (w <= drop) continue;
    std::vector<Complex> v(dd * dd);
    v[ket(i, i, d)] = 1.0;
    cert.terms.push_back({w, std::move(v), 1});
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      DenseMatrix block(2, 2);
      block(0, 0) = c(i, j);
      block(0, 1) = m(i, j);
      block(1, 0) = std::conj(m(i, j));
      block(1, 1) = c(j, i);
      const auto eig = hermitian_eigensystem(block);
      for (std::size_t k = 0; k < 2; ++k) {
        if (eig.values[k] <= drop) continue;
        std::vector<Complex> v(dd * dd);
        v[ket(i, j, d)] = eig.vectors(0, k);
        v[ket(j, i, d)] = eig.vectors(1, k);
        const int rank = schmidt_rank(v, d, kRankTol);
        cert.terms.push_back({eig.values[k], std::move(v), rank});
      }
    }
  }
  cert.residual = frobenius(cert.reconstruct() - target);
  return cert;
}

template <class Generator, class ColumnFn>
ColumnMatrix build_columns(const std::vector<Generator>& gens, int d, Execution execution,
                           ColumnFn column_of) {
  const std::size_t rows = static_cast<std::size_t>(2 * d * d - d);
  ColumnMatrix cols(rows, gens.size());
  const auto n = static_cast<std::ptrdiff_t>(gens.size());
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const auto params = column_of(gens[static_cast<std::size_t>(k)]);
      std::copy(params.begin(), params.end(), cols.column(static_cast<std::size_t>(k)).begin());
    }
  } else {
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const auto params = column_of(gens[static_cast<std::size_t>(k)]);
      std::copy(params.begin(), params.end(), cols.column(static_cast<std::size_t>(k)).begin());
    }
  }
  return cols;
}

std::vector<double> product_column(const ProductVectorPair& p, int d) {
  return real_parameters(project_pure(normalized(p.product()), d, 1.0));
}

std::vector<double> rank2_column(const SchmidtTwoQuadruple& q, int d) {
  return real_parameters(project_pure(normalized(q.combined()), d, 1.0));
}

double column_trace(std::span<const double> col, int d) {
  // diag(a) occupies the first d entries, c the last d(d-1).
  double t = 0.0;
  for (int i = 0; i < d; ++i) t += col[static_cast<std::size_t>(i)];
  for (std::size_t k = col.size() - static_cast<std::size_t>(d * (d - 1)); k < col.size(); ++k) t += col[k];
  return t;
}

// Shared NNLS fit. `unit_vectors[k]` generates column k.
std::optional<DecompositionCertificate> fit_cone(const IsotropicLikeState& s, const ColumnMatrix& cols,
                                                 const std::vector<std::vector<Complex>>& unit_vectors,
                                                 ConeClaim claim, double eps) {
  const int d = s.d();
  const auto target = real_parameters(s);
  const NnlsResult fit = nnls(cols, target);
  double trace_weight = 0.0;
  for (std::size_t k = 0; k < fit.x.size(); ++k) trace_weight += fit.x[k] * column_trace(cols.column(k), d);
  if (!(fit.residual_norm <= eps) || !(std::abs(trace_weight - 1.0) <= eps)) return std::nullopt;

  DecompositionCertificate cert;
  cert.claim = claim;
  cert.d = d;
  for (std::size_t k = 0; k < fit.x.size(); ++k) {
    if (fit.x[k] <= 0.0) continue;
    const auto orbit = torus_orbit(unit_vectors[k], d);
    const double w = fit.x[k] / static_cast<double>(orbit.size());
    for (const auto& v : orbit) {
      const int rank = schmidt_rank(v, d, kRankTol);
      cert.terms.push_back({w, v, rank});
    }
  }
  cert.residual = frobenius(cert.reconstruct() - to_density(s));
  return cert;
}

// psi minus its component along alpha, normalized; alpha must be a unit vector.
std::vector<Complex> orthogonal_to(const std::vector<Complex>& alpha, std::vector<Complex> psi) {
  Complex overlap = 0.0;
  for (std::size_t k = 0; k < alpha.size(); ++k) overlap += std::conj(alpha[k]) * psi[k];
  for (std::size_t k = 0; k < alpha.size(); ++k) psi[k] -= overlap * alpha[k];
  return normalized(std::move(psi));
}

// alpha (x) conj(alpha) + psi (x) conj(psi) with alpha, psi orthonormal: the
// coefficient matrix is a rank-2 projector, so the diagonal |ii> amplitudes
// are as coherent as Schmidt rank 2 allows. Gaussian quadruples almost
// never land near these, and without them the search misses most of V2.
SchmidtTwoQuadruple projector_quadruple(int d, Rng& rng) {
  SchmidtTwoQuadruple q;
  q.alpha = random_unit_vector(d, rng);
  q.psi = orthogonal_to(q.alpha, random_unit_vector(d, rng));
  q.beta = q.alpha;
  q.phi = q.psi;
  for (auto& x : q.beta) x = std::conj(x);
  for (auto& x : q.phi) x = std::conj(x);
  return q;
}

void require_unit_trace(const IsotropicLikeState& s) {
  if (std::abs(state_trace(s) - 1.0) > 1e-9) {
    throw Error(ErrorCode::kBadTrace, "cone search needs a trace-1 state");
  }
}

}  // namespace

std::vector<Complex> SchmidtTwoQuadruple::combined() const {
  const auto d = static_cast<std::size_t>(local_dimension({&alpha, &beta, &psi, &phi}));
  std::vector<Complex> w = kron(alpha, beta);
  const auto second = kron(psi, phi);
  for (std::size_t k = 0; k < d * d; ++k) w[k] += second[k];
  return w;
}

const char* to_string(ConeClaim claim) {
  switch (claim) {
    case ConeClaim::kSeparable: return "SEPARABLE";
    case ConeClaim::kV2: return "V2";
    case ConeClaim::kVUpper2: return "V_UPPER_2";
  }
  return "UNKNOWN";
}

ConeClaim cone_claim_from_string(const std::string& s) {
  if (s == "SEPARABLE") return ConeClaim::kSeparable;
  if (s == "V2") return ConeClaim::kV2;
  if (s == "V_UPPER_2") return ConeClaim::kVUpper2;
  throw Error(ErrorCode::kParse, "unknown certificate claim '" + s + "'");
}

int max_schmidt_rank(ConeClaim claim) { return claim == ConeClaim::kSeparable ? 1 : 2; }

DenseMatrix DecompositionCertificate::reconstruct() const {
  const auto n = static_cast<std::size_t>(d * d);
  DenseMatrix sum(n, n);
  for (const auto& t : terms) {
    for (std::size_t r = 0; r < n; ++r) {
      if (t.vector[r] == Complex{}) continue;
      const Complex wr = t.weight * t.vector[r];
      for (std::size_t c = 0; c < n; ++c) sum(r, c) += wr * std::conj(t.vector[c]);
    }
  }
  return sum;
}

CertificateCheck verify_certificate(const DecompositionCertificate& cert, const DenseMatrix& target,
                                    double residual_bound, double rank_tol) {
  CertificateCheck check;
  const auto n = static_cast<std::size_t>(cert.d * cert.d);
  DenseMatrix sum(n, n);
  bool weights_ok = true;
  for (const auto& t : cert.terms) {
    weights_ok = weights_ok && t.weight >= 0.0 && t.vector.size() == n;
    if (t.vector.size() != n) continue;
    sum += Complex(t.weight) * outer(t.vector);
    check.max_rank = std::max(check.max_rank, schmidt_rank(t.vector, cert.d, rank_tol));
  }
  if (target.rows() != n || target.cols() != n) return check;
  check.residual = frobenius(sum - target);
  check.ok = weights_ok && check.residual <= residual_bound &&
             check.max_rank <= max_schmidt_rank(cert.claim);
  return check;
}

IsotropicLikeState separable_from_product(const ProductVectorPair& p) {
  const int d = local_dimension({&p.alpha, &p.beta});
  if (norm2(p.alpha) == 0.0 || norm2(p.beta) == 0.0) {
    throw Error(ErrorCode::kZeroVector, "product vector factor is zero");
  }
  return project_pure(p.product(), d, 1.0);
}

IsotropicLikeState v2_candidate(const SchmidtTwoQuadruple& q) {
  const auto w = q.combined();
  if (norm2(w) == 0.0) throw Error(ErrorCode::kZeroVector, "alpha(x)beta + psi(x)phi is zero");
  return project_pure(w, static_cast<int>(q.alpha.size()), 0.5);
}

DecompositionCertificate v_upper2_certificate(const IsotropicLikeState& s, double tol) {
  const auto report = check_ppt(s, tol);
  if (!report.verdict) {
    throw Error(ErrorCode::kNotPPT, "state is not PPT (min slack " + std::to_string(report.min_slack()) + ")");
  }
  return block_certificate(s.a(), s.c(), s.d(), ConeClaim::kVUpper2,
                           to_density(partial_transpose_symbolic(s)), report.scale);
}

DecompositionCertificate v2_certificate_werner(const WernerLikeState& s, double tol) {
  const auto report = check_positive(s, tol);
  if (!report.verdict) {
    throw Error(ErrorCode::kNotPositive,
                "state is not positive (min slack " + std::to_string(report.min_slack()) + ")");
  }
  return block_certificate(s.b(), s.c(), s.d(), ConeClaim::kV2, to_density(s), report.scale);
}

std::vector<double> real_parameters(const IsotropicLikeState& s) {
  const int d = s.d();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * d * d - d));
  for (int i = 0; i < d; ++i) out.push_back(s.a()(i, i).real());
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      out.push_back(s.a()(i, j).real());
      out.push_back(s.a()(i, j).imag());
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) out.push_back(s.c()(i, j));
    }
  }
  return out;
}

std::vector<std::vector<Complex>> torus_orbit(const std::vector<Complex>& v, int d) {
  const auto dd = static_cast<std::size_t>(d);
  if (v.size() != dd * dd) throw Error(ErrorCode::kDimensionMismatch, "orbit needs a length-d^2 vector");
  std::size_t count = 1;
  for (int k = 1; k < d; ++k) count *= 3;
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex powers[3] = {1.0, omega, omega * omega};

  std::vector<std::vector<Complex>> orbit;
  orbit.reserve(count);
  std::vector<int> x(dd, 0);
  for (std::size_t m = 0; m < count; ++m) {
    std::size_t rest = m;
    for (std::size_t k = 1; k < dd; ++k) {
      x[k] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    std::vector<Complex> u(v);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        // e^{-i(theta_i - theta_j)} with theta = 2 pi x / 3.
        u[ket(i, j, d)] *= std::conj(powers[x[i]]) * powers[x[j]];
      }
    }
    orbit.push_back(std::move(u));
  }
  return orbit;
}

ColumnMatrix product_columns(const std::vector<ProductVectorPair>& pairs, int d, Execution execution) {
  return build_columns(pairs, d, execution, [d](const ProductVectorPair& p) { return product_column(p, d); });
}

ColumnMatrix rank2_columns(const std::vector<SchmidtTwoQuadruple>& quads, int d, Execution execution) {
  return build_columns(quads, d, execution, [d](const SchmidtTwoQuadruple& q) { return rank2_column(q, d); });
}

ProductVectorPair random_product_pair(int d, Rng& rng) {
  auto alpha = random_unit_vector(d, rng);
  auto beta = random_unit_vector(d, rng);
  return {std::move(alpha), std::move(beta)};
}

SchmidtTwoQuadruple random_quadruple(int d, Rng& rng) {
  auto alpha = random_unit_vector(d, rng);
  auto beta = random_unit_vector(d, rng);
  auto psi = random_unit_vector(d, rng);
  auto phi = random_unit_vector(d, rng);
  return {std::move(alpha), std::move(beta), std::move(psi), std::move(phi)};
}

std::optional<DecompositionCertificate> separability_search(
    const IsotropicLikeState& s, const SearchOptions& options,
    const std::vector<ProductVectorPair>& extra_generators) {
  require_unit_trace(s);
  const int d = s.d();
  Rng rng(options.seed);
  std::vector<ProductVectorPair> gens;
  gens.reserve(static_cast<std::size_t>(options.n_samples) + extra_generators.size());
  for (int k = 0; k < options.n_samples; ++k) gens.push_back(random_product_pair(d, rng));
  gens.insert(gens.end(), extra_generators.begin(), extra_generators.end());

  std::vector<std::vector<Complex>> vectors;
  vectors.reserve(gens.size());
  for (const auto& g : gens) vectors.push_back(normalized(g.product()));
  return fit_cone(s, product_columns(gens, d, options.execution), vectors, ConeClaim::kSeparable,
                  options.eps);
}

std::optional<DecompositionCertificate> v2_search(const IsotropicLikeState& s, const SearchOptions& options,
                                                  const std::vector<SchmidtTwoQuadruple>& extra_generators) {
  require_unit_trace(s);
  const int d = s.d();
  Rng rng(options.seed);
  std::vector<SchmidtTwoQuadruple> gens;
  gens.reserve(static_cast<std::size_t>(options.n_samples) + extra_generators.size());
  for (int k = 0; k < options.n_samples; ++k) {
    gens.push_back(k % 2 == 0 ? random_quadruple(d, rng) : projector_quadruple(d, rng));
  }
  gens.insert(gens.end(), extra_generators.begin(), extra_generators.end());

  std::vector<std::vector<Complex>> vectors;
  vectors.reserve(gens.size());
  for (const auto& g : gens) vectors.push_back(normalized(g.combined()));
  return fit_cone(s, rank2_columns(gens, d, options.execution), vectors, ConeClaim::kV2, options.eps);
}

}  // namespace torus_ppt
