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

#include "torus_ppt/maps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "torus_ppt/error.hpp"

namespace torus_ppt {

namespace {

DenseMatrix empty_choi(int d) {
  const auto n = static_cast<std::size_t>(d * d);
  return DenseMatrix(n, n);
}

double negativity_threshold(const DenseMatrix& out, double tol) {
  return -tol * std::max(1.0, frobenius(out));
}

}  // namespace

MapRepresentation builtin_map(const std::string& name, int d) {
  if (d < 2) throw Error(ErrorCode::kUnsupportedDimension, "maps need d >= 2");
  DenseMatrix choi = empty_choi(d);
  if (name == "identity") {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) choi(ket(i, i, d), ket(j, j, d)) = 1.0;
    }
  } else if (name == "transpose") {
    // Phi(|i><j|) = |j><i|
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) choi(ket(i, j, d), ket(j, i, d)) = 1.0;
    }
  } else if (name == "reduction") {
    // Phi(|i><j|) = delta_ij I - |i><j|
    for (int i = 0; i < d; ++i) {
      for (int k = 0; k < d; ++k) choi(ket(i, k, d), ket(i, k, d)) += 1.0;
      for (int j = 0; j < d; ++j) choi(ket(i, i, d), ket(j, j, d)) -= 1.0;
    }
  } else if (name == "choi3") {
    if (d != 3) throw Error(ErrorCode::kUnsupportedDimension, "the Choi map is defined for d = 3");
    // Phi(|i><i|) = |i><i| + |i(+)1><i(+)1|, Phi(|i><j|) = -|i><j| for i != j.
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (i != j) choi(ket(i, i, d), ket(j, j, d)) = -1.0;
      }
      choi(ket(i, i, d), ket(i, i, d)) = 1.0;
      const int next = (i + 1) % d;
      choi(ket(i, next, d), ket(i, next, d)) = 1.0;
    }
  } else {
    throw Error(ErrorCode::kBadParameter, "unknown map '" + name + "'");
  }
  return {name, d, std::move(choi)};
}

MapRepresentation map_from_choi(std::string name, int d, DenseMatrix choi) {
  const auto n = static_cast<std::size_t>(d * d);
  if (d < 2 || choi.rows() != n || choi.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "Choi matrix must be d^2 x d^2");
  }
  if (!is_hermitian(choi)) throw Error(ErrorCode::kNonHermitian, "Choi matrix is not Hermitian");
  return {std::move(name), d, std::move(choi)};
}

DenseMatrix apply_map(const DenseMatrix& rho, const MapRepresentation& phi) {
  const int d = phi.d;
  const auto n = static_cast<std::size_t>(d * d);
  if (rho.rows() != n || rho.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "state and map dimensions differ");
  }
  struct Entry {
    int m, k, n, l;
    Complex value;
  };
  std::vector<Entry> entries;
  for (int m = 0; m < d; ++m) {
    for (int k = 0; k < d; ++k) {
      for (int nn = 0; nn < d; ++nn) {
        for (int l = 0; l < d; ++l) {
          const Complex v = phi.choi(ket(m, k, d), ket(nn, l, d));
          if (v != Complex{}) entries.push_back({m, k, nn, l, v});
        }
      }
    }
  }
  // out[(i,k),(j,l)] = sum_{m,n} rho[(i,m),(j,n)] choi[(m,k),(n,l)]
  DenseMatrix out(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (const auto& e : entries) {
        out(ket(i, e.k, d), ket(j, e.l, d)) += rho(ket(i, e.m, d), ket(j, e.n, d)) * e.value;
      }
    }
  }
  return out;
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::kIndecomposableEvidence: return "INDECOMPOSABLE_EVIDENCE";
    case Conclusion::kAtomicEvidence: return "ATOMIC_EVIDENCE";
    case Conclusion::kNoEvidence: return "NO_EVIDENCE";
  }
  return "UNKNOWN";
}

bool EvidenceReport::consistent() const {
  if (conclusion == Conclusion::kNoEvidence) return true;
  const bool all_verified = std::all_of(prerequisites.begin(), prerequisites.end(),
                                        [](const Prerequisite& p) { return p.verified; });
  return all_verified && !prerequisites.empty() && min_eigenvalue < threshold;
}

EvidenceReport indecomposability_evidence(const MapRepresentation& phi, const ClassState& s,
                                          const std::string& descriptor, double tol) {
  const auto positive = check_positive(s, tol);
  if (!positive.verdict) throw Error(ErrorCode::kNotPositiveState, "state is not positive");

  EvidenceReport report;
  report.map_name = phi.name;
  report.state_descriptor = descriptor;
  const auto ppt = check_ppt(s, tol);
  report.prerequisites.push_back(
      {"PPT", ppt.verdict, "min slack " + std::to_string(ppt.min_slack())});

  const DenseMatrix out = apply_map(to_density(s), phi);
  report.min_eigenvalue = hermitian_eigenvalues(out).front();
  report.threshold = negativity_threshold(out, tol);
  if (ppt.verdict && report.min_eigenvalue < report.threshold) {
    report.conclusion = Conclusion::kIndecomposableEvidence;
  }
  return report;
}

EvidenceReport atomicity_evidence(const MapRepresentation& phi, const IsotropicLikeState& s,
                                  const std::string& descriptor, const AtomicityOptions& options,
                                  const std::vector<SchmidtTwoQuadruple>& extra_generators) {
  if (!check_positive(s, options.tol).verdict || !check_ppt(s, options.tol).verdict) {
    throw Error(ErrorCode::kNotPPTState, "atomicity evidence needs a positive PPT state");
  }
  EvidenceReport report;
  report.map_name = phi.name;
  report.state_descriptor = descriptor;
  const DenseMatrix rho = to_density(s);
  const double bound = options.certificate_rel_tol * std::max(1.0, frobenius(rho));

  {
    const auto cert = v_upper2_certificate(s, options.tol);
    const auto check = verify_certificate(cert, to_density(partial_transpose_symbolic(s)), bound);
    report.prerequisites.push_back(
        {"V_UPPER_2", check.ok,
         "residual " + std::to_string(check.residual) + ", max Schmidt rank " + std::to_string(check.max_rank)});
  }
  {
    std::optional<DecompositionCertificate> cert;
    if (std::abs(state_trace(s) - 1.0) <= 1e-9) {
      cert = v2_search(s, options.v2_search, extra_generators);
    } else {
      cert = v2_search(normalize(s), options.v2_search, extra_generators);
      if (cert) {
        const double t = state_trace(s);
        for (auto& term : cert->terms) term.weight *= t;
      }
    }
    if (cert) {
      const auto check = verify_certificate(*cert, rho, bound);
      report.prerequisites.push_back(
          {"V2", check.ok,
           "residual " + std::to_string(check.residual) + ", max Schmidt rank " + std::to_string(check.max_rank)});
    } else {
      report.prerequisites.push_back({"V2", false, "no certificate found at eps " + std::to_string(options.v2_search.eps)});
    }
  }

  const DenseMatrix out = apply_map(rho, phi);
  report.min_eigenvalue = hermitian_eigenvalues(out).front();
  report.threshold = negativity_threshold(out, options.tol);
  const bool all_verified = std::all_of(report.prerequisites.begin(), report.prerequisites.end(),
                                        [](const Prerequisite& p) { return p.verified; });
  if (all_verified && report.min_eigenvalue < report.threshold) {
    report.conclusion = Conclusion::kAtomicEvidence;
  }
  return report;
}

}  // namespace torus_ppt
