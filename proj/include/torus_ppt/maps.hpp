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

// Linear maps M_d -> M_d in Choi form and their action (1 (x) Phi) on
// bipartite operators, plus one-sided numerical evidence about maps:
//
//  * a map that detects a PPT state cannot be decomposable;
//  * a map that detects a state in V_2 cap V^2 is atomic.
//
// Evidence reports only ever claim a conclusion after every prerequisite
// certificate has been independently re-verified.

#include <string>
#include <vector>

#include "torus_ppt/cones.hpp"
#include "torus_ppt/states.hpp"

namespace torus_ppt {

/// choi[(i,k),(j,l)] = <k| Phi(|i><j|) |l>.
struct MapRepresentation {
  std::string name;
  int d = 0;
  DenseMatrix choi;
};

/// identity, transpose, reduction (Tr(X) I - X), choi3 (d = 3 only):
///   Phi(X)_kk = X_kk + X_{k(-)1, k(-)1},  Phi(X)_kl = -X_kl (k != l).
/// Throws kUnsupportedDimension or kBadParameter.
MapRepresentation builtin_map(const std::string& name, int d);

/// Wraps a user-supplied Choi matrix; throws kNonHermitian / kDimensionMismatch.
MapRepresentation map_from_choi(std::string name, int d, DenseMatrix choi);

/// (1 (x) Phi) rho, block by block.
DenseMatrix apply_map(const DenseMatrix& rho, const MapRepresentation& phi);

enum class Conclusion { kIndecomposableEvidence, kAtomicEvidence, kNoEvidence };
const char* to_string(Conclusion c);

struct Prerequisite {
  std::string claim;
  bool verified = false;
  std::string detail;
};

struct EvidenceReport {
  std::string map_name;
  std::string state_descriptor;
  double min_eigenvalue = 0.0;
  double threshold = 0.0;  // negativity bound: -1e-9 * max(1, |output|_F)
  Conclusion conclusion = Conclusion::kNoEvidence;
  std::vector<Prerequisite> prerequisites;

  /// The report invariant: a conclusion implies detection and verified
  /// prerequisites.
  bool consistent() const;
};

/// Requires a positive state (kNotPositiveState).
EvidenceReport indecomposability_evidence(const MapRepresentation& phi, const ClassState& s,
                                          const std::string& descriptor = {}, double tol = kDefaultTol);

struct AtomicityOptions {
  SearchOptions v2_search;
  double tol = kDefaultTol;
  /// Reconstruction bound for re-verifying certificates, relative to |rho|_F.
  double certificate_rel_tol = 1e-10;
};

/// Requires a positive PPT state (kNotPPTState).
EvidenceReport atomicity_evidence(const MapRepresentation& phi, const IsotropicLikeState& s,
                                  const std::string& descriptor = {}, const AtomicityOptions& options = {},
                                  const std::vector<SchmidtTwoQuadruple>& extra_generators = {});

}  // namespace torus_ppt
