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

// JSON file formats.
//
// Matrix:      {"rows": n, "cols": n, "data": [[re, im], ...]}   (row-major)
// State:       {"d": d, "class": "isotropic-like" | "werner-like",
//               "a" | "b": [[[re, im], ...], ...], "c": [[...], ...]}
// Certificate: {"claim": ..., "residual": r, "terms": [{"weight": w,
//               "vector": [[re, im], ...], "schmidt_rank": k}, ...]}
//
// Doubles are written with the shortest representation that round-trips.

#include <string>

#include "torus_ppt/cones.hpp"
#include "torus_ppt/linalg.hpp"
#include "torus_ppt/states.hpp"

namespace torus_ppt {

std::string matrix_to_json(const DenseMatrix& m);
/// Throws kParse on malformed input.
DenseMatrix matrix_from_json(const std::string& text);

std::string state_to_json(const ClassState& s);
/// Throws kParse on malformed input and kNonHermitian when a/b deviates
/// from Hermitian by more than 1e-9.
ClassState state_from_json(const std::string& text);

std::string certificate_to_json(const DecompositionCertificate& cert);
DecompositionCertificate certificate_from_json(const std::string& text);

/// Throws kIo.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace torus_ppt
