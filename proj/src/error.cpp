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

#include "torus_ppt/error.hpp"

namespace torus_ppt {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNonPositiveTrace: return "NonPositiveTrace";
    case ErrorCode::kBadWeights: return "BadWeights";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotPPT: return "NotPPT";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kBadTrace: return "BadTrace";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kNotPositiveState: return "NotPositiveState";
    case ErrorCode::kNotPPTState: return "NotPPTState";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace torus_ppt
