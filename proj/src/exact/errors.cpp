// Copyright 2026 The ruledsym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ruledsym/errors.hpp"

namespace ruledsym {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::CylindricalInput: return "CYLINDRICAL_INPUT";
    case ErrorCode::PositiveDimensional: return "POSITIVE_DIMENSIONAL";
    case ErrorCode::ParamHeuristicFailed: return "PARAM_HEURISTIC_FAILED";
    case ErrorCode::PrecisionBudget: return "PRECISION_BUDGET";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::ZeroDirection: return "ZERO_DIRECTION";
    case ErrorCode::NotAnIsometry: return "NOT_AN_ISOMETRY";
    case ErrorCode::TranslationInvariant: return "TRANSLATION_INVARIANT";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace ruledsym
