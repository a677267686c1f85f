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


#pragma once

#include <stdexcept>
#include <string>

namespace ruledsym {

/// Machine-readable failure categories; stable across versions.
enum class ErrorCode {
  Parse,
  CylindricalInput,
  PositiveDimensional,
  ParamHeuristicFailed,
  PrecisionBudget,
  ZeroInput,
  ZeroDirection,
  NotAnIsometry,
  TranslationInvariant,
  InvalidArgument,
};

/// Upper-case diagnostic tag, e.g. "CYLINDRICAL_INPUT".
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorCode::Parse, m) {}
};
struct CylindricalInput : Error {
  explicit CylindricalInput(const std::string& m) : Error(ErrorCode::CylindricalInput, m) {}
};
struct PositiveDimensional : Error {
  explicit PositiveDimensional(const std::string& m) : Error(ErrorCode::PositiveDimensional, m) {}
};
struct HeuristicFailure : Error {
  explicit HeuristicFailure(const std::string& m) : Error(ErrorCode::ParamHeuristicFailed, m) {}
};
struct PrecisionBudgetExceeded : Error {
  explicit PrecisionBudgetExceeded(const std::string& m) : Error(ErrorCode::PrecisionBudget, m) {}
};
struct ZeroInput : Error {
  explicit ZeroInput(const std::string& m) : Error(ErrorCode::ZeroInput, m) {}
};
struct ZeroDirection : Error {
  explicit ZeroDirection(const std::string& m) : Error(ErrorCode::ZeroDirection, m) {}
};
struct NotAnIsometry : Error {
  explicit NotAnIsometry(const std::string& m) : Error(ErrorCode::NotAnIsometry, m) {}
};
struct TranslationInvariant : Error {
  explicit TranslationInvariant(const std::string& m) : Error(ErrorCode::TranslationInvariant, m) {}
};

}  // namespace ruledsym
