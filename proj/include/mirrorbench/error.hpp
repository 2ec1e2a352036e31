// Copyright 2026 The Mirrorbench Authors
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

#include <stdexcept>
#include <string>

namespace mirrorbench {

enum class ErrorCode {
    ContractViolation,
    UndefinedDensity,
    Parse,
    UnsupportedGate,
    NotAPauli,
    PolicyInfeasible,
    InvalidDepth,
    InfeasibleDensity,
    Embedding,
    MissingRate,
    MissingData,
    Pairing,
    Config,
};

inline const char *error_code_name(ErrorCode code);

/// Thrown by every validating entry point in the library. The CLI maps
/// `is_analysis_error()` to exit code 3 and everything else to exit code 2.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

    bool is_analysis_error() const noexcept {
        return code_ == ErrorCode::MissingData || code_ == ErrorCode::Pairing;
    }

   private:
    ErrorCode code_;
};

inline const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ContractViolation:
            return "contract violation";
        case ErrorCode::UndefinedDensity:
            return "undefined density";
        case ErrorCode::Parse:
            return "parse error";
        case ErrorCode::UnsupportedGate:
            return "unsupported gate";
        case ErrorCode::NotAPauli:
            return "not a pauli";
        case ErrorCode::PolicyInfeasible:
            return "policy infeasible";
        case ErrorCode::InvalidDepth:
            return "invalid depth";
        case ErrorCode::InfeasibleDensity:
            return "infeasible density";
        case ErrorCode::Embedding:
            return "embedding error";
        case ErrorCode::MissingRate:
            return "missing rate";
        case ErrorCode::MissingData:
            return "missing data";
        case ErrorCode::Pairing:
            return "pairing error";
        case ErrorCode::Config:
            return "config error";
    }
    return "error";
}

}  // namespace mirrorbench
