// Copyright 2026 The qbayes Authors
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

#include "qbayes/error.hpp"

namespace qbayes {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotSquare:
            return "NotSquare";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::NotPsd:
            return "NotPsd";
        case ErrorCode::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NormViolation:
            return "NormViolation";
        case ErrorCode::NotDiagonalBasis:
            return "NotDiagonalBasis";
        case ErrorCode::NotADistribution:
            return "NotADistribution";
        case ErrorCode::InvalidPartition:
            return "InvalidPartition";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::InvariantViolation:
            return "InvariantViolation";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

static std::string format_message(ErrorCode code, const std::string &message, const std::string &invariant,
                                  double residual) {
    std::string out(to_string(code));
    out += ": ";
    out += message;
    if (!invariant.empty()) {
        out += " [invariant=" + invariant + ", residual=" + std::to_string(residual) + "]";
    }
    return out;
}

Error::Error(ErrorCode code, const std::string &message, std::string invariant, double residual)
    : std::runtime_error(format_message(code, message, invariant, residual)),
      code_(code),
      invariant_(std::move(invariant)),
      residual_(residual) {
}

}  // namespace qbayes
