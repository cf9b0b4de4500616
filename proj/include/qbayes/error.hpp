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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbayes {

enum class ErrorCode {
    NotSquare,
    NotHermitian,
    NotPsd,
    ShapeMismatch,
    DimensionMismatch,
    NormViolation,
    NotDiagonalBasis,
    NotADistribution,
    InvalidPartition,
    InvalidArgument,
    InvariantViolation,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every validating operation in the library.
///
/// `invariant()` names the violated condition (for instance "hermitian" or
/// "unit_trace") and `residual()` carries the measured deviation, when one
/// applies. Both are empty/zero for purely structural errors.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message, std::string invariant = {}, double residual = 0.0);

    ErrorCode code() const noexcept {
        return code_;
    }
    const std::string &invariant() const noexcept {
        return invariant_;
    }
    double residual() const noexcept {
        return residual_;
    }

  private:
    ErrorCode code_;
    std::string invariant_;
    double residual_;
};

}  // namespace qbayes
