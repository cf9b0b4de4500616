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

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include "qbayes/states.hpp"

/// Entropies of the form S(rho) = tr h(rho) for concave h on [0, 1].
///
/// Values are in nats. The log-determinant functional returns
/// `kNegativeInfinity` for singular spectra; any finite value exceeds it and
/// two sentinels compare equal, which is exactly IEEE behaviour.
namespace qbayes {

inline constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();

class EntropyFunctional {
  public:
    enum class Kind { VonNeumann, Linear, Renyi, LogDet, Custom };

    /// h(x) = -x ln x, with 0 ln 0 = 0.
    static EntropyFunctional von_neumann();
    /// h(x) = x - x^2, so S = 1 - tr rho^2. Differs from h(x) = 1 - x^2 by a
    /// constant on unit-trace spectra and orders states identically.
    static EntropyFunctional linear();
    /// h(x) = x^alpha for alpha < 1 and -x^alpha for alpha > 1. alpha must be
    /// positive and different from 1.
    static EntropyFunctional renyi(double alpha);
    /// h(x) = ln x.
    static EntropyFunctional log_det();
    /// Caller-supplied h; rejected unless midpoint-concave on a 100-point
    /// grid over (0, 1] within 1e-12.
    static EntropyFunctional custom(std::string name, std::function<double(double)> h);

    /// Parses "von-neumann", "linear", "renyi:<alpha>" or "log-det".
    static EntropyFunctional parse(std::string_view selector);

    Kind kind() const noexcept {
        return kind_;
    }
    double alpha() const noexcept {
        return alpha_;
    }
    /// Selector string; round-trips through parse() for built-ins.
    const std::string &name() const noexcept {
        return name_;
    }
    /// h evaluated on x in [0, 1].
    double h(double x) const;

  private:
    EntropyFunctional(Kind kind, double alpha, std::string name, std::function<double(double)> custom);

    Kind kind_;
    double alpha_;
    std::string name_;
    std::shared_ptr<const std::function<double(double)>> custom_;
};

/// The four built-in functionals plus two Renyi orders on either side of 1.
std::vector<EntropyFunctional> builtin_functionals();

/// sum_i h(lambda_i). Entries in [-1e-10, 1 + 1e-10] are clamped to [0, 1]
/// and entries at or below 1e-14 count as exact zeros (log-det then returns
/// the -inf sentinel); the spectrum must sum to 1 within 1e-9.
double entropy_of_spectrum(const Spectrum &lambda, const EntropyFunctional &f);
double entropy(const DensityMatrix &rho, const EntropyFunctional &f);
/// sum over live outcomes of p_k S(rho^(k)); zero-probability outcomes
/// contribute nothing.
double expected_entropy(const OutcomeEnsemble &ens, const EntropyFunctional &f);

/// lhs <= rhs + slack with the sentinel convention: a -inf left side always
/// passes, a -inf right side only passes against another -inf.
bool entropy_leq(double lhs, double rhs, double slack);

/// rhs - lhs, defined as 0 when both sides are the -inf sentinel.
double entropy_margin(double lhs, double rhs);

}  // namespace qbayes
