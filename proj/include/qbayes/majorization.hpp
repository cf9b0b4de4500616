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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbayes/entropy.hpp"
#include "qbayes/states.hpp"

/// Vector majorization and the spectral majorization theorems it supports.
namespace qbayes {

inline constexpr double kMajorizationTol = 1e-9;

/// Outcome of one theorem check.
///
/// `margins` holds the prefix-sum gaps sum_{i<=j} lhs_i - sum_{i<=j} rhs_i
/// of each majorization relation checked, concatenated in the order the
/// relations are listed by the check. Entropy checks store rhs - lhs.
struct CheckReport {
    bool pass = false;
    std::vector<double> margins;
    std::map<std::string, std::vector<double>> spectra;
    std::map<std::string, double> values;
    std::optional<std::int64_t> trial;
    std::string note;

    double min_margin() const;
};

/// Prefix-sum gaps of lhs over rhs after zero-padding both to equal length
/// and sorting descending. The last entry is the difference of totals.
std::vector<double> prefix_margins(std::span<const double> lhs, std::span<const double> rhs);

/// lhs ≻ rhs: equal totals within tol and no prefix gap below -tol.
bool majorizes(std::span<const double> lhs, std::span<const double> rhs, double tol = kMajorizationTol);

/// Componentwise sum of descending-sorted sequences, zero-padded.
std::vector<double> sorted_sum(std::span<const double> a, std::span<const double> b);

/// λ(rho) ≻ λ(rho ∘ E).
CheckReport check_schur_majorization(const DensityMatrix &rho, const GramMatrix &e);

/// sum_i λ(P_i H P_i) ≻ λ(H) ≻ λ(sum_i P_i H P_i). Spectra of P_i H P_i are
/// taken over the full dimension. H must be positive semidefinite: for
/// indefinite H the left relation fails (H = [[0,1],[1,0]] with the two
/// basis projectors), so such input is rejected with NotPsd.
CheckReport check_pinching_double(const ComplexMatrix &h, const ProjectorSet &ps);

/// λ(A) + λ(B) ≻ λ(A + B) for Hermitian A, B.
CheckReport check_fan(const ComplexMatrix &a, const ComplexMatrix &b);

/// sum_k p_k S(rho_k) <= S(sum_k p_k rho_k) + 1e-9.
CheckReport check_holevo(const OutcomeEnsemble &ens, const EntropyFunctional &f);

/// If λ(rho1) ≻ λ(rho2), checks S(rho1) <= S(rho2) + 1e-9. Otherwise the
/// report passes with note "not comparable" and makes no entropy claim.
CheckReport entropy_from_majorization_consistency(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                                  const EntropyFunctional &f);

}  // namespace qbayes
