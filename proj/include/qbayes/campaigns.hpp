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
#include <string>
#include <vector>

#include "json.hpp"
#include "qbayes/entropy.hpp"
#include "qbayes/povm.hpp"

/// Seeded verification campaigns behind the command-line tool.
///
/// Every campaign is a pure function of its options: trial t draws from
/// `Rng(seed).child(...)` streams keyed by the trial index, trials may run on
/// several worker threads, and results are merged in trial order, so the
/// report does not depend on the worker count.
namespace qbayes::campaigns {

/// Margins in [0, kNearTrivialMargin] on nontrivial samples are counted as
/// near-trivial rather than strict.
inline constexpr double kNearTrivialMargin = 1e-7;
/// Identities that hold exactly up to round-off.
inline constexpr double kIdentityTol = 1e-12;
/// logDet trials whose state has a smaller eigenvalue are skipped.
inline constexpr double kSingularEigenvalue = 1e-12;

enum class Units { Nats, Bits };
enum class Format { Json, Csv };

struct Options {
    std::uint64_t seed = 0;
    /// Empty selects the command's default dimension sweep.
    std::vector<std::size_t> dims;
    std::size_t trials = 500;
    /// Empty selects builtin_functionals().
    std::vector<EntropyFunctional> functionals;
    /// Slack for every inequality and the spectral triviality tolerance.
    double tol = 1e-9;
    /// Response (perception basis / environment) dimension; defaults per command.
    std::optional<std::size_t> response_dim;
    Units units = Units::Nats;
    std::size_t workers = 1;
};

/// One line of the plot-ready margin table.
struct MarginRow {
    std::int64_t trial = 0;
    std::size_t dim = 0;
    std::string functional;
    std::string side;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool trivial = false;
    /// Entropy-valued rows are converted when reporting in bits.
    bool entropy_valued = false;
    bool violation = false;
};

struct Result {
    std::string command;
    std::vector<MarginRow> rows;
    /// Command-specific report content (fixed cases, per-trial records, ...).
    nlohmann::json details = nlohmann::json::object();
    /// Extra summary counters (trivial, near_trivial, skipped_singular, ...).
    std::map<std::string, std::int64_t> counters;
    std::size_t violations = 0;
    nlohmann::json flags = nlohmann::json::object();

    int exit_code() const {
        return violations == 0 ? 0 : 1;
    }
};

struct FixedInputs {
    std::optional<DensityMatrix> rho;
    std::optional<ProbingMatrix> probing;
};

/// Observation and decoherence inequalities on sampled (rho, S) pairs, plus
/// the identity sum_k p_k rho^(k) = rho ∘ S S^dagger.
Result verify_s_theorems(const Options &opts, const FixedInputs &fixed = {});
/// Schur-product, pinching and Fan majorization campaigns.
Result majorization(const Options &opts);
/// Reproduces counterexample 1 or 2 and checks its exact values.
Result counterexample(int which, const Options &opts);
/// Holevo inequality on random ensembles. Ensemble size is drawn from
/// [2, 5] unless given.
Result holevo(const Options &opts, std::optional<std::size_t> ensemble_size = std::nullopt);
/// Lüders projection against the block Gram Schur form.
Result luders_equiv(const Options &opts);
/// Purity preservation and the observation inequality for random
/// purity-preserving POVMs, plus the sampled converse on general POVMs.
Result pppovm(const Options &opts, std::size_t pure_inputs = 20, std::size_t mixed_inputs = 5,
              std::size_t converse_inputs = 100);
/// Classifies a POVM as general or purity-preserving.
Result povm_classify(const Povm &m, const std::string &source);

/// Full JSON report. The timestamp is the only field that varies between
/// identical runs; pass `with_timestamp = false` to omit it.
nlohmann::json report(const Result &r, const Options &opts, bool with_timestamp = true);
std::string render(const Result &r, const Options &opts, Format format, bool with_timestamp = true);

}  // namespace qbayes::campaigns
