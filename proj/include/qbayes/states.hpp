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

#include <optional>
#include <span>
#include <vector>

#include "qbayes/matcore.hpp"

/// Validated physical types. Every constructor checks its invariants and
/// throws `Error` naming the failed invariant together with its residual.
namespace qbayes {

/// Probabilities at or below this are treated as exactly zero.
inline constexpr double kZeroProbability = 1e-12;
inline constexpr double kProjectorTol = 1e-9;

/// Hermitian, positive-semidefinite, unit-trace matrix. The stored matrix is
/// the Hermitian part of the validated input.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix mat, double tol = kDefaultTol);

    const ComplexMatrix &matrix() const noexcept {
        return mat_;
    }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(mat_.rows());
    }

  private:
    ComplexMatrix mat_;
};

/// Unit-norm state vector.
class PureState {
  public:
    explicit PureState(ComplexVector amp, double tol = kDefaultTol);

    const ComplexVector &amplitudes() const noexcept {
        return amp_;
    }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amp_.size());
    }
    /// Basis vector |index> of dimension `dim`.
    static PureState basis(std::size_t dim, std::size_t index);

  private:
    ComplexVector amp_;
};

/// Hermitian PSD matrix with unit diagonal (overlap matrix of normalized
/// response states).
class GramMatrix {
  public:
    explicit GramMatrix(ComplexMatrix mat, double tol = kDefaultTol);

    const ComplexMatrix &matrix() const noexcept {
        return mat_;
    }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(mat_.rows());
    }

    static GramMatrix identity(std::size_t n);
    static GramMatrix ones(std::size_t n);

  private:
    ComplexMatrix mat_;
};

/// Response amplitudes S(i,k) = <s_k|sigma_i>: one unit-norm row per object
/// basis state, one column per perceivable outcome. May be rectangular.
class ProbingMatrix {
  public:
    explicit ProbingMatrix(ComplexMatrix mat, double tol = kDefaultTol);

    const ComplexMatrix &matrix() const noexcept {
        return mat_;
    }
    std::size_t object_dim() const noexcept {
        return static_cast<std::size_t>(mat_.rows());
    }
    std::size_t outcome_count() const noexcept {
        return static_cast<std::size_t>(mat_.cols());
    }

  private:
    ComplexMatrix mat_;
};

/// Complete family of mutually orthogonal Hermitian projectors.
class ProjectorSet {
  public:
    explicit ProjectorSet(std::vector<ComplexMatrix> projectors, double tol = kProjectorTol);

    const std::vector<ComplexMatrix> &projectors() const noexcept {
        return projectors_;
    }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(projectors_.front().rows());
    }
    std::size_t size() const noexcept {
        return projectors_.size();
    }

    /// Diagonal projectors, one per block; block[i] is the block index of
    /// basis state i.
    static ProjectorSet from_block_labels(std::span<const std::size_t> labels);

  private:
    std::vector<ComplexMatrix> projectors_;
};

struct Outcome {
    double probability = 0.0;
    /// Empty for zero-probability outcomes, whose state is undefined.
    std::optional<DensityMatrix> state;
};

/// Outcome probabilities with their post-measurement states.
class OutcomeEnsemble {
  public:
    /// Clamps probabilities <= 1e-12 (including slightly negative ones down to
    /// -1e-12) to exactly zero and drops their states.
    explicit OutcomeEnsemble(std::vector<Outcome> outcomes);

    const std::vector<Outcome> &outcomes() const noexcept {
        return outcomes_;
    }
    std::size_t size() const noexcept {
        return outcomes_.size();
    }
    std::size_t dim() const noexcept {
        return dim_;
    }
    std::vector<double> probabilities() const;

  private:
    std::vector<Outcome> outcomes_;
    std::size_t dim_ = 0;
};

DensityMatrix density_from_pure(const PureState &v);
double purity(const DensityMatrix &rho);
/// E(i,j) = <v_j|v_i>.
GramMatrix gram_from_vectors(std::span<const PureState> vs);
/// E(i,j) = sum_k P_k(i,i) P_k(j,j); ones on the diagonal blocks picked out
/// by the projectors. Projectors must be diagonal in the working basis.
GramMatrix gram_from_projectors(const ProjectorSet &ps);

DensityMatrix maximally_mixed(std::size_t n);

}  // namespace qbayes
