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

#include "qbayes/states.hpp"

#include <cmath>
#include <string>

namespace qbayes {

namespace {

void check_hermitian(const ComplexMatrix &m, double tol, const char *what) {
    require_square(m, what);
    require_finite(m, what);
    const double residual = max_norm(m - m.adjoint());
    if (residual > tol) {
        throw Error(ErrorCode::NotHermitian, std::string(what) + " is not Hermitian", "hermitian", residual);
    }
}

void check_psd(const ComplexMatrix &m, double tol, const char *what) {
    const Spectrum s = hermitian_spectrum(m, tol);
    const double smallest = s[s.size() - 1];
    if (smallest < -tol) {
        throw Error(ErrorCode::NotPsd, std::string(what) + " has a negative eigenvalue", "psd", -smallest);
    }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
    check_hermitian(mat_, tol, "density matrix");
    mat_ = 0.5 * (mat_ + mat_.adjoint()).eval();
    const double trace_residual = std::abs(mat_.trace() - Complex(1.0, 0.0));
    if (trace_residual > tol) {
        throw Error(ErrorCode::InvariantViolation, "density matrix trace is not 1", "unit_trace", trace_residual);
    }
    check_psd(mat_, tol, "density matrix");
}

PureState::PureState(ComplexVector amp, double tol) : amp_(std::move(amp)) {
    if (amp_.size() == 0) {
        throw Error(ErrorCode::InvalidArgument, "pure state must have at least one amplitude");
    }
    require_finite(amp_, "pure state");
    const double residual = std::abs(amp_.norm() - 1.0);
    if (residual > tol) {
        throw Error(ErrorCode::NormViolation, "pure state is not normalized", "unit_norm", residual);
    }
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return PureState(std::move(v));
}

GramMatrix::GramMatrix(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
    check_hermitian(mat_, tol, "Gram matrix");
    double diag_residual = 0.0;
    for (Eigen::Index i = 0; i < mat_.rows(); ++i) {
        diag_residual = std::max(diag_residual, std::abs(mat_(i, i) - Complex(1.0, 0.0)));
    }
    if (diag_residual > tol) {
        throw Error(ErrorCode::InvariantViolation, "Gram matrix diagonal is not all ones", "unit_diagonal",
                    diag_residual);
    }
    check_psd(mat_, tol, "Gram matrix");
}

GramMatrix GramMatrix::identity(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return GramMatrix(ComplexMatrix::Identity(d, d));
}

GramMatrix GramMatrix::ones(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return GramMatrix(ComplexMatrix::Ones(d, d));
}

ProbingMatrix::ProbingMatrix(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
    if (mat_.rows() == 0 || mat_.cols() == 0) {
        throw Error(ErrorCode::InvalidArgument, "probing matrix must be non-empty");
    }
    require_finite(mat_, "probing matrix");
    double residual = 0.0;
    for (Eigen::Index i = 0; i < mat_.rows(); ++i) {
        residual = std::max(residual, std::abs(mat_.row(i).norm() - 1.0));
    }
    if (residual > tol) {
        throw Error(ErrorCode::NormViolation, "probing matrix rows must have unit norm", "unit_rows", residual);
    }
}

ProjectorSet::ProjectorSet(std::vector<ComplexMatrix> projectors, double tol) : projectors_(std::move(projectors)) {
    if (projectors_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "projector set must not be empty");
    }
    const Eigen::Index n = projectors_.front().rows();
    ComplexMatrix total = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < projectors_.size(); ++i) {
        const ComplexMatrix &p = projectors_[i];
        check_hermitian(p, kDefaultTol, "projector");
        if (p.rows() != n) {
            throw Error(ErrorCode::DimensionMismatch, "projectors have differing dimensions");
        }
        const double idem = max_norm(p * p - p);
        if (idem > tol) {
            throw Error(ErrorCode::InvariantViolation, "projector " + std::to_string(i) + " is not idempotent",
                        "idempotent", idem);
        }
        for (std::size_t j = 0; j < i; ++j) {
            const double overlap = max_norm(p * projectors_[j]);
            if (overlap > tol) {
                throw Error(ErrorCode::InvariantViolation,
                            "projectors " + std::to_string(j) + " and " + std::to_string(i) + " are not orthogonal",
                            "orthogonal", overlap);
            }
        }
        total += p;
    }
    const double completeness = max_norm(total - ComplexMatrix::Identity(n, n));
    if (completeness > tol) {
        throw Error(ErrorCode::InvariantViolation, "projectors do not sum to the identity", "complete",
                    completeness);
    }
}

ProjectorSet ProjectorSet::from_block_labels(std::span<const std::size_t> labels) {
    if (labels.empty()) {
        throw Error(ErrorCode::InvalidPartition, "empty block labelling");
    }
    std::size_t blocks = 0;
    for (std::size_t l : labels) {
        blocks = std::max(blocks, l + 1);
    }
    const auto n = static_cast<Eigen::Index>(labels.size());
    std::vector<ComplexMatrix> ps(blocks, ComplexMatrix::Zero(n, n));
    std::vector<bool> used(blocks, false);
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::size_t b = labels[static_cast<std::size_t>(i)];
        ps[b](i, i) = 1.0;
        used[b] = true;
    }
    for (std::size_t b = 0; b < blocks; ++b) {
        if (!used[b]) {
            throw Error(ErrorCode::InvalidPartition, "block " + std::to_string(b) + " is empty");
        }
    }
    return ProjectorSet(std::move(ps));
}

OutcomeEnsemble::OutcomeEnsemble(std::vector<Outcome> outcomes) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "ensemble must have at least one outcome");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < outcomes_.size(); ++k) {
        Outcome &o = outcomes_[k];
        if (!std::isfinite(o.probability) || o.probability < -kZeroProbability) {
            throw Error(ErrorCode::NotADistribution, "outcome " + std::to_string(k) + " has an invalid probability",
                        "nonnegative", o.probability);
        }
        if (o.probability <= kZeroProbability) {
            o.probability = 0.0;
            o.state.reset();
            continue;
        }
        if (!o.state) {
            throw Error(ErrorCode::InvariantViolation,
                        "outcome " + std::to_string(k) + " has positive probability but no state", "defined_state");
        }
        if (dim_ == 0) {
            dim_ = o.state->dim();
        } else if (o.state->dim() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "ensemble states have differing dimensions");
        }
        total += o.probability;
    }
    const double residual = std::abs(total - 1.0);
    if (residual > kDefaultTol) {
        throw Error(ErrorCode::NotADistribution, "outcome probabilities do not sum to 1", "normalized", residual);
    }
}

std::vector<double> OutcomeEnsemble::probabilities() const {
    std::vector<double> p;
    p.reserve(outcomes_.size());
    for (const Outcome &o : outcomes_) {
        p.push_back(o.probability);
    }
    return p;
}

DensityMatrix density_from_pure(const PureState &v) {
    const ComplexVector &a = v.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

double purity(const DensityMatrix &rho) {
    const ComplexMatrix &m = rho.matrix();
    // tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    return m.cwiseAbs2().sum();
}

GramMatrix gram_from_vectors(std::span<const PureState> vs) {
    if (vs.empty()) {
        throw Error(ErrorCode::InvalidArgument, "need at least one vector");
    }
    const std::size_t d = vs.front().dim();
    const auto n = static_cast<Eigen::Index>(vs.size());
    ComplexMatrix e(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const PureState &vi = vs[static_cast<std::size_t>(i)];
        if (vi.dim() != d) {
            throw Error(ErrorCode::DimensionMismatch, "vectors have differing lengths");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            e(i, j) = vs[static_cast<std::size_t>(j)].amplitudes().dot(vi.amplitudes());
        }
    }
    return GramMatrix(std::move(e));
}

GramMatrix gram_from_projectors(const ProjectorSet &ps) {
    const auto n = static_cast<Eigen::Index>(ps.dim());
    for (const ComplexMatrix &p : ps.projectors()) {
        ComplexMatrix off = p;
        off.diagonal().setZero();
        const double residual = max_norm(off);
        if (residual > kDefaultTol) {
            throw Error(ErrorCode::NotDiagonalBasis, "projector is not diagonal in the working basis", "diagonal",
                        residual);
        }
    }
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    for (const ComplexMatrix &p : ps.projectors()) {
        const Eigen::VectorXd d = p.diagonal().real();
        e += (d * d.transpose()).cast<Complex>();
    }
    return GramMatrix(std::move(e));
}

DensityMatrix maximally_mixed(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(n));
}

}  // namespace qbayes
