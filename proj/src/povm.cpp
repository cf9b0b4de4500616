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

#include "qbayes/povm.hpp"

#include <cmath>
#include <numbers>

#include "qbayes/processes.hpp"

namespace qbayes {

namespace {

ComplexMatrix identity(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return ComplexMatrix::Identity(d, d);
}

ComplexMatrix projector_onto(const ComplexVector &v) {
    return v * v.adjoint();
}

}  // namespace

Povm::Povm(std::size_t object_dim, std::size_t ancilla_dim, DensityMatrix ancilla_state, ComplexMatrix joint_unitary,
           ProjectorSet joint_projectors)
    : object_dim_(object_dim),
      ancilla_dim_(ancilla_dim),
      ancilla_state_(std::move(ancilla_state)),
      joint_unitary_(std::move(joint_unitary)),
      joint_projectors_(std::move(joint_projectors)) {
    if (object_dim_ == 0 || ancilla_dim_ == 0) {
        throw Error(ErrorCode::DimensionMismatch, "POVM dimensions must be positive");
    }
    const std::size_t joint = object_dim_ * ancilla_dim_;
    if (ancilla_state_.dim() != ancilla_dim_) {
        throw Error(ErrorCode::DimensionMismatch, "ancilla state has dimension " +
                                                      std::to_string(ancilla_state_.dim()) + ", expected " +
                                                      std::to_string(ancilla_dim_));
    }
    require_square(joint_unitary_, "joint unitary");
    require_finite(joint_unitary_, "joint unitary");
    if (static_cast<std::size_t>(joint_unitary_.rows()) != joint) {
        throw Error(ErrorCode::DimensionMismatch, "joint unitary must act on the " + std::to_string(joint) +
                                                      "-dimensional object-ancilla space");
    }
    const double unitarity = max_norm(joint_unitary_.adjoint() * joint_unitary_ - identity(joint));
    if (unitarity > kDefaultTol) {
        throw Error(ErrorCode::InvariantViolation, "joint unitary is not unitary", "unitary", unitarity);
    }
    if (joint_projectors_.dim() != joint) {
        throw Error(ErrorCode::DimensionMismatch, "joint projectors must act on the object-ancilla space");
    }
}

bool Povm::has_pure_ancilla() const {
    return std::abs(purity(ancilla_state_) - 1.0) <= kDefaultTol;
}

Povm Povm::purified() const {
    if (has_pure_ancilla()) {
        return *this;
    }
    const PureState pure = purify_ancilla(ancilla_state_);
    const ComplexMatrix copy_identity = identity(ancilla_dim_);
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(joint_projectors_.size());
    for (const ComplexMatrix &p : joint_projectors_.projectors()) {
        projectors.push_back(tensor_product(p, copy_identity));
    }
    return Povm(object_dim_, ancilla_dim_ * ancilla_dim_, density_from_pure(pure),
                tensor_product(joint_unitary_, copy_identity), ProjectorSet(std::move(projectors)));
}

OutcomeEnsemble apply_povm(const DensityMatrix &rho, const Povm &m) {
    if (rho.dim() != m.object_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                                      " does not match POVM object dimension " +
                                                      std::to_string(m.object_dim()));
    }
    const Povm pure = m.purified();
    const ComplexMatrix &u = pure.joint_unitary();
    const ComplexMatrix joint = u * tensor_product(rho.matrix(), pure.ancilla_state().matrix()) * u.adjoint();
    std::vector<Outcome> outcomes;
    outcomes.reserve(pure.joint_projectors().size());
    for (const ComplexMatrix &p : pure.joint_projectors().projectors()) {
        ComplexMatrix chi = partial_trace(p * joint * p, pure.object_dim(), pure.ancilla_dim(), Keep::First);
        const double prob = chi.trace().real();
        if (prob <= kZeroProbability) {
            outcomes.push_back(Outcome{std::max(prob, 0.0), std::nullopt});
            continue;
        }
        chi /= prob;
        outcomes.push_back(Outcome{prob, DensityMatrix(std::move(chi), std::max(kDefaultTol, 1e-15 / prob))});
    }
    return OutcomeEnsemble(std::move(outcomes));
}

PurityClassification classify_purity(const Povm &m, double tol) {
    const Povm pure = m.purified();
    const std::size_t n = pure.object_dim();
    const std::size_t d = pure.ancilla_dim();
    const ComplexMatrix object_identity = identity(n);
    PurityClassification out;
    std::size_t k = 0;
    for (const ComplexMatrix &p : pure.joint_projectors().projectors()) {
        const ComplexMatrix reduced = partial_trace(p, n, d, Keep::Second) / static_cast<double>(n);
        const double idempotency = max_norm(reduced * reduced - reduced);
        const double rank_gap = std::abs(reduced.trace().real() - 1.0);
        if (idempotency > tol || rank_gap > tol) {
            out.reason = "projector " + std::to_string(k) + " does not reduce to a rank-1 ancilla projector";
            out.ancilla_basis.clear();
            return out;
        }
        if (max_norm(p - tensor_product(object_identity, reduced)) > tol) {
            out.reason = "projector " + std::to_string(k) + " is not of the form I (x) |a><a|";
            out.ancilla_basis.clear();
            return out;
        }
        const HermitianEigen eig = hermitian_eigen(reduced, tol);
        out.ancilla_basis.push_back(eig.vectors.col(0));
        ++k;
    }
    for (std::size_t i = 0; i < out.ancilla_basis.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(std::abs(out.ancilla_basis[j].dot(out.ancilla_basis[i])) - expected) > tol) {
                out.reason = "recovered ancilla states are not orthonormal";
                out.ancilla_basis.clear();
                return out;
            }
        }
    }
    out.purity_preserving = true;
    return out;
}

bool is_purity_preserving(const Povm &m, double tol) {
    return classify_purity(m, tol).purity_preserving;
}

PovmExample counterexample_1() {
    const double s = 1.0 / std::numbers::sqrt2;
    // Basis order |00>, |01>, |10>, |11> with the object factor first.
    std::vector<ComplexVector> bell(4, ComplexVector::Zero(4));
    bell[0] << s, 0.0, 0.0, s;
    bell[1] << s, 0.0, 0.0, -s;
    bell[2] << 0.0, s, s, 0.0;
    bell[3] << 0.0, s, -s, 0.0;
    std::vector<ComplexMatrix> projectors;
    for (const ComplexVector &v : bell) {
        projectors.push_back(projector_onto(v));
    }
    const DensityMatrix zero = density_from_pure(PureState::basis(2, 0));
    return PovmExample{Povm(2, 2, zero, identity(4), ProjectorSet(std::move(projectors))), zero};
}

PovmExample counterexample_2() {
    ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
    swap(0, 0) = 1.0;
    swap(1, 2) = 1.0;
    swap(2, 1) = 1.0;
    swap(3, 3) = 1.0;
    std::vector<ComplexMatrix> projectors;
    for (std::size_t k = 0; k < 2; ++k) {
        projectors.push_back(tensor_product(identity(2), density_from_pure(PureState::basis(2, k)).matrix()));
    }
    const DensityMatrix zero = density_from_pure(PureState::basis(2, 0));
    return PovmExample{Povm(2, 2, zero, swap, ProjectorSet(std::move(projectors))), maximally_mixed(2)};
}

Povm probing_as_povm(std::span<const PureState> responses) {
    const ComplexMatrix u = probing_joint_unitary(responses);
    const std::size_t n = responses.size();
    const std::size_t d = responses.front().dim();
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        projectors.push_back(tensor_product(identity(n), density_from_pure(PureState::basis(d, k)).matrix()));
    }
    return Povm(n, d, density_from_pure(PureState::basis(d, 0)), u, ProjectorSet(std::move(projectors)));
}

PureState purify_ancilla(const DensityMatrix &rho_a) {
    const HermitianEigen eig = hermitian_eigen(rho_a.matrix());
    const auto d = static_cast<Eigen::Index>(rho_a.dim());
    ComplexVector out = ComplexVector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const double w = std::max(eig.values[static_cast<std::size_t>(i)], 0.0);
        if (w == 0.0) {
            continue;
        }
        const ComplexVector a = eig.vectors.col(i);
        out += std::sqrt(w) * tensor_product(a, a).col(0);
    }
    // Clamping tiny negative weights can leave the norm a hair off 1.
    out.normalize();
    return PureState(std::move(out));
}

Povm random_pppovm(std::size_t object_dim, std::size_t ancilla_dim, Rng &rng) {
    const ComplexMatrix u = haar_unitary(object_dim * ancilla_dim, rng);
    const DensityMatrix ancilla = density_from_pure(random_pure(ancilla_dim, rng));
    const ComplexMatrix basis = haar_unitary(ancilla_dim, rng);
    std::vector<ComplexMatrix> projectors;
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
        projectors.push_back(tensor_product(identity(object_dim), projector_onto(basis.col(k))));
    }
    return Povm(object_dim, ancilla_dim, ancilla, u, ProjectorSet(std::move(projectors)));
}

Povm random_general_povm(std::size_t object_dim, std::size_t ancilla_dim, Rng &rng) {
    const std::size_t joint = object_dim * ancilla_dim;
    const ComplexMatrix u = haar_unitary(joint, rng);
    const DensityMatrix ancilla = density_from_pure(random_pure(ancilla_dim, rng));
    const std::vector<std::size_t> sizes = random_block_sizes(joint, rng);
    return Povm(object_dim, ancilla_dim, ancilla, u, random_projector_partition(joint, sizes, rng));
}

}  // namespace qbayes
