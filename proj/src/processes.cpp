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

#include "qbayes/processes.hpp"

#include <string>

namespace qbayes {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw Error(ErrorCode::ShapeMismatch,
                    std::string(what) + ": dimensions " + std::to_string(a) + " and " + std::to_string(b) + " differ");
    }
}

// Outcome states are normalized by p_k, so absolute round-off in the
// unnormalized matrix is amplified by 1/p_k.
double outcome_tolerance(double p) {
    return std::max(kDefaultTol, 1e-15 / p);
}

}  // namespace

DensityMatrix decohere(const DensityMatrix &rho, const GramMatrix &e) {
    require_same_dim(rho.dim(), e.dim(), "decohere");
    return DensityMatrix(schur_product(rho.matrix(), e.matrix()));
}

OutcomeEnsemble observe(const DensityMatrix &rho, const ProbingMatrix &s) {
    require_same_dim(rho.dim(), s.object_dim(), "observe");
    const ComplexMatrix &r = rho.matrix();
    const ComplexMatrix &sm = s.matrix();
    const Eigen::Index n = r.rows();
    std::vector<Outcome> outcomes;
    outcomes.reserve(s.outcome_count());
    for (Eigen::Index k = 0; k < sm.cols(); ++k) {
        double p = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            p += r(i, i).real() * std::norm(sm(i, k));
        }
        if (p <= kZeroProbability) {
            outcomes.push_back(Outcome{0.0, std::nullopt});
            continue;
        }
        const ComplexVector col = sm.col(k);
        ComplexMatrix post = r.cwiseProduct(col * col.adjoint()) / p;
        outcomes.push_back(Outcome{p, DensityMatrix(std::move(post), outcome_tolerance(p))});
    }
    return OutcomeEnsemble(std::move(outcomes));
}

GramMatrix response_gram(const ProbingMatrix &s) {
    return GramMatrix(s.matrix() * s.matrix().adjoint());
}

DensityMatrix ensemble_average(const OutcomeEnsemble &ens) {
    const auto n = static_cast<Eigen::Index>(ens.dim());
    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    for (const Outcome &o : ens.outcomes()) {
        if (o.state) {
            acc += o.probability * o.state->matrix();
        }
    }
    return DensityMatrix(std::move(acc));
}

DensityMatrix luders(const DensityMatrix &rho, const ProjectorSet &ps) {
    require_same_dim(rho.dim(), ps.dim(), "luders");
    const auto n = static_cast<Eigen::Index>(rho.dim());
    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    for (const ComplexMatrix &p : ps.projectors()) {
        acc += p * rho.matrix() * p;
    }
    return DensityMatrix(std::move(acc));
}

DensityMatrix von_neumann_reduce(const DensityMatrix &rho) {
    return decohere(rho, GramMatrix::identity(rho.dim()));
}

bool is_trivial_probing_for(const DensityMatrix &rho, const ProbingMatrix &s, double tol) {
    const Spectrum initial = hermitian_spectrum(rho.matrix());
    const OutcomeEnsemble ens = observe(rho, s);
    for (const Outcome &o : ens.outcomes()) {
        if (!o.state) {
            continue;
        }
        if (spectrum_distance(hermitian_spectrum(o.state->matrix()), initial) >
            tol) {
            return false;
        }
    }
    return true;
}

bool is_trivial_decoherence_for(const DensityMatrix &rho, const GramMatrix &e, double tol) {
    const DensityMatrix after = decohere(rho, e);
    return spectrum_distance(hermitian_spectrum(after.matrix()), hermitian_spectrum(rho.matrix())) <= tol;
}

namespace {

// Unitary whose first column is `first`; remaining columns come from
// Gram-Schmidt over the standard basis, skipping near-dependent candidates.
ComplexMatrix complete_unitary(const ComplexVector &first) {
    const Eigen::Index d = first.size();
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    u.col(0) = first;
    Eigen::Index filled = 1;
    for (Eigen::Index b = 0; b < d && filled < d; ++b) {
        ComplexVector v = ComplexVector::Unit(d, b);
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index c = 0; c < filled; ++c) {
                v -= u.col(c).dot(v) * u.col(c);
            }
        }
        const double norm = v.norm();
        if (norm < 1e-8) {
            continue;
        }
        u.col(filled++) = v / norm;
    }
    return u;
}

}  // namespace

ComplexMatrix probing_joint_unitary(std::span<const PureState> responses) {
    if (responses.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "need at least one response state");
    }
    const auto d = static_cast<Eigen::Index>(responses.front().dim());
    const auto n = static_cast<Eigen::Index>(responses.size());
    ComplexMatrix u = ComplexMatrix::Zero(n * d, n * d);
    for (Eigen::Index i = 0; i < n; ++i) {
        const PureState &r = responses[static_cast<std::size_t>(i)];
        if (static_cast<Eigen::Index>(r.dim()) != d) {
            throw Error(ErrorCode::DimensionMismatch, "response states have differing dimensions");
        }
        u.block(i * d, i * d, d, d) = complete_unitary(r.amplitudes());
    }
    return u;
}

}  // namespace qbayes
