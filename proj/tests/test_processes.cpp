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

#include <gtest/gtest.h>

#include <numbers>

#include "qbayes/error.hpp"
#include "qbayes/processes.hpp"
#include "qbayes/sampling.hpp"
#include "support.hpp"

using namespace qbayes;
using namespace qbayes::testing;

namespace {

const double kR = std::numbers::sqrt2 / 2.0;

ProbingMatrix half_probing() {
    return ProbingMatrix(mat(2, 2, {1.0, 0.0, kR, kR}));
}

// Direct componentwise evaluation of p_k and rho^(k).
std::pair<double, ComplexMatrix> bayes_oracle(const ComplexMatrix &rho, const ComplexMatrix &s, Eigen::Index k) {
    double p = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        p += rho(i, i).real() * std::norm(s(i, k));
    }
    ComplexMatrix out(rho.rows(), rho.cols());
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            out(i, j) = rho(i, j) * s(i, k) * std::conj(s(j, k)) / p;
        }
    }
    return {p, out};
}

}  // namespace

TEST(Decohere, VonNeumannReduction) {
    const DensityMatrix out = decohere(DensityMatrix(plus_state()), GramMatrix::identity(2));
    EXPECT_LE(max_norm(out.matrix() - diag({0.5, 0.5})), 1e-15);
}

TEST(Decohere, OnesIsTrivial) {
    Rng rng(41);
    const DensityMatrix rho = random_density(5, rng);
    EXPECT_EQ(decohere(rho, GramMatrix::ones(5)).matrix(), rho.matrix());
}

TEST(Decohere, PartialOverlap) {
    const DensityMatrix out = decohere(DensityMatrix(plus_state()), GramMatrix(mat(2, 2, {1.0, 0.6, 0.6, 1.0})));
    EXPECT_LE(max_norm(out.matrix() - mat(2, 2, {0.5, 0.3, 0.3, 0.5})), 1e-15);
}

TEST(Decohere, ShapeMismatch) {
    EXPECT_EQ(error_code_of([] { decohere(maximally_mixed(2), GramMatrix::identity(3)); }), ErrorCode::ShapeMismatch);
}

TEST(Observe, PlusStateCompleteMeasurement) {
    const OutcomeEnsemble ens = observe(DensityMatrix(plus_state()), ProbingMatrix(ComplexMatrix::Identity(2, 2)));
    ASSERT_EQ(ens.size(), 2u);
    EXPECT_NEAR(ens.probabilities()[0], 0.5, 1e-15);
    EXPECT_NEAR(ens.probabilities()[1], 0.5, 1e-15);
    EXPECT_LE(max_norm(ens.outcomes()[0].state->matrix() - diag({1, 0})), 1e-15);
    EXPECT_LE(max_norm(ens.outcomes()[1].state->matrix() - diag({0, 1})), 1e-15);
}

TEST(Observe, BasisStateIsFixed) {
    Rng rng(42);
    const DensityMatrix zero(diag({1, 0, 0}));
    for (int t = 0; t < 10; ++t) {
        const OutcomeEnsemble ens = observe(zero, random_probing(3, 4, rng));
        for (const Outcome &o : ens.outcomes()) {
            if (o.probability > 0.0) {
                EXPECT_LE(max_norm(o.state->matrix() - zero.matrix()), 1e-12);
            }
        }
    }
}

TEST(Observe, HalfProbingExactValues) {
    const OutcomeEnsemble ens = observe(DensityMatrix(plus_state()), half_probing());
    EXPECT_NEAR(ens.probabilities()[0], 0.75, 1e-15);
    EXPECT_NEAR(ens.probabilities()[1], 0.25, 1e-15);
    const double s2 = std::numbers::sqrt2 / 3.0;
    EXPECT_LE(max_norm(ens.outcomes()[0].state->matrix() - mat(2, 2, {2.0 / 3.0, s2, s2, 1.0 / 3.0})), 1e-15);
    EXPECT_LE(max_norm(ens.outcomes()[1].state->matrix() - diag({0, 1})), 1e-15);
}

TEST(Observe, MatchesComponentwiseOracle) {
    Rng rng(43);
    for (std::size_t n = 2; n <= 6; ++n) {
        const DensityMatrix rho = random_density(n, rng);
        const ProbingMatrix s = random_probing(n, n + 1, rng);
        const OutcomeEnsemble ens = observe(rho, s);
        double total = 0.0;
        for (std::size_t k = 0; k < ens.size(); ++k) {
            const auto [p, state] = bayes_oracle(rho.matrix(), s.matrix(), static_cast<Eigen::Index>(k));
            EXPECT_NEAR(ens.probabilities()[k], p, 1e-14);
            EXPECT_LE(max_norm(ens.outcomes()[k].state->matrix() - state), 1e-12);
            total += ens.probabilities()[k];
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
    }
}

TEST(Observe, ShapeMismatch) {
    EXPECT_EQ(error_code_of([] { observe(maximally_mixed(3), half_probing()); }), ErrorCode::ShapeMismatch);
}

TEST(ResponseGram, Examples) {
    EXPECT_EQ(response_gram(ProbingMatrix(ComplexMatrix::Identity(3, 3))).matrix(), ComplexMatrix::Identity(3, 3));
    const ComplexMatrix same = mat(3, 2, {0.6, 0.8, 0.6, 0.8, 0.6, 0.8});
    EXPECT_LE(max_norm(response_gram(ProbingMatrix(same)).matrix() - ComplexMatrix::Ones(3, 3)), 1e-15);
    EXPECT_LE(max_norm(response_gram(half_probing()).matrix() - mat(2, 2, {1.0, kR, kR, 1.0})), 1e-15);
}

TEST(EnsembleAverage, Examples) {
    const DensityMatrix rho(diag({0.2, 0.8}));
    EXPECT_EQ(ensemble_average(OutcomeEnsemble({Outcome{1.0, rho}})).matrix(), rho.matrix());
}

TEST(Luders, Examples) {
    Rng rng(44);
    const DensityMatrix rho = random_density(3, rng);
    EXPECT_LE(max_norm(luders(rho, ProjectorSet({ComplexMatrix::Identity(3, 3)})).matrix() - rho.matrix()), 1e-15);

    const DensityMatrix plus(plus_state());
    EXPECT_LE(max_norm(luders(plus, ProjectorSet({diag({1, 0}), diag({0, 1})})).matrix() - diag({0.5, 0.5})), 1e-15);

    ComplexMatrix masked = rho.matrix();
    masked(0, 2) = masked(2, 0) = masked(1, 2) = masked(2, 1) = 0.0;
    EXPECT_LE(max_norm(luders(rho, ProjectorSet({diag({1, 1, 0}), diag({0, 0, 1})})).matrix() - masked), 1e-15);
}

TEST(VonNeumannReduce, Examples) {
    const DensityMatrix d(diag({0.1, 0.6, 0.3}));
    EXPECT_EQ(von_neumann_reduce(d).matrix(), d.matrix());
    EXPECT_LE(max_norm(von_neumann_reduce(DensityMatrix(plus_state())).matrix() - diag({0.5, 0.5})), 1e-15);
    Rng rng(45);
    const DensityMatrix rho = random_density(4, rng);
    const ComplexMatrix out = von_neumann_reduce(rho).matrix();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT_EQ(out(i, j), i == j ? rho.matrix()(i, j) : Complex(0.0));
        }
    }
}

TEST(Triviality, PhaseProbingIsTrivial) {
    Rng rng(46);
    for (std::size_t n = 2; n <= 5; ++n) {
        const std::size_t m = n + 1;
        ComplexMatrix s(n, m);
        std::vector<double> theta(n), phi(m);
        for (double &x : theta) {
            x = 2 * std::numbers::pi * rng.uniform();
        }
        for (double &x : phi) {
            x = 2 * std::numbers::pi * rng.uniform();
        }
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                s(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(m)), theta[j] + phi[k]);
            }
        }
        EXPECT_TRUE(is_trivial_probing_for(random_density(n, rng), ProbingMatrix(s), 1e-9));
    }
}

TEST(Triviality, ProbingExamples) {
    const ProbingMatrix id(ComplexMatrix::Identity(2, 2));
    EXPECT_FALSE(is_trivial_probing_for(DensityMatrix(diag({0.7, 0.3})), id, 1e-9));
    EXPECT_TRUE(is_trivial_probing_for(DensityMatrix(diag({1, 0})), id, 1e-9));
    EXPECT_TRUE(is_trivial_probing_for(DensityMatrix(plus_state()), id, 1e-9));
}

TEST(Triviality, DecoherenceExamples) {
    Rng rng(47);
    const DensityMatrix d(diag({0.1, 0.6, 0.3}));
    EXPECT_TRUE(is_trivial_decoherence_for(d, random_gram(3, 2, rng), 1e-9));
    EXPECT_TRUE(is_trivial_decoherence_for(random_density(3, rng), GramMatrix::ones(3), 1e-9));
    EXPECT_FALSE(is_trivial_decoherence_for(DensityMatrix(plus_state()), GramMatrix::identity(2), 1e-9));
}

TEST(ProbingJointUnitary, IdenticalResponsesGiveIdentity) {
    const std::vector<PureState> rs(3, PureState::basis(2, 0));
    EXPECT_LE(max_norm(probing_joint_unitary(rs) - ComplexMatrix::Identity(6, 6)), 1e-15);
}

TEST(ProbingJointUnitary, OrthonormalResponsesActLikeCnot) {
    const std::vector<PureState> rs = {PureState::basis(2, 0), PureState::basis(2, 1)};
    const ComplexMatrix u = probing_joint_unitary(rs);
    EXPECT_TRUE(is_unitary(u));
    // Columns for |o_i>|e*> are |o_i>|eps_i>.
    for (std::size_t i = 0; i < 2; ++i) {
        const ComplexVector in = tensor_product(PureState::basis(2, i).amplitudes(), PureState::basis(2, 0).amplitudes());
        const ComplexVector want = tensor_product(PureState::basis(2, i).amplitudes(), rs[i].amplitudes());
        EXPECT_LE(max_norm(u * in - want), 1e-15);
    }
    const ComplexMatrix cnot = mat(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    EXPECT_LE(max_norm(u - cnot), 1e-15);
}

TEST(ProbingJointUnitary, ReproducesDecoherence) {
    Rng rng(48);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t d = 1; d <= 4; ++d) {
            std::vector<PureState> rs;
            for (std::size_t i = 0; i < n; ++i) {
                rs.push_back(random_pure(d, rng));
            }
            const ComplexMatrix u = probing_joint_unitary(rs);
            EXPECT_TRUE(is_unitary(u, 1e-10));
            const DensityMatrix rho = random_density(n, rng);
            const ComplexMatrix joint = u * tensor_product(rho.matrix(), diag_unit(d)) * u.adjoint();
            const ComplexMatrix reduced = partial_trace(joint, n, d, Keep::First);
            EXPECT_LE(max_norm(reduced - decohere(rho, gram_from_vectors(rs)).matrix()), 1e-12);
        }
    }
}

TEST(Properties, ConsistencyIdentity) {
    Rng rng(49);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int t = 0; t < 20; ++t) {
            const DensityMatrix rho = random_density(n, rng);
            const ProbingMatrix s = random_probing(n, 1 + rng.uniform_index(n + 2), rng);
            const double dev =
                max_norm(ensemble_average(observe(rho, s)).matrix() - decohere(rho, response_gram(s)).matrix());
            EXPECT_LE(dev, 1e-12);
        }
    }
}

TEST(Properties, TracePreservation) {
    Rng rng(50);
    for (std::size_t n = 2; n <= 8; ++n) {
        const DensityMatrix rho = random_density(n, rng);
        EXPECT_NEAR(decohere(rho, random_gram(n, 2, rng)).matrix().trace().real(), 1.0, 1e-12);
        double total = 0.0;
        for (double p : observe(rho, random_probing(n, 3, rng)).probabilities()) {
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
    }
}

TEST(Properties, ProbingPreservesPurity) {
    Rng rng(51);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int t = 0; t < 10; ++t) {
            const OutcomeEnsemble ens = observe(density_from_pure(random_pure(n, rng)), random_probing(n, n, rng));
            for (const Outcome &o : ens.outcomes()) {
                if (o.probability > 1e-12) {
                    EXPECT_NEAR(purity(*o.state), 1.0, 1e-9);
                }
            }
        }
    }
}

TEST(Properties, LudersEquivalence) {
    Rng rng(52);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int t = 0; t < 10; ++t) {
            const DensityMatrix rho = random_density(n, rng);
            const ProjectorSet ps = random_diagonal_partition(n, rng);
            EXPECT_LE(max_norm(luders(rho, ps).matrix() - decohere(rho, gram_from_projectors(ps)).matrix()), 1e-12);
        }
    }
}
