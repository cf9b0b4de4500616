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

#include <random>
#include <set>

#include "qbayes/error.hpp"
#include "qbayes/sampling.hpp"
#include "support.hpp"

using namespace qbayes;
using namespace qbayes::testing;

TEST(Rng, Mix64IsSplitmixFinalizer) {
    // First outputs of the reference splitmix64 generator seeded with 0.
    EXPECT_EQ(mix64(0), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(mix64(0x9E3779B97F4A7C15ULL), 0x6E789E6AA1B965F4ULL);
}

TEST(Rng, EngineIsSeededMt19937) {
    Rng rng(42);
    std::mt19937_64 ref(mix64(42));
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(rng.next_u64(), ref());
    }
}

TEST(Rng, Determinism) {
    Rng a(7);
    Rng b(7);
    for (int i = 0; i < 50; ++i) {
        EXPECT_EQ(a.next_u64(), b.next_u64());
    }
    const ComplexMatrix u1 = [] {
        Rng r(9);
        return haar_unitary(4, r);
    }();
    const ComplexMatrix u2 = [] {
        Rng r(9);
        return haar_unitary(4, r);
    }();
    EXPECT_EQ(u1, u2);
}

TEST(Rng, ChildStreamsAreIndependentOfParentState) {
    Rng parent(5);
    const Rng c1 = parent.child(3);
    parent.next_u64();
    const Rng c2 = parent.child(3);
    EXPECT_EQ(c1.seed(), c2.seed());
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        seeds.insert(parent.child(i).seed());
    }
    EXPECT_EQ(seeds.size(), 1000u);
}

TEST(Rng, UniformRanges) {
    Rng rng(6);
    std::vector<int> counts(5, 0);
    for (int i = 0; i < 50000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ++counts[rng.uniform_index(5)];
    }
    for (int c : counts) {
        EXPECT_NEAR(c / 50000.0, 0.2, 0.01);
    }
    EXPECT_THROW(rng.uniform_index(0), Error);
}

TEST(Rng, ComplexNormalSecondMoment) {
    Rng rng(8);
    double sum = 0.0;
    Complex mean = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const Complex z = rng.complex_normal();
        sum += std::norm(z);
        mean += z;
    }
    EXPECT_NEAR(sum / n, 1.0, 0.02);
    EXPECT_LT(std::abs(mean / static_cast<double>(n)), 0.02);
}

TEST(HaarUnitary, ScalarCase) {
    Rng rng(81);
    const ComplexMatrix u = haar_unitary(1, rng);
    ASSERT_EQ(u.rows(), 1);
    EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
}

TEST(HaarUnitary, UnitaryAcrossSizes) {
    Rng rng(82);
    for (std::size_t n = 1; n <= 16; ++n) {
        const ComplexMatrix u = haar_unitary(n, rng);
        EXPECT_LE(max_norm(u.adjoint() * u - ComplexMatrix::Identity(n, n)), 1e-10);
    }
}

TEST(HaarUnitary, SecondMoment) {
    Rng rng(83);
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
        sum += std::norm(haar_unitary(2, rng)(0, 0));
    }
    EXPECT_NEAR(sum / 10000.0, 0.5, 0.02);
}

TEST(RandomDensity, Examples) {
    Rng rng(84);
    EXPECT_LE(max_norm(random_density(1, rng).matrix() - mat(1, 1, {1.0})), 1e-15);
    for (std::size_t n = 1; n <= 8; ++n) {
        const DensityMatrix rho = random_density(n, rng);
        const Spectrum s = hermitian_spectrum(rho.matrix());
        EXPECT_GE(s[n - 1], 0.0);
        EXPECT_NEAR(s.sum(), 1.0, 1e-10);
    }
}

TEST(RandomDensity, MeanIsMaximallyMixed) {
    Rng rng(85);
    ComplexMatrix mean = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 10000; ++i) {
        mean += random_density(2, rng).matrix();
    }
    mean /= 10000.0;
    EXPECT_LE(max_norm(mean - diag({0.5, 0.5})), 0.02);
}

TEST(RandomGram, OneDimensionalResponsesAreRankOne) {
    Rng rng(86);
    const GramMatrix e = random_gram(4, 1, rng);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT_NEAR(std::abs(e.matrix()(i, j)), 1.0, 1e-12);
        }
    }
    const Spectrum s = hermitian_spectrum(e.matrix());
    EXPECT_NEAR(s[0], 4.0, 1e-12);
    EXPECT_NEAR(s[1], 0.0, 1e-12);
}

TEST(RandomGram, EntriesBounded) {
    Rng rng(87);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t d = 1; d <= 8; ++d) {
            const GramMatrix e = random_gram(n, d, rng);
            EXPECT_LE(e.matrix().cwiseAbs().maxCoeff(), 1.0 + 1e-12);
        }
    }
}

TEST(RandomProbing, UnitRows) {
    Rng rng(88);
    const ProbingMatrix s = random_probing(5, 3, rng);
    for (int i = 0; i < 5; ++i) {
        EXPECT_NEAR(s.matrix().row(i).norm(), 1.0, 1e-10);
    }
}

TEST(RandomProjectorPartition, TwoPlusTwo) {
    Rng rng(89);
    const std::vector<std::size_t> blocks = {2, 2};
    const ProjectorSet ps = random_projector_partition(4, blocks, rng);
    ASSERT_EQ(ps.size(), 2u);
    for (const ComplexMatrix &p : ps.projectors()) {
        EXPECT_LE(max_abs_diff(hermitian_spectrum(p).vec(), {1, 1, 0, 0}), 1e-12);
    }
}

TEST(RandomProjectorPartition, InvalidPartition) {
    Rng rng(90);
    const std::vector<std::size_t> short_blocks = {2, 1};
    const std::vector<std::size_t> zero_block = {4, 0};
    EXPECT_EQ(error_code_of([&] { random_projector_partition(4, short_blocks, rng); }), ErrorCode::InvalidPartition);
    EXPECT_EQ(error_code_of([&] { random_projector_partition(4, zero_block, rng); }), ErrorCode::InvalidPartition);
}

TEST(Properties, SamplerOutputsValidate) {
    Rng rng(91);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int t = 0; t < 20; ++t) {
            EXPECT_NO_THROW(DensityMatrix(random_density(n, rng).matrix()));
            EXPECT_NO_THROW(PureState(random_pure(n, rng).amplitudes()));
            EXPECT_NO_THROW(GramMatrix(random_gram(n, 1 + rng.uniform_index(n + 1), rng).matrix()));
            EXPECT_NO_THROW(ProbingMatrix(random_probing(n, 1 + rng.uniform_index(n + 1), rng).matrix()));
            EXPECT_TRUE(is_hermitian(random_hermitian(n, rng)));
            const std::vector<std::size_t> blocks = random_block_sizes(n, rng);
            std::size_t total = 0;
            for (std::size_t b : blocks) {
                EXPECT_GT(b, 0u);
                total += b;
            }
            EXPECT_EQ(total, n);
            EXPECT_NO_THROW(ProjectorSet(random_projector_partition(n, blocks, rng).projectors()));
            const ProjectorSet diag_ps = random_diagonal_partition(n, rng);
            EXPECT_NO_THROW(gram_from_projectors(diag_ps));
        }
    }
}
