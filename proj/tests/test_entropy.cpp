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

#include <cmath>
#include <numbers>

#include "qbayes/entropy.hpp"
#include "qbayes/error.hpp"
#include "qbayes/processes.hpp"
#include "qbayes/sampling.hpp"
#include "support.hpp"

using namespace qbayes;
using namespace qbayes::testing;

namespace {

// Scalar oracle: -sum x ln x.
double shannon(const std::vector<double> &xs) {
    double s = 0.0;
    for (double x : xs) {
        if (x > 0.0) {
            s -= x * std::log(x);
        }
    }
    return s;
}

DensityMatrix diag_density(const std::vector<double> &xs) {
    ComplexMatrix m = ComplexMatrix::Zero(xs.size(), xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        m(i, i) = xs[i];
    }
    return DensityMatrix(m);
}

}  // namespace

TEST(EntropyOfSpectrum, VonNeumann) {
    const EntropyFunctional vn = EntropyFunctional::von_neumann();
    EXPECT_NEAR(entropy_of_spectrum(Spectrum({0.5, 0.5}), vn), std::numbers::ln2, 1e-15);
    EXPECT_EQ(entropy_of_spectrum(Spectrum({1.0, 0.0}), vn), 0.0);
}

TEST(EntropyOfSpectrum, RenyiTwoOrientation) {
    const EntropyFunctional r2 = EntropyFunctional::renyi(2.0);
    EXPECT_NEAR(entropy_of_spectrum(Spectrum({0.5, 0.5}), r2), -0.5, 1e-15);
    EXPECT_NEAR(entropy_of_spectrum(Spectrum({1.0, 0.0}), r2), -1.0, 1e-15);
}

TEST(EntropyOfSpectrum, RenyiHalf) {
    const EntropyFunctional r = EntropyFunctional::renyi(0.5);
    EXPECT_NEAR(entropy_of_spectrum(Spectrum({0.5, 0.5}), r), std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(entropy_of_spectrum(Spectrum({1.0, 0.0}), r), 1.0, 1e-15);
}

TEST(EntropyOfSpectrum, LogDet) {
    const EntropyFunctional ld = EntropyFunctional::log_det();
    EXPECT_NEAR(entropy_of_spectrum(Spectrum({0.5, 0.5}), ld), 2.0 * std::log(0.5), 1e-15);
    EXPECT_EQ(entropy_of_spectrum(Spectrum({1.0, 0.0}), ld), kNegativeInfinity);
    EXPECT_EQ(entropy_of_spectrum(Spectrum({1.0 - 1e-15, 1e-15}), ld), kNegativeInfinity);
    EXPECT_NEAR(entropy_of_spectrum(Spectrum({1.0 - 1e-15, 1e-15}), EntropyFunctional::renyi(0.5)), 1.0, 1e-15);
}

TEST(EntropyOfSpectrum, ClampsRoundoff) {
    const EntropyFunctional vn = EntropyFunctional::von_neumann();
    EXPECT_EQ(entropy_of_spectrum(Spectrum({1.0 + 5e-11, -5e-11}), vn), 0.0);
}

TEST(EntropyOfSpectrum, NotADistribution) {
    const EntropyFunctional vn = EntropyFunctional::von_neumann();
    EXPECT_EQ(error_code_of([&] { entropy_of_spectrum(Spectrum({0.5, 0.6}), vn); }), ErrorCode::NotADistribution);
    EXPECT_EQ(error_code_of([&] { entropy_of_spectrum(Spectrum({1.5, -0.5}), vn); }), ErrorCode::NotADistribution);
}

TEST(Entropy, Examples) {
    const EntropyFunctional vn = EntropyFunctional::von_neumann();
    EXPECT_NEAR(entropy(maximally_mixed(2), vn), std::numbers::ln2, 1e-15);
    EXPECT_NEAR(entropy(DensityMatrix(plus_state()), vn), 0.0, 1e-14);
    EXPECT_NEAR(entropy(DensityMatrix(diag({0.7, 0.3})), EntropyFunctional::linear()), 0.42, 1e-15);
}

TEST(Entropy, MatchesScalarOracleOnDiagonalStates) {
    Rng rng(61);
    for (std::size_t n = 2; n <= 8; ++n) {
        std::vector<double> xs(n);
        double total = 0.0;
        for (double &x : xs) {
            x = rng.uniform() + 0.01;
            total += x;
        }
        double lin = 0.0, r05 = 0.0, r2 = 0.0, ld = 0.0;
        for (double &x : xs) {
            x /= total;
            lin += x - x * x;
            r05 += std::sqrt(x);
            r2 -= x * x;
            ld += std::log(x);
        }
        const DensityMatrix rho = diag_density(xs);
        EXPECT_NEAR(entropy(rho, EntropyFunctional::von_neumann()), shannon(xs), 1e-12);
        EXPECT_NEAR(entropy(rho, EntropyFunctional::linear()), lin, 1e-12);
        EXPECT_NEAR(entropy(rho, EntropyFunctional::renyi(0.5)), r05, 1e-12);
        EXPECT_NEAR(entropy(rho, EntropyFunctional::renyi(2.0)), r2, 1e-12);
        EXPECT_NEAR(entropy(rho, EntropyFunctional::log_det()), ld, 1e-10);
    }
}

TEST(ExpectedEntropy, PureOutcomesGiveZero) {
    const OutcomeEnsemble ens({Outcome{0.3, DensityMatrix(diag({1, 0}))}, Outcome{0.7, DensityMatrix(plus_state())}});
    EXPECT_NEAR(expected_entropy(ens, EntropyFunctional::von_neumann()), 0.0, 1e-14);
}

TEST(ExpectedEntropy, ProbingOfPlusStateStaysPure) {
    const double r = std::numbers::sqrt2 / 2.0;
    const OutcomeEnsemble ens = observe(DensityMatrix(plus_state()), ProbingMatrix(mat(2, 2, {1.0, 0.0, r, r})));
    for (const Outcome &o : ens.outcomes()) {
        EXPECT_NEAR(purity(*o.state), 1.0, 1e-12);
    }
    EXPECT_NEAR(expected_entropy(ens, EntropyFunctional::von_neumann()), 0.0, 1e-7);
}

TEST(ExpectedEntropy, ZeroProbabilityOutcomesContributeNothing) {
    const OutcomeEnsemble ens({Outcome{1.0, maximally_mixed(2)}, Outcome{0.0, std::nullopt}});
    EXPECT_NEAR(expected_entropy(ens, EntropyFunctional::log_det()), 2.0 * std::log(0.5), 1e-15);
}

TEST(EntropyFunctional, ParseAndName) {
    for (const char *sel : {"von-neumann", "linear", "renyi:0.5", "renyi:2", "renyi:3.25", "log-det"}) {
        EXPECT_EQ(EntropyFunctional::parse(sel).name(), sel);
    }
    EXPECT_EQ(EntropyFunctional::parse("renyi:2").alpha(), 2.0);
    for (const char *bad : {"", "shannon", "renyi:", "renyi:1", "renyi:-1", "renyi:0", "renyi:2x", "renyi:nan"}) {
        EXPECT_THROW(EntropyFunctional::parse(bad), Error) << bad;
    }
}

TEST(EntropyFunctional, CustomConcavityCheck) {
    const EntropyFunctional sq = EntropyFunctional::custom("sqrt", [](double x) { return std::sqrt(x); });
    EXPECT_NEAR(entropy(maximally_mixed(4), sq), 2.0, 1e-14);
    EXPECT_EQ(error_code_of([] { EntropyFunctional::custom("convex", [](double x) { return x * x; }); }),
              ErrorCode::InvariantViolation);
}

TEST(EntropyComparison, SentinelConventions) {
    EXPECT_TRUE(entropy_leq(kNegativeInfinity, kNegativeInfinity, 0.0));
    EXPECT_TRUE(entropy_leq(kNegativeInfinity, -3.0, 0.0));
    EXPECT_FALSE(entropy_leq(-3.0, kNegativeInfinity, 1e-9));
    EXPECT_TRUE(entropy_leq(1.0, 1.0 - 1e-10, 1e-9));
    EXPECT_FALSE(entropy_leq(1.0, 1.0 - 1e-8, 1e-9));
    EXPECT_EQ(entropy_margin(kNegativeInfinity, kNegativeInfinity), 0.0);
    EXPECT_EQ(entropy_margin(kNegativeInfinity, -3.0), INFINITY);
}

TEST(Properties, UnitaryInvariance) {
    Rng rng(62);
    for (std::size_t n = 2; n <= 8; ++n) {
        const DensityMatrix rho = random_density(n, rng);
        const ComplexMatrix u = haar_unitary(n, rng);
        const DensityMatrix rotated(u * rho.matrix() * u.adjoint());
        for (const EntropyFunctional &f : builtin_functionals()) {
            EXPECT_NEAR(entropy(rotated, f), entropy(rho, f), 1e-9) << f.name();
        }
    }
}

TEST(Properties, TensoringWithPureState) {
    Rng rng(63);
    for (std::size_t n = 2; n <= 5; ++n) {
        const DensityMatrix rho = random_density(n, rng);
        const DensityMatrix ext(tensor_product(rho.matrix(), density_from_pure(random_pure(3, rng)).matrix()));
        for (const EntropyFunctional &f : builtin_functionals()) {
            if (f.kind() == EntropyFunctional::Kind::LogDet) {
                // ln 0 on the padded eigenvalues sends the sum to the sentinel.
                EXPECT_EQ(entropy(ext, f), kNegativeInfinity);
            } else {
                // h(0) = 0 for the remaining built-ins, so the padding adds nothing.
                EXPECT_EQ(f.h(0.0), 0.0);
                EXPECT_NEAR(entropy(ext, f), entropy(rho, f), 1e-9) << f.name();
            }
        }
    }
}

TEST(Properties, MajorizationImpliesEntropyOrder) {
    // The diagonal of U diag(l) U^dagger is majorized by l.
    Rng rng(64);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int t = 0; t < 20; ++t) {
            const DensityMatrix rho = random_density(n, rng);
            const Spectrum lambda = hermitian_spectrum(rho.matrix());
            std::vector<double> mu(n);
            for (std::size_t i = 0; i < n; ++i) {
                mu[i] = rho.matrix()(i, i).real();
            }
            const Spectrum m(mu);
            for (const EntropyFunctional &f : builtin_functionals()) {
                EXPECT_TRUE(entropy_leq(entropy_of_spectrum(lambda, f), entropy_of_spectrum(m, f), 1e-9)) << f.name();
            }
        }
    }
}

TEST(Properties, MaximallyMixedIsMaximal) {
    Rng rng(65);
    for (std::size_t n = 2; n <= 8; ++n) {
        const DensityMatrix mixed = maximally_mixed(n);
        for (int t = 0; t < 10; ++t) {
            const DensityMatrix rho = random_density(n, rng);
            for (const EntropyFunctional &f : builtin_functionals()) {
                EXPECT_GE(entropy(mixed, f), entropy(rho, f) - 1e-9) << f.name();
            }
        }
    }
}
