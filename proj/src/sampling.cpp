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

#include "qbayes/sampling.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qbayes {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {
}

Rng Rng::child(std::uint64_t index) const {
    return Rng(mix64(seed_ ^ mix64(index + 0x632BE59BD9B4E019ULL)));
}

std::uint64_t Rng::next_u64() {
    return engine_();
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "uniform_index needs n > 0");
    }
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next_u64();
    while (x >= limit) {
        x = next_u64();
    }
    return static_cast<std::size_t>(x % bound);
}

double Rng::normal() {
    return complex_normal().real() * std::numbers::sqrt2;
}

Complex Rng::complex_normal() {
    // 1 - u lies in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            g(i, j) = rng.complex_normal();
        }
    }
    return g;
}

static void require_positive(std::size_t n, const char *what) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be at least 1");
    }
}

ComplexMatrix haar_unitary(std::size_t n, Rng &rng) {
    require_positive(n, "dimension");
    const ComplexMatrix z = ginibre(n, n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(z.rows(), z.cols());
    const ComplexMatrix &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        if (mag > 0.0) {
            q.col(j) *= d / mag;
        }
    }
    return q;
}

DensityMatrix random_density(std::size_t n, Rng &rng) {
    require_positive(n, "dimension");
    const ComplexMatrix g = ginibre(n, n, rng);
    ComplexMatrix w = g * g.adjoint();
    w /= w.trace().real();
    return DensityMatrix(0.5 * (w + w.adjoint()));
}

PureState random_pure(std::size_t n, Rng &rng) {
    require_positive(n, "dimension");
    ComplexVector v = ginibre(n, 1, rng).col(0);
    v.normalize();
    return PureState(std::move(v));
}

ComplexMatrix random_hermitian(std::size_t n, Rng &rng) {
    require_positive(n, "dimension");
    const ComplexMatrix g = ginibre(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

GramMatrix random_gram(std::size_t n, std::size_t d, Rng &rng) {
    require_positive(n, "dimension");
    require_positive(d, "response dimension");
    std::vector<PureState> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        vs.push_back(random_pure(d, rng));
    }
    return gram_from_vectors(vs);
}

ProbingMatrix random_probing(std::size_t n, std::size_t m, Rng &rng) {
    require_positive(n, "dimension");
    require_positive(m, "response dimension");
    ComplexMatrix s = ginibre(n, m, rng);
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
        s.row(i).normalize();
    }
    return ProbingMatrix(std::move(s));
}

ProjectorSet random_projector_partition(std::size_t n, std::span<const std::size_t> blocks, Rng &rng) {
    require_positive(n, "dimension");
    if (blocks.empty() || std::accumulate(blocks.begin(), blocks.end(), std::size_t{0}) != n ||
        std::find(blocks.begin(), blocks.end(), std::size_t{0}) != blocks.end()) {
        throw Error(ErrorCode::InvalidPartition, "block sizes must be positive and sum to " + std::to_string(n));
    }
    const ComplexMatrix u = haar_unitary(n, rng);
    std::vector<ComplexMatrix> ps;
    Eigen::Index start = 0;
    for (std::size_t b : blocks) {
        const auto len = static_cast<Eigen::Index>(b);
        const ComplexMatrix cols = u.middleCols(start, len);
        const ComplexMatrix p = cols * cols.adjoint();
        ps.push_back(0.5 * (p + p.adjoint()));
        start += len;
    }
    return ProjectorSet(std::move(ps));
}

std::vector<std::size_t> random_block_sizes(std::size_t n, Rng &rng) {
    require_positive(n, "dimension");
    // Each of the n-1 gaps between consecutive basis states is a cut with
    // probability 1/2, which is uniform over compositions.
    std::vector<std::size_t> sizes;
    std::size_t current = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (rng.next_u64() >> 63) {
            sizes.push_back(current);
            current = 1;
        } else {
            ++current;
        }
    }
    sizes.push_back(current);
    return sizes;
}

ProjectorSet random_diagonal_partition(std::size_t n, Rng &rng) {
    const std::vector<std::size_t> sizes = random_block_sizes(n, rng);
    std::vector<std::size_t> labels;
    labels.reserve(n);
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        labels.insert(labels.end(), sizes[b], b);
    }
    // Fisher-Yates so blocks are not contiguous in the basis.
    for (std::size_t i = n; i > 1; --i) {
        std::swap(labels[i - 1], labels[rng.uniform_index(i)]);
    }
    return ProjectorSet::from_block_labels(labels);
}

}  // namespace qbayes
