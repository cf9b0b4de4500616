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
#include <random>
#include <span>
#include <vector>

#include "qbayes/states.hpp"

/// Seeded generation of every random test object.
///
/// `Rng` wraps std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniform and Gaussian variates are derived from raw 64-bit words
/// here rather than through <random> distributions, whose algorithms are
/// implementation-defined. Child streams depend only on the parent seed and
/// the child index, never on how much of the parent has been consumed, so a
/// campaign gives trial t the stream `root.child(t)` regardless of which
/// worker runs it.
namespace qbayes {

class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const noexcept {
        return seed_;
    }
    Rng child(std::uint64_t index) const;

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, n).
    std::size_t uniform_index(std::size_t n);
    /// Standard normal via Box-Muller.
    double normal();
    /// Complex Gaussian with E|z|^2 = 1.
    Complex complex_normal();

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng);
/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal folded into Q.
ComplexMatrix haar_unitary(std::size_t n, Rng &rng);
/// G G^dagger / tr(G G^dagger) for square Ginibre G (Hilbert-Schmidt measure).
DensityMatrix random_density(std::size_t n, Rng &rng);
PureState random_pure(std::size_t n, Rng &rng);
/// Hermitian (G + G^dagger) / 2.
ComplexMatrix random_hermitian(std::size_t n, Rng &rng);
/// Gram matrix of n random pure states in dimension d. d = 1 gives a rank-one
/// phase-only matrix; large d approaches the identity.
GramMatrix random_gram(std::size_t n, std::size_t d, Rng &rng);
/// n independent random unit rows of length m.
ProbingMatrix random_probing(std::size_t n, std::size_t m, Rng &rng);
/// Contiguous diagonal blocks of the given sizes, conjugated by a Haar
/// unitary. Sizes must be positive and sum to n.
ProjectorSet random_projector_partition(std::size_t n, std::span<const std::size_t> blocks, Rng &rng);
/// Uniformly random composition of n into positive parts.
std::vector<std::size_t> random_block_sizes(std::size_t n, Rng &rng);
/// Diagonal projectors for a random assignment of basis states to between 1
/// and n non-empty blocks.
ProjectorSet random_diagonal_partition(std::size_t n, Rng &rng);

}  // namespace qbayes
