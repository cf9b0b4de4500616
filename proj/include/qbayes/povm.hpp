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

#include <span>
#include <string>
#include <vector>

#include "qbayes/sampling.hpp"
#include "qbayes/states.hpp"

/// General measurements realized by an ancilla, a joint unitary and a
/// projective measurement on object (x) ancilla (object factor first).
namespace qbayes {

inline constexpr double kPurityPreservingTol = 1e-8;

class Povm {
  public:
    Povm(std::size_t object_dim, std::size_t ancilla_dim, DensityMatrix ancilla_state, ComplexMatrix joint_unitary,
         ProjectorSet joint_projectors);

    std::size_t object_dim() const noexcept {
        return object_dim_;
    }
    std::size_t ancilla_dim() const noexcept {
        return ancilla_dim_;
    }
    const DensityMatrix &ancilla_state() const noexcept {
        return ancilla_state_;
    }
    const ComplexMatrix &joint_unitary() const noexcept {
        return joint_unitary_;
    }
    const ProjectorSet &joint_projectors() const noexcept {
        return joint_projectors_;
    }

    bool has_pure_ancilla() const;
    /// Equivalent POVM with a pure ancilla. A mixed ancilla of dimension d is
    /// replaced by its purification in dimension d*d; the unitary and the
    /// projectors act as identity on the added copy.
    Povm purified() const;

  private:
    std::size_t object_dim_;
    std::size_t ancilla_dim_;
    DensityMatrix ancilla_state_;
    ComplexMatrix joint_unitary_;
    ProjectorSet joint_projectors_;
};

/// chi_k(rho) = tr_A(P_k U (rho (x) rho_A) U^dagger P_k), p_k = tr chi_k and
/// rho^(k) = chi_k / p_k. Zero-probability outcomes carry p = 0 and no state.
OutcomeEnsemble apply_povm(const DensityMatrix &rho, const Povm &m);

struct PurityClassification {
    bool purity_preserving = false;
    /// Recovered |a_k> with P_k = I (x) |a_k><a_k|, when purity preserving.
    std::vector<ComplexVector> ancilla_basis;
    /// Why the structural test failed; empty on success.
    std::string reason;
};

/// Structural test for P_k = I (x) |a_k><a_k| with orthonormal |a_k>, run on
/// the pure-ancilla form of `m`.
PurityClassification classify_purity(const Povm &m, double tol = kPurityPreservingTol);
bool is_purity_preserving(const Povm &m, double tol = kPurityPreservingTol);

struct PovmExample {
    Povm povm;
    DensityMatrix input;
};

/// Bell-basis measurement with U = I on |0><0| (x) |0><0|. Raises the entropy
/// of the pure input to ln 2.
PovmExample counterexample_1();
/// Swap gate followed by I (x) |k><k| on input I/2. Every outcome is |0><0|,
/// so the averaged state loses all entropy.
PovmExample counterexample_2();

/// Probing as a POVM: U = probing_joint_unitary(responses), ancilla |0>,
/// projectors I (x) |k><k| over the ancilla basis.
Povm probing_as_povm(std::span<const PureState> responses);

/// sum_i sqrt(w_i) |a_i> (x) |a_i> for rho_A = sum_i w_i |a_i><a_i|.
PureState purify_ancilla(const DensityMatrix &rho_a);

/// Haar joint unitary, random pure ancilla and I (x) |b_k><b_k| for a Haar
/// ancilla basis.
Povm random_pppovm(std::size_t object_dim, std::size_t ancilla_dim, Rng &rng);
/// Haar joint unitary, random pure ancilla and a Haar-rotated block partition
/// of the joint space; generically not purity preserving.
Povm random_general_povm(std::size_t object_dim, std::size_t ancilla_dim, Rng &rng);

}  // namespace qbayes
