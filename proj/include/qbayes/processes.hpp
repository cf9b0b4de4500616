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

#include "qbayes/states.hpp"

/// Decoherence and observation maps on an object density matrix, with their
/// special cases (von Neumann reduction, Lüders projection) and the unitary
/// object-ancilla realization of probing.
namespace qbayes {

/// rho -> rho ∘ E.
DensityMatrix decohere(const DensityMatrix &rho, const GramMatrix &e);

/// Quantum Bayes update. Outcome k has p_k = sum_i rho_ii |S_ik|^2 and
/// rho^(k)_ij = rho_ij S_ik conj(S_jk) / p_k. Zero-probability outcomes are
/// kept with p = 0 and no state.
OutcomeEnsemble observe(const DensityMatrix &rho, const ProbingMatrix &s);

/// F = S S^dagger.
GramMatrix response_gram(const ProbingMatrix &s);

/// sum_k p_k rho^(k).
DensityMatrix ensemble_average(const OutcomeEnsemble &ens);

/// sum_k P_k rho P_k.
DensityMatrix luders(const DensityMatrix &rho, const ProjectorSet &ps);

/// Keeps only the diagonal of rho (decoherence with E = I).
DensityMatrix von_neumann_reduce(const DensityMatrix &rho);

/// True iff every live outcome of observe(rho, s) has the spectrum of rho
/// within `tol`, i.e. every outcome equals rho up to a unitary.
bool is_trivial_probing_for(const DensityMatrix &rho, const ProbingMatrix &s, double tol);
/// True iff rho ∘ E has the spectrum of rho within `tol`.
bool is_trivial_decoherence_for(const DensityMatrix &rho, const GramMatrix &e, double tol);

/// Block-diagonal unitary U on object (x) ancilla with
/// U(|o_i> (x) |0>) = |o_i> (x) |eps_i>. The ancilla dimension is the
/// length of the responses and the ancilla reference state is basis vector 0.
ComplexMatrix probing_joint_unitary(std::span<const PureState> responses);

}  // namespace qbayes
