// Copyright 2026 The spin3n Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "spin3n/clifford.hpp"
#include "spin3n/simulator.hpp"

namespace spin3n {

/// Largest line count the dense oracle accepts (2n qubits, 4^n amplitudes).
inline constexpr int kOracleMaxLines = 5;

/// Dense 4^n x 4^n image of a Cl+(6) element living on the generator blocks
/// of lines (l, m): each blade becomes the ordered product of its generator
/// strings over 2n qubits.
ComplexMatrix dense_clifford_image(const CliffordElement& element, int line_a,
                                   int line_b, int n_lines);

/// Dense unitary of one gate.  Two-line gates are assembled from the 16
/// trace coefficients of the det-normalized matrix and the tagged Pauli
/// products, never from the rotation path; single-line gates apply the
/// det-normalized SU(2) matrix to the line's primary qubit.
ComplexMatrix spin_gate_dense(const Gate& g, int n_lines);

/// Full statevector run; reports exact marginals for all 2n qubits.
MeasurementReport run_dense(const Circuit& c);

/// Dimension of the Lie closure of all one- and two-qubit Pauli-product
/// Hamiltonians on n qubits (anti-Hermitian matrices under commutator).
int su_closure_dim(int n_qubits);

}  // namespace spin3n
