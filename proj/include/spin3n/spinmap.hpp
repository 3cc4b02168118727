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

#include <array>

#include "spin3n/clifford.hpp"
#include "spin3n/linalg.hpp"

namespace spin3n {

/// One entry of the 16-element Hermitian trace basis for 4x4 matrices:
/// H = sigma_a (x) sigma_b together with the ordered generator pair
/// (first, second) whose blade carries its coefficient in Cl+(6).
/// Entry 0 is the identity, tagged (0, 0): its real part maps to the scalar
/// and its imaginary part to the pseudoscalar.
struct GateBasisEntry {
  Eigen::Matrix4cd matrix;
  int first;
  int second;
};

/// The shared 16-entry basis; satisfies Tr(H_J H_K) = 4 delta_JK.
const std::array<GateBasisEntry, 16>& gate_basis();

/// Rotation acting on per-line generator coordinates; row a holds the image
/// of generator a under conjugation, a = 3(line-1)+axis.
using RotationMatrix = RealMatrix;

/// R_ab = Re Tr(sigma_b U'^dagger sigma_a U') / 2 for the det-normalized U'.
/// U and -U give the same rotation.
RotationMatrix su2_to_so3(const ComplexMatrix& u);

/// Even Cl+(6) element S whose image over the generator strings equals the
/// det-normalized U' on states with auxiliary qubits in the invariant state;
/// coefficients are the 16 traces Tr(H_J U'^dagger)/4 distributed over blade,
/// blade * pseudoscalar per basis tag.
SpinElement su4_to_spin6(const ComplexMatrix& u);

/// Extracts R from S^-1 e_a S = sum_b R_ab e_b by symbolic conjugation.
/// Throws if any conjugation leaves a non-grade-1 residue above tol.
RotationMatrix spin6_to_so6(const SpinElement& s, double tol = kTolCompose);

/// Grade-2 image of a traceless Hermitian 4x4 H: minus the sum over the 15
/// tagged pairs of h_J = Tr(H_J H)/4, so that su4_to_spin6(exp(-i tau H))
/// equals exp(tau * image) for all tau.
CliffordElement hamiltonian_to_bivector(const ComplexMatrix& h);

/// Places a 3x3 rotation on the coordinate block of one line.
RotationMatrix embed_rotation(const RotationMatrix& r, int line, int n_lines);

/// Places a 6x6 rotation on the coordinate blocks of two lines (l < m, with
/// the l block first).
RotationMatrix embed_rotation(const RotationMatrix& r, int line_a, int line_b,
                              int n_lines);

}  // namespace spin3n
