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

#include <complex>

#include <Eigen/Dense>

namespace spin3n {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Tolerance for single algebraic identities at unit scale.
inline constexpr double kTolExact = 1e-10;
/// Tolerance for quantities accumulated over many floating products.
inline constexpr double kTolCompose = 1e-8;

/// Pauli matrix sigma_axis for axis in 0..3; axis 0 is the 2x2 identity.
const Eigen::Matrix2cd& pauli_matrix(int axis);

/// Kronecker product with the first factor as the most significant subsystem.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

/// Max absolute entry of m - m^dagger.
double hermiticity_residual(const ComplexMatrix& m);

/// Max absolute entry of m^dagger m - I.
double unitarity_residual(const ComplexMatrix& m);

/// Max absolute entry of r^T r - I for a real matrix.
double orthogonality_residual(const RealMatrix& r);

/// exp(-i tau H) for Hermitian H, computed by eigendecomposition.
ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double tau);

struct PhaseNormalized {
  ComplexMatrix matrix;
  Complex phase;
};

/// Rescales a 4x4 unitary by the principal value of det(U)^(-1/4), fixing
/// det = 1.  The returned phase is the multiplier applied; its argument lies
/// in (-pi/4, pi/4].
PhaseNormalized phase_normalize_su4(const ComplexMatrix& u);

/// Same for a 2x2 unitary with det(U)^(-1/2); multiplier argument lies in
/// (-pi/2, pi/2].
PhaseNormalized phase_normalize_su2(const ComplexMatrix& u);

}  // namespace spin3n
