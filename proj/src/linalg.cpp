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

#include "spin3n/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spin3n {

const Eigen::Matrix2cd& pauli_matrix(int axis) {
  static const Eigen::Matrix2cd sigma[4] = {
      (Eigen::Matrix2cd() << 1, 0, 0, 1).finished(),
      (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(),
  };
  if (axis < 0 || axis > 3) {
    throw std::invalid_argument("pauli_matrix: axis must be in 0..3");
  }
  return sigma[axis];
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

double hermiticity_residual(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_residual(const ComplexMatrix& m) {
  return (m.adjoint() * m - ComplexMatrix::Identity(m.cols(), m.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double orthogonality_residual(const RealMatrix& r) {
  return (r.transpose() * r - RealMatrix::Identity(r.cols(), r.cols()))
      .cwiseAbs()
      .maxCoeff();
}

ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double tau) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("unitary_from_hamiltonian: matrix not square");
  }
  if (hermiticity_residual(h) >= kTolExact) {
    throw std::invalid_argument("unitary_from_hamiltonian: input not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  ComplexVector phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    phases(i) = std::polar(1.0, -tau * solver.eigenvalues()(i));
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

namespace {

PhaseNormalized phase_normalize(const ComplexMatrix& u, int dim) {
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("phase_normalize: wrong dimension");
  }
  if (unitarity_residual(u) >= kTolExact) {
    throw std::invalid_argument("phase_normalize: input not unitary");
  }
  const Complex det = u.determinant();
  double arg = -std::arg(det) / dim;
  const double half_sector = std::numbers::pi / dim;
  if (arg <= -half_sector) {
    arg += 2 * half_sector;
  }
  const Complex phase = std::polar(std::pow(std::abs(det), -1.0 / dim), arg);
  return {phase * u, phase};
}

}  // namespace

PhaseNormalized phase_normalize_su4(const ComplexMatrix& u) {
  return phase_normalize(u, 4);
}

PhaseNormalized phase_normalize_su2(const ComplexMatrix& u) {
  return phase_normalize(u, 2);
}

}  // namespace spin3n
