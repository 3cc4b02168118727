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

#include "spin3n/spinmap.hpp"

#include <cmath>
#include <stdexcept>

namespace spin3n {

namespace {

// Generator pairs carrying the single-factor coefficients: sigma_j on the
// first qubit maps to the cyclic pair within generators 1..3, on the second
// qubit within 4..6.  Pair order encodes the sign, e.g. axis 2 maps to
// e3 e1 = -e1 e3.
constexpr int kCyclicPair[3][2] = {{2, 3}, {3, 1}, {1, 2}};

std::array<GateBasisEntry, 16> build_gate_basis() {
  std::array<GateBasisEntry, 16> basis;
  int slot = 0;
  auto put = [&](int a, int b, int first, int second) {
    basis[slot].matrix = tensor_product(ComplexMatrix(pauli_matrix(a)),
                                        ComplexMatrix(pauli_matrix(b)));
    basis[slot].first = first;
    basis[slot].second = second;
    ++slot;
  };
  put(0, 0, 0, 0);
  for (int j = 1; j <= 3; ++j) {
    put(j, 0, kCyclicPair[j - 1][0], kCyclicPair[j - 1][1]);
  }
  for (int j = 1; j <= 3; ++j) {
    put(0, j, kCyclicPair[j - 1][0] + 3, kCyclicPair[j - 1][1] + 3);
  }
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      put(j, k, j, k + 3);
    }
  }
  return basis;
}

CliffordElement tagged_pair(const GateBasisEntry& entry) {
  const auto sig = euclidean_signature(6);
  return CliffordElement::generator(sig, entry.first) *
         CliffordElement::generator(sig, entry.second);
}

void check_lines(int line_a, int line_b, int n_lines) {
  if (line_a < 1 || line_b > n_lines || line_a >= line_b) {
    throw std::invalid_argument("embed_rotation: need 1 <= l < m <= n");
  }
}

}  // namespace

const std::array<GateBasisEntry, 16>& gate_basis() {
  static const std::array<GateBasisEntry, 16> basis = build_gate_basis();
  return basis;
}

RotationMatrix su2_to_so3(const ComplexMatrix& u) {
  const ComplexMatrix un = phase_normalize_su2(u).matrix;
  RotationMatrix r(3, 3);
  for (int a = 1; a <= 3; ++a) {
    const ComplexMatrix conjugated =
        un.adjoint() * pauli_matrix(a) * un;
    for (int b = 1; b <= 3; ++b) {
      r(a - 1, b - 1) = 0.5 * (pauli_matrix(b) * conjugated).trace().real();
    }
  }
  return r;
}

SpinElement su4_to_spin6(const ComplexMatrix& u) {
  // Coefficients are read off the adjoint of the normalized gate: in the
  // generator-string representation the pseudoscalar acts as -i on the
  // invariant auxiliary sector, so only the adjoint makes the qubit image of
  // S reproduce the gate itself (pinned by the round-trip test).
  const ComplexMatrix w = phase_normalize_su4(u).matrix.adjoint();
  const auto& basis = gate_basis();
  const auto sig = euclidean_signature(6);
  const CliffordElement pseudo = CliffordElement::pseudoscalar(sig);

  const Complex u0 = w.trace() / 4.0;
  CliffordElement s = CliffordElement::scalar(sig, u0.real());
  s += u0.imag() * pseudo;
  for (int j = 1; j < 16; ++j) {
    const Complex uj = (basis[j].matrix * w).trace() / 4.0;
    const CliffordElement pair = tagged_pair(basis[j]);
    s += -uj.imag() * pair;
    s += uj.real() * (pseudo * pair);
  }
  return SpinElement(std::move(s));
}

RotationMatrix spin6_to_so6(const SpinElement& s, double tol) {
  const auto sig = euclidean_signature(6);
  const CliffordElement inv = s.inverse().element();
  RotationMatrix r(6, 6);
  for (int a = 1; a <= 6; ++a) {
    const CliffordElement image =
        inv * CliffordElement::generator(sig, a) * s.element();
    CliffordElement residue = image - image.grade_part(1);
    if (residue.max_abs_coefficient() >= tol) {
      throw std::runtime_error(
          "spin6_to_so6: conjugation left a non-vector residue");
    }
    for (int b = 1; b <= 6; ++b) {
      r(a - 1, b - 1) = image.coefficient(std::uint64_t{1} << (b - 1));
    }
  }
  return r;
}

CliffordElement hamiltonian_to_bivector(const ComplexMatrix& h) {
  if (h.rows() != 4 || h.cols() != 4) {
    throw std::invalid_argument("hamiltonian_to_bivector: need a 4x4 matrix");
  }
  if (hermiticity_residual(h) >= kTolExact) {
    throw std::invalid_argument("hamiltonian_to_bivector: input not Hermitian");
  }
  if (std::abs(h.trace()) >= kTolExact) {
    throw std::invalid_argument("hamiltonian_to_bivector: input not traceless");
  }
  const auto& basis = gate_basis();
  CliffordElement out(euclidean_signature(6));
  // Negated so that su4_to_spin6(exp(-i h tau)) == exp(tau * image); the
  // generator pairs square to -1 while -i h generates the gate.
  for (int j = 1; j < 16; ++j) {
    const Complex hj = (basis[j].matrix * h).trace() / 4.0;
    out += -hj.real() * tagged_pair(basis[j]);
  }
  return out;
}

RotationMatrix embed_rotation(const RotationMatrix& r, int line, int n_lines) {
  if (r.rows() != 3 || r.cols() != 3) {
    throw std::invalid_argument("embed_rotation: need a 3x3 block");
  }
  if (line < 1 || line > n_lines) {
    throw std::invalid_argument("embed_rotation: line index out of range");
  }
  RotationMatrix out = RotationMatrix::Identity(3 * n_lines, 3 * n_lines);
  out.block(3 * (line - 1), 3 * (line - 1), 3, 3) = r;
  return out;
}

RotationMatrix embed_rotation(const RotationMatrix& r, int line_a, int line_b,
                              int n_lines) {
  if (r.rows() != 6 || r.cols() != 6) {
    throw std::invalid_argument("embed_rotation: need a 6x6 block");
  }
  check_lines(line_a, line_b, n_lines);
  RotationMatrix out = RotationMatrix::Identity(3 * n_lines, 3 * n_lines);
  const int base[2] = {3 * (line_a - 1), 3 * (line_b - 1)};
  for (int bi = 0; bi < 2; ++bi) {
    for (int bj = 0; bj < 2; ++bj) {
      out.block(base[bi], base[bj], 3, 3) = r.block(3 * bi, 3 * bj, 3, 3);
    }
  }
  return out;
}

}  // namespace spin3n
