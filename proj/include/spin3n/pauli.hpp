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

#include <cstdint>
#include <vector>

#include "spin3n/linalg.hpp"

namespace spin3n {

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// A scaled Pauli product i^p * (op_1 x op_2 x ... x op_q) over q physical
/// qubits.  Qubit 1 is the most significant tensor factor.  The phase
/// exponent p is kept as an exact integer mod 4.
class PauliString {
 public:
  explicit PauliString(int num_qubits, int phase_power = 0);

  int num_qubits() const { return static_cast<int>(ops_.size()); }
  int phase_power() const { return phase_power_; }
  Complex phase() const;

  /// Operator on a 1-based qubit index.
  PauliOp op(int qubit) const;
  void set_op(int qubit, PauliOp op);
  void bump_phase(int power);

  bool is_identity_ops() const;
  bool commutes_with(const PauliString& other) const;
  bool operator==(const PauliString& other) const = default;

  PauliString& operator*=(const PauliString& other);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// Dense 2^q x 2^q matrix; available for q <= 10 qubits.
  ComplexMatrix to_matrix() const;

 private:
  int phase_power_;
  std::vector<PauliOp> ops_;
};

/// Clifford generator e_j of line k over n lines, as a Pauli string on 2n
/// qubits: a sigma_3 ladder on earlier auxiliary qubits, sigma_2 on the
/// line's auxiliary qubit, sigma_j on its primary qubit.
PauliString generator(int axis, int line, int n_lines);

/// The extra generator e_0 of line k: -i times a sigma_3 ladder followed by
/// sigma_1 on the line's auxiliary qubit.  Squares to -1.
PauliString generator_zero(int line, int n_lines);

/// Generator with flat index a in 1..3n, a = 3(k-1)+j.
PauliString generator_flat(int index, int n_lines);

/// Product e_1 e_2 e_3 of one line's generators: i times a sigma_3 ladder
/// followed by sigma_2 on the line's auxiliary qubit.  Acts as a local
/// imaginary unit; distinct lines anticommute.
PauliString line_pseudoscalar(int line, int n_lines);

/// Jordan-Wigner generator with index m in 1..2q over q qubits; all such
/// strings mutually anticommute and square to -1.
PauliString jordan_wigner_generator(int index, int num_qubits);

/// Tensor product of normalized single-qubit states.  Qubit 1 is the most
/// significant factor; index 0 of each 2-vector is the |0> amplitude.
struct ProductState {
  std::vector<Eigen::Vector2cd> qubits;

  static ProductState all_zero(int num_qubits);
  int num_qubits() const { return static_cast<int>(qubits.size()); }
  /// Throws if any qubit state is not unit-norm within kTolExact.
  void validate() const;
  /// Full 2^q amplitude vector; available for q <= 10 qubits.
  ComplexVector to_vector() const;
};

/// Bloch vector (<sigma_1>, <sigma_2>, <sigma_3>) of a single-qubit state.
Eigen::Vector3d bloch_vector(const Eigen::Vector2cd& q);

/// True when the state is |0> or |1> up to a global phase.
bool is_computational(const Eigen::Vector2cd& q, double tol = kTolExact);

/// <s| P |s> in O(q) time, one factor per qubit.
Complex expectation(const PauliString& p, const ProductState& s);

}  // namespace spin3n
