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

#include "spin3n/pauli.hpp"

#include <stdexcept>

namespace spin3n {

namespace {

// Single-qubit products sigma_a sigma_b = i^kPhaseTable[a][b] sigma_{kOpTable[a][b]}.
constexpr std::uint8_t kOpTable[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr std::uint8_t kPhaseTable[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

void check_line(int line, int n_lines) {
  if (n_lines < 1) {
    throw std::invalid_argument("line count must be positive");
  }
  if (line < 1 || line > n_lines) {
    throw std::invalid_argument("line index out of range");
  }
}

}  // namespace

PauliString::PauliString(int num_qubits, int phase_power)
    : phase_power_(((phase_power % 4) + 4) % 4),
      ops_(static_cast<std::size_t>(num_qubits), PauliOp::I) {
  if (num_qubits < 1) {
    throw std::invalid_argument("PauliString: qubit count must be positive");
  }
}

Complex PauliString::phase() const {
  static const Complex values[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return values[phase_power_];
}

PauliOp PauliString::op(int qubit) const {
  if (qubit < 1 || qubit > num_qubits()) {
    throw std::invalid_argument("PauliString: qubit index out of range");
  }
  return ops_[static_cast<std::size_t>(qubit - 1)];
}

void PauliString::set_op(int qubit, PauliOp op) {
  if (qubit < 1 || qubit > num_qubits()) {
    throw std::invalid_argument("PauliString: qubit index out of range");
  }
  ops_[static_cast<std::size_t>(qubit - 1)] = op;
}

void PauliString::bump_phase(int power) {
  phase_power_ = ((phase_power_ + power) % 4 + 4) % 4;
}

bool PauliString::is_identity_ops() const {
  for (PauliOp op : ops_) {
    if (op != PauliOp::I) return false;
  }
  return true;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (num_qubits() != other.num_qubits()) {
    throw std::invalid_argument("PauliString: length mismatch");
  }
  int anticommuting = 0;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    PauliOp a = ops_[i];
    PauliOp b = other.ops_[i];
    if (a != PauliOp::I && b != PauliOp::I && a != b) ++anticommuting;
  }
  return anticommuting % 2 == 0;
}

PauliString& PauliString::operator*=(const PauliString& other) {
  if (num_qubits() != other.num_qubits()) {
    throw std::invalid_argument("PauliString: length mismatch");
  }
  int phase = phase_power_ + other.phase_power_;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const auto a = static_cast<std::uint8_t>(ops_[i]);
    const auto b = static_cast<std::uint8_t>(other.ops_[i]);
    phase += kPhaseTable[a][b];
    ops_[i] = static_cast<PauliOp>(kOpTable[a][b]);
  }
  phase_power_ = phase % 4;
  return *this;
}

ComplexMatrix PauliString::to_matrix() const {
  if (num_qubits() > 10) {
    throw std::invalid_argument("PauliString: dense form capped at 10 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << num_qubits();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index row = 0;
    Complex amp = phase();
    for (int q = 1; q <= num_qubits(); ++q) {
      const int bit = static_cast<int>((col >> (num_qubits() - q)) & 1);
      int out_bit = bit;
      switch (ops_[static_cast<std::size_t>(q - 1)]) {
        case PauliOp::I:
          break;
        case PauliOp::X:
          out_bit = 1 - bit;
          break;
        case PauliOp::Y:
          out_bit = 1 - bit;
          amp *= bit ? Complex(0, -1) : Complex(0, 1);
          break;
        case PauliOp::Z:
          if (bit) amp = -amp;
          break;
      }
      row = (row << 1) | out_bit;
    }
    out(row, col) = amp;
  }
  return out;
}

PauliString generator(int axis, int line, int n_lines) {
  check_line(line, n_lines);
  if (axis < 1 || axis > 3) {
    throw std::invalid_argument("generator: axis must be in 1..3");
  }
  PauliString out(2 * n_lines);
  for (int l = 1; l < line; ++l) {
    out.set_op(2 * l - 1, PauliOp::Z);
  }
  out.set_op(2 * line - 1, PauliOp::Y);
  out.set_op(2 * line, static_cast<PauliOp>(axis));
  return out;
}

PauliString generator_zero(int line, int n_lines) {
  check_line(line, n_lines);
  PauliString out(2 * n_lines, 3);
  for (int l = 1; l < line; ++l) {
    out.set_op(2 * l - 1, PauliOp::Z);
  }
  out.set_op(2 * line - 1, PauliOp::X);
  return out;
}

PauliString generator_flat(int index, int n_lines) {
  if (index < 1 || index > 3 * n_lines) {
    throw std::invalid_argument("generator_flat: index out of range");
  }
  return generator((index - 1) % 3 + 1, (index - 1) / 3 + 1, n_lines);
}

PauliString line_pseudoscalar(int line, int n_lines) {
  check_line(line, n_lines);
  PauliString out(2 * n_lines, 1);
  for (int l = 1; l < line; ++l) {
    out.set_op(2 * l - 1, PauliOp::Z);
  }
  out.set_op(2 * line - 1, PauliOp::Y);
  return out;
}

PauliString jordan_wigner_generator(int index, int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("jordan_wigner_generator: bad qubit count");
  }
  if (index < 1 || index > 2 * num_qubits) {
    throw std::invalid_argument("jordan_wigner_generator: index out of range");
  }
  const int qubit = (index + 1) / 2;
  PauliString out(num_qubits, 1);
  for (int q = 1; q < qubit; ++q) {
    out.set_op(q, PauliOp::Z);
  }
  out.set_op(qubit, index % 2 == 1 ? PauliOp::X : PauliOp::Y);
  return out;
}

ProductState ProductState::all_zero(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("ProductState: qubit count must be positive");
  }
  ProductState s;
  s.qubits.assign(static_cast<std::size_t>(num_qubits),
                  Eigen::Vector2cd(1.0, 0.0));
  return s;
}

void ProductState::validate() const {
  for (const auto& q : qubits) {
    if (std::abs(q.norm() - 1.0) >= kTolExact) {
      throw std::invalid_argument("ProductState: qubit state not unit norm");
    }
  }
}

ComplexVector ProductState::to_vector() const {
  if (num_qubits() > 10) {
    throw std::invalid_argument("ProductState: dense form capped at 10 qubits");
  }
  ComplexVector out = ComplexVector::Ones(1);
  for (const auto& q : qubits) {
    ComplexVector factor(2);
    factor << q(0), q(1);
    out = tensor_product(out, factor);
  }
  return out;
}

Eigen::Vector3d bloch_vector(const Eigen::Vector2cd& q) {
  const Complex cross = std::conj(q(0)) * q(1);
  return {2.0 * cross.real(), 2.0 * cross.imag(),
          std::norm(q(0)) - std::norm(q(1))};
}

bool is_computational(const Eigen::Vector2cd& q, double tol) {
  const Eigen::Vector3d b = bloch_vector(q);
  return std::abs(b(0)) < tol && std::abs(b(1)) < tol;
}

Complex expectation(const PauliString& p, const ProductState& s) {
  if (p.num_qubits() != s.num_qubits()) {
    throw std::invalid_argument("expectation: length mismatch");
  }
  double product = 1.0;
  for (int q = 1; q <= p.num_qubits(); ++q) {
    const Eigen::Vector3d b = bloch_vector(s.qubits[static_cast<std::size_t>(q - 1)]);
    switch (p.op(q)) {
      case PauliOp::I:
        break;
      case PauliOp::X:
        product *= b(0);
        break;
      case PauliOp::Y:
        product *= b(1);
        break;
      case PauliOp::Z:
        product *= b(2);
        break;
    }
    if (product == 0.0) break;
  }
  return p.phase() * product;
}

}  // namespace spin3n
