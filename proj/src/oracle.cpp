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

#include "spin3n/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace spin3n {

namespace {

void check_lines(int n_lines) {
  if (n_lines < 1 || n_lines > kOracleMaxLines) {
    throw std::invalid_argument("oracle: line count out of supported range");
  }
}

// Pauli string of one Cl+(6) basis blade mapped onto lines (l, m): local
// generators 1..3 belong to line l, 4..6 to line m.  Ascending local order
// is ascending global order, so no reordering sign appears.
PauliString blade_string(std::uint64_t mask, int line_a, int line_b,
                         int n_lines) {
  PauliString out(2 * n_lines);
  for (int local = 1; local <= 6; ++local) {
    if ((mask >> (local - 1)) & 1) {
      const int line = local <= 3 ? line_a : line_b;
      const int axis = (local - 1) % 3 + 1;
      out *= generator(axis, line, n_lines);
    }
  }
  return out;
}

void add_scaled_string(ComplexMatrix& acc, Complex scale,
                       const PauliString& p) {
  const int q = p.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << q;
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index row = 0;
    Complex amp = scale * p.phase();
    for (int qubit = 1; qubit <= q; ++qubit) {
      const int bit = static_cast<int>((col >> (q - qubit)) & 1);
      int out_bit = bit;
      switch (p.op(qubit)) {
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
    acc(row, col) += amp;
  }
}

}  // namespace

ComplexMatrix dense_clifford_image(const CliffordElement& element, int line_a,
                                   int line_b, int n_lines) {
  check_lines(n_lines);
  if (element.generator_count() != 6) {
    throw std::invalid_argument("dense_clifford_image: need a Cl+(6) element");
  }
  if (line_a < 1 || line_b > n_lines || line_a >= line_b) {
    throw std::invalid_argument("dense_clifford_image: need 1 <= l < m <= n");
  }
  const Eigen::Index dim = Eigen::Index{1} << (2 * n_lines);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& [mask, coeff] : element.terms()) {
    add_scaled_string(out, coeff, blade_string(mask, line_a, line_b, n_lines));
  }
  return out;
}

ComplexMatrix spin_gate_dense(const Gate& g, int n_lines) {
  check_lines(n_lines);
  g.validate(n_lines);
  const Eigen::Index dim = Eigen::Index{1} << (2 * n_lines);

  if (g.kind == Gate::Kind::kSingle) {
    const ComplexMatrix un = phase_normalize_su2(g.unitary).matrix;
    const int qubit = 2 * g.line_a;
    const Eigen::Index before = Eigen::Index{1} << (qubit - 1);
    const Eigen::Index after = Eigen::Index{1} << (2 * n_lines - qubit);
    ComplexMatrix out = tensor_product(
        ComplexMatrix(ComplexMatrix::Identity(before, before)), un);
    return tensor_product(out,
                          ComplexMatrix(ComplexMatrix::Identity(after, after)));
  }

  // Same adjoint convention as su4_to_spin6: the assembled string image then
  // equals the normalized gate on the auxiliary-invariant sector.
  const ComplexMatrix w = phase_normalize_su4(g.unitary).matrix.adjoint();
  const auto& basis = gate_basis();
  const auto sig = euclidean_signature(6);
  const CliffordElement pseudo = CliffordElement::pseudoscalar(sig);

  const Complex u0 = w.trace() / 4.0;
  CliffordElement element = CliffordElement::scalar(sig, u0.real());
  element += u0.imag() * pseudo;
  for (int j = 1; j < 16; ++j) {
    const Complex uj = (basis[j].matrix * w).trace() / 4.0;
    const std::uint64_t pair_mask =
        (std::uint64_t{1} << (basis[j].first - 1)) |
        (std::uint64_t{1} << (basis[j].second - 1));
    const double pair_sign = basis[j].first < basis[j].second ? 1.0 : -1.0;
    const CliffordElement blade =
        CliffordElement::basis_blade(sig, pair_mask, pair_sign);
    element += -uj.imag() * blade;
    element += uj.real() * (pseudo * blade);
  }
  ComplexMatrix out = dense_clifford_image(element, g.line_a, g.line_b, n_lines);
  if (unitarity_residual(out) >= kTolCompose) {
    throw std::runtime_error("spin_gate_dense: assembled gate is not unitary");
  }
  return out;
}

MeasurementReport run_dense(const Circuit& c) {
  check_lines(c.lines);
  c.validate();
  ComplexVector state = c.initial.to_vector();
  for (const Gate& g : c.gates) {
    state = spin_gate_dense(g, c.lines) * state;
  }
  MeasurementReport report;
  const int q_count = 2 * c.lines;
  for (int q = 1; q <= q_count; ++q) {
    double p0 = 0.0;
    for (Eigen::Index idx = 0; idx < state.size(); ++idx) {
      if (((idx >> (q_count - q)) & 1) == 0) {
        p0 += std::norm(state(idx));
      }
    }
    report.qubits[q] = {p0, 1.0 - p0, Method::kOracle};
  }
  return report;
}

int su_closure_dim(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 3) {
    throw std::invalid_argument("su_closure_dim: supported for 1..3 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;

  std::vector<ComplexMatrix> seeds;
  auto push_string = [&](const PauliString& p) {
    seeds.push_back(Complex(0, 1) * p.to_matrix());
  };
  for (int l = 1; l <= n_qubits; ++l) {
    for (int j = 1; j <= 3; ++j) {
      PauliString p(n_qubits);
      p.set_op(l, static_cast<PauliOp>(j));
      push_string(p);
    }
  }
  for (int l = 1; l <= n_qubits; ++l) {
    for (int m = l + 1; m <= n_qubits; ++m) {
      for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
          PauliString p(n_qubits);
          p.set_op(l, static_cast<PauliOp>(j));
          p.set_op(m, static_cast<PauliOp>(k));
          push_string(p);
        }
      }
    }
  }

  auto coordinates = [dim](const ComplexMatrix& m) {
    Eigen::VectorXd v(2 * dim * dim);
    Eigen::Index slot = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        v(slot++) = m(i, j).real();
        v(slot++) = m(i, j).imag();
      }
    }
    return v;
  };

  std::vector<ComplexMatrix> basis;
  std::vector<Eigen::VectorXd> ortho;
  auto try_add = [&](const ComplexMatrix& candidate) {
    Eigen::VectorXd v = coordinates(candidate);
    const double scale = v.norm();
    if (scale < 1e-12) return false;
    v /= scale;
    for (const auto& u : ortho) {
      v -= u.dot(v) * u;
    }
    if (v.norm() <= 1e-9) return false;
    v.normalize();
    ortho.push_back(v);
    basis.push_back(candidate);
    return true;
  };

  for (const auto& seed : seeds) {
    try_add(seed);
  }
  std::size_t bracketed = 0;
  while (bracketed < basis.size()) {
    const std::size_t frontier = basis.size();
    for (std::size_t i = bracketed; i < frontier; ++i) {
      for (std::size_t j = 0; j < frontier; ++j) {
        if (i == j) continue;
        try_add(basis[i] * basis[j] - basis[j] * basis[i]);
      }
    }
    bracketed = frontier;
  }
  return static_cast<int>(basis.size());
}

}  // namespace spin3n
