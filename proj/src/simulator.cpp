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

#include "spin3n/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace spin3n {

namespace {

QubitStats stats_from_difference(double diff, Method method) {
  if (std::abs(diff) > 1.0 + kTolCompose) {
    throw std::runtime_error("measurement: probability difference out of range");
  }
  const double clamped = std::clamp(diff, -1.0, 1.0);
  return {(1.0 + clamped) / 2.0, (1.0 - clamped) / 2.0, method};
}

double real_checked(Complex value, const char* what) {
  if (std::abs(value.imag()) >= kTolCompose) {
    throw std::runtime_error(std::string(what) +
                             ": imaginary residue above tolerance");
  }
  return value.real();
}

}  // namespace

Gate Gate::single(int line, ComplexMatrix u) {
  Gate g;
  g.kind = Kind::kSingle;
  g.line_a = line;
  g.unitary = std::move(u);
  return g;
}

Gate Gate::two(int line_a, int line_b, ComplexMatrix u) {
  Gate g;
  g.kind = Kind::kTwo;
  g.line_a = line_a;
  g.line_b = line_b;
  g.unitary = std::move(u);
  return g;
}

void Gate::validate(int n_lines) const {
  const int dim = kind == Kind::kSingle ? 2 : 4;
  if (unitary.rows() != dim || unitary.cols() != dim) {
    throw std::invalid_argument("Gate: wrong matrix dimension");
  }
  if (unitarity_residual(unitary) >= kTolExact) {
    throw std::invalid_argument("Gate: matrix not unitary");
  }
  if (line_a < 1 || line_a > n_lines) {
    throw std::invalid_argument("Gate: line index out of range");
  }
  if (kind == Kind::kTwo) {
    if (line_b <= line_a || line_b > n_lines) {
      throw std::invalid_argument("Gate: need line_a < line_b <= n");
    }
  }
}

Circuit Circuit::empty(int n_lines) {
  Circuit c;
  c.lines = n_lines;
  c.initial = ProductState::all_zero(2 * n_lines);
  return c;
}

void Circuit::validate() const {
  if (lines < 1) {
    throw std::invalid_argument("Circuit: line count must be positive");
  }
  if (initial.num_qubits() != 2 * lines) {
    throw std::invalid_argument("Circuit: initial state has wrong qubit count");
  }
  initial.validate();
  for (const Gate& g : gates) {
    g.validate(lines);
  }
}

const char* method_name(Method method) {
  switch (method) {
    case Method::kFastPath:
      return "fast-path";
    case Method::kGeneral:
      return "general";
    case Method::kOracle:
      return "oracle";
  }
  return "unknown";
}

RotationMatrix compile(const Circuit& c) {
  c.validate();
  const int dim = 3 * c.lines;
  RotationMatrix r = RotationMatrix::Identity(dim, dim);
  RealMatrix rows(6, dim);
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::kSingle) {
      const RotationMatrix block = su2_to_so3(g.unitary);
      const int base = 3 * (g.line_a - 1);
      rows.topRows(3) = block * r.middleRows(base, 3);
      r.middleRows(base, 3) = rows.topRows(3);
    } else {
      const RotationMatrix block = spin6_to_so6(su4_to_spin6(g.unitary));
      const int base_a = 3 * (g.line_a - 1);
      const int base_b = 3 * (g.line_b - 1);
      rows.topRows(3) = block.topLeftCorner(3, 3) * r.middleRows(base_a, 3) +
                        block.topRightCorner(3, 3) * r.middleRows(base_b, 3);
      rows.bottomRows(3) =
          block.bottomLeftCorner(3, 3) * r.middleRows(base_a, 3) +
          block.bottomRightCorner(3, 3) * r.middleRows(base_b, 3);
      r.middleRows(base_a, 3) = rows.topRows(3);
      r.middleRows(base_b, 3) = rows.bottomRows(3);
    }
  }
  return r;
}

ComplexMatrix pair_correlations(const ProductState& s) {
  if (s.num_qubits() % 2 != 0) {
    throw std::invalid_argument("pair_correlations: odd qubit count");
  }
  const int n = s.num_qubits() / 2;
  const int dim = 3 * n;
  std::vector<PauliString> gens;
  gens.reserve(static_cast<std::size_t>(dim));
  for (int a = 1; a <= dim; ++a) {
    gens.push_back(generator_flat(a, n));
  }
  ComplexMatrix mu(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      PauliString product = gens[static_cast<std::size_t>(a)] *
                            gens[static_cast<std::size_t>(b)];
      product.bump_phase(1);
      mu(a, b) = expectation(product, s);
    }
  }
  return mu;
}

bool fast_path_ready(const ProductState& s) {
  for (int q = 1; q <= s.num_qubits(); q += 2) {
    if (!is_computational(s.qubits[static_cast<std::size_t>(q - 1)])) {
      return false;
    }
  }
  return true;
}

QubitStats measure_even(const Circuit& c, const RotationMatrix& r, int k,
                        EvenPath path, const ComplexMatrix* correlations) {
  if (k < 1 || k > c.lines) {
    throw std::invalid_argument("measure_even: line index out of range");
  }
  const int row1 = 3 * (k - 1);
  const int row2 = 3 * (k - 1) + 1;

  const bool fast_ok = fast_path_ready(c.initial);
  if (path == EvenPath::kFast && !fast_ok) {
    throw std::invalid_argument(
        "measure_even: fast path needs every auxiliary qubit in |0> or |1>");
  }
  if (path != EvenPath::kGeneral && fast_ok) {
    double diff = 0.0;
    for (int kp = 0; kp < c.lines; ++kp) {
      const Eigen::Vector3d u = r.row(row1).segment<3>(3 * kp);
      const Eigen::Vector3d v = r.row(row2).segment<3>(3 * kp);
      const Eigen::Vector3d m =
          bloch_vector(c.initial.qubits[static_cast<std::size_t>(2 * kp + 1)]);
      diff += -kSigmaZPairSign * u.cross(v).dot(m);
    }
    return stats_from_difference(diff, Method::kFastPath);
  }

  ComplexMatrix local;
  if (correlations == nullptr) {
    local = pair_correlations(c.initial);
    correlations = &local;
  }
  const Complex sum = (r.row(row1).cast<Complex>() * (*correlations) *
                       r.row(row2).transpose().cast<Complex>())(0, 0);
  const double diff = kSigmaZPairSign * real_checked(sum, "measure_even");
  return stats_from_difference(diff, Method::kGeneral);
}

QubitStats measure_odd(const Circuit& c, const RotationMatrix& r, int k) {
  if (k < 1 || k > c.lines) {
    throw std::invalid_argument("measure_odd: line index out of range");
  }
  const int n = c.lines;
  const int dim = 3 * n;
  std::vector<PauliString> gens;
  gens.reserve(static_cast<std::size_t>(dim));
  for (int a = 1; a <= dim; ++a) {
    gens.push_back(generator_flat(a, n));
  }
  PauliString head = generator_zero(k, n);
  head.bump_phase(1);

  const auto row = [&](int j) { return 3 * (k - 1) + j; };
  Complex sum = 0.0;
  for (int a = 0; a < dim; ++a) {
    const double wa = r(row(0), a);
    if (wa == 0.0) continue;
    const PauliString head_a = head * gens[static_cast<std::size_t>(a)];
    for (int b = 0; b < dim; ++b) {
      const double wab = wa * r(row(1), b);
      if (wab == 0.0) continue;
      const PauliString head_ab = head_a * gens[static_cast<std::size_t>(b)];
      for (int cidx = 0; cidx < dim; ++cidx) {
        const double w = wab * r(row(2), cidx);
        if (w == 0.0) continue;
        sum += w * expectation(head_ab * gens[static_cast<std::size_t>(cidx)],
                               c.initial);
      }
    }
  }
  const double diff = -real_checked(sum, "measure_odd");
  return stats_from_difference(diff, Method::kGeneral);
}

MeasurementReport measure_selected(const Circuit& c, const RotationMatrix& r,
                                   MeasureSelection selection, EvenPath path) {
  std::vector<int> targets;
  switch (selection.which) {
    case MeasureSelection::Which::kAll:
      for (int q = 1; q <= 2 * c.lines; ++q) targets.push_back(q);
      break;
    case MeasureSelection::Which::kEven:
      for (int q = 2; q <= 2 * c.lines; q += 2) targets.push_back(q);
      break;
    case MeasureSelection::Which::kOdd:
      for (int q = 1; q <= 2 * c.lines; q += 2) targets.push_back(q);
      break;
    case MeasureSelection::Which::kSingle:
      if (selection.qubit < 1 || selection.qubit > 2 * c.lines) {
        throw std::invalid_argument("run: qubit index out of range");
      }
      targets.push_back(selection.qubit);
      break;
  }

  ComplexMatrix correlations;
  bool have_correlations = false;
  const bool fast_ok = fast_path_ready(c.initial);
  MeasurementReport report;
  for (int q : targets) {
    if (q % 2 == 0) {
      if ((path == EvenPath::kGeneral || !fast_ok) && !have_correlations) {
        correlations = pair_correlations(c.initial);
        have_correlations = true;
      }
      report.qubits[q] = measure_even(
          c, r, q / 2, path, have_correlations ? &correlations : nullptr);
    } else {
      report.qubits[q] = measure_odd(c, r, (q + 1) / 2);
    }
  }
  return report;
}

MeasurementReport run(const Circuit& c, MeasureSelection selection,
                      EvenPath path) {
  return measure_selected(c, compile(c), selection, path);
}

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      a(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  return unitary_from_hamiltonian(h, 1.0);
}

Eigen::Vector2cd random_qubit_state(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Vector2cd v(Complex(normal(rng), normal(rng)),
                     Complex(normal(rng), normal(rng)));
  while (v.norm() < 1e-6) {
    v = Eigen::Vector2cd(Complex(normal(rng), normal(rng)),
                         Complex(normal(rng), normal(rng)));
  }
  return v / v.norm();
}

Circuit random_circuit(int n_lines, int n_gates, std::mt19937_64& rng,
                       const RandomCircuitOptions& options) {
  Circuit c = Circuit::empty(n_lines);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> line(1, n_lines);
  if (options.random_primary_states) {
    for (int k = 1; k <= n_lines; ++k) {
      c.initial.qubits[static_cast<std::size_t>(2 * k - 1)] =
          random_qubit_state(rng);
    }
  }
  if (options.random_aux_flips) {
    for (int k = 1; k <= n_lines; ++k) {
      if (coin(rng) < 0.5) {
        c.initial.qubits[static_cast<std::size_t>(2 * k - 2)] =
            Eigen::Vector2cd(0.0, 1.0);
      }
    }
  }
  for (int i = 0; i < n_gates; ++i) {
    if (n_lines == 1 || coin(rng) < options.single_gate_fraction) {
      c.gates.push_back(Gate::single(line(rng), random_unitary(2, rng)));
    } else {
      int a = line(rng);
      int b = line(rng);
      while (b == a) b = line(rng);
      if (a > b) std::swap(a, b);
      c.gates.push_back(Gate::two(a, b, random_unitary(4, rng)));
    }
  }
  return c;
}

}  // namespace spin3n
