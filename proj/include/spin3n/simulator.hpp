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

#include <map>
#include <random>
#include <vector>

#include "spin3n/pauli.hpp"
#include "spin3n/spinmap.hpp"

namespace spin3n {

/// sigma_3 on primary qubit 2k equals kSigmaZPairSign * i e_1^[k] e_2^[k].
/// The sign is fixed once by exact Pauli-string expansion of the generator
/// products (see the calibration test) and used by measure_even.
inline constexpr double kSigmaZPairSign = -1.0;

struct Gate {
  enum class Kind { kSingle, kTwo };

  Kind kind = Kind::kSingle;
  int line_a = 1;
  /// Second line for two-line gates (line_a < line_b); unused otherwise.
  int line_b = 0;
  ComplexMatrix unitary;

  static Gate single(int line, ComplexMatrix u);
  static Gate two(int line_a, int line_b, ComplexMatrix u);
  void validate(int n_lines) const;
};

/// Gates are listed in temporal order: the first gate acts on the state
/// first.
struct Circuit {
  int lines = 0;
  ProductState initial;
  std::vector<Gate> gates;

  static Circuit empty(int n_lines);
  void validate() const;
};

enum class Method { kFastPath, kGeneral, kOracle };
const char* method_name(Method method);

struct QubitStats {
  double p0 = 0.0;
  double p1 = 0.0;
  Method method = Method::kGeneral;
};

/// Single-qubit marginals keyed by 1-based physical qubit index.
struct MeasurementReport {
  std::map<int, QubitStats> qubits;
};

/// Which physical qubits to measure.
struct MeasureSelection {
  enum class Which { kAll, kEven, kOdd, kSingle };
  Which which = Which::kAll;
  int qubit = 0;

  static MeasureSelection all() { return {Which::kAll, 0}; }
  static MeasureSelection even() { return {Which::kEven, 0}; }
  static MeasureSelection odd() { return {Which::kOdd, 0}; }
  static MeasureSelection single(int qubit) { return {Which::kSingle, qubit}; }
};

enum class EvenPath { kAuto, kFast, kGeneral };

/// Folds the whole circuit into one 3n x 3n rotation.  Gates compose by
/// left-multiplying each new embedded rotation; only the <= 6 coordinate
/// rows a gate touches are updated, so cost is O(N n) and memory O(n^2).
RotationMatrix compile(const Circuit& c);

/// Table of <s| i e_a e_b |s> over all flat generator index pairs.
ComplexMatrix pair_correlations(const ProductState& s);

/// True when every auxiliary qubit is |0> or |1> up to phase, enabling the
/// O(n) even-qubit fast path.
bool fast_path_ready(const ProductState& s);

/// Statistics of primary qubit 2k.  kFast throws when the fast path
/// preconditions fail; kAuto selects it when available.  A precomputed
/// pair_correlations table may be passed to amortize general-path work.
QubitStats measure_even(const Circuit& c, const RotationMatrix& r, int k,
                        EvenPath path = EvenPath::kAuto,
                        const ComplexMatrix* correlations = nullptr);

/// Statistics of auxiliary qubit 2k-1 via the cubic conjugation sum.
QubitStats measure_odd(const Circuit& c, const RotationMatrix& r, int k);

/// Measures the selected qubits against a previously compiled rotation.
MeasurementReport measure_selected(
    const Circuit& c, const RotationMatrix& r,
    MeasureSelection selection = MeasureSelection::all(),
    EvenPath path = EvenPath::kAuto);

/// Compile once and measure the selected qubits.
MeasurementReport run(const Circuit& c,
                      MeasureSelection selection = MeasureSelection::all(),
                      EvenPath path = EvenPath::kAuto);

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);
Eigen::Vector2cd random_qubit_state(std::mt19937_64& rng);

struct RandomCircuitOptions {
  double single_gate_fraction = 0.4;
  /// Primary qubits start in Haar-ish random states instead of |0>.
  bool random_primary_states = false;
  /// Auxiliary qubits start in |0> or |1> uniformly instead of |0>.
  bool random_aux_flips = false;
};

Circuit random_circuit(int n_lines, int n_gates, std::mt19937_64& rng,
                       const RandomCircuitOptions& options = {});

}  // namespace spin3n
