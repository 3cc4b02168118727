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
#include <random>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "spin3n/oracle.hpp"

namespace spin3n {
namespace {

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double report_diff(const MeasurementReport& a, const MeasurementReport& b) {
  REQUIRE(a.qubits.size() == b.qubits.size());
  double worst = 0.0;
  for (const auto& [qubit, stats] : a.qubits) {
    REQUIRE(b.qubits.count(qubit) == 1);
    worst = std::max(worst, std::abs(stats.p0 - b.qubits.at(qubit).p0));
  }
  return worst;
}

Eigen::Vector2cd tilted_state(double angle, double phase) {
  return Eigen::Vector2cd(std::cos(angle),
                          std::sin(angle) * std::exp(Complex(0, phase)));
}

TEST_SUITE("simulator") {

TEST_CASE("empty circuit reports certainty on every qubit") {
  const Circuit c = Circuit::empty(3);
  const MeasurementReport report = run(c);
  REQUIRE(report.qubits.size() == 6);
  for (const auto& [qubit, stats] : report.qubits) {
    CHECK(stats.p0 == 1.0);
    CHECK(stats.p1 == 0.0);
    if (qubit % 2 == 0) {
      CHECK(stats.method == Method::kFastPath);
    } else {
      CHECK(stats.method == Method::kGeneral);
    }
  }

  const MeasurementReport general =
      run(c, MeasureSelection::all(), EvenPath::kGeneral);
  for (const auto& [qubit, stats] : general.qubits) {
    CHECK(stats.p0 == 1.0);
    CHECK(stats.method == Method::kGeneral);
  }
}

TEST_CASE("sigma1 gate flips only its primary qubit") {
  Circuit c = Circuit::empty(3);
  c.gates.push_back(Gate::single(2, ComplexMatrix(pauli_matrix(1))));
  const MeasurementReport report = run(c);
  for (const auto& [qubit, stats] : report.qubits) {
    if (qubit == 4) {
      CHECK(stats.p0 < 1e-12);
      CHECK(stats.p1 > 1.0 - 1e-12);
    } else {
      CHECK(stats.p0 > 1.0 - 1e-12);
    }
  }
  CHECK(report_diff(report, run_dense(c)) < kTolCompose);
}

TEST_CASE("fast and general paths agree on computational auxiliaries") {
  RandomCircuitOptions options;
  options.random_primary_states = true;
  options.random_aux_flips = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    const Circuit c = random_circuit(3, 12, rng, options);
    REQUIRE(fast_path_ready(c.initial));
    const RotationMatrix r = compile(c);

    const MeasurementReport fast =
        measure_selected(c, r, MeasureSelection::even(), EvenPath::kFast);
    const MeasurementReport general =
        measure_selected(c, r, MeasureSelection::even(), EvenPath::kGeneral);
    CHECK(report_diff(fast, general) < 1e-10);
    for (const auto& [qubit, stats] : fast.qubits) {
      CHECK(stats.method == Method::kFastPath);
      CHECK(general.qubits.at(qubit).method == Method::kGeneral);
    }
  }
}

TEST_CASE("fast path refuses non computational auxiliaries") {
  Circuit c = Circuit::empty(2);
  c.initial.qubits[0] = tilted_state(0.9, 0.0);
  const RotationMatrix r = compile(c);
  CHECK_THROWS_AS(measure_even(c, r, 1, EvenPath::kFast),
                  std::invalid_argument);
  CHECK_FALSE(fast_path_ready(c.initial));

  const MeasurementReport report = run(c);
  CHECK(report.qubits.at(2).method == Method::kGeneral);
}

TEST_CASE("general path matches the oracle on arbitrary product states") {
  for (std::uint64_t seed = 11; seed <= 14; ++seed) {
    std::mt19937_64 rng(seed);
    Circuit c = random_circuit(2, 8, rng);
    for (auto& qubit : c.initial.qubits) {
      qubit = random_qubit_state(rng);
    }
    const MeasurementReport actual = run(c);
    const MeasurementReport expected = run_dense(c);
    CHECK(report_diff(actual, expected) < 1e-8);
    CHECK(actual.qubits.at(2).method == Method::kGeneral);
  }
}

TEST_CASE("pair correlations reproduce the vacuum closed form") {
  const int n = 3;
  const ComplexMatrix mu = pair_correlations(ProductState::all_zero(2 * n));
  REQUIRE(mu.rows() == 9);
  for (int kp = 1; kp <= n; ++kp) {
    for (int jp = 1; jp <= 3; ++jp) {
      for (int ks = 1; ks <= n; ++ks) {
        for (int js = 1; js <= 3; ++js) {
          Complex expected = 0.0;
          if (kp == ks) {
            if (jp == js) expected = Complex(0, 1);
            if (jp == 1 && js == 2) expected = -1.0;
            if (jp == 2 && js == 1) expected = 1.0;
          }
          CHECK(mu(3 * (kp - 1) + jp - 1, 3 * (ks - 1) + js - 1) == expected);
        }
      }
    }
  }
}

TEST_CASE("general even measurement has no imaginary residue") {
  std::mt19937_64 rng(21);
  Circuit c = random_circuit(3, 15, rng);
  for (auto& qubit : c.initial.qubits) {
    qubit = random_qubit_state(rng);
  }
  const RotationMatrix r = compile(c);
  const ComplexMatrix mu = pair_correlations(c.initial);
  for (int k = 1; k <= c.lines; ++k) {
    const Complex sum = (r.row(3 * (k - 1)).cast<Complex>() * mu *
                         r.row(3 * (k - 1) + 1).transpose().cast<Complex>())(0,
                                                                             0);
    CHECK(std::abs(sum.imag()) < 1e-10);
  }
}

TEST_CASE("gates on other lines leave an odd qubit untouched") {
  std::mt19937_64 rng(22);
  Circuit c = Circuit::empty(2);
  c.initial.qubits[2] = tilted_state(0.4, 0.3);
  c.gates.push_back(Gate::single(1, random_unitary(2, rng)));
  c.gates.push_back(Gate::single(2, random_unitary(2, rng)));
  c.gates.push_back(Gate::single(1, random_unitary(2, rng)));

  const double expected_p0 = (1.0 + bloch_vector(c.initial.qubits[2])(2)) / 2.0;
  const MeasurementReport report = run(c, MeasureSelection::single(3));
  REQUIRE(report.qubits.size() == 1);
  CHECK(report.qubits.at(3).p0 == doctest::Approx(expected_p0).epsilon(1e-10));
  CHECK(std::abs(run_dense(c).qubits.at(3).p0 - expected_p0) < 1e-12);
}

TEST_CASE("compile of one gate is the embedded rotation") {
  std::mt19937_64 rng(23);

  Circuit single = Circuit::empty(3);
  const ComplexMatrix u2 = random_unitary(2, rng);
  single.gates.push_back(Gate::single(2, u2));
  CHECK(max_abs_diff(compile(single), embed_rotation(su2_to_so3(u2), 2, 3)) ==
        0.0);

  Circuit two = Circuit::empty(3);
  const ComplexMatrix u4 = random_unitary(4, rng);
  two.gates.push_back(Gate::two(1, 3, u4));
  CHECK(max_abs_diff(compile(two),
                     embed_rotation(spin6_to_so6(su4_to_spin6(u4)), 1, 3, 3)) ==
        0.0);

  CHECK(max_abs_diff(compile(Circuit::empty(2)),
                     RealMatrix::Identity(6, 6)) == 0.0);
}

TEST_CASE("compile multiplies new gates from the left") {
  const ComplexMatrix u1 =
      unitary_from_hamiltonian(ComplexMatrix(pauli_matrix(1)), 0.5);
  const ComplexMatrix u2 =
      unitary_from_hamiltonian(ComplexMatrix(pauli_matrix(3)), 0.7);
  Circuit c = Circuit::empty(1);
  c.gates.push_back(Gate::single(1, u1));
  c.gates.push_back(Gate::single(1, u2));

  const RotationMatrix r1 = su2_to_so3(u1);
  const RotationMatrix r2 = su2_to_so3(u2);
  const RotationMatrix total = compile(c);
  CHECK(max_abs_diff(total, r2 * r1) < 1e-14);
  CHECK(max_abs_diff(total, r1 * r2) > 0.1);
}

TEST_CASE("compiled rotations stay orthogonal") {
  std::mt19937_64 rng(24);
  const Circuit c = random_circuit(4, 40, rng);
  const RotationMatrix r = compile(c);
  REQUIRE(r.rows() == 12);
  CHECK(orthogonality_residual(r) < kTolCompose);
  CHECK(r.determinant() == doctest::Approx(1.0).epsilon(kTolCompose));
}

TEST_CASE("report probabilities are normalized") {
  std::mt19937_64 rng(25);
  Circuit c = random_circuit(2, 10, rng);
  for (auto& qubit : c.initial.qubits) {
    qubit = random_qubit_state(rng);
  }
  for (const auto& [qubit, stats] : run(c).qubits) {
    CHECK(stats.p0 >= 0.0);
    CHECK(stats.p0 <= 1.0);
    CHECK(stats.p1 >= 0.0);
    CHECK(stats.p1 <= 1.0);
    CHECK(std::abs(stats.p0 + stats.p1 - 1.0) < 1e-15);
  }
}

TEST_CASE("measurement rejects out of range indices") {
  const Circuit c = Circuit::empty(2);
  const RotationMatrix r = compile(c);
  CHECK_THROWS_AS(measure_even(c, r, 0), std::invalid_argument);
  CHECK_THROWS_AS(measure_even(c, r, 3), std::invalid_argument);
  CHECK_THROWS_AS(measure_odd(c, r, 0), std::invalid_argument);
  CHECK_THROWS_AS(measure_odd(c, r, 3), std::invalid_argument);
  CHECK_THROWS_AS(run(c, MeasureSelection::single(0)), std::invalid_argument);
  CHECK_THROWS_AS(run(c, MeasureSelection::single(5)), std::invalid_argument);
}

TEST_CASE("gate and circuit validation") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix i4 = ComplexMatrix::Identity(4, 4);

  CHECK_THROWS_AS(Gate::single(0, i2).validate(2), std::invalid_argument);
  CHECK_THROWS_AS(Gate::single(3, i2).validate(2), std::invalid_argument);
  CHECK_THROWS_AS(Gate::single(1, i4).validate(2), std::invalid_argument);
  CHECK_THROWS_AS(Gate::two(2, 1, i4).validate(2), std::invalid_argument);
  CHECK_THROWS_AS(Gate::two(1, 1, i4).validate(2), std::invalid_argument);
  CHECK_THROWS_AS(Gate::two(1, 3, i4).validate(2), std::invalid_argument);
  CHECK_THROWS_AS(Gate::two(1, 2, i2).validate(2), std::invalid_argument);

  ComplexMatrix stretched = i2;
  stretched(0, 0) = 2.0;
  CHECK_THROWS_AS(Gate::single(1, stretched).validate(2),
                  std::invalid_argument);

  Circuit no_lines;
  CHECK_THROWS_AS(no_lines.validate(), std::invalid_argument);

  Circuit short_state = Circuit::empty(2);
  short_state.initial.qubits.pop_back();
  CHECK_THROWS_AS(short_state.validate(), std::invalid_argument);

  Circuit unnormalized = Circuit::empty(2);
  unnormalized.initial.qubits[1] = Eigen::Vector2cd(0.5, 0.5);
  CHECK_THROWS_AS(unnormalized.validate(), std::invalid_argument);
}

TEST_CASE("random circuits are seed deterministic") {
  RandomCircuitOptions options;
  options.random_primary_states = true;
  options.random_aux_flips = true;

  std::mt19937_64 rng_a(77);
  std::mt19937_64 rng_b(77);
  const Circuit a = random_circuit(3, 10, rng_a, options);
  const Circuit b = random_circuit(3, 10, rng_b, options);
  REQUIRE(a.gates.size() == b.gates.size());
  for (std::size_t i = 0; i < a.gates.size(); ++i) {
    CHECK((a.gates[i].unitary - b.gates[i].unitary).cwiseAbs().maxCoeff() ==
          0.0);
    CHECK(unitarity_residual(a.gates[i].unitary) < 1e-12);
  }
  CHECK(report_diff(run(a), run(b)) == 0.0);

  std::mt19937_64 rng_c(78);
  const Circuit c = random_circuit(3, 10, rng_c, options);
  CHECK((a.gates[0].unitary - c.gates[0].unitary).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("method names are stable") {
  CHECK(std::string(method_name(Method::kFastPath)) == "fast-path");
  CHECK(std::string(method_name(Method::kGeneral)) == "general");
  CHECK(std::string(method_name(Method::kOracle)) == "oracle");
}

}  // TEST_SUITE

}  // namespace
}  // namespace spin3n
