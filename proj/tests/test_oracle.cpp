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

#include <cstdint>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "spin3n/pauli.hpp"

namespace spin3n {
namespace {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix controlled_quarter_turn() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = -1.0;
  u(3, 2) = 1.0;
  return u;
}

// Cross-line pair blade e_j on line l, e_k on line m in local coordinates.
CliffordElement cross_pair(int j, int k) {
  const std::uint64_t mask = (std::uint64_t{1} << (j - 1)) |
                             (std::uint64_t{1} << (3 + k - 1));
  return CliffordElement::basis_blade(euclidean_signature(6), mask);
}

ComplexMatrix pauli_triple(int a, int b, int c) {
  return tensor_product(
      tensor_product(ComplexMatrix(pauli_matrix(a)),
                     ComplexMatrix(pauli_matrix(b))),
      ComplexMatrix(pauli_matrix(c)));
}

TEST_SUITE("oracle") {

TEST_CASE("identity gates produce the identity matrix") {
  const ComplexMatrix i16 = ComplexMatrix::Identity(16, 16);
  CHECK(max_abs_diff(
            spin_gate_dense(Gate::single(1, ComplexMatrix::Identity(2, 2)), 2),
            i16) == 0.0);
  CHECK(max_abs_diff(
            spin_gate_dense(Gate::two(1, 2, ComplexMatrix::Identity(4, 4)), 2),
            i16) < 1e-15);
}

TEST_CASE("single line gates act on the primary qubit alone") {
  std::mt19937_64 rng(31);
  const ComplexMatrix v = random_unitary(2, rng);
  const ComplexMatrix vn = phase_normalize_su2(v).matrix;
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix i4 = ComplexMatrix::Identity(4, 4);

  const ComplexMatrix on_line_1 = spin_gate_dense(Gate::single(1, v), 2);
  CHECK(max_abs_diff(on_line_1,
                     tensor_product(tensor_product(i2, vn), i4)) < 1e-15);

  const ComplexMatrix on_line_2 = spin_gate_dense(Gate::single(2, v), 2);
  CHECK(max_abs_diff(on_line_2,
                     tensor_product(ComplexMatrix::Identity(8, 8), vn)) <
        1e-15);
}

TEST_CASE("two line gate equals the image of its spin element") {
  std::mt19937_64 rng(32);
  for (const ComplexMatrix& u :
       {controlled_quarter_turn(), random_unitary(4, rng),
        random_unitary(4, rng)}) {
    const ComplexMatrix direct = spin_gate_dense(Gate::two(1, 2, u), 2);
    const ComplexMatrix via_element =
        dense_clifford_image(su4_to_spin6(u).element(), 1, 2, 2);
    CHECK(max_abs_diff(direct, via_element) < 1e-12);
    CHECK(unitarity_residual(direct) < 1e-12);
  }
}

TEST_CASE("blade images are the generator string products") {
  const auto sig = euclidean_signature(6);
  for (int local = 1; local <= 6; ++local) {
    const int axis = (local - 1) % 3 + 1;
    const int line = local <= 3 ? 1 : 3;
    const ComplexMatrix image = dense_clifford_image(
        CliffordElement::generator(sig, local), 1, 3, 3);
    CHECK(max_abs_diff(image, generator(axis, line, 3).to_matrix()) == 0.0);
  }

  const ComplexMatrix pair_image =
      dense_clifford_image(cross_pair(2, 2), 1, 3, 3);
  const PauliString pair_string = generator(2, 1, 3) * generator(2, 3, 3);
  CHECK(max_abs_diff(pair_image, pair_string.to_matrix()) == 0.0);
}

TEST_CASE("extended generator subset products span all one line operators") {
  std::vector<PauliString> factors = {generator_zero(1, 1), generator(1, 1, 1),
                                      generator(2, 1, 1), generator(3, 1, 1)};
  ComplexMatrix stacked(16, 16);
  for (int subset = 0; subset < 16; ++subset) {
    PauliString product(2);
    for (int i = 0; i < 4; ++i) {
      if ((subset >> i) & 1) {
        product *= factors[static_cast<std::size_t>(i)];
      }
    }
    const ComplexMatrix m = product.to_matrix();
    stacked.row(subset) = Eigen::Map<const ComplexVector>(m.data(), 16);
  }
  CHECK(Eigen::FullPivLU<ComplexMatrix>(stacked).rank() == 16);
}

TEST_CASE("pauli hamiltonian closure fills the whole algebra") {
  CHECK(su_closure_dim(1) == 3);
  CHECK(su_closure_dim(2) == 15);
  CHECK(su_closure_dim(3) == 63);
  CHECK_THROWS_AS(su_closure_dim(0), std::invalid_argument);
  CHECK_THROWS_AS(su_closure_dim(4), std::invalid_argument);
}

TEST_CASE("cross line brackets close like rotations not qubits") {
  // Physical picture: pair Hamiltonians on line pairs (1,2) and (2,3) in the
  // 64 x 64 representation commute exactly when the middle-line axes differ
  // and close onto a (1,3) pair Hamiltonian otherwise.
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      const ComplexMatrix h12 =
          Complex(0, 1) * dense_clifford_image(cross_pair(j, k), 1, 2, 3);
      CHECK(hermiticity_residual(h12) == 0.0);
      for (int jp = 1; jp <= 3; ++jp) {
        for (int kp = 1; kp <= 3; ++kp) {
          const ComplexMatrix h23 =
              Complex(0, 1) *
              dense_clifford_image(cross_pair(jp, kp), 2, 3, 3);
          const ComplexMatrix bracket = h12 * h23 - h23 * h12;
          if (k != jp) {
            CHECK(bracket.cwiseAbs().maxCoeff() == 0.0);
          } else {
            const ComplexMatrix h13 =
                Complex(0, 1) *
                dense_clifford_image(cross_pair(j, kp), 1, 3, 3);
            CHECK(max_abs_diff(bracket, Complex(0, 2) * h13) == 0.0);
          }
        }
      }
    }
  }

  // Logical picture: two-qubit sigma_j (x) sigma_k Hamiltonians on qubit
  // pairs (1,2) and (2,3) commute exactly when the middle axes agree, the
  // opposite support pattern.
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      const ComplexMatrix q12 = pauli_triple(j, k, 0);
      for (int jp = 1; jp <= 3; ++jp) {
        for (int kp = 1; kp <= 3; ++kp) {
          const ComplexMatrix q23 = pauli_triple(0, jp, kp);
          const double norm = (q12 * q23 - q23 * q12).cwiseAbs().maxCoeff();
          if (k == jp) {
            CHECK(norm == 0.0);
          } else {
            CHECK(norm > 1.0);
          }
        }
      }
    }
  }
}

TEST_CASE("dense run of simple circuits") {
  Circuit c = Circuit::empty(2);
  c.gates.push_back(Gate::single(1, ComplexMatrix(pauli_matrix(1))));
  const MeasurementReport report = run_dense(c);
  REQUIRE(report.qubits.size() == 4);
  for (const auto& [qubit, stats] : report.qubits) {
    CHECK(stats.method == Method::kOracle);
    if (qubit == 2) {
      CHECK(stats.p1 == doctest::Approx(1.0).epsilon(1e-12));
    } else {
      CHECK(stats.p0 == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("oracle rejects unsupported sizes") {
  CHECK_THROWS_AS(run_dense(Circuit::empty(6)), std::invalid_argument);
  CHECK_THROWS_AS(su_closure_dim(-1), std::invalid_argument);

  const auto sig = euclidean_signature(6);
  const CliffordElement one = CliffordElement::scalar(sig, 1.0);
  CHECK_THROWS_AS(dense_clifford_image(one, 1, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(dense_clifford_image(one, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(dense_clifford_image(one, 2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(dense_clifford_image(one, 0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(dense_clifford_image(one, 1, 4, 3), std::invalid_argument);

  const CliffordElement small =
      CliffordElement::scalar(euclidean_signature(3), 1.0);
  CHECK_THROWS_AS(dense_clifford_image(small, 1, 2, 3), std::invalid_argument);

  CHECK_THROWS_AS(
      spin_gate_dense(Gate::single(1, ComplexMatrix::Identity(2, 2)), 6),
      std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
}  // namespace spin3n
