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

#include <string>

#include <json.hpp>

#include "spin3n/simulator.hpp"

namespace spin3n {

/// Parses the JSON circuit document.  Complex numbers are [re, im] pairs,
/// indices are 1-based, unspecified qubits default to |0>, and unknown
/// object fields are rejected.  Throws std::invalid_argument on any
/// malformed or non-unitary content.
Circuit circuit_from_json(const nlohmann::json& doc);
Circuit load_circuit(const std::string& path);

/// Serializes a circuit so that re-parsing yields an identical value.
nlohmann::json circuit_to_json(const Circuit& c);

/// Parses a gate matrix document: either a bare nested matrix or an object
/// with a single "unitary" field.
ComplexMatrix gate_matrix_from_json(const nlohmann::json& doc);
ComplexMatrix load_gate_matrix(const std::string& path);

nlohmann::json complex_to_json(const Complex& z);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Per-qubit entries of a measurement report, ordered by qubit index.
nlohmann::json report_qubits_to_json(const MeasurementReport& report);

}  // namespace spin3n
