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

#include "spin3n/circuit_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace spin3n {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("circuit file: " + message);
}

void check_fields(const json& obj, const std::set<std::string>& allowed,
                  const char* where) {
  if (!obj.is_object()) {
    fail(std::string(where) + " must be an object");
  }
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      fail("unknown field \"" + key + "\" in " + where);
    }
  }
}

Complex parse_complex(const json& value, const char* where) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
      !value[1].is_number()) {
    fail(std::string(where) + " must be a [re, im] number pair");
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& value, int dim, const char* where) {
  if (!value.is_array() || static_cast<int>(value.size()) != dim) {
    fail(std::string(where) + " must be a " + std::to_string(dim) + "x" +
         std::to_string(dim) + " matrix");
  }
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = value[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      fail(std::string(where) + " has a malformed row");
    }
    for (int j = 0; j < dim; ++j) {
      m(i, j) = parse_complex(row[static_cast<std::size_t>(j)], where);
    }
  }
  return m;
}

int parse_index(const json& value, int low, int high, const char* where) {
  if (!value.is_number_integer()) {
    fail(std::string(where) + " must be an integer");
  }
  const auto index = value.get<long long>();
  if (index < low || index > high) {
    fail(std::string(where) + " out of range");
  }
  return static_cast<int>(index);
}

Gate parse_gate(const json& obj, int n_lines) {
  if (!obj.is_object()) fail("gate entries must be objects");
  const std::string kind = obj.contains("kind") && obj["kind"].is_string()
                               ? obj["kind"].get<std::string>()
                               : "";
  if (kind == "single") {
    check_fields(obj, {"kind", "line", "unitary"}, "a single-line gate");
    if (!obj.contains("line") || !obj.contains("unitary")) {
      fail("single-line gate needs \"line\" and \"unitary\"");
    }
    const int line = parse_index(obj["line"], 1, n_lines, "gate line");
    Gate g = Gate::single(line, parse_matrix(obj["unitary"], 2, "gate unitary"));
    if (unitarity_residual(g.unitary) >= kTolExact) {
      fail("gate matrix is not unitary");
    }
    return g;
  }
  if (kind == "two") {
    check_fields(obj, {"kind", "lines", "unitary"}, "a two-line gate");
    if (!obj.contains("lines") || !obj.contains("unitary")) {
      fail("two-line gate needs \"lines\" and \"unitary\"");
    }
    const json& lines = obj["lines"];
    if (!lines.is_array() || lines.size() != 2) {
      fail("\"lines\" must be a pair [l, m]");
    }
    const int line_a = parse_index(lines[0], 1, n_lines, "gate line");
    const int line_b = parse_index(lines[1], 1, n_lines, "gate line");
    if (line_a >= line_b) {
      fail("two-line gate needs l < m");
    }
    Gate g = Gate::two(line_a, line_b,
                       parse_matrix(obj["unitary"], 4, "gate unitary"));
    if (unitarity_residual(g.unitary) >= kTolExact) {
      fail("gate matrix is not unitary");
    }
    return g;
  }
  fail("gate \"kind\" must be \"single\" or \"two\"");
}

}  // namespace

Circuit circuit_from_json(const json& doc) {
  check_fields(doc, {"lines", "initial", "gates"}, "the circuit document");
  if (!doc.contains("lines")) {
    fail("missing \"lines\"");
  }
  const int n_lines = parse_index(doc["lines"], 1, 1 << 20, "\"lines\"");
  Circuit c = Circuit::empty(n_lines);

  if (doc.contains("initial")) {
    const json& initial = doc["initial"];
    if (!initial.is_array()) fail("\"initial\" must be an array");
    std::set<int> seen;
    for (const json& entry : initial) {
      check_fields(entry, {"qubit", "state"}, "an initial-state entry");
      if (!entry.contains("qubit") || !entry.contains("state")) {
        fail("initial-state entry needs \"qubit\" and \"state\"");
      }
      const int qubit =
          parse_index(entry["qubit"], 1, 2 * n_lines, "initial qubit");
      if (!seen.insert(qubit).second) {
        fail("initial state listed twice for one qubit");
      }
      const json& state = entry["state"];
      if (!state.is_array() || state.size() != 2) {
        fail("qubit state must be a pair of complex amplitudes");
      }
      Eigen::Vector2cd v(parse_complex(state[0], "qubit amplitude"),
                         parse_complex(state[1], "qubit amplitude"));
      if (std::abs(v.norm() - 1.0) >= kTolExact) {
        fail("qubit state is not unit norm");
      }
      c.initial.qubits[static_cast<std::size_t>(qubit - 1)] = v;
    }
  }

  if (doc.contains("gates")) {
    const json& gates = doc["gates"];
    if (!gates.is_array()) fail("\"gates\" must be an array");
    for (const json& entry : gates) {
      c.gates.push_back(parse_gate(entry, n_lines));
    }
  }
  return c;
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open circuit file: " + path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("circuit file: ") + e.what());
  }
  return circuit_from_json(doc);
}

nlohmann::json circuit_to_json(const Circuit& c) {
  json doc;
  doc["lines"] = c.lines;
  json initial = json::array();
  for (int q = 1; q <= c.initial.num_qubits(); ++q) {
    const auto& v = c.initial.qubits[static_cast<std::size_t>(q - 1)];
    initial.push_back(
        {{"qubit", q},
         {"state", {complex_to_json(v(0)), complex_to_json(v(1))}}});
  }
  doc["initial"] = std::move(initial);
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json entry;
    if (g.kind == Gate::Kind::kSingle) {
      entry["kind"] = "single";
      entry["line"] = g.line_a;
    } else {
      entry["kind"] = "two";
      entry["lines"] = {g.line_a, g.line_b};
    }
    entry["unitary"] = matrix_to_json(g.unitary);
    gates.push_back(std::move(entry));
  }
  doc["gates"] = std::move(gates);
  return doc;
}

ComplexMatrix gate_matrix_from_json(const json& doc) {
  if (doc.is_object()) {
    check_fields(doc, {"unitary"}, "the gate document");
    if (!doc.contains("unitary")) fail("missing \"unitary\"");
    return parse_matrix(doc["unitary"], 4, "\"unitary\"");
  }
  return parse_matrix(doc, 4, "the gate matrix");
}

ComplexMatrix load_gate_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open gate file: " + path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("gate file: ") + e.what());
  }
  return gate_matrix_from_json(doc);
}

nlohmann::json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json report_qubits_to_json(const MeasurementReport& report) {
  json out = json::array();
  for (const auto& [qubit, stats] : report.qubits) {
    out.push_back({{"qubit", qubit},
                   {"p0", stats.p0},
                   {"p1", stats.p1},
                   {"method", method_name(stats.method)}});
  }
  return out;
}

}  // namespace spin3n
