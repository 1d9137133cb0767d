/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_COMPLEX_HPP_
#define CSCC_COMPLEX_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cscc/color.hpp"
#include "cscc/rational.hpp"

namespace cscc {

/// Label of a boundary facet: one of the four colors, or the Pauli-Z facet
/// created by truncation.
inline constexpr const char *kPauliZLabel = "PauliZ";

struct QubitRecord {
  uint32_t id;
  std::array<Rational, 3> pos;
};

struct EdgeRecord {
  std::array<uint32_t, 2> support;  // sorted
  Color color;
};

struct FaceRecord {
  std::vector<uint32_t> support;  // sorted
  ColorPair colors;
};

struct CellRecord {
  std::vector<uint32_t> support;  // sorted
  Color color;
};

struct BoundaryRecord {
  std::string facet;              // e.g. "x-", "z+", "truncated-edge"
  std::string label;              // "r" | "g" | "y" | "b" | "PauliZ"
  std::vector<uint32_t> support;  // qubits on this facet, sorted
};

/// A four-colorable 3D cell complex: qubits are lattice vertices, cells carry
/// X stabilizers, faces carry Z stabilizers.
struct ColoredComplex {
  std::vector<QubitRecord> qubits;
  std::vector<EdgeRecord> edges;
  std::vector<FaceRecord> faces;
  std::vector<CellRecord> cells;
  std::vector<BoundaryRecord> boundaries;
  std::vector<uint32_t> truncation_region;  // sorted

  nlohmann::json to_json() const;
  static ColoredComplex from_json(const nlohmann::json &j);
};

struct ValidationCheck {
  std::string name;
  bool pass;
  std::string witness;  // empty when passing
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool all_pass() const {
    for (const auto &c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Runs every structural invariant check against the given complex.
/// Failures become report entries with a witness, never exceptions.
ValidationReport validate(const ColoredComplex &cx);

/// Even/odd qubit split: no edge joins two qubits of equal parity.
struct Bipartition {
  std::vector<uint8_t> parity;  // 0 = even, 1 = odd, indexed by qubit id

  nlohmann::json to_json() const;
};

/// Two-colors the qubit adjacency graph (adjacency = sharing an edge).
/// The lowest-id qubit of each connected component is even.
/// Throws NotBipartiteError when no two-coloring exists.
Bipartition bipartition(const ColoredComplex &cx);

}  // namespace cscc

#endif  // CSCC_COMPLEX_HPP_
