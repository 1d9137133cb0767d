/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_CSS_HPP_
#define CSCC_CSS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cscc/complex.hpp"
#include "cscc/gf2.hpp"

namespace cscc {

/// CSS stabilizer code: Hx rows are X-stabilizer supports, Hz rows are
/// Z-stabilizer supports, Hx Hz^T = 0 over GF(2).
struct CssCode {
  size_t n = 0;
  BitMatrix hx;
  BitMatrix hz;
  /// Column -> originating complex qubit id (identity for assembled codes,
  /// the list of surviving qubits after a projection).
  std::vector<uint32_t> qubit_map;

  size_t rank_hx() const { return hx.rank(); }
  size_t rank_hz() const { return hz.rank(); }
  size_t k() const { return n - rank_hx() - rank_hz(); }

  nlohmann::json to_json() const;
  static CssCode from_json(const nlohmann::json &j);
};

/// One Hx row per cell, one Hz row per face, columns ordered by qubit id.
/// Throws ConstructionError if the stabilizers fail to commute.
CssCode assemble(const ColoredComplex &cx);

/// Projects every qubit of `region` onto the Pauli-Z +1 eigenstate and
/// returns the code on the remaining columns. The new Hz is the old one with
/// region columns deleted (deduplicated, zero rows dropped); the new Hx is a
/// basis of the X-stabilizer subgroup supported away from the region —
/// a kernel computation over the row-combination space, not a row filter.
CssCode project_z(const CssCode &code, const std::vector<uint32_t> &region);

struct LogicalPair {
  Bitvec xbar;
  Bitvec zbar;
  std::string label;           // "A", "B", ...
  std::string dominant_color;  // dominant edge color of zbar, when known
};

struct LogicalBasis {
  std::vector<LogicalPair> pairs;
  std::string annotation;

  nlohmann::json to_json() const;
};

/// Symplectic logical basis over GF(2): k pairs with pairing delta_ij,
/// commuting with all stabilizers, none a stabilizer. Deterministic.
LogicalBasis logical_basis(const CssCode &code);

/// Re-pairs the basis against geometrically constructed string
/// representatives: Zbar_A becomes a blue string joining the two blue
/// boundaries and Zbar_B a red string joining the two red ones, with Xbar
/// partners solved from the pairing conditions. Falls back to a greedy
/// color-reduction labeling (annotation "geometric-match: none") when the
/// strings cannot be built or are not logical.
LogicalBasis match_geometric_basis(const ColoredComplex &cx, const CssCode &code,
                                   const LogicalBasis &basis);

/// Z-type string operator of the given color joining the two facets, built by
/// breadth-first search over the color-class adjacency; empty optional when
/// no such path exists. The support avoids complex qubits outside
/// code.qubit_map (projected regions).
std::optional<Bitvec> geometric_string(const ColoredComplex &cx, const CssCode &code,
                                       Color color, const std::string &facet_a,
                                       const std::string &facet_b);

}  // namespace cscc

#endif  // CSCC_CSS_HPP_
