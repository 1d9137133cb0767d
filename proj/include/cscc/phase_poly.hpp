/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_PHASE_POLY_HPP_
#define CSCC_PHASE_POLY_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cscc/css.hpp"
#include "cscc/pauli.hpp"

namespace cscc {

/// Signs of the transversal T layer: qubit v receives T^{c_v}.
struct SignVector {
  std::vector<int8_t> c;  // entries +1 / -1

  static SignVector from_parity(const std::vector<uint8_t> &parity) {
    SignVector s;
    for (uint8_t p : parity) s.c.push_back(p == 0 ? 1 : -1);
    return s;
  }

  SignVector negated() const {
    SignVector s = *this;
    for (auto &v : s.c) v = -v;
    return s;
  }

  size_t size() const { return c.size(); }

  /// The layer as a diagonal gate (T on +1, T^dagger on -1).
  DiagonalGate to_gate() const {
    DiagonalGate g = DiagonalGate::identity(c.size());
    for (size_t v = 0; v < c.size(); ++v) g.rot_exp[v] = c[v] > 0 ? 1 : 7;
    return g;
  }
};

/// Multilinear polynomial mod 8 over stabilizer variables b_0..b_{r-1} and
/// logical variables u_0..u_{k-1}; variable t < r is b_t, else u_{t-r}.
/// Monomials are sorted variable-index lists; only nonzero coefficients are
/// stored; degree <= 3 after reduction.
struct PhasePolynomial {
  size_t num_stab_vars = 0;
  size_t num_logical_vars = 0;
  std::map<std::vector<uint32_t>, uint8_t> coeffs;

  /// Evaluate at a 0/1 assignment (index by variable id).
  unsigned eval(const std::vector<uint8_t> &assignment) const;

  nlohmann::json to_json() const;
};

/// The u-only restriction of a codespace-preserving phase polynomial.
struct LogicalAction {
  std::map<uint32_t, uint8_t> linear;
  std::map<std::pair<uint32_t, uint32_t>, uint8_t> quadratic;
  std::map<std::array<uint32_t, 3>, uint8_t> cubic;

  bool operator==(const LogicalAction &o) const = default;
  nlohmann::json to_json() const;
};

struct PreservationVerdict {
  bool preserved;
  /// Violating monomials with their coefficients (empty when preserved).
  std::vector<std::pair<std::vector<uint32_t>, uint8_t>> witnesses;
};

/// The unique multilinear polynomial F with, for every subset m of rows,
/// F(m) = sum_v c_v x_v(m) mod 8 where x(m) is the GF(2) sum of the selected
/// rows. Rows are the code's Hx rows (variables b_t) followed by the basis
/// Xbar representatives (variables u_i). Computed by inclusion-exclusion over
/// single, pair and triple intersection weights; higher terms vanish mod 8.
/// `threads` parallelizes the outer row index (default 1 = sequential).
PhasePolynomial induced_phase_polynomial(const CssCode &code, const LogicalBasis &basis,
                                         const SignVector &c, int threads = 1);

/// True iff every monomial containing a stabilizer variable vanishes.
PreservationVerdict preserves_codespace(const PhasePolynomial &f);

/// The u-only coefficients. Throws CodespaceError when the polynomial does
/// not preserve the codespace (the logical action is undefined there).
LogicalAction logical_action(const PhasePolynomial &f);

/// One primitive diagonal gate in a classification.
struct GateTerm {
  std::string kind;             // "T", "S", "Z", "CS", "CZ", "CCZ"
  std::vector<uint32_t> qubits; // logical indices, ascending
  int power;                    // +1 or -1 (always +1 for Z, CZ, CCZ)
};

struct GateDescription {
  std::vector<GateTerm> gates;  // empty = identity

  bool is_identity() const { return gates.empty(); }
  std::string str() const;
  nlohmann::json to_json() const;
  /// The coefficient maps this description denotes; classify_gate guarantees
  /// a round trip.
  LogicalAction to_action(size_t k) const;
};

/// Exact, human- and machine-readable classification of a logical action.
/// Throws Error on coefficients impossible for a signed-T layer
/// (odd pairwise or non-4 triple coefficients).
GateDescription classify_gate(const LogicalAction &a);

/// Independent oracle: builds each logical codeword as the explicit uniform
/// superposition over its coset, applies the signed T layer per bitstring,
/// checks the image is omega^{f(u)} times the codeword, and returns the
/// multilinear interpolation of f. Requires n <= 22 and rank(Hx) <= 16.
/// Throws BoundError when too large, CodespaceError (with the offending u in
/// the message) when the image leaves the codespace.
LogicalAction statevector_logical_action(const CssCode &code, const LogicalBasis &basis,
                                         const SignVector &c);

}  // namespace cscc

#endif  // CSCC_PHASE_POLY_HPP_
