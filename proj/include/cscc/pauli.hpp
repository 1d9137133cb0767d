/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_PAULI_HPP_
#define CSCC_PAULI_HPP_

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cscc/bitvec.hpp"

namespace cscc {

/// All phases in this module are powers of omega = exp(i pi / 4), tracked as
/// exponents mod 8. i = omega^2, -1 = omega^4.

/// omega^phase_exp * X^{x_bits} Z^{z_bits}
struct PauliWithPhase {
  Bitvec x_bits;
  Bitvec z_bits;
  uint8_t phase_exp = 0;  // mod 8

  static PauliWithPhase identity(size_t n) { return {Bitvec(n), Bitvec(n), 0}; }
  static PauliWithPhase x_on(size_t n, const Bitvec &support) {
    return {support, Bitvec(n), 0};
  }

  bool is_x_type() const { return z_bits.is_zero(); }
  bool operator==(const PauliWithPhase &o) const = default;

  nlohmann::json to_json() const;
};

/// omega^global_exp * prod_v diag(1, omega^{rot_exp[v]});
/// T has rot 1, S has rot 2, Z has rot 4.
struct DiagonalGate {
  std::vector<uint8_t> rot_exp;  // one entry per qubit, mod 8
  uint8_t global_exp = 0;        // mod 8

  static DiagonalGate identity(size_t n) { return {std::vector<uint8_t>(n, 0), 0}; }

  size_t size() const { return rot_exp.size(); }
  bool all_even() const {
    for (uint8_t r : rot_exp) {
      if (r & 1) return false;
    }
    return true;
  }
  bool operator==(const DiagonalGate &o) const = default;

  nlohmann::json to_json() const;
};

/// Exact group product: phase picks up omega^4 per Z-past-X transposition.
PauliWithPhase multiply(const PauliWithPhase &p, const PauliWithPhase &q);

/// P D P D^dagger for an X-type P: stays diagonal.
/// Per-qubit rule on supp(P): X T^a X T^{-a} = omega^a diag(1, omega^{-2a}),
/// so rot' = -2a on the support (0 elsewhere) and the global phase gains
/// sum of a_v over the support.
DiagonalGate commutator_diag_with_xpauli(const DiagonalGate &d, const PauliWithPhase &p);

/// P D P D^dagger when every rotation of D is even (an S/Z layer): the result
/// is a Pauli. z' flips exactly where rot is 2 or 6 on supp(P); the phase
/// gains sum of rot_v over the support.
PauliWithPhase commutator_slayer_with_xpauli(const DiagonalGate &d, const PauliWithPhase &p);

}  // namespace cscc

#endif  // CSCC_PAULI_HPP_
