/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "cscc/pauli.hpp"

#include "cscc/errors.hpp"

namespace cscc {

nlohmann::json PauliWithPhase::to_json() const {
  nlohmann::json j;
  j["x"] = x_bits.set_bits();
  j["z"] = z_bits.set_bits();
  j["phase_exp"] = phase_exp;
  return j;
}

nlohmann::json DiagonalGate::to_json() const {
  nlohmann::json j;
  j["rot"] = nlohmann::json::array();
  for (size_t v = 0; v < rot_exp.size(); ++v) {
    if (rot_exp[v]) j["rot"].push_back({{"id", v}, {"exp", rot_exp[v]}});
  }
  j["global_exp"] = global_exp;
  return j;
}

PauliWithPhase multiply(const PauliWithPhase &p, const PauliWithPhase &q) {
  if (p.x_bits.size() != q.x_bits.size()) {
    throw DimensionError("Pauli length mismatch in multiply");
  }
  // omega^a X^x1 Z^z1 . omega^b X^x2 Z^z2
  //   = omega^{a+b} (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
  PauliWithPhase out;
  out.x_bits = p.x_bits ^ q.x_bits;
  out.z_bits = p.z_bits ^ q.z_bits;
  out.phase_exp = static_cast<uint8_t>(
      (p.phase_exp + q.phase_exp + 4 * p.z_bits.and_weight(q.x_bits)) % 8);
  return out;
}

DiagonalGate commutator_diag_with_xpauli(const DiagonalGate &d, const PauliWithPhase &p) {
  if (d.size() != p.x_bits.size()) {
    throw DimensionError("operand length mismatch in commutator");
  }
  if (!p.is_x_type()) throw PreconditionError("P must be X-type");
  DiagonalGate out = DiagonalGate::identity(d.size());
  unsigned phase = (2 * p.phase_exp) % 8;  // P enters twice
  for (uint32_t v : p.x_bits.set_bits()) {
    out.rot_exp[v] = static_cast<uint8_t>((8 - (2 * d.rot_exp[v]) % 8) % 8);
    phase += d.rot_exp[v];
  }
  out.global_exp = static_cast<uint8_t>(phase % 8);
  return out;
}

PauliWithPhase commutator_slayer_with_xpauli(const DiagonalGate &d, const PauliWithPhase &p) {
  if (d.size() != p.x_bits.size()) {
    throw DimensionError("operand length mismatch in commutator");
  }
  if (!p.is_x_type()) throw PreconditionError("P must be X-type");
  if (!d.all_even()) {
    throw PreconditionError("diagonal layer has odd rotations; commutator is not a Pauli");
  }
  PauliWithPhase out = PauliWithPhase::identity(d.size());
  unsigned phase = (2 * p.phase_exp) % 8;
  for (uint32_t v : p.x_bits.set_bits()) {
    if ((d.rot_exp[v] / 2) % 2 == 1) out.z_bits.set(v);  // rot 2 or 6
    phase += d.rot_exp[v];
  }
  out.phase_exp = static_cast<uint8_t>(phase % 8);
  return out;
}

}  // namespace cscc
