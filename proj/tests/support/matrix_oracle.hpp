/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_TESTS_MATRIX_ORACLE_HPP_
#define CSCC_TESTS_MATRIX_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "cscc/pauli.hpp"

namespace cscc::test {

/// Exact 2^n x 2^n matrix oracle for the operators this library builds:
/// generalized permutation matrices whose nonzero entries are powers of
/// omega = exp(i pi/4). Every product stays in this class, so all
/// comparisons are integer-exact -- no floating point.
struct PhaseMatrix {
  size_t dim = 0;
  std::vector<size_t> row_of;  // per column: the row of the nonzero entry
  std::vector<int> exp_of;     // per column: omega exponent mod 8

  static PhaseMatrix identity(size_t n) {
    PhaseMatrix m;
    m.dim = size_t(1) << n;
    for (size_t c = 0; c < m.dim; ++c) {
      m.row_of.push_back(c);
      m.exp_of.push_back(0);
    }
    return m;
  }

  static PhaseMatrix from_pauli(const PauliWithPhase &p) {
    size_t n = p.x_bits.size();
    PhaseMatrix m = identity(n);
    size_t xmask = 0, zmask = 0;
    for (uint32_t b : p.x_bits.set_bits()) xmask |= size_t(1) << b;
    for (uint32_t b : p.z_bits.set_bits()) zmask |= size_t(1) << b;
    for (size_t c = 0; c < m.dim; ++c) {
      m.row_of[c] = c ^ xmask;
      m.exp_of[c] = (p.phase_exp + 4 * std::popcount(c & zmask)) % 8;
    }
    return m;
  }

  static PhaseMatrix from_diag(const DiagonalGate &d) {
    PhaseMatrix m = identity(d.size());
    for (size_t c = 0; c < m.dim; ++c) {
      int e = d.global_exp;
      for (size_t v = 0; v < d.size(); ++v) {
        if ((c >> v) & 1) e += d.rot_exp[v];
      }
      m.exp_of[c] = e % 8;
    }
    return m;
  }

  PhaseMatrix operator*(const PhaseMatrix &b) const {
    PhaseMatrix out;
    out.dim = dim;
    for (size_t c = 0; c < dim; ++c) {
      size_t mid = b.row_of[c];
      out.row_of.push_back(row_of[mid]);
      out.exp_of.push_back((b.exp_of[c] + exp_of[mid]) % 8);
    }
    return out;
  }

  PhaseMatrix dagger() const {
    PhaseMatrix out;
    out.dim = dim;
    out.row_of.assign(dim, 0);
    out.exp_of.assign(dim, 0);
    for (size_t c = 0; c < dim; ++c) {
      out.row_of[row_of[c]] = c;
      out.exp_of[row_of[c]] = (8 - exp_of[c]) % 8;
    }
    return out;
  }

  bool operator==(const PhaseMatrix &o) const = default;
};

}  // namespace cscc::test

#endif  // CSCC_TESTS_MATRIX_ORACLE_HPP_
