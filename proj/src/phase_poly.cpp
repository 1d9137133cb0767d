/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "cscc/phase_poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "cscc/errors.hpp"

namespace cscc {

namespace {

/// Signed weight: sum of c_v over the set bits of mask.
int64_t signed_weight(const Bitvec &mask, const Bitvec &even_mask) {
  int64_t plus = static_cast<int64_t>(mask.and_weight(even_mask));
  return 2 * plus - static_cast<int64_t>(mask.weight());
}

uint8_t mod8(int64_t v) { return static_cast<uint8_t>(((v % 8) + 8) % 8); }

}  // namespace

unsigned PhasePolynomial::eval(const std::vector<uint8_t> &assignment) const {
  unsigned total = 0;
  for (const auto &[mono, coeff] : coeffs) {
    bool on = true;
    for (uint32_t v : mono) on = on && assignment[v];
    if (on) total += coeff;
  }
  return total % 8;
}

nlohmann::json PhasePolynomial::to_json() const {
  nlohmann::json j;
  j["monomials"] = nlohmann::json::array();
  for (const auto &[mono, coeff] : coeffs) {
    nlohmann::json vars = nlohmann::json::array();
    for (uint32_t v : mono) {
      if (v < num_stab_vars) {
        vars.push_back("b" + std::to_string(v + 1));
      } else {
        vars.push_back("u" + std::to_string(v - num_stab_vars + 1));
      }
    }
    j["monomials"].push_back({{"vars", vars}, {"coeff", coeff}});
  }
  return j;
}

nlohmann::json LogicalAction::to_json() const {
  nlohmann::json j;
  j["monomials"] = nlohmann::json::array();
  for (const auto &[v, c] : linear) {
    j["monomials"].push_back({{"vars", {"u" + std::to_string(v + 1)}}, {"coeff", c}});
  }
  for (const auto &[vs, c] : quadratic) {
    j["monomials"].push_back(
        {{"vars", {"u" + std::to_string(vs.first + 1), "u" + std::to_string(vs.second + 1)}},
         {"coeff", c}});
  }
  for (const auto &[vs, c] : cubic) {
    j["monomials"].push_back({{"vars",
                               {"u" + std::to_string(vs[0] + 1), "u" + std::to_string(vs[1] + 1),
                                "u" + std::to_string(vs[2] + 1)}},
                              {"coeff", c}});
  }
  return j;
}

PhasePolynomial induced_phase_polynomial(const CssCode &code, const LogicalBasis &basis,
                                         const SignVector &c, int threads) {
  if (c.size() != code.n) throw DimensionError("sign vector length != code size");
  for (const auto &p : basis.pairs) {
    if (p.xbar.size() != code.n) throw DimensionError("basis length != code size");
  }
  std::vector<Bitvec> rows;
  for (size_t i = 0; i < code.hx.num_rows(); ++i) rows.push_back(code.hx.row(i));
  const size_t r = rows.size();
  for (const auto &p : basis.pairs) rows.push_back(p.xbar);
  const size_t nr = rows.size();

  Bitvec even_mask(code.n);
  for (size_t v = 0; v < code.n; ++v) {
    if (c.c[v] > 0) even_mask.set(v);
  }

  // F = sum_t W(t) m_t - 2 sum W(t,t') m_t m_t' + 4 sum W(t,t',t'') m m m
  // where W is the signed weight of the support intersection; degree-4 terms
  // carry a factor 8 and vanish.
  auto compute_range = [&](size_t t_begin, size_t t_end) {
    std::map<std::vector<uint32_t>, uint8_t> out;
    auto put = [&out](std::vector<uint32_t> mono, int64_t value) {
      uint8_t m = mod8(value);
      if (m) out.emplace(std::move(mono), m);
    };
    for (size_t t = t_begin; t < t_end; ++t) {
      put({static_cast<uint32_t>(t)}, signed_weight(rows[t], even_mask));
      for (size_t t2 = t + 1; t2 < nr; ++t2) {
        Bitvec inter = rows[t] & rows[t2];
        put({static_cast<uint32_t>(t), static_cast<uint32_t>(t2)},
            -2 * signed_weight(inter, even_mask));
        if (inter.is_zero()) continue;
        for (size_t t3 = t2 + 1; t3 < nr; ++t3) {
          put({static_cast<uint32_t>(t), static_cast<uint32_t>(t2),
               static_cast<uint32_t>(t3)},
              4 * signed_weight(inter & rows[t3], even_mask));
        }
      }
    }
    return out;
  };

  PhasePolynomial f;
  f.num_stab_vars = r;
  f.num_logical_vars = basis.pairs.size();
  if (threads <= 1 || nr < 2 * static_cast<size_t>(threads)) {
    f.coeffs = compute_range(0, nr);
  } else {
    // partition the outer index; every monomial is keyed by its smallest
    // index, so the partial maps are disjoint and merge deterministically
    size_t nt = static_cast<size_t>(threads);
    std::vector<std::map<std::vector<uint32_t>, uint8_t>> parts(nt);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < nt; ++w) {
      size_t lo = nr * w / nt, hi = nr * (w + 1) / nt;
      pool.emplace_back([&, w, lo, hi] { parts[w] = compute_range(lo, hi); });
    }
    for (auto &th : pool) th.join();
    for (auto &part : parts) f.coeffs.merge(part);
  }
  return f;
}

PreservationVerdict preserves_codespace(const PhasePolynomial &f) {
  PreservationVerdict v;
  v.preserved = true;
  for (const auto &[mono, coeff] : f.coeffs) {
    bool has_b = false;
    for (uint32_t var : mono) has_b = has_b || var < f.num_stab_vars;
    if (has_b) {
      v.preserved = false;
      v.witnesses.push_back({mono, coeff});
    }
  }
  return v;
}

LogicalAction logical_action(const PhasePolynomial &f) {
  PreservationVerdict v = preserves_codespace(f);
  if (!v.preserved) {
    throw CodespaceError("codespace not preserved; " + std::to_string(v.witnesses.size()) +
                         " stabilizer monomials survive");
  }
  LogicalAction a;
  const uint32_t r = static_cast<uint32_t>(f.num_stab_vars);
  for (const auto &[mono, coeff] : f.coeffs) {
    if (mono.size() == 1) {
      a.linear[mono[0] - r] = coeff;
    } else if (mono.size() == 2) {
      a.quadratic[{mono[0] - r, mono[1] - r}] = coeff;
    } else if (mono.size() == 3) {
      a.cubic[{mono[0] - r, mono[1] - r, mono[2] - r}] = coeff;
    }
  }
  return a;
}

std::string GateDescription::str() const {
  if (gates.empty()) return "identity";
  std::ostringstream os;
  for (size_t i = 0; i < gates.size(); ++i) {
    if (i) os << " * ";
    os << gates[i].kind;
    if (gates[i].power != 1) os << "^" << gates[i].power;
    os << "(";
    for (size_t q = 0; q < gates[i].qubits.size(); ++q) {
      if (q) os << ",";
      os << static_cast<char>('A' + gates[i].qubits[q]);
    }
    os << ")";
  }
  return os.str();
}

nlohmann::json GateDescription::to_json() const {
  nlohmann::json j;
  j["gates"] = nlohmann::json::array();
  for (const auto &g : gates) {
    nlohmann::json labels = nlohmann::json::array();
    for (uint32_t q : g.qubits) labels.push_back(std::string(1, static_cast<char>('A' + q)));
    j["gates"].push_back({{"kind", g.kind}, {"qubits", labels}, {"power", g.power}});
  }
  return j;
}

LogicalAction GateDescription::to_action(size_t) const {
  LogicalAction a;
  auto add = [](std::map<uint32_t, uint8_t> &m, uint32_t key, int delta) {
    m[key] = static_cast<uint8_t>(((m[key] + delta) % 8 + 8) % 8);
    if (m[key] == 0) m.erase(key);
  };
  for (const auto &g : gates) {
    int unit = g.kind == "T" ? 1 : (g.kind == "S" || g.kind == "CS") ? 2 : 4;
    int delta = ((unit * g.power) % 8 + 8) % 8;
    if (g.qubits.size() == 1) {
      add(a.linear, g.qubits[0], delta);
    } else if (g.qubits.size() == 2) {
      auto key = std::pair(g.qubits[0], g.qubits[1]);
      a.quadratic[key] = static_cast<uint8_t>((a.quadratic[key] + delta) % 8);
      if (a.quadratic[key] == 0) a.quadratic.erase(key);
    } else {
      std::array<uint32_t, 3> key{g.qubits[0], g.qubits[1], g.qubits[2]};
      a.cubic[key] = static_cast<uint8_t>((a.cubic[key] + delta) % 8);
      if (a.cubic[key] == 0) a.cubic.erase(key);
    }
  }
  return a;
}

GateDescription classify_gate(const LogicalAction &a) {
  GateDescription d;
  for (const auto &[v, coeff] : a.linear) {
    switch (coeff) {
      case 1: d.gates.push_back({"T", {v}, 1}); break;
      case 7: d.gates.push_back({"T", {v}, -1}); break;
      case 2: d.gates.push_back({"S", {v}, 1}); break;
      case 6: d.gates.push_back({"S", {v}, -1}); break;
      case 4: d.gates.push_back({"Z", {v}, 1}); break;
      case 3:
        d.gates.push_back({"S", {v}, 1});
        d.gates.push_back({"T", {v}, 1});
        break;
      case 5:
        d.gates.push_back({"S", {v}, -1});
        d.gates.push_back({"T", {v}, -1});
        break;
      default:
        throw Error("unclassifiable linear coefficient");
    }
  }
  for (const auto &[vs, coeff] : a.quadratic) {
    std::vector<uint32_t> q{vs.first, vs.second};
    switch (coeff) {
      case 2: d.gates.push_back({"CS", q, 1}); break;
      case 6: d.gates.push_back({"CS", q, -1}); break;
      case 4: d.gates.push_back({"CZ", q, 1}); break;
      default:
        throw Error("unclassifiable pairwise coefficient " + std::to_string(coeff) +
                    "; not reachable by a signed T layer");
    }
  }
  for (const auto &[vs, coeff] : a.cubic) {
    if (coeff != 4) {
      throw Error("unclassifiable triple coefficient " + std::to_string(coeff));
    }
    d.gates.push_back({"CCZ", {vs[0], vs[1], vs[2]}, 1});
  }
  return d;
}

LogicalAction statevector_logical_action(const CssCode &code, const LogicalBasis &basis,
                                         const SignVector &c) {
  if (c.size() != code.n) throw DimensionError("sign vector length != code size");
  if (code.n > 22) throw BoundError("statevector oracle limited to n <= 22");
  BitMatrix hx_rref = code.hx;
  hx_rref.rref();
  size_t rank = 0;
  while (rank < hx_rref.num_rows() && !hx_rref.row(rank).is_zero()) ++rank;
  if (rank > 16) throw BoundError("statevector oracle limited to rank(Hx) <= 16");

  Bitvec even_mask(code.n);
  for (size_t v = 0; v < code.n; ++v) {
    if (c.c[v] > 0) even_mask.set(v);
  }

  // enumerate the stabilizer span once
  std::vector<Bitvec> span{Bitvec(code.n)};
  span.reserve(size_t(1) << rank);
  for (size_t i = 0; i < rank; ++i) {
    size_t sz = span.size();
    for (size_t s = 0; s < sz; ++s) span.push_back(span[s] ^ hx_rref.row(i));
  }

  const size_t k = basis.pairs.size();
  if (k > 20) throw BoundError("too many logical qubits for interpolation");
  std::vector<int> f_of_u(size_t(1) << k, 0);
  for (size_t u = 0; u < (size_t(1) << k); ++u) {
    Bitvec base(code.n);
    for (size_t i = 0; i < k; ++i) {
      if ((u >> i) & 1) base ^= basis.pairs[i].xbar;
    }
    // the image of the coset superposition is omega^f |u> iff the
    // accumulated exponent is constant across the coset
    int64_t first = signed_weight(base ^ span[0], even_mask);
    uint8_t phase = mod8(first);
    for (const Bitvec &s : span) {
      if (mod8(signed_weight(base ^ s, even_mask)) != phase) {
        throw CodespaceError("image of codeword u=" + std::to_string(u) +
                             " is not proportional to the codeword");
      }
    }
    f_of_u[u] = phase;
  }

  // Moebius interpolation to multilinear coefficients mod 8
  LogicalAction a;
  for (size_t m = 1; m < (size_t(1) << k); ++m) {
    int64_t total = 0;
    size_t sub = m;
    while (true) {
      int sign = (std::popcount(m) - std::popcount(sub)) % 2 == 0 ? 1 : -1;
      total += sign * f_of_u[sub];
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
    uint8_t coeff = mod8(total);
    if (!coeff) continue;
    std::vector<uint32_t> vars;
    for (uint32_t i = 0; i < k; ++i) {
      if ((m >> i) & 1) vars.push_back(i);
    }
    if (vars.size() == 1) {
      a.linear[vars[0]] = coeff;
    } else if (vars.size() == 2) {
      a.quadratic[{vars[0], vars[1]}] = coeff;
    } else if (vars.size() == 3) {
      a.cubic[{vars[0], vars[1], vars[2]}] = coeff;
    } else {
      throw Error("degree > 3 coefficient from a signed T layer");
    }
  }
  return a;
}

}  // namespace cscc
