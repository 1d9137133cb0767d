/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cscc/complex_builder.hpp"
#include "cscc/crosscheck.hpp"
#include "cscc/css.hpp"
#include "cscc/fixtures.hpp"
#include "cscc/phase_poly.hpp"

using namespace cscc;

namespace {

CssCode toy_code(size_t n, const std::vector<std::vector<uint32_t>> &hx,
                 const std::vector<std::vector<uint32_t>> &hz) {
  CssCode code;
  code.n = n;
  code.hx = BitMatrix(n);
  code.hz = BitMatrix(n);
  for (const auto &row : hx) code.hx.add_row(Bitvec::from_bits(n, row));
  for (const auto &row : hz) code.hz.add_row(Bitvec::from_bits(n, row));
  for (uint32_t i = 0; i < n; ++i) code.qubit_map.push_back(i);
  return code;
}

SignVector all_plus(size_t n) {
  SignVector s;
  s.c.assign(n, 1);
  return s;
}

uint8_t coeff_of(const PhasePolynomial &f, std::vector<uint32_t> mono) {
  auto it = f.coeffs.find(mono);
  return it == f.coeffs.end() ? 0 : it->second;
}

LogicalPair xpair(size_t n, const std::vector<uint32_t> &x,
                  const std::vector<uint32_t> &z, const std::string &label) {
  return {Bitvec::from_bits(n, x), Bitvec::from_bits(n, z), label, ""};
}

}  // namespace

TEST_CASE("two overlapping rows reproduce the inclusion-exclusion coefficients") {
  // rows {q0,q1}, {q1,q2}, all-plus signs:
  // F = 2 b1 + 2 b2 - 2 b1 b2  (mod 8: coefficient 6 on the pair)
  CssCode code = toy_code(3, {{0, 1}, {1, 2}}, {});
  LogicalBasis basis;  // no logical variables
  PhasePolynomial f = induced_phase_polynomial(code, basis, all_plus(3));
  CHECK(coeff_of(f, {0}) == 2);
  CHECK(coeff_of(f, {1}) == 2);
  CHECK(coeff_of(f, {0, 1}) == 6);
  CHECK(f.coeffs.size() == 3);
}

TEST_CASE("a weight-8 stabilizer contributes nothing mod 8") {
  CssCode code = toy_code(8, {{0, 1, 2, 3, 4, 5, 6, 7}}, {});
  PhasePolynomial f = induced_phase_polynomial(code, LogicalBasis{}, all_plus(8));
  CHECK(f.coeffs.empty());
  CHECK(preserves_codespace(f).preserved);
}

TEST_CASE("multilinear interpolation reproduces the exponent on every subset") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    CssCode code = random_css_code(rng, 10);
    LogicalBasis basis = logical_basis(code);
    SignVector c = random_signs(rng, code.n);
    PhasePolynomial f = induced_phase_polynomial(code, basis, c);

    std::vector<Bitvec> rows;
    for (size_t i = 0; i < code.hx.num_rows(); ++i) rows.push_back(code.hx.row(i));
    for (const auto &p : basis.pairs) rows.push_back(p.xbar);
    if (rows.size() > 14) continue;
    for (size_t m = 0; m < (size_t(1) << rows.size()); ++m) {
      Bitvec x(code.n);
      std::vector<uint8_t> assign(rows.size(), 0);
      for (size_t t = 0; t < rows.size(); ++t) {
        if ((m >> t) & 1) {
          x ^= rows[t];
          assign[t] = 1;
        }
      }
      int64_t direct = 0;
      for (uint32_t v : x.set_bits()) direct += c.c[v];
      CHECK(f.eval(assign) == static_cast<unsigned>(((direct % 8) + 8) % 8));
    }
  }
}

TEST_CASE("sign flip negates every coefficient") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    CssCode code = random_css_code(rng, 12);
    LogicalBasis basis = logical_basis(code);
    SignVector c = random_signs(rng, code.n);
    PhasePolynomial f = induced_phase_polynomial(code, basis, c);
    PhasePolynomial g = induced_phase_polynomial(code, basis, c.negated());
    CHECK(f.coeffs.size() == g.coeffs.size());
    for (const auto &[mono, coeff] : f.coeffs) {
      CHECK(coeff_of(g, mono) == (8 - coeff) % 8);
    }
  }
}

TEST_CASE("preservation verdict and witnesses") {
  PhasePolynomial f;
  f.num_stab_vars = 1;
  f.num_logical_vars = 2;
  f.coeffs[{1, 2}] = 2;  // 2 u1 u2
  CHECK(preserves_codespace(f).preserved);
  LogicalAction a = logical_action(f);
  CHECK(a.quadratic.at({0, 1}) == 2);

  f.coeffs[{0, 1}] = 4;  // 4 b1 u1
  PreservationVerdict v = preserves_codespace(f);
  CHECK_FALSE(v.preserved);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].first == std::vector<uint32_t>{0, 1});
  CHECK(v.witnesses[0].second == 4);
  CHECK_THROWS_AS(logical_action(f), CodespaceError);
}

TEST_CASE("representative choice does not move the logical action") {
  ColoredComplex cx = tetrahedral15_complex();
  CssCode code = assemble(cx);
  Bipartition bp = bipartition(cx);
  SignVector c = SignVector::from_parity(bp.parity);
  LogicalBasis basis = logical_basis(code);
  LogicalAction base = logical_action(induced_phase_polynomial(code, basis, c));
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    LogicalBasis deformed = basis;
    for (size_t i = 0; i < code.hx.num_rows(); ++i) {
      if (rng.coin()) deformed.pairs[0].xbar ^= code.hx.row(i);
    }
    CHECK(logical_action(induced_phase_polynomial(code, deformed, c)) == base);
  }
}

TEST_CASE("tetrahedral code acts as a transversal T to the oracle's agreement") {
  ColoredComplex cx = tetrahedral15_complex();
  CssCode code = assemble(cx);
  SignVector c = SignVector::from_parity(bipartition(cx).parity);
  LogicalBasis basis = logical_basis(code);

  PhasePolynomial f = induced_phase_polynomial(code, basis, c);
  CHECK(preserves_codespace(f).preserved);
  LogicalAction a = logical_action(f);
  REQUIRE(a.linear.count(0));
  CHECK((a.linear.at(0) == 1 || a.linear.at(0) == 7));
  CHECK(a.quadratic.empty());
  CHECK(a.cubic.empty());
  CHECK(a == statevector_logical_action(code, basis, c));
}

TEST_CASE("threaded evaluation matches sequential") {
  ColoredComplex cx = build_cube({2, 2, 2});
  CssCode code = assemble(cx);
  SignVector c = SignVector::from_parity(bipartition(cx).parity);
  LogicalBasis basis = logical_basis(code);
  PhasePolynomial f1 = induced_phase_polynomial(code, basis, c, 1);
  PhasePolynomial f4 = induced_phase_polynomial(code, basis, c, 4);
  CHECK(f1.coeffs == f4.coeffs);
}

TEST_CASE("statevector oracle on trivial encodings") {
  // unencoded qubit: Hx empty, Xbar = the qubit itself, T acts as logical T
  CssCode code = toy_code(1, {}, {});
  LogicalBasis basis;
  basis.pairs.push_back(xpair(1, {0}, {0}, "A"));
  LogicalAction a = statevector_logical_action(code, basis, all_plus(1));
  CHECK(a.linear.at(0) == 1);

  LogicalAction b = statevector_logical_action(code, basis, all_plus(1).negated());
  CHECK(b.linear.at(0) == 7);
}

TEST_CASE("statevector oracle enforces its enumeration bounds") {
  CssCode code = toy_code(23, {}, {});
  LogicalBasis basis;
  basis.pairs.push_back(xpair(23, {0}, {0}, "A"));
  CHECK_THROWS_AS(statevector_logical_action(code, basis, all_plus(23)), BoundError);
}

TEST_CASE("statevector oracle flags a non-preserving layer with the bad codeword") {
  // Hx = [110], signs +,-,+ : the coset {000,110} accumulates unequal phases
  CssCode code = toy_code(3, {{0, 1}}, {{2}});
  LogicalBasis basis = logical_basis(code);
  SignVector c;
  c.c = {1, -1, 1};
  PhasePolynomial f = induced_phase_polynomial(code, basis, c);
  CHECK_FALSE(preserves_codespace(f).preserved);
  CHECK_THROWS_AS(statevector_logical_action(code, basis, c), CodespaceError);
}

TEST_CASE("classification covers the reachable diagonal gates exactly") {
  LogicalAction a;
  a.quadratic[{0, 1}] = 2;
  GateDescription d = classify_gate(a);
  REQUIRE(d.gates.size() == 1);
  CHECK(d.gates[0].kind == "CS");
  CHECK(d.gates[0].power == 1);
  CHECK(d.str() == "CS(A,B)");
  CHECK(d.to_action(2) == a);

  CHECK(classify_gate(LogicalAction{}).is_identity());

  LogicalAction za_czab;
  za_czab.linear[0] = 4;
  za_czab.quadratic[{0, 1}] = 4;
  GateDescription d2 = classify_gate(za_czab);
  CHECK(d2.str() == "Z(A) * CZ(A,B)");
  CHECK(d2.to_action(2) == za_czab);
  // evaluate the diagonal: f(u) = 4 u_A + 4 u_A u_B over u in {0,1}^2
  // gives omega exponents [0,4,0,0], i.e. diag(1,-1,1,1) = Z_A CZ
  PhasePolynomial f;
  f.num_stab_vars = 0;
  f.num_logical_vars = 2;
  f.coeffs[{0}] = 4;
  f.coeffs[{0, 1}] = 4;
  CHECK(f.eval({0, 0}) == 0);
  CHECK(f.eval({1, 0}) == 4);
  CHECK(f.eval({0, 1}) == 0);
  CHECK(f.eval({1, 1}) == 0);

  LogicalAction t3;
  t3.linear[0] = 3;  // S then T
  GateDescription d3 = classify_gate(t3);
  CHECK(d3.to_action(1) == t3);

  LogicalAction ccz;
  ccz.cubic[{0, 1, 2}] = 4;
  CHECK(classify_gate(ccz).str() == "CCZ(A,B,C)");

  LogicalAction bad;
  bad.quadratic[{0, 1}] = 3;
  CHECK_THROWS_AS(classify_gate(bad), Error);
  LogicalAction bad3;
  bad3.cubic[{0, 1, 2}] = 2;
  CHECK_THROWS_AS(classify_gate(bad3), Error);
}

TEST_CASE("engine and statevector oracle agree on 100 seeded random codes") {
  CrosscheckResult res = oracle_crosscheck(1, 100, 14);
  CHECK(res.trials == 100);
  CHECK(res.all_agree());
  for (const auto &m : res.mismatches) {
    FAIL_CHECK(m);
  }
}

TEST_CASE("crosscheck is deterministic for a fixed seed") {
  CrosscheckResult a = oracle_crosscheck(9, 25, 12);
  CrosscheckResult b = oracle_crosscheck(9, 25, 12);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK_THROWS_AS(oracle_crosscheck(1, 0), PreconditionError);
}
