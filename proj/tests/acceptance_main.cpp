/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "cscc/complex_builder.hpp"
#include "cscc/crosscheck.hpp"
#include "cscc/css.hpp"
#include "cscc/fixtures.hpp"
#include "cscc/verify.hpp"
#include "support/matrix_oracle.hpp"

using namespace cscc;
using cscc::test::PhaseMatrix;

namespace {

int g_failed = 0;

void report(int number, const std::string &name, bool pass, const std::string &detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++g_failed;
}

struct Pipeline {
  ColoredComplex cx;
  CssCode code;
  SignVector signs;
  LogicalBasis basis;
  PhasePolynomial poly;
  PreservationVerdict verdict;
};

Pipeline run_truncated_pipeline(const Extent &extent) {
  Pipeline p;
  p.cx = build_truncated_cube(extent);
  CssCode assembled = assemble(p.cx);
  p.code = project_z(assembled, p.cx.truncation_region);
  Bipartition bp = bipartition(p.cx);
  for (uint32_t q : p.code.qubit_map) p.signs.c.push_back(bp.parity[q] == 0 ? 1 : -1);
  p.basis = match_geometric_basis(p.cx, p.code, logical_basis(p.code));
  p.poly = induced_phase_polynomial(p.code, p.basis, p.signs);
  p.verdict = preserves_codespace(p.poly);
  return p;
}

std::string witness_string(const PreservationVerdict &v, size_t r) {
  std::ostringstream os;
  size_t shown = 0;
  for (const auto &[mono, coeff] : v.witnesses) {
    if (shown++ == 4) {
      os << " ...";
      break;
    }
    for (uint32_t var : mono) {
      os << (var < r ? "b" : "u") << (var < r ? var + 1 : var - r + 1);
    }
    os << ":" << static_cast<int>(coeff) << " ";
  }
  return os.str();
}

}  // namespace

int main() {
  const Extent min_extent = kMinTruncatedExtent;

  // 1. logical-qubit counts
  {
    size_t k_cube = assemble(build_cube({2, 2, 2})).k();
    Pipeline p = run_truncated_pipeline(min_extent);
    report(1, "cube k = 3 and truncated-cube k = 2",
           k_cube == 3 && p.code.k() == 2,
           "cube k=" + std::to_string(k_cube) + " truncated k=" + std::to_string(p.code.k()));
  }

  Pipeline p = run_truncated_pipeline(min_extent);

  // 2. codespace preservation
  report(2, "every stabilizer monomial of F vanishes mod 8", p.verdict.preserved,
         p.verdict.preserved ? "" : witness_string(p.verdict, p.poly.num_stab_vars));

  // 3. the control-S claim
  {
    bool pass = false;
    std::string detail;
    if (p.verdict.preserved) {
      LogicalAction a = logical_action(p.poly);
      uint8_t quad = a.quadratic.count({0, 1}) ? a.quadratic.at({0, 1}) : 0;
      bool quad_ok = quad == 2 || quad == 6;
      bool clean = a.linear.empty() && a.cubic.empty();
      std::string cls;
      if (quad_ok && clean) {
        GateDescription d = classify_gate(a);
        cls = d.str();
        pass = d.gates.size() == 1 && d.gates[0].kind == "CS";
      }
      detail = "quad=" + std::to_string(quad) + (cls.empty() ? "" : " " + cls);
      if (!a.linear.empty()) {
        detail += " linear-witnesses:";
        for (const auto &[v, coeff] : a.linear) {
          detail += " u" + std::to_string(v + 1) + ":" + std::to_string(coeff);
        }
      }
    }
    report(3, "f_L is exactly CS^{+-1} on (u_A, u_B)", pass, detail);
  }

  // 4. theta = 1 for the logical representatives and deformations
  {
    bool ok = p.verdict.preserved;
    Rng rng(0xacce97);
    std::string detail;
    for (size_t i = 0; i < p.basis.pairs.size() && ok; ++i) {
      Bitvec rep = p.basis.pairs[i].xbar;
      if (check_theta(p.code, p.signs, rep) != 0) ok = false;
      for (int d = 0; d < 10 && ok; ++d) {
        Bitvec deformed = rep;
        for (size_t row = 0; row < p.code.hx.num_rows(); ++row) {
          if (rng.coin()) deformed ^= p.code.hx.row(row);
        }
        int theta = check_theta(p.code, p.signs, deformed);
        if (theta != 0) {
          ok = false;
          detail = "theta=" + std::to_string(theta) + " on a deformed Xbar_" +
                   p.basis.pairs[i].label;
        }
      }
    }
    report(4, "theta = 1 for Xbar_A, Xbar_B and 10 random representatives each", ok, detail);
  }

  // 5. phi = 1, eta = +-i, coset memberships
  int eta_exp = -1;
  {
    CommutatorCheck comm = check_commutators(p.code, p.basis, p.signs);
    eta_exp = comm.eta_exp;
    bool ok = comm.phi_exp == 0 && (comm.eta_exp == 2 || comm.eta_exp == 6) &&
              comm.phi_membership.ok && comm.eta_membership.ok;
    report(5, "phi = 1, eta = +-i, commutators land in the asserted cosets", ok,
           "phi_exp=" + std::to_string(comm.phi_exp) + " eta_exp=" + std::to_string(comm.eta_exp));
  }

  // 6. cross-path consistency
  {
    bool ok = false;
    std::string detail;
    if (p.verdict.preserved) {
      LogicalAction a = logical_action(p.poly);
      int quad = a.quadratic.count({0, 1}) ? a.quadratic.at({0, 1}) : 0;
      ok = quad == eta_exp;
      detail = "eta=" + std::to_string(eta_exp) + " f_L coeff=" + std::to_string(quad);
    }
    report(6, "eta equals the f_L coefficient on {u_A, u_B}", ok, detail);
  }

  // 7. tetrahedral 15-qubit engine vs oracle
  {
    auto t0 = std::chrono::steady_clock::now();
    ColoredComplex cx = tetrahedral15_complex();
    CssCode code = assemble(cx);
    SignVector c = SignVector::from_parity(bipartition(cx).parity);
    LogicalBasis basis = logical_basis(code);
    PhasePolynomial f = induced_phase_polynomial(code, basis, c);
    bool ok = preserves_codespace(f).preserved;
    std::string detail;
    if (ok) {
      LogicalAction engine = logical_action(f);
      LogicalAction oracle = statevector_logical_action(code, basis, c);
      uint8_t lin = engine.linear.count(0) ? engine.linear.at(0) : 0;
      ok = (lin == 1 || lin == 7) && engine.quadratic.empty() && engine.cubic.empty() &&
           engine == oracle;
      detail = "linear=" + std::to_string(lin);
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    ok = ok && ms < 1000;
    report(7, "tetrahedral15 gives logical T^{+-1}, engine == oracle, under 1 s", ok,
           detail + " elapsed=" + std::to_string(ms) + "ms");
  }

  // 8. engine-oracle equivalence on random codes
  {
    CrosscheckResult res = oracle_crosscheck(1, 100, 14);
    report(8, "100 seeded random CSS codes: engine and oracle fully agree", res.all_agree(),
           std::to_string(res.agreements) + "/" + std::to_string(res.trials));
  }

  // 9. structural validators across extents up to 4x4x4
  {
    bool ok = true;
    std::string detail;
    const Extent cubes[] = {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4},
                            {4, 2, 1}, {1, 2, 4}};
    for (const Extent &e : cubes) {
      ColoredComplex cx = build_cube(e);
      ValidationReport rep = validate(cx);
      CssCode code = assemble(cx);
      bool commutes = true;
      for (size_t i = 0; i < code.hx.num_rows() && commutes; ++i) {
        for (size_t j = 0; j < code.hz.num_rows(); ++j) {
          if (code.hx.row(i).parity_and(code.hz.row(j))) {
            commutes = false;
            break;
          }
        }
      }
      bool bipartite = true;
      try {
        bipartition(cx);
      } catch (const NotBipartiteError &) {
        bipartite = false;
      }
      if (!rep.all_pass() || !commutes || !bipartite) {
        ok = false;
        detail = "failed at extent " + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                 std::to_string(e[2]);
        break;
      }
    }
    for (const Extent &e : {Extent{2, 2, 2}, Extent{3, 3, 3}, Extent{4, 4, 4}}) {
      if (!ok) break;
      ColoredComplex cx = build_truncated_cube(e);
      if (!validate(cx).all_pass()) {
        ok = false;
        detail = "truncated validation failed";
      }
    }
    report(9, "validators, commutation and bipartitions hold up to extent 4x4x4", ok, detail);
  }

  // 10. Pauli algebra against the exact matrix oracle
  {
    Rng rng(0x9a97);
    bool ok = true;
    for (int t = 0; t < 1000 && ok; ++t) {
      size_t n = 1 + rng.below(4);
      PauliWithPhase pa = PauliWithPhase::identity(n);
      PauliWithPhase pb = PauliWithPhase::identity(n);
      PauliWithPhase px = PauliWithPhase::identity(n);
      DiagonalGate d = DiagonalGate::identity(n);
      DiagonalGate ds = DiagonalGate::identity(n);
      for (size_t v = 0; v < n; ++v) {
        if (rng.coin()) pa.x_bits.set(v);
        if (rng.coin()) pa.z_bits.set(v);
        if (rng.coin()) pb.x_bits.set(v);
        if (rng.coin()) pb.z_bits.set(v);
        if (rng.coin()) px.x_bits.set(v);
        d.rot_exp[v] = static_cast<uint8_t>(rng.below(8));
        ds.rot_exp[v] = static_cast<uint8_t>(2 * rng.below(4));
      }
      pa.phase_exp = static_cast<uint8_t>(rng.below(8));
      pb.phase_exp = static_cast<uint8_t>(rng.below(8));
      d.global_exp = static_cast<uint8_t>(rng.below(8));

      auto mx = PhaseMatrix::from_pauli(px);
      auto md = PhaseMatrix::from_diag(d);
      auto mds = PhaseMatrix::from_diag(ds);
      ok = ok &&
           PhaseMatrix::from_pauli(multiply(pa, pb)) ==
               PhaseMatrix::from_pauli(pa) * PhaseMatrix::from_pauli(pb) &&
           PhaseMatrix::from_diag(commutator_diag_with_xpauli(d, px)) ==
               mx * md * mx * md.dagger() &&
           PhaseMatrix::from_pauli(commutator_slayer_with_xpauli(ds, px)) ==
               mx * mds * mx * mds.dagger();
    }
    // the named single-qubit identities
    DiagonalGate s = DiagonalGate::identity(1);
    s.rot_exp[0] = 2;
    DiagonalGate sdag = DiagonalGate::identity(1);
    sdag.rot_exp[0] = 6;
    PauliWithPhase x = PauliWithPhase::identity(1);
    x.x_bits.set(0);
    PauliWithPhase izp = commutator_slayer_with_xpauli(s, x);
    PauliWithPhase mizp = commutator_slayer_with_xpauli(sdag, x);
    ok = ok && izp.z_bits.get(0) && izp.x_bits.is_zero() && izp.phase_exp == 2;
    ok = ok && mizp.z_bits.get(0) && mizp.phase_exp == 6;
    report(10, "1000 random operators match the exact matrix oracle (n <= 4)", ok);
  }

  if (g_failed) {
    std::cout << g_failed << " criterion(s) FAILED" << std::endl;
    return 1;
  }
  std::cout << "all 10 acceptance criteria PASSED" << std::endl;
  return 0;
}
