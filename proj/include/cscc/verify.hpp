/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_VERIFY_HPP_
#define CSCC_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cscc/complex_builder.hpp"
#include "cscc/css.hpp"
#include "cscc/phase_poly.hpp"

namespace cscc {

/// Where a commutator-derived Pauli landed: the asserted coset and the
/// combination of Hz rows (plus logical Z's) reproducing it.
struct MembershipEvidence {
  std::string target;                 // e.g. "Zbar_B * <Hz>"
  bool ok = false;
  std::vector<std::string> zbar_labels;
  std::vector<uint32_t> hz_rows;      // row indices of the combination
  std::vector<uint32_t> residual;     // leftover support; empty when ok

  nlohmann::json to_json() const;
};

struct CommutatorCheck {
  int phi_exp = -1;
  int eta_exp = -1;
  std::optional<PauliWithPhase> phi_pauli;  // the commutator operators themselves
  std::optional<PauliWithPhase> eta_pauli;
  MembershipEvidence phi_membership;
  MembershipEvidence eta_membership;
};

/// Group commutator phase of the signed T layer against an X-type logical
/// representative: global_exp of P U P U^dagger, which equals the signed
/// weight of the support. Zero means the phase is +1.
int check_theta(const CssCode &code, const SignVector &c, const Bitvec &xbar);

/// Commutators of M = (U Xbar_A U^dagger Xbar_A) with Xbar_A and Xbar_B:
/// the first lands on Zbar_B (phase phi), the second on Zbar_A Zbar_B
/// (phase eta), both modulo rowspace(Hz).
/// Requires a codespace-preserving layer and k >= 2.
CommutatorCheck check_commutators(const CssCode &code, const LogicalBasis &basis,
                                  const SignVector &c);

struct CheckItem {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  std::string schema = "csreport/1";
  std::string subject;      // fixture name or "cube 2x2x2" style description
  std::string convention = "M = P D P D^dagger; omega = exp(i pi/4), exponents mod 8";

  // complex stats
  size_t complex_qubits = 0, complex_edges = 0, complex_faces = 0, complex_cells = 0;
  size_t truncation_size = 0;

  // code stats
  size_t n = 0, rank_hx = 0, rank_hz = 0, k = 0;
  size_t even_count = 0, odd_count = 0;

  bool preserves = false;
  std::vector<std::pair<std::vector<uint32_t>, uint8_t>> preservation_witnesses;

  std::optional<LogicalAction> action;
  std::optional<GateDescription> gates;
  std::string basis_annotation;

  std::vector<std::pair<std::string, int>> theta_exps;  // (operator label, exp)
  std::optional<CommutatorCheck> commutators;

  std::vector<CheckItem> checks;
  bool pass = false;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Full pipeline on the truncated cube: build, assemble, project, bipartition,
/// signed T layer, codespace preservation, logical classification, and the
/// theta/phi/eta commutator phases.
VerificationReport verify_cs_protocol(const Extent &extent, int threads = 1);

/// Same pipeline on an already-built complex (projected when it carries a
/// truncation region). Asserts the control-S outcome when assert_cs is set;
/// otherwise only structure and preservation.
VerificationReport verify_complex(const ColoredComplex &cx, const std::string &subject,
                                  bool assert_cs, int threads = 1);

/// Named end-to-end checks:
///   tetrahedral15      engine vs statevector oracle, logical T^{+-1}
///   cube               counts + preservation on the plain cube (k = 3)
///   truncated_cube_min the control-S protocol at the smallest valid extent
///   unencoded_cs       two-qubit commutation identities for CS itself
VerificationReport run_fixture(const std::string &name, int threads = 1);

}  // namespace cscc

#endif  // CSCC_VERIFY_HPP_
