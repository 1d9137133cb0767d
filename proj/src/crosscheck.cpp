/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "cscc/crosscheck.hpp"

#include <sstream>

#include "cscc/errors.hpp"

namespace cscc {

CssCode random_css_code(Rng &rng, size_t max_n) {
  while (true) {
    size_t n = 4 + rng.below(max_n - 3);
    size_t mx = 1 + rng.below(3);
    CssCode code;
    code.n = n;
    code.hx = BitMatrix(n);
    code.hz = BitMatrix(n);
    for (size_t i = 0; i < mx; ++i) {
      Bitvec row(n);
      for (size_t v = 0; v < n; ++v) {
        if (rng.coin()) row.set(v);
      }
      if (row.is_zero()) row.set(rng.below(n));
      code.hx.add_row(std::move(row));
    }
    std::vector<Bitvec> kernel = code.hx.kernel_basis();
    if (kernel.empty()) continue;
    size_t mz = 1 + rng.below(4);
    for (size_t i = 0; i < mz; ++i) {
      Bitvec row(n);
      for (const Bitvec &b : kernel) {
        if (rng.coin()) row ^= b;
      }
      if (!row.is_zero()) code.hz.add_row(std::move(row));
    }
    if (code.hz.num_rows() == 0) continue;
    size_t rx = code.rank_hx();
    size_t rz = code.rank_hz();
    if (n < rx + rz + 1) continue;  // want k >= 1
    for (uint32_t v = 0; v < n; ++v) code.qubit_map.push_back(v);
    return code;
  }
}

SignVector random_signs(Rng &rng, size_t n) {
  SignVector s;
  for (size_t v = 0; v < n; ++v) s.c.push_back(rng.coin() ? 1 : -1);
  return s;
}

nlohmann::json CrosscheckResult::to_json() const {
  nlohmann::json j;
  j["trials"] = trials;
  j["agreements"] = agreements;
  j["mismatches"] = mismatches;
  j["all_agree"] = all_agree();
  return j;
}

std::string CrosscheckResult::to_text() const {
  std::ostringstream os;
  os << agreements << "/" << trials << " agree\n";
  for (const auto &m : mismatches) os << "mismatch: " << m << "\n";
  return os.str();
}

CrosscheckResult oracle_crosscheck(uint64_t seed, size_t trials, size_t max_n) {
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  Rng rng(seed);
  CrosscheckResult res;
  res.trials = trials;
  for (size_t t = 0; t < trials; ++t) {
    CssCode code = random_css_code(rng, max_n);
    LogicalBasis basis = logical_basis(code);
    SignVector c = random_signs(rng, code.n);

    PhasePolynomial f = induced_phase_polynomial(code, basis, c);
    PreservationVerdict verdict = preserves_codespace(f);

    bool oracle_preserved = true;
    LogicalAction oracle_action;
    try {
      oracle_action = statevector_logical_action(code, basis, c);
    } catch (const CodespaceError &) {
      oracle_preserved = false;
    }

    bool ok;
    if (verdict.preserved != oracle_preserved) {
      ok = false;
    } else if (!verdict.preserved) {
      ok = true;
    } else {
      ok = logical_action(f) == oracle_action;
    }
    if (ok) {
      ++res.agreements;
    } else {
      std::ostringstream os;
      os << "trial " << t << ": n=" << code.n << " engine_preserved=" << verdict.preserved
         << " oracle_preserved=" << oracle_preserved;
      res.mismatches.push_back(os.str());
    }
  }
  return res;
}

}  // namespace cscc
