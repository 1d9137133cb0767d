/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_CROSSCHECK_HPP_
#define CSCC_CROSSCHECK_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cscc/css.hpp"
#include "cscc/phase_poly.hpp"

namespace cscc {

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform, unlike the distributions in <random>.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  uint64_t below(uint64_t bound) { return next() % bound; }

  bool coin() { return next() & 1; }

 private:
  uint64_t state_;
};

/// Random CSS code with Hx Hz^T = 0 and k >= 1, n <= max_n.
CssCode random_css_code(Rng &rng, size_t max_n);

/// Random sign vector of the given length.
SignVector random_signs(Rng &rng, size_t n);

struct CrosscheckResult {
  size_t trials = 0;
  size_t agreements = 0;
  std::vector<std::string> mismatches;  // one line per disagreeing trial

  bool all_agree() const { return agreements == trials; }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Runs `trials` random codes through both the phase-polynomial engine and
/// the statevector oracle, comparing the preservation verdict and, when
/// preserved, every logical coefficient.
CrosscheckResult oracle_crosscheck(uint64_t seed, size_t trials, size_t max_n = 14);

}  // namespace cscc

#endif  // CSCC_CROSSCHECK_HPP_
