/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_BITVEC_HPP_
#define CSCC_BITVEC_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cscc/errors.hpp"

namespace cscc {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
class Bitvec {
 public:
  Bitvec() = default;
  explicit Bitvec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }

  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v = true) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v) {
      w_[i >> 6] |= m;
    } else {
      w_[i >> 6] &= ~m;
    }
  }

  void operator^=(const Bitvec &o) {
    check_size(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }

  Bitvec operator^(const Bitvec &o) const {
    Bitvec r = *this;
    r ^= o;
    return r;
  }

  Bitvec operator&(const Bitvec &o) const {
    check_size(o);
    Bitvec r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }

  size_t weight() const {
    size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  size_t and_weight(const Bitvec &o) const {
    check_size(o);
    size_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  size_t and_weight(const Bitvec &a, const Bitvec &b) const {
    check_size(a);
    check_size(b);
    size_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & a.w_[i] & b.w_[i]);
    return c;
  }

  /// Parity of |this & o|; 1 means the corresponding X- and Z-type
  /// operators anticommute.
  int parity_and(const Bitvec &o) const { return static_cast<int>(and_weight(o) & 1); }

  bool is_zero() const {
    for (uint64_t w : w_) {
      if (w) return false;
    }
    return true;
  }

  bool intersects(const Bitvec &o) const {
    check_size(o);
    for (size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & o.w_[i]) return true;
    }
    return false;
  }

  /// Index of the lowest set bit, or size() if none.
  size_t lowest_set() const {
    for (size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return (i << 6) + std::countr_zero(w_[i]);
    }
    return n_;
  }

  std::vector<uint32_t> set_bits() const {
    std::vector<uint32_t> out;
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        out.push_back(static_cast<uint32_t>((i << 6) + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  static Bitvec from_bits(size_t n, const std::vector<uint32_t> &bits) {
    Bitvec v(n);
    for (uint32_t b : bits) {
      if (b >= n) throw DimensionError("bit index out of range");
      v.set(b);
    }
    return v;
  }

  bool operator==(const Bitvec &o) const { return n_ == o.n_ && w_ == o.w_; }

 private:
  void check_size(const Bitvec &o) const {
    if (n_ != o.n_) throw DimensionError("bit vector length mismatch");
  }

  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace cscc

#endif  // CSCC_BITVEC_HPP_
