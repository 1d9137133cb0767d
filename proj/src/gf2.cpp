/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "cscc/gf2.hpp"

#include <algorithm>
#include <utility>

namespace cscc {

std::vector<size_t> BitMatrix::rref() {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < cols_ && r < rows_.size(); ++col) {
    size_t piv = rows_.size();
    for (size_t i = r; i < rows_.size(); ++i) {
      if (rows_[i].get(col)) {
        piv = i;
        break;
      }
    }
    if (piv == rows_.size()) continue;
    std::swap(rows_[r], rows_[piv]);
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i != r && rows_[i].get(col)) rows_[i] ^= rows_[r];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

size_t BitMatrix::rank() const {
  BitMatrix m = *this;
  return m.rref().size();
}

std::vector<Bitvec> BitMatrix::kernel_basis() const {
  BitMatrix m = *this;
  std::vector<size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Bitvec> out;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Bitvec v(cols_);
    v.set(free);
    for (size_t i = 0; i < pivots.size(); ++i) {
      if (m.rows_[i].get(free)) v.set(pivots[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Bitvec BitMatrix::reduce(const std::vector<size_t> &pivots, Bitvec v) const {
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (v.get(pivots[i])) v ^= rows_[i];
  }
  return v;
}

TrackedRowSpace::TrackedRowSpace(const BitMatrix &m)
    : n_orig_rows_(m.num_rows()), reduced_(m.cols()), combos_(m.num_rows()) {
  // Gaussian elimination on [M | I], lowest-column pivoting.
  std::vector<Bitvec> rows(m.rows());
  std::vector<Bitvec> combos;
  combos.reserve(n_orig_rows_);
  for (size_t i = 0; i < n_orig_rows_; ++i) {
    Bitvec c(n_orig_rows_);
    c.set(i);
    combos.push_back(std::move(c));
  }
  size_t r = 0;
  for (size_t col = 0; col < m.cols() && r < rows.size(); ++col) {
    size_t piv = rows.size();
    for (size_t i = r; i < rows.size(); ++i) {
      if (rows[i].get(col)) {
        piv = i;
        break;
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::swap(combos[r], combos[piv]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(col)) {
        rows[i] ^= rows[r];
        combos[i] ^= combos[r];
      }
    }
    pivots_.push_back(col);
    ++r;
  }
  for (size_t i = 0; i < r; ++i) {
    reduced_.add_row(rows[i]);
    combos_.add_row(combos[i]);
  }
}

Bitvec TrackedRowSpace::residual(const Bitvec &v) const {
  Bitvec x = v;
  for (size_t i = 0; i < pivots_.size(); ++i) {
    if (x.get(pivots_[i])) x ^= reduced_.row(i);
  }
  return x;
}

bool TrackedRowSpace::contains(const Bitvec &v) const {
  return residual(v).is_zero();
}

std::optional<Bitvec> TrackedRowSpace::combination(const Bitvec &v) const {
  Bitvec x = v;
  Bitvec combo(n_orig_rows_);
  for (size_t i = 0; i < pivots_.size(); ++i) {
    if (x.get(pivots_[i])) {
      x ^= reduced_.row(i);
      combo ^= combos_.row(i);
    }
  }
  if (!x.is_zero()) return std::nullopt;
  return combo;
}

}  // namespace cscc
