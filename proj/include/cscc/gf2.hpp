/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_GF2_HPP_
#define CSCC_GF2_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cscc/bitvec.hpp"

namespace cscc {

/// Dense GF(2) matrix as a list of bit-packed rows.
/// Elimination always pivots on the lowest available column so every derived
/// basis is reproducible across runs and platforms.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(size_t cols) : cols_(cols) {}
  BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, Bitvec(cols)) {}

  size_t cols() const { return cols_; }
  size_t num_rows() const { return rows_.size(); }
  const Bitvec &row(size_t i) const { return rows_[i]; }
  Bitvec &row(size_t i) { return rows_[i]; }
  const std::vector<Bitvec> &rows() const { return rows_; }

  void add_row(Bitvec v) {
    if (v.size() != cols_) throw DimensionError("row length mismatch");
    rows_.push_back(std::move(v));
  }

  bool operator==(const BitMatrix &o) const = default;

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<size_t> rref();

  size_t rank() const;

  /// Basis of {v : M v = 0}, derived from the RREF free columns in order.
  std::vector<Bitvec> kernel_basis() const;

  /// M must already be in RREF with the given pivots: reduce v against it.
  Bitvec reduce(const std::vector<size_t> &pivots, Bitvec v) const;

 private:
  size_t cols_ = 0;
  std::vector<Bitvec> rows_;
};

/// RREF view of a matrix that remembers how each reduced row was formed, so
/// membership tests can report the combination of original rows used.
class TrackedRowSpace {
 public:
  explicit TrackedRowSpace(const BitMatrix &m);

  size_t rank() const { return reduced_.num_rows(); }

  bool contains(const Bitvec &v) const;

  /// If v is in the row space, the combination of original rows producing it.
  std::optional<Bitvec> combination(const Bitvec &v) const;

  /// Residual of v after reduction (zero iff contained).
  Bitvec residual(const Bitvec &v) const;

 private:
  size_t n_orig_rows_;
  BitMatrix reduced_;         // rank rows, RREF
  BitMatrix combos_;          // combos_[i] over original rows gives reduced_[i]
  std::vector<size_t> pivots_;
};

}  // namespace cscc

#endif  // CSCC_GF2_HPP_
