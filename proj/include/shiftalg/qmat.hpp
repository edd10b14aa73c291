#pragma once

#include "shiftalg/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace shiftalg {

// One sparse row over Q, sorted by column index.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Sparse matrix over Q for the cochain differentials, which are large but have
// only a handful of +-1 entries per row. Elimination picks, per leading column,
// the sparsest remaining row (ties by row index) so results are deterministic.
class SparseQMat {
 public:
  SparseQMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  // Entries must be added in strictly increasing column order per row.
  void add(std::size_t i, std::size_t j, Rational v);
  const SparseRow& row(std::size_t i) const { return data_[i]; }

  std::size_t rank() const;
  // Right kernel basis, one vector per free column, ordered by free column.
  std::vector<std::vector<Rational>> kernel() const;

  // y = A x for a sparse x given as (index, value) pairs.
  SparseRow apply(const SparseRow& x) const;

 private:
  struct Echelon {
    std::vector<std::pair<std::size_t, SparseRow>> pivots; // (pivot col, reduced row)
    std::vector<bool> pivot_col;
  };
  Echelon eliminate() const;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseRow> data_;
};

// a - f*b, both sorted sparse rows.
SparseRow row_axpy(const SparseRow& a, const Rational& f, const SparseRow& b);

} // namespace shiftalg
