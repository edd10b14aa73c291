#pragma once

#include "shiftalg/rational.hpp"

#include <cstddef>
#include <vector>

namespace shiftalg {

// Dense matrix over Q(i) with exact elimination. Meant for the small matrices
// of this project (corner ranks, separating/independence tables); use
// SparseQMat for the big cochain complexes.
class RatMat {
 public:
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const GaussianRational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::size_t rank() const;
  // Basis of the right kernel {x : Ax = 0}, one vector per free column,
  // ordered by free-column index.
  std::vector<std::vector<GaussianRational>> kernel() const;

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  // Reduced row echelon form; returns pivot column per pivot row.
  std::vector<std::size_t> rref(std::vector<GaussianRational>& work) const;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> a_;
};

} // namespace shiftalg
