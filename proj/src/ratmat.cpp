#include "shiftalg/ratmat.hpp"

namespace shiftalg {

std::vector<std::size_t> RatMat::rref(std::vector<GaussianRational>& work) const {
  work = a_;
  auto at = [&](std::size_t i, std::size_t j) -> GaussianRational& {
    return work[i * cols_ + j];
  };
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t i = r; i < rows_; ++i) {
      if (!at(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
    GaussianRational inv = GaussianRational(1) / at(r, c);
    for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      GaussianRational f = at(i, c);
      for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

std::size_t RatMat::rank() const {
  std::vector<GaussianRational> work;
  return rref(work).size();
}

std::vector<std::vector<GaussianRational>> RatMat::kernel() const {
  std::vector<GaussianRational> work;
  std::vector<std::size_t> pivots = rref(work);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussianRational> v(cols_);
    v[f] = GaussianRational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r * cols_ + f];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace shiftalg
