#include "shiftalg/qmat.hpp"

#include <stdexcept>

namespace shiftalg {

void SparseQMat::add(std::size_t i, std::size_t j, Rational v) {
  if (v == 0) return;
  SparseRow& r = data_.at(i);
  if (!r.empty() && r.back().first >= j)
    throw std::invalid_argument("sparse entries must be added in column order");
  if (j >= cols_) throw std::invalid_argument("sparse column out of range");
  r.emplace_back(j, std::move(v));
}

SparseRow row_axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, Rational(-f * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseQMat::Echelon SparseQMat::eliminate() const {
  std::vector<SparseRow> work;
  work.reserve(rows_);
  for (const SparseRow& r : data_)
    if (!r.empty()) work.push_back(r);

  Echelon ech;
  ech.pivot_col.assign(cols_, false);
  for (std::size_t c = 0; c < cols_; ++c) {
    // Sparsest row leading with column c; deterministic tie-break by position.
    std::size_t sel = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i].empty() || work[i].front().first != c) continue;
      if (sel == work.size() || work[i].size() < work[sel].size()) sel = i;
    }
    if (sel == work.size()) continue;
    SparseRow pivot = std::move(work[sel]);
    work[sel] = std::move(work.back());
    work.pop_back();
    if (pivot.front().second != 1) {
      Rational inv = 1 / pivot.front().second;
      for (auto& [col, v] : pivot) v *= inv;
    }
    for (auto& row : work) {
      if (!row.empty() && row.front().first == c) row = row_axpy(row, row.front().second, pivot);
    }
    ech.pivot_col[c] = true;
    ech.pivots.emplace_back(c, std::move(pivot));
  }
  // Back-reduction to RREF: clear later pivot columns out of earlier rows.
  for (std::size_t idx = ech.pivots.size(); idx-- > 0;) {
    const auto& [c, prow] = ech.pivots[idx];
    for (std::size_t q = 0; q < idx; ++q) {
      SparseRow& target = ech.pivots[q].second;
      for (const auto& [col, v] : target) {
        if (col == c) {
          target = row_axpy(target, v, prow);
          break;
        }
        if (col > c) break;
      }
    }
  }
  return ech;
}

std::size_t SparseQMat::rank() const { return eliminate().pivots.size(); }

std::vector<std::vector<Rational>> SparseQMat::kernel() const {
  Echelon ech = eliminate();
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (ech.pivot_col[f]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[f] = 1;
    for (const auto& [c, row] : ech.pivots) {
      for (const auto& [col, val] : row) {
        if (col == f) {
          v[c] = -val;
          break;
        }
        if (col > f) break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseRow SparseQMat::apply(const SparseRow& x) const {
  SparseRow out;
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc(0);
    std::size_t a = 0, b = 0;
    const SparseRow& r = data_[i];
    while (a < r.size() && b < x.size()) {
      if (r[a].first < x[b].first)
        ++a;
      else if (x[b].first < r[a].first)
        ++b;
      else
        acc += r[a++].second * x[b++].second;
    }
    if (acc != 0) out.emplace_back(i, std::move(acc));
  }
  return out;
}

} // namespace shiftalg
