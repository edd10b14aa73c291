#include "shiftalg/lie_algebra.hpp"

#include <map>
#include <stdexcept>

namespace shiftalg {

namespace {

// Accumulate coef * [x_i, x_j] into acc, expanding through the table.
void accumulate_bracket(const FiniteLieAlgebra::BracketTable& t, std::size_t i, std::size_t j,
                        const Scalar& coef, std::map<std::size_t, Scalar>& acc) {
  for (const auto& [k, c] : t[i][j]) {
    Scalar& slot = acc[k];
    slot = slot + coef * c;
    if (slot.is_zero()) acc.erase(k);
  }
}

} // namespace

FiniteLieAlgebra::FiniteLieAlgebra(std::size_t dim, BracketTable brackets)
    : dim_(dim), brackets_(std::move(brackets)) {
  if (brackets_.size() != dim_) throw std::invalid_argument("bracket table has wrong row count");
  for (const auto& row : brackets_) {
    if (row.size() != dim_) throw std::invalid_argument("bracket table has wrong column count");
    for (const auto& cell : row) {
      std::size_t prev = 0;
      bool first = true;
      for (const auto& [k, c] : cell) {
        if (k >= dim_) throw std::invalid_argument("bracket table references basis index out of range");
        if (!first && k <= prev) throw std::invalid_argument("bracket table entries must be sorted by index");
        if (c.is_zero()) throw std::invalid_argument("bracket table stores an explicit zero");
        prev = k;
        first = false;
      }
    }
  }
  verify();
}

void FiniteLieAlgebra::verify() const {
  // Antisymmetry, including [x_i, x_i] = 0.
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!brackets_[i][i].empty()) throw std::invalid_argument("bracket table violates [x,x] = 0");
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& ij = brackets_[i][j];
      const auto& ji = brackets_[j][i];
      if (ij.size() != ji.size()) throw std::invalid_argument("bracket table violates antisymmetry");
      for (std::size_t t = 0; t < ij.size(); ++t) {
        if (ij[t].first != ji[t].first || !(ij[t].second + ji[t].second).is_zero())
          throw std::invalid_argument("bracket table violates antisymmetry");
      }
    }
  }
  // Jacobi: [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0.
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = j + 1; k < dim_; ++k) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& [l, c] : brackets_[i][j]) accumulate_bracket(brackets_, l, k, c, acc);
        for (const auto& [l, c] : brackets_[j][k]) accumulate_bracket(brackets_, l, i, c, acc);
        for (const auto& [l, c] : brackets_[k][i]) accumulate_bracket(brackets_, l, j, c, acc);
        if (!acc.empty()) throw std::invalid_argument("bracket table violates the Jacobi identity");
      }
    }
  }
}

bool FiniteLieAlgebra::is_abelian() const {
  for (const auto& row : brackets_)
    for (const auto& cell : row)
      if (!cell.empty()) return false;
  return true;
}

FiniteLieAlgebra FiniteLieAlgebra::abelian(std::size_t dim) {
  BracketTable t(dim, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(dim));
  return FiniteLieAlgebra(dim, std::move(t));
}

FiniteLieAlgebra FiniteLieAlgebra::corner_window(std::size_t m) {
  const std::size_t side = m + 1;
  const std::size_t dim = side * side;
  auto idx = [side](std::size_t a, std::size_t b) { return a * side + b; };
  BracketTable t(dim, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(dim));
  for (std::size_t a = 0; a < side; ++a)
    for (std::size_t b = 0; b < side; ++b)
      for (std::size_t c = 0; c < side; ++c)
        for (std::size_t d = 0; d < side; ++d) {
          // [C(a,b), C(c,d)] = delta_bc C(a,d) - delta_da C(c,b)
          std::map<std::size_t, Scalar> acc;
          if (b == c) acc[idx(a, d)] = acc[idx(a, d)] + Scalar(1);
          if (d == a) acc[idx(c, b)] = acc[idx(c, b)] - Scalar(1);
          auto& cell = t[idx(a, b)][idx(c, d)];
          for (const auto& [k, coef] : acc)
            if (!coef.is_zero()) cell.emplace_back(k, coef);
        }
  return FiniteLieAlgebra(dim, std::move(t));
}

FiniteLieAlgebra central_extension(const ExtensionSpec& spec) {
  const std::size_t d = spec.base_dim;
  if (spec.c.size() != d) throw std::invalid_argument("cocycle matrix has wrong row count");
  for (const auto& row : spec.c)
    if (row.size() != d) throw std::invalid_argument("cocycle matrix has wrong column count");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!(spec.c[i][j] + spec.c[j][i]).is_zero())
        throw std::invalid_argument("cocycle matrix must be antisymmetric");

  // Basis x_0..x_{d-1}, z = x_d; [x_i, x_j] = c_ij z, z central.
  const std::size_t dim = d + 1;
  FiniteLieAlgebra::BracketTable t(dim, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(dim));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!spec.c[i][j].is_zero()) t[i][j].emplace_back(d, spec.c[i][j]);
  return FiniteLieAlgebra(dim, std::move(t));
}

} // namespace shiftalg
