#pragma once

#include "shiftalg/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace shiftalg {

// Finite-dimensional Lie algebra given by structure constants:
// [x_i, x_j] = sum_k c_ij^k x_k. Antisymmetry and the Jacobi identity are
// verified exactly at construction; an invalid table never escapes.
class FiniteLieAlgebra {
 public:
  // brackets[i][j] lists (k, c_ij^k) with strictly increasing k.
  using BracketTable = std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>>;

  FiniteLieAlgebra(std::size_t dim, BracketTable brackets);

  static FiniteLieAlgebra abelian(std::size_t dim);
  // span{ C(a,b) : a,b <= m } with the corner commutator bracket.
  static FiniteLieAlgebra corner_window(std::size_t m);

  std::size_t dim() const { return dim_; }
  bool is_abelian() const;
  const std::vector<std::pair<std::size_t, Scalar>>& bracket(std::size_t i, std::size_t j) const {
    return brackets_[i][j];
  }

 private:
  void verify() const;
  std::size_t dim_;
  BracketTable brackets_;
};

// Central extension datum: an abelian base and an antisymmetric cocycle
// matrix c; the extension has bracket [x_i, x_j] = c_ij z with z central.
struct ExtensionSpec {
  std::size_t base_dim;
  std::vector<std::vector<Scalar>> c; // base_dim x base_dim, antisymmetric
};

FiniteLieAlgebra central_extension(const ExtensionSpec& spec);

} // namespace shiftalg
