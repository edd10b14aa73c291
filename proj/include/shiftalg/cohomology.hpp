#pragma once

#include "shiftalg/qmat.hpp"
#include "shiftalg/ratmat.hpp"

#include <cstddef>
#include <vector>

namespace shiftalg {

// A pairing of the diagonal commutator functionals omega_k(x,y) = <e_k,[x,y]e_k>
// against a distinguished family of element pairs, with its exact rank.
struct PairingTable {
  RatMat matrix;
  std::size_t rank;
  bool trivial_kernel; // no nonzero coefficient vector annihilates every pair
};

// Rows j = 0..J pair omega_0..omega_J against (C(j,0), C(0,j)). The j = 0 row
// vanishes identically ([C(0,0),C(0,0)] = 0), so the rank is J, one short of
// full: these pairs do not separate the family.
PairingTable separating_matrix(std::size_t J);

// Rows m = 1..J+1 pair omega_0..omega_J against (U^m, U*^m). Since
// [U^m, U*^m] = -sum_{j<m} C(j,j), the entry is -1 for k < m and 0 otherwise;
// the matrix is of full rank J+1, so no nonzero combination of the omega_k
// vanishes on all shift pairs.
PairingTable independence_matrix(std::size_t J);

// Degree-2 Chevalley-Eilenberg data (trivial coefficients) for the matrix-unit
// algebra spanned by {C(a,b) : a,b <= M}, over exact rationals.
struct H2Report {
  std::size_t window = 0;     // M
  std::size_t dim = 0;        // (M+1)^2
  std::size_t pairs = 0;      // dim*(dim-1)/2, the 2-cochain dimension
  std::size_t triples = 0;    // dim choose 3, the 3-cochain dimension
  std::size_t rank_d1 = 0;    // rank of d1 : 1-cochains -> 2-cochains
  std::size_t dim_ker_d2 = 0; // 2-cocycle dimension
  std::size_t betti2 = 0;     // dim_ker_d2 - rank_d1
  bool d2_after_d1_vanishes = false;
  // omega_j agrees with d1(phi_j) entrywise on the window, j = 0..M: each
  // diagonal commutator functional is exactly a coboundary here.
  std::vector<bool> omega_exact;
  std::vector<std::vector<Rational>> cocycle_basis; // basis of ker d2
};

// Exact computation; requires 1 <= M <= 5 (the cochain spaces grow fast).
H2Report truncated_H2(std::size_t M);

} // namespace shiftalg
