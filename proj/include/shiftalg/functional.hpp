#pragma once

#include "shiftalg/element.hpp"

#include <map>
#include <utility>
#include <variant>

namespace shiftalg {

// Finitely supported linear functional psi(A) = sum c_pq <e_p, A e_q>.
class Functional {
 public:
  Functional() = default;

  // phi_j(A) = <e_j, A e_j>
  static Functional site(std::size_t j);

  Functional& set(std::size_t p, std::size_t q, Scalar c);
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& coefficients() const {
    return coeffs_;
  }

  Scalar evaluate(const Element& a) const;

 private:
  std::map<std::pair<std::size_t, std::size_t>, Scalar> coeffs_;
};

// omega_j(x, y) = phi_j([x, y]); the per-site 2-cocycles.
Scalar omega(std::size_t j, const Element& x, const Element& y);

// Antisymmetric 2-cochain: either psi([x,y]) for a functional psi, or an
// explicit table on basis-symbol pairs extended bilinearly.
class Cochain2 {
 public:
  using Table = std::map<std::pair<BasisSymbol, BasisSymbol>, Scalar>;

  static Cochain2 from_functional(Functional psi);
  // Table keys must satisfy first < second; lookups antisymmetrize.
  static Cochain2 from_table(Table t);

  Scalar evaluate(const Element& x, const Element& y) const;

 private:
  std::variant<Functional, Table> impl_;
};

// Chevalley-Eilenberg differential at a triple:
//   (d omega)(x,y,z) = omega([x,y],z) + omega([y,z],x) + omega([z,x],y).
Scalar d2_check(const Cochain2& omega, const Element& x, const Element& y, const Element& z);

struct ExactnessWitness {
  Functional primitive;      // phi_j with omega_j = d^1 phi_j
  std::size_t pairs_checked;
  std::size_t failures;      // exact identity; expected 0
};
// Verifies omega_j(x,y) = phi_j([x,y]) on all basis pairs with indices <= window.
ExactnessWitness exactness_witness(std::size_t j, std::size_t window);

struct DiagonalReductionResult {
  std::size_t pairs_checked;
  std::size_t failures;
  // The off-diagonal remainder has the explicit primitive eta, so omega_psi
  // differs from the diagonal combination by an exact cocycle, not merely a
  // cohomologous one.
  bool exactly_coboundary;
};
// Checks omega_psi = sum_j c_jj omega_j + d^1(eta) on basis pairs <= window,
// where psi = sum_j c_jj phi_j + eta splits off the diagonal coefficients.
DiagonalReductionResult diagonal_reduction_check(const Functional& psi, std::size_t window);

} // namespace shiftalg
