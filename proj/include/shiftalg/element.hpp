#pragma once

#include "shiftalg/scalar.hpp"
#include "shiftalg/symbol.hpp"

#include <map>
#include <set>

namespace shiftalg {

// Finite linear combination of basis symbols with Scalar (eps-polynomial)
// coefficients. Canonical: no zero coefficients stored, so operator== is
// exact mathematical equality.
class Element {
 public:
  Element() = default;

  static Element from_symbol(BasisSymbol s, Scalar c = Scalar::one());
  static Element identity() { return from_symbol(BasisSymbol::identity()); }
  static Element zero() { return Element(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<BasisSymbol, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const BasisSymbol& s) const;

  Element& add_term(const BasisSymbol& s, const Scalar& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  friend Element operator*(const Scalar& c, const Element& x);
  friend Element operator*(const Element& x, const Scalar& c) { return c * x; }
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  // Display order: fwd powers ascending, bwd ascending, corners in
  // lexicographically descending (a,b); e.g. "C(1,1) - C(0,0)".
  std::string to_string() const;

 private:
  std::map<BasisSymbol, Scalar> terms_;
};

// Product of two basis symbols, expanded into the corner basis. This is the
// complete multiplication table of the algebra; everything else is bilinear.
Element symbol_product(const BasisSymbol& x, const BasisSymbol& y);

Element mul(const Element& x, const Element& y);
Element commutator(const Element& x, const Element& y);
Element power(const Element& x, std::size_t k);

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; identically zero in an associative algebra.
Element jacobiator(const Element& x, const Element& y, const Element& z);

// T = U + eps E for the chosen orientation of U:
//   forward   U = fwd(1), backward U = bwd(1), hermitian U = fwd(1) + bwd(1).
Element build_shift(ShiftVariant v);
// The undeformed part U of build_shift(v).
Element base_shift(ShiftVariant v);

// T^m - U^m - eps * sum_{j=0}^{m-1} U^(m-1-j) E T^j; zero for every variant.
Element telescoping_residual(std::size_t m, ShiftVariant v);

// Exact (p,q) matrix entry of x in the canonical basis {e_k}.
Scalar entry(const Element& x, std::size_t p, std::size_t q);

struct CornerSupport {
  std::set<std::size_t> rows;
  std::set<std::size_t> cols;
};
// Row/column index sets of the corner part of x.
CornerSupport corner_support(const Element& x);

// Exact rank of x at eps = eps_value. Unless corner_only is set, a surviving
// shift term makes the rank infinite and is rejected.
std::size_t corner_rank(const Element& x, const GaussianRational& eps_value,
                        bool corner_only = false);
// Rank at generic eps: sampled at eps = 1 and 2/3, third point on disagreement.
std::size_t generic_corner_rank(const Element& x, bool corner_only = false);

// Coefficient of eps^k, term by term.
Element eps_coefficient(const Element& x, unsigned k);
// Exact substitution eps = value in every coefficient.
Element substitute_eps(const Element& x, const GaussianRational& value);

// Largest shift power or corner index appearing in x (0 for the zero element).
std::size_t max_index(const Element& x);

struct FirstOrderComparison {
  Element eps_coefficient; // degree-1 part of [T^m, T^n]; identically zero
  Element corner_sum;      // sum_j [U^m, C(n-1-j,j)] + sum_i [C(m-1-i,i), U^n]
};
FirstOrderComparison first_order_comparison(std::size_t m, std::size_t n, ShiftVariant v);

} // namespace shiftalg
