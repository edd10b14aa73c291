#pragma once

#include "shiftalg/rational.hpp"

#include <complex>
#include <map>

namespace shiftalg {

// Polynomial in the formal deformation parameter eps with Gaussian-rational
// coefficients. Canonical: zero coefficients are never stored.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) { set(0, GaussianRational(n)); }
  Scalar(GaussianRational c) { set(0, std::move(c)); }
  Scalar(GaussianRational c, unsigned eps_power) { set(eps_power, std::move(c)); }

  static Scalar one() { return Scalar(1); }
  static Scalar eps(unsigned power = 1) { return Scalar(GaussianRational(1), power); }

  bool is_zero() const { return coeffs_.empty(); }
  // Largest eps power with a nonzero coefficient; zero polynomial reports 0.
  unsigned degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
  GaussianRational coefficient(unsigned power) const;
  const std::map<unsigned, GaussianRational>& monomials() const { return coeffs_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Exact evaluation at a rational eps.
  GaussianRational substitute(const GaussianRational& eps_value) const;
  // Floating evaluation at a numeric eps (Horner).
  std::complex<double> evaluate(std::complex<double> eps_value) const;

  // Standalone form: "0", "1", "3/10", "eps", "-eps^2", "(1/2+3/4i)eps^2", "1 + eps^2".
  std::string to_string() const;

 private:
  void set(unsigned power, GaussianRational c);
  std::map<unsigned, GaussianRational> coeffs_;
};

std::complex<double> to_complex(const GaussianRational& c);

// Rendering helper for term printers: unsigned "coefficient + eps power" body
// ("", "3/10", "eps^2", "(1/2+3/4i)eps^2"); sets `negative` to the split-off sign.
std::string monomial_body(const GaussianRational& c, unsigned power, bool& negative);

} // namespace shiftalg
