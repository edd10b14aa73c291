#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace shiftalg {

using Rational = mpq_class;

// Canonicalized p/q. mpq_class constructors do not reduce on their own.
Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// Element of Q(i). Exact; no rounding anywhere.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return GaussianRational(-re, -im); }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// "0", "3/10", "-2", "i", "-3/4i", "1/2+3/4i", "1/2-3/4i" (no outer parentheses).
std::string to_string(const GaussianRational& c);

} // namespace shiftalg
