#include "shiftalg/rational.hpp"

#include <stdexcept>

namespace shiftalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '-' || text[pos] == '+') {
    neg = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument(std::string("expected digits in ") + what + ": '" + text + "'");
    return text.substr(start, pos - start);
  };
  std::string num = read_digits("numerator");
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits("denominator");
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in rational literal: '" + text + "'");
  Rational q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero Gaussian rational");
  Rational n2 = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / n2;
  Rational i = (im * o.re - re * o.im) / n2;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussianRational& c) {
  if (c.is_zero()) return "0";
  if (c.im == 0) return c.re.get_str();
  std::string imag = c.im == 1 ? "i" : c.im == -1 ? "-i" : c.im.get_str() + "i";
  if (c.re == 0) return imag;
  if (c.im > 0) return c.re.get_str() + "+" + imag;
  return c.re.get_str() + imag; // negative imaginary part carries its own sign
}

} // namespace shiftalg
