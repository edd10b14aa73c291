#include "shiftalg/scalar.hpp"

namespace shiftalg {

void Scalar::set(unsigned power, GaussianRational c) {
  if (!c.is_zero()) coeffs_[power] = std::move(c);
}

GaussianRational Scalar::coefficient(unsigned power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [p, c] : o.coeffs_) {
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
      coeffs_.emplace(p, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [pa, ca] : a.coeffs_) {
    for (const auto& [pb, cb] : b.coeffs_) {
      GaussianRational prod = ca * cb;
      if (prod.is_zero()) continue;
      auto it = out.coeffs_.find(pa + pb);
      if (it == out.coeffs_.end()) {
        out.coeffs_.emplace(pa + pb, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) out.coeffs_.erase(it);
      }
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p, -c);
  return out;
}

GaussianRational Scalar::substitute(const GaussianRational& eps_value) const {
  // Horner over the dense range [0, degree]; the map is sparse but degrees stay small.
  GaussianRational acc;
  if (coeffs_.empty()) return acc;
  unsigned d = degree();
  for (unsigned p = d + 1; p-- > 0;) {
    acc *= eps_value;
    auto it = coeffs_.find(p);
    if (it != coeffs_.end()) acc += it->second;
  }
  return acc;
}

std::complex<double> to_complex(const GaussianRational& c) {
  return {c.re.get_d(), c.im.get_d()};
}

std::complex<double> Scalar::evaluate(std::complex<double> eps_value) const {
  std::complex<double> acc = 0.0;
  if (coeffs_.empty()) return acc;
  unsigned d = degree();
  for (unsigned p = d + 1; p-- > 0;) {
    acc *= eps_value;
    auto it = coeffs_.find(p);
    if (it != coeffs_.end()) acc += to_complex(it->second);
  }
  return acc;
}

namespace {

// Unsigned coefficient body for term rendering; "" for a unit coefficient.
// Complex values are parenthesized so they can prefix "eps"/symbol tokens.
std::string coefficient_body(const GaussianRational& c) {
  if (c.im == 0) {
    if (c.re == 1) return "";
    return c.re.get_str();
  }
  return "(" + to_string(c) + ")";
}

// Splits c into sign and printable magnitude. The sign is taken from the real
// part when present, else from the imaginary part.
bool split_sign(const GaussianRational& c, std::string& body) {
  bool neg = c.re != 0 ? c.re < 0 : c.im < 0;
  body = coefficient_body(neg ? -c : c);
  return neg;
}

std::string eps_part(unsigned power) {
  if (power == 0) return "";
  if (power == 1) return "eps";
  return "eps^" + std::to_string(power);
}

} // namespace

std::string Scalar::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    std::string body;
    bool neg = split_sign(c, body);
    std::string piece = body + eps_part(p);
    if (piece.empty()) piece = "1";
    if (first) {
      out += (neg ? "-" : "") + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

std::string monomial_body(const GaussianRational& c, unsigned power, bool& negative) {
  std::string body;
  negative = split_sign(c, body);
  return body + eps_part(power);
}

} // namespace shiftalg
