#include "shiftalg/symbol.hpp"

#include <stdexcept>

namespace shiftalg {

ShiftVariant parse_variant(const std::string& name) {
  if (name == "forward") return ShiftVariant::forward;
  if (name == "backward") return ShiftVariant::backward;
  if (name == "hermitian") return ShiftVariant::hermitian;
  throw std::invalid_argument("unknown shift variant: '" + name + "'");
}

std::string to_string(ShiftVariant v) {
  switch (v) {
    case ShiftVariant::forward: return "forward";
    case ShiftVariant::backward: return "backward";
    case ShiftVariant::hermitian: return "hermitian";
  }
  return "?";
}

namespace {
void check_index(std::size_t n) {
  if (n > kIndexCap)
    throw std::domain_error("symbol index " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kIndexCap));
}
} // namespace

BasisSymbol BasisSymbol::fwd(std::size_t n) {
  check_index(n);
  return BasisSymbol(Kind::forward, n, 0);
}

BasisSymbol BasisSymbol::bwd(std::size_t n) {
  if (n == 0) return fwd(0);
  check_index(n);
  return BasisSymbol(Kind::backward, n, 0);
}

BasisSymbol BasisSymbol::corner(std::size_t a, std::size_t b) {
  check_index(a);
  check_index(b);
  return BasisSymbol(Kind::corner, a, b);
}

std::string BasisSymbol::to_string() const {
  switch (kind_) {
    case Kind::forward:
      return a_ == 0 ? "I" : "U^" + std::to_string(a_);
    case Kind::backward:
      return "U*^" + std::to_string(a_);
    case Kind::corner:
      return "C(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
  }
  return "?";
}

std::vector<BasisSymbol> basis_window(std::size_t window) {
  std::vector<BasisSymbol> out;
  for (std::size_t n = 0; n <= window; ++n) out.push_back(BasisSymbol::fwd(n));
  for (std::size_t n = 1; n <= window; ++n) out.push_back(BasisSymbol::bwd(n));
  for (std::size_t a = 0; a <= window; ++a)
    for (std::size_t b = 0; b <= window; ++b) out.push_back(BasisSymbol::corner(a, b));
  return out;
}

} // namespace shiftalg
