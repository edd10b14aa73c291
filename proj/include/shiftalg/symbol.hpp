#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace shiftalg {

// Hard ceiling on any shift power or corner index. Operations whose result
// would exceed it throw std::domain_error instead of truncating silently.
inline constexpr std::size_t kIndexCap = 64;

enum class ShiftVariant { forward, backward, hermitian };

ShiftVariant parse_variant(const std::string& name);
std::string to_string(ShiftVariant v);

// One basis operator of the boundary algebra on the half-lattice:
//   fwd(n)      = S^n          (fwd(0) is the identity)
//   bwd(n)      = S*^n, n >= 1 (bwd(0) normalizes to fwd(0))
//   corner(a,b) = S^a E S*^b = |e_a><e_b|
class BasisSymbol {
 public:
  enum class Kind { forward, backward, corner };

  static BasisSymbol fwd(std::size_t n);
  static BasisSymbol bwd(std::size_t n);
  static BasisSymbol corner(std::size_t a, std::size_t b);
  static BasisSymbol identity() { return fwd(0); }

  Kind kind() const { return kind_; }
  // Shift power for fwd/bwd symbols.
  std::size_t power() const { return a_; }
  std::size_t row() const { return a_; }
  std::size_t col() const { return b_; }
  bool is_identity() const { return kind_ == Kind::forward && a_ == 0; }
  std::size_t max_index() const { return a_ > b_ ? a_ : b_; }

  // "I", "U^2", "U*^3", "C(1,0)"
  std::string to_string() const;

  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;

 private:
  BasisSymbol(Kind k, std::size_t a, std::size_t b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  std::size_t a_;
  std::size_t b_; // corner column; unused for shifts
};

// All basis symbols with indices <= window, in symbol order:
// fwd(0..w), bwd(1..w), corner(a,b) for a,b <= w.
std::vector<BasisSymbol> basis_window(std::size_t window);

} // namespace shiftalg
