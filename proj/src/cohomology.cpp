#include "shiftalg/cohomology.hpp"

#include "shiftalg/element.hpp"
#include "shiftalg/functional.hpp"
#include "shiftalg/lie_algebra.hpp"

#include <map>
#include <stdexcept>

namespace shiftalg {

namespace {

Rational exact_rational(const Scalar& s) {
  if (s.is_zero()) return Rational(0);
  if (s.degree() != 0) throw std::logic_error("expected an eps-free scalar");
  GaussianRational g = s.coefficient(0);
  if (!g.is_real()) throw std::logic_error("expected a real scalar");
  return g.re;
}

PairingTable finish(RatMat m) {
  const std::size_t r = m.rank();
  const bool trivial = m.kernel().empty();
  return PairingTable{std::move(m), r, trivial};
}

} // namespace

PairingTable separating_matrix(std::size_t J) {
  RatMat m(J + 1, J + 1);
  for (std::size_t j = 0; j <= J; ++j) {
    const Element x = Element::from_symbol(BasisSymbol::corner(j, 0));
    const Element y = Element::from_symbol(BasisSymbol::corner(0, j));
    for (std::size_t k = 0; k <= J; ++k)
      m.at(j, k) = GaussianRational(exact_rational(omega(k, x, y)));
  }
  return finish(std::move(m));
}

PairingTable independence_matrix(std::size_t J) {
  RatMat m(J + 1, J + 1);
  for (std::size_t row = 0; row <= J; ++row) {
    const std::size_t power = row + 1;
    const Element x = Element::from_symbol(BasisSymbol::fwd(power));
    const Element y = Element::from_symbol(BasisSymbol::bwd(power));
    for (std::size_t k = 0; k <= J; ++k)
      m.at(row, k) = GaussianRational(exact_rational(omega(k, x, y)));
  }
  return finish(std::move(m));
}

H2Report truncated_H2(std::size_t M) {
  if (M < 1 || M > 5) throw std::domain_error("truncated_H2 window must be between 1 and 5");

  const FiniteLieAlgebra g = FiniteLieAlgebra::corner_window(M);
  const std::size_t side = M + 1;
  const std::size_t D = g.dim();

  H2Report rep;
  rep.window = M;
  rep.dim = D;
  rep.pairs = D * (D - 1) / 2;
  rep.triples = D * (D - 1) * (D - 2) / 6;

  // Lexicographic pair index for i < j.
  auto pair_index = [D](std::size_t i, std::size_t j) {
    return i * D - i * (i + 1) / 2 + (j - i - 1);
  };
  // Signed lookup of omega(x_a, x_b) in the pair basis; zero on the diagonal.
  auto signed_pair = [&](std::size_t a, std::size_t b, const Rational& coef,
                         std::map<std::size_t, Rational>& acc) {
    if (a == b) return;
    const bool flip = a > b;
    const std::size_t p = flip ? pair_index(b, a) : pair_index(a, b);
    Rational& slot = acc[p];
    slot += flip ? Rational(-coef) : coef;
    if (slot == 0) acc.erase(p);
  };

  // d1 : 1-cochains -> 2-cochains, (d1 phi)(x_i,x_j) = phi([x_i,x_j]);
  // row per pair, column per basis functional.
  SparseQMat d1(rep.pairs, D);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = i + 1; j < D; ++j) {
      const std::size_t r = pair_index(i, j);
      for (const auto& [l, c] : g.bracket(i, j)) d1.add(r, l, exact_rational(c));
    }

  // d2 : 2-cochains -> 3-cochains, the cyclic sum om([x_i,x_j],x_k) + cyc;
  // row per triple, column per pair.
  SparseQMat d2(rep.triples, rep.pairs);
  std::size_t row = 0;
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = i + 1; j < D; ++j)
      for (std::size_t k = j + 1; k < D; ++k, ++row) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [l, c] : g.bracket(i, j)) signed_pair(l, k, exact_rational(c), acc);
        for (const auto& [l, c] : g.bracket(j, k)) signed_pair(l, i, exact_rational(c), acc);
        for (const auto& [l, c] : g.bracket(k, i)) signed_pair(l, j, exact_rational(c), acc);
        for (const auto& [col, v] : acc) d2.add(row, col, v);
      }

  rep.rank_d1 = d1.rank();
  rep.dim_ker_d2 = rep.pairs - d2.rank();
  if (rep.dim_ker_d2 < rep.rank_d1)
    throw std::logic_error("cocycle space smaller than coboundary space");
  rep.betti2 = rep.dim_ker_d2 - rep.rank_d1;
  rep.cocycle_basis = d2.kernel();

  // d2 d1 = 0, checked column by column through the sparse apply.
  rep.d2_after_d1_vanishes = true;
  for (std::size_t l = 0; l < D; ++l) {
    SparseRow col;
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = i + 1; j < D; ++j)
        for (const auto& [k, c] : g.bracket(i, j))
          if (k == l) col.emplace_back(pair_index(i, j), exact_rational(c));
    if (!d2.apply(col).empty()) {
      rep.d2_after_d1_vanishes = false;
      break;
    }
  }

  // Cross-check against the operator algebra: the table route for
  // d1(phi_j) must reproduce omega_j computed from actual commutators.
  rep.omega_exact.assign(M + 1, true);
  auto basis_symbol = [side](std::size_t l) {
    return BasisSymbol::corner(l / side, l % side);
  };
  for (std::size_t j = 0; j <= M; ++j) {
    const std::size_t diag = j * side + j;
    for (std::size_t p = 0; p < D && rep.omega_exact[j]; ++p)
      for (std::size_t q = p + 1; q < D; ++q) {
        Rational table(0);
        for (const auto& [l, c] : g.bracket(p, q))
          if (l == diag) table += exact_rational(c);
        const Element x = Element::from_symbol(basis_symbol(p));
        const Element y = Element::from_symbol(basis_symbol(q));
        if (exact_rational(omega(j, x, y)) != table) {
          rep.omega_exact[j] = false;
          break;
        }
      }
  }
  return rep;
}

} // namespace shiftalg
