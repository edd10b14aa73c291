#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftalg/oracle.hpp"
#include "shiftalg/parse.hpp"
#include "shiftalg/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace shiftalg;

namespace {
Element C(std::size_t a, std::size_t b) { return Element::from_symbol(BasisSymbol::corner(a, b)); }
Element F(std::size_t n) { return Element::from_symbol(BasisSymbol::fwd(n)); }
Element B(std::size_t n) { return Element::from_symbol(BasisSymbol::bwd(n)); }
} // namespace

TEST_CASE("to_matrix places symbols on the right diagonals") {
  DenseMatrix f = to_matrix(F(1), 4, 0.0);
  CHECK(f.at(1, 0) == 1.0);
  CHECK(f.at(0, 1) == 0.0);
  DenseMatrix b = to_matrix(B(2), 4, 0.0);
  CHECK(b.at(0, 2) == 1.0);
  CHECK(b.at(1, 3) == 1.0);
  CHECK(b.at(2, 0) == 0.0);
  DenseMatrix t = to_matrix(build_shift(ShiftVariant::backward), 4, 0.25);
  CHECK(t.at(0, 0) == 0.25);
  CHECK(t.at(0, 1) == 1.0);
  CHECK_THROWS_AS(to_matrix(F(4), 4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(to_matrix(C(0, 5), 4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(to_matrix(F(1), 0, 0.0), std::invalid_argument);
}

TEST_CASE("oracle multiplicativity") {
  Element t = build_shift(ShiftVariant::backward);
  CHECK(mul_safety_bound(t, t) == 3);
  // Dyadic coupling: every float in both computations is exact, so the
  // deviation is exactly zero.
  CHECK(oracle_mul_check(t, t, 8, 0.5) == 0.0);
  CHECK_THROWS_AS(oracle_mul_check(F(3), F(4), 7, 0.5), std::invalid_argument);
  Sampler s(11);
  for (int rep = 0; rep < 25; ++rep) {
    Element x = s.element(), y = s.element();
    CHECK(oracle_mul_check(x, y, 32, 0.3) <= 1e-12);
  }
}

TEST_CASE("edge columns are clipped by composition and masked by the check") {
  // S*^2 S^2 = I, but the composed truncations lose the two basis vectors
  // that S^2 pushes above an 8-site window; the faithful columns agree.
  Element product = mul(B(2), F(2));
  REQUIRE(product == Element::identity());
  DenseMatrix composed = to_matrix(B(2), 8, 0.0) * to_matrix(F(2), 8, 0.0);
  DenseMatrix exact = to_matrix(product, 8, 0.0);
  CHECK((exact - composed).max_abs() == 1.0);
  CHECK(composed.at(6, 6) == 0.0);
  CHECK(composed.at(5, 5) == 1.0);
  CHECK(oracle_mul_check(B(2), F(2), 8, 0.0) == 0.0);
}

TEST_CASE("operator norm") {
  CHECK(operator_norm(to_matrix(C(0, 0), 4, 0.0)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(operator_norm(to_matrix(F(1), 8, 0.0)) == doctest::Approx(1.0).epsilon(1e-9));
  DenseMatrix d(3);
  d.at(0, 0) = 3.0;
  d.at(1, 1) = 1.0;
  CHECK(operator_norm(d) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(operator_norm(DenseMatrix(5)) == 0.0);
  DenseMatrix shear(2);
  shear.at(0, 0) = 1.0;
  shear.at(0, 1) = 1.0;
  shear.at(1, 1) = 1.0;
  CHECK_THROWS_AS(operator_norm(shear, 1e-30, 2), ConvergenceError);
}

TEST_CASE("numeric rank") {
  DenseMatrix a(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = double(i + 1) * double(j + 1);
  CHECK(numeric_rank(a) == 1);
  a.at(2, 2) += 1e-15; // noise far below rel_tol stays invisible
  CHECK(numeric_rank(a) == 1);
  a.at(2, 2) += 1.0;
  CHECK(numeric_rank(a) == 2);
}

TEST_CASE("eigenvalues of a triangular truncation short-circuit exactly") {
  auto vals = eigenvalues(to_matrix(build_shift(ShiftVariant::backward), 5, 0.3));
  sort_spectrum(vals);
  CHECK(vals[0] == std::complex<double>(0.3));
  for (std::size_t k = 1; k < 5; ++k) CHECK(vals[k] == 0.0);
}

TEST_CASE("eigenvalues of a cyclic permutation are the roots of unity") {
  const std::size_t n = 8;
  DenseMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) p.at((i + 1) % n, i) = 1.0;
  auto vals = eigenvalues(p);
  REQUIRE(vals.size() == n);
  // Compare as a multiset: equal-modulus values sort on floating noise.
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> root = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    double best = 1e300;
    for (const auto& v : vals) best = std::min(best, std::abs(v - root));
    CHECK(best <= 1e-7);
  }
}

TEST_CASE("hermitian variant at zero coupling has the open-chain spectrum") {
  const std::size_t n = 16;
  auto vals = eigenvalues(to_matrix(base_shift(ShiftVariant::hermitian), n, 0.0));
  REQUIRE(vals.size() == n);
  std::vector<double> re(n), expected(n);
  for (std::size_t j = 0; j < n; ++j) {
    CHECK(std::abs(vals[j].imag()) <= 1e-9);
    re[j] = vals[j].real();
    expected[j] = 2.0 * std::cos(double(j + 1) * std::numbers::pi / double(n + 1));
  }
  std::sort(re.begin(), re.end());
  std::sort(expected.begin(), expected.end());
  for (std::size_t j = 0; j < n; ++j)
    CHECK(re[j] == doctest::Approx(expected[j]).epsilon(1e-9));
}

TEST_CASE("apply and orbit span") {
  std::vector<std::complex<double>> e0(4);
  e0[0] = 1.0;
  auto out = apply(F(2), e0, 4, 0.0);
  CHECK(out[2] == 1.0);
  CHECK_THROWS_AS(apply(F(1), e0, 8, 0.0), std::invalid_argument);
  CHECK(orbit_span_dim(e0, 4) == 4);
  CHECK_THROWS_AS(orbit_span_dim(std::vector<std::complex<double>>(4), 4),
                  std::invalid_argument);
}

TEST_CASE("CSV formats are pinned") {
  CHECK(format_float(0.3) == "0.29999999999999999");
  CHECK(format_float(1.0) == "1");
  std::string heat = heatmap_dump(parse_element("U'^1 + 3/10 E"), 2, 0.0);
  CHECK(heat == "i,j,re,im\n"
                "0,0,0.29999999999999999,0\n"
                "0,1,1,0\n"
                "1,0,0,0\n"
                "1,1,0,0\n");
  auto rows = edge_eigen_sweep({0.5}, 3, ShiftVariant::backward);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].edge == std::complex<double>(0.5));
  CHECK(sweep_csv(rows) == "eps,n,k,re,im,is_edge\n"
                           "0.5,3,0,0.5,0,1\n"
                           "0.5,3,1,0,0,0\n"
                           "0.5,3,2,0,0,0\n");
}
