#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftalg/qmat.hpp"
#include "shiftalg/ratmat.hpp"

#include <random>

using namespace shiftalg;

TEST_CASE("RatMat rank and kernel") {
  RatMat a(2, 2);
  a.at(0, 0) = GaussianRational(1);
  a.at(0, 1) = GaussianRational(2);
  a.at(1, 0) = GaussianRational(2);
  a.at(1, 1) = GaussianRational(4);
  CHECK(a.rank() == 1);
  auto k = a.kernel();
  REQUIRE(k.size() == 1);
  // One kernel vector, normalized with a unit in the free position.
  CHECK(k[0][0] == GaussianRational(-2));
  CHECK(k[0][1] == GaussianRational(1));

  RatMat id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = GaussianRational(1);
  CHECK(id.rank() == 3);
  CHECK(id.kernel().empty());
  CHECK(RatMat(2, 3).rank() == 0);
  CHECK(RatMat(2, 3).kernel().size() == 3);
}

TEST_CASE("RatMat handles complex entries exactly") {
  // Second row is i times the first: rank 1 over Q(i), 2 over Q.
  RatMat a(2, 2);
  a.at(0, 0) = GaussianRational(1);
  a.at(0, 1) = GaussianRational(make_rational(1, 3));
  a.at(1, 0) = GaussianRational::i();
  a.at(1, 1) = GaussianRational(Rational(0), make_rational(1, 3));
  CHECK(a.rank() == 1);
  auto k = a.kernel();
  REQUIRE(k.size() == 1);
  // Verify A x = 0 exactly.
  for (std::size_t i = 0; i < 2; ++i) {
    GaussianRational acc;
    for (std::size_t j = 0; j < 2; ++j) acc += a.at(i, j) * k[0][j];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("SparseQMat basics") {
  SparseQMat a(3, 3);
  a.add(0, 0, Rational(1));
  a.add(0, 2, Rational(-1));
  a.add(1, 1, Rational(2));
  CHECK(a.rank() == 2);
  auto k = a.kernel();
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == Rational(1));
  CHECK(k[0][1] == Rational(0));
  CHECK(k[0][2] == Rational(1));
  SUBCASE("columns must be strictly increasing per row") {
    CHECK_THROWS_AS(a.add(0, 1, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(a.add(1, 1, Rational(1)), std::invalid_argument);
  }
}

TEST_CASE("SparseQMat apply") {
  SparseQMat a(2, 3);
  a.add(0, 0, Rational(1));
  a.add(0, 1, Rational(1));
  a.add(1, 2, Rational(5));
  SparseRow x{{1, Rational(2)}, {2, Rational(1)}};
  SparseRow y = a.apply(x);
  REQUIRE(y.size() == 2);
  CHECK(y[0] == std::pair<std::size_t, Rational>{0, Rational(2)});
  CHECK(y[1] == std::pair<std::size_t, Rational>{1, Rational(5)});
  // Cancellation drops the entry entirely.
  SparseQMat b(1, 2);
  b.add(0, 0, Rational(1));
  b.add(0, 1, Rational(-1));
  CHECK(b.apply({{0, Rational(3)}, {1, Rational(3)}}).empty());
}

TEST_CASE("sparse and dense agree on random matrices") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t rows = 12, cols = 9;
    SparseQMat s(rows, cols);
    RatMat d(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (rng() % 3 != 0) continue;
        Rational v = make_rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
        if (v == 0) continue;
        s.add(i, j, v);
        d.at(i, j) = GaussianRational(v);
      }
    CHECK(s.rank() == d.rank());
    auto k = s.kernel();
    CHECK(k.size() == cols - s.rank());
    for (const auto& vec : k) {
      SparseRow packed;
      for (std::size_t j = 0; j < cols; ++j)
        if (vec[j] != 0) packed.emplace_back(j, vec[j]);
      CHECK(s.apply(packed).empty());
    }
  }
}
