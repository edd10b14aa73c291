#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shiftalg/parse.hpp"

using namespace shiftalg;

namespace {
Element C(std::size_t a, std::size_t b) { return Element::from_symbol(BasisSymbol::corner(a, b)); }
} // namespace

TEST_CASE("symbols and aliases") {
  CHECK(parse_element("E") == C(0, 0));
  CHECK(parse_element("I") == Element::identity());
  CHECK(parse_element("U^0") == Element::identity());
  CHECK(parse_element("U^3") == Element::from_symbol(BasisSymbol::fwd(3)));
  CHECK(parse_element("U*^2") == Element::from_symbol(BasisSymbol::bwd(2)));
  // U' is an ASCII-friendly spelling of the adjoint power.
  CHECK(parse_element("U'^2") == parse_element("U*^2"));
  CHECK(parse_element("C(1,0)") == C(1, 0));
}

TEST_CASE("products collapse to canonical form") {
  CHECK(parse_element("U^2*E*U*^3") == C(2, 3));
  CHECK(parse_element("U*^1*U^1") == Element::identity());
  CHECK(parse_element("U^1*U*^1") == Element::identity() - C(0, 0));
}

TEST_CASE("scalar prefixes") {
  CHECK(parse_element("2/4 E") == Element::from_symbol(BasisSymbol::corner(0, 0),
                                                       Scalar(make_rational(1, 2))));
  CHECK(parse_element("i E") == Element::from_symbol(BasisSymbol::corner(0, 0),
                                                     Scalar(GaussianRational::i())));
  CHECK(parse_element("eps E") ==
        Element::from_symbol(BasisSymbol::corner(0, 0), Scalar::eps()));
  CHECK(parse_element("(1/2+3/4i)eps^2 C(1,0)") ==
        Element::from_symbol(BasisSymbol::corner(1, 0),
                             Scalar(GaussianRational(make_rational(1, 2), make_rational(3, 4)), 2)));
  CHECK(parse_element("-E + E").is_zero());
  CHECK(parse_element("eps^2 I - eps^2 I").is_zero());
}

TEST_CASE("bare scalars are multiples of the identity") {
  CHECK(parse_element("0").is_zero());
  CHECK(parse_element("5") == Element::from_symbol(BasisSymbol::identity(), Scalar(5)));
  CHECK(parse_element("eps^2") == Element::from_symbol(BasisSymbol::identity(), Scalar::eps(2)));
  CHECK(parse_element("1 - U^1*U*^1") == C(0, 0));
}

TEST_CASE("sums subtract and reassociate") {
  Element x = parse_element("U^1 - U*^1 + 3 C(2,2)");
  CHECK(x.coefficient(BasisSymbol::fwd(1)) == Scalar(1));
  CHECK(x.coefficient(BasisSymbol::bwd(1)) == Scalar(-1));
  CHECK(x.coefficient(BasisSymbol::corner(2, 2)) == Scalar(3));
}

TEST_CASE("errors carry position and token") {
  try {
    parse_element("U^");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
    CHECK(e.token == "");
  }
  try {
    parse_element("C(1 2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
    CHECK(e.token == "2");
  }
  try {
    parse_element("U^1 @ E");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token == "@");
  }
  CHECK_THROWS_AS(parse_element(""), ParseError);
  CHECK_THROWS_AS(parse_element("1/0 E"), ParseError);
  CHECK_THROWS_AS(parse_element("U^99999999999"), ParseError);
  CHECK_THROWS_AS(parse_element("(1/2+1/3)E"), ParseError); // not a complex literal
  CHECK_THROWS_AS(parse_element("U^1 +"), ParseError);
}

TEST_CASE("round trip through to_string") {
  for (const char* text : {"U^1 + U*^2 + C(1,1) - C(0,0)", "(1/2+3/4i)eps^2 C(1,0)",
                           "eps C(0,1) + eps^2 C(0,0) + U*^2", "-3/10 U^4", "0"}) {
    Element x = parse_element(text);
    CHECK(parse_element(x.to_string()) == x);
    // Printing is canonical, so a second round trip is the identity.
    CHECK(parse_element(x.to_string()).to_string() == x.to_string());
  }
}
