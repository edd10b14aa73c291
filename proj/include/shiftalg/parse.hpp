#pragma once

#include "shiftalg/element.hpp"

#include <stdexcept>
#include <string>

namespace shiftalg {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position, const std::string& token)
      : std::runtime_error(what), position(position), token(token) {}
  std::size_t position; // 0-based offset into the input
  std::string token;
};

// Element literals:
//   element := ["-"] term (("+"|"-") term)*
//   term    := scalar | scalar? symbol ("*" symbol)*
//   symbol  := "U^" nat | "U*^" nat | "U'^" nat | "C(" nat "," nat ")" | "E" | "I"
//   scalar  := rationalComplex epsPart? | epsPart
//   epsPart := "eps" ("^" nat)?
//   rationalComplex := rat | rat? "i" | "(" signed complex ")"
// "E" is C(0,0); "I" is U^0; a bare scalar means scalar * I, so every
// canonical print (including "0") parses back. Examples: "U^2*E*U*^3",
// "(1/2+3/4i)eps^2 C(1,0)".
Element parse_element(const std::string& text);

} // namespace shiftalg
