#include "shiftalg/parse.hpp"

#include <cctype>
#include <vector>

namespace shiftalg {

namespace {

enum class Tok {
  nat, plus, minus, star, lparen, rparen, comma, caret, slash,
  shift, shift_adj, corner, boundary, ident, eps, imag, end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  unsigned long value = 0;
};

[[noreturn]] void fail(const std::string& what, const Token& t) {
  throw ParseError(what + " at position " + std::to_string(t.pos) +
                       (t.text.empty() ? " (end of input)" : " near '" + t.text + "'"),
                   t.pos, t.text);
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, s.substr(start, len), start});
      i += len;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Token t{Tok::nat, s.substr(i, j - i), i};
      if (t.text.size() > 9) fail("numeric literal too large", t);
      t.value = std::stoul(t.text);
      out.push_back(t);
      i = j;
      continue;
    }
    switch (c) {
      case '+': push(Tok::plus, 1); continue;
      case '-': push(Tok::minus, 1); continue;
      case '*': push(Tok::star, 1); continue;
      case '(': push(Tok::lparen, 1); continue;
      case ')': push(Tok::rparen, 1); continue;
      case ',': push(Tok::comma, 1); continue;
      case '^': push(Tok::caret, 1); continue;
      case '/': push(Tok::slash, 1); continue;
      case 'U':
        // "U*" and "U'" are the adjoint; a bare '*' after a complete symbol is
        // the product operator, so adjacency to 'U' decides.
        if (i + 1 < s.size() && (s[i + 1] == '*' || s[i + 1] == '\'')) {
          push(Tok::shift_adj, 2);
        } else {
          push(Tok::shift, 1);
        }
        continue;
      case 'C': push(Tok::corner, 1); continue;
      case 'E': push(Tok::boundary, 1); continue;
      case 'I': push(Tok::ident, 1); continue;
      default: break;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::islower(static_cast<unsigned char>(s[j]))) ++j;
      std::string word = s.substr(i, j - i);
      if (word == "eps") {
        out.push_back({Tok::eps, word, i});
        i = j;
        continue;
      }
      if (word == "i") {
        out.push_back({Tok::imag, word, i});
        i = j;
        continue;
      }
      fail("unknown token", {Tok::end, word, i});
    }
    fail("unknown token", {Tok::end, std::string(1, c), i});
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Element run() {
    bool neg = accept(Tok::minus);
    Element e = term();
    if (neg) e = -e;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool sub = next().kind == Tok::minus;
      Element t = term();
      if (sub)
        e -= t;
      else
        e += t;
    }
    if (peek().kind != Tok::end) fail("expected '+', '-', or end of input", peek());
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return toks_[i < toks_.size() ? i : toks_.size() - 1];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what, peek());
    return next();
  }

  unsigned long nat(const char* what) { return expect(Tok::nat, what).value; }

  bool at_symbol() const {
    switch (peek().kind) {
      case Tok::shift:
      case Tok::shift_adj:
      case Tok::corner:
      case Tok::boundary:
      case Tok::ident:
        return true;
      default:
        return false;
    }
  }

  Element term() {
    Scalar c = Scalar::one();
    bool have_scalar = false;
    Tok k = peek().kind;
    if (k == Tok::nat || k == Tok::lparen || k == Tok::imag || k == Tok::eps) {
      c = scalar();
      have_scalar = true;
    }
    // A bare scalar is scalar * I; in particular "0" (the canonical print of
    // the zero element) parses back to zero.
    if (have_scalar && !at_symbol()) return c * Element::identity();
    Element e = Element::from_symbol(symbol());
    while (accept(Tok::star)) e = e * Element::from_symbol(symbol());
    return c * e;
  }

  Scalar scalar() {
    if (peek().kind == Tok::eps) return Scalar::eps(eps_power());
    GaussianRational c = rational_complex();
    if (peek().kind == Tok::eps) return Scalar(c, eps_power());
    return Scalar(c);
  }

  unsigned eps_power() {
    expect(Tok::eps, "'eps'");
    if (!accept(Tok::caret)) return 1;
    return static_cast<unsigned>(nat("eps exponent"));
  }

  GaussianRational rational_complex() {
    if (accept(Tok::lparen)) {
      GaussianRational v = signed_atom();
      if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
        bool sub = next().kind == Tok::minus;
        const Token& at = peek();
        GaussianRational w = atom();
        if (sub) w = -w;
        if ((v.im == 0) == (w.im == 0)) fail("malformed complex literal", at);
        v += w;
      }
      expect(Tok::rparen, "')'");
      return v;
    }
    return atom();
  }

  GaussianRational signed_atom() {
    bool neg = accept(Tok::minus);
    GaussianRational v = atom();
    return neg ? -v : v;
  }

  // nat ["/" nat] ["i"]  |  "i"
  GaussianRational atom() {
    if (accept(Tok::imag)) return GaussianRational::i();
    unsigned long p = nat("a number");
    Rational r(static_cast<long>(p));
    if (accept(Tok::slash)) {
      const Token& denTok = peek();
      unsigned long q = nat("a denominator");
      if (q == 0) fail("zero denominator", denTok);
      r = make_rational(static_cast<long>(p), static_cast<long>(q));
    }
    if (accept(Tok::imag)) return GaussianRational(Rational(0), r);
    return GaussianRational(r);
  }

  BasisSymbol symbol() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::shift:
        next();
        expect(Tok::caret, "'^' after 'U'");
        return BasisSymbol::fwd(nat("shift power"));
      case Tok::shift_adj:
        next();
        expect(Tok::caret, "'^' after the adjoint shift");
        return BasisSymbol::bwd(nat("shift power"));
      case Tok::corner: {
        next();
        expect(Tok::lparen, "'(' after 'C'");
        std::size_t a = nat("corner row");
        expect(Tok::comma, "','");
        std::size_t b = nat("corner column");
        expect(Tok::rparen, "')'");
        return BasisSymbol::corner(a, b);
      }
      case Tok::boundary:
        next();
        return BasisSymbol::corner(0, 0);
      case Tok::ident:
        next();
        return BasisSymbol::fwd(0);
      default:
        fail("expected a symbol (U^n, U*^n, C(a,b), E, I)", t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

Element parse_element(const std::string& text) { return Parser(text).run(); }

} // namespace shiftalg
