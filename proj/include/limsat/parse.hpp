#pragma once
// Recursive-descent parser for polynomial expressions.
//
// Grammar: sums/differences of products of powers; '^' binds tightest, then
// '*', then '+'/'-'. Literals are integers or rationals p/q; '/' is only
// legal between two integer literals. Whitespace is ignored. Errors carry the
// byte offset they were detected at.

#include <cctype>

#include "polynomial.hpp"

namespace limsat {

inline error syntax_error(std::size_t pos, const std::string& what) {
  return error("SyntaxError", "at offset " + std::to_string(pos) + ": " + what);
}

template <class K>
class Parser {
public:
  Parser(RingPtr ring, std::string text) : R(std::move(ring)), s(std::move(text)) {}

  Polynomial<K> parse() {
    Polynomial<K> p = expression();
    skip_ws();
    if (pos != s.size()) throw syntax_error(pos, "unexpected '" + std::string(1, s[pos]) + "'");
    return p;
  }

private:
  RingPtr R;
  std::string s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) { ++pos; return true; }
    return false;
  }

  Polynomial<K> expression() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial<K> acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Polynomial<K> term() {
    Polynomial<K> acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Polynomial<K> power() {
    Polynomial<K> base = atom();
    if (eat('^')) {
      skip_ws();
      long e = integer_literal("exponent");
      if (e < 0) throw syntax_error(pos, "negative exponent");
      Polynomial<K> acc = Polynomial<K>::constant(R, scalar_from_long<K>(*R, 1));
      for (long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial<K> atom() {
    skip_ws();
    if (pos >= s.size()) throw syntax_error(pos, "unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Polynomial<K> p = expression();
      if (!eat(')')) throw syntax_error(pos, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      K val = scalar_from_decimal<K>(*R, num);
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
          throw syntax_error(pos, "'/' needs an integer denominator");
        std::string den = digits();
        K dv = scalar_from_decimal<K>(*R, den);
        if (is_zero(dv)) throw syntax_error(pos, "zero denominator");
        val = val / dv;
      }
      return Polynomial<K>::constant(R, val);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      std::string name;
      name += s[pos++];
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        name += s[pos++];
      int j = R->var_index(name);
      if (j < 0) throw syntax_error(start, "unknown variable '" + name + "'");
      return Polynomial<K>::variable(R, static_cast<std::size_t>(j));
    }
    throw syntax_error(pos, std::string("unexpected '") + c + "'");
  }

  std::string digits() {
    std::string out;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out += s[pos++];
    return out;
  }

  long integer_literal(const std::string& what) {
    std::string d = digits();
    if (d.empty()) throw syntax_error(pos, "expected " + what);
    if (d.size() > 9) throw syntax_error(pos, what + " too large");
    return std::stol(d);
  }
};

template <class K>
Polynomial<K> parse_poly(const RingPtr& R, const std::string& text) {
  return Parser<K>(R, text).parse();
}

template <class K>
std::vector<Polynomial<K>> parse_polys(const RingPtr& R, const std::vector<std::string>& texts) {
  std::vector<Polynomial<K>> out;
  for (auto& t : texts) out.push_back(parse_poly<K>(R, t));
  return out;
}

} // namespace limsat
