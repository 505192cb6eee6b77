#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hsamuel/poly.hpp"

namespace hsamuel {

/// Parse failure at a 1-based column of the parsed text.
class ParseError : public InputError {
 public:
  ParseError(int column, const std::string& msg)
      : InputError("column " + std::to_string(column) + ": " + msg), column_(column), msg_(msg) {}
  int column() const { return column_; }
  const std::string& message() const { return msg_; }

 private:
  int column_;
  std::string msg_;
};

/// Canonical text form: terms in decreasing order joined by " + " / " - ",
/// factors `coeff*Var^e*...`, unit coefficients omitted.
template <class K>
std::string to_string(const Poly<K>& p) {
  if (p.is_zero()) return "0";
  const K& k = p.field();
  const auto& vars = p.ring()->vars();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = k.is_negative(t.coef);
    auto mag = neg ? k.neg(t.coef) : t.coef;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < p.ring()->nvars(); ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += k.to_string(mag);
    } else if (k.is_one(mag)) {
      out += mono;
    } else {
      out += k.to_string(mag) + "*" + mono;
    }
  }
  return out;
}

/// Recursive-descent parser for sums of products of numbers, variables,
/// powers and parenthesized subexpressions.
template <class K>
class PolyParser {
 public:
  PolyParser(RingPtr<K> ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Poly<K> parse() {
    Poly<K> p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(static_cast<int>(pos_) + 1, msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<K> expr() {
    skip_ws();
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Poly<K> acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<K> term() {
    Poly<K> acc = factor();
    while (true) {
      skip_ws();
      if (accept('*')) {
        acc = acc * factor();
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])))) {
        // juxtaposition such as X(Y^3+Z^3) or 2X
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<K> factor() {
    Poly<K> b = base();
    if (accept('^')) {
      skip_ws();
      mpz_class e = integer();
      if (e > 1000) fail("exponent too large");
      b = b.pow(static_cast<int>(e.get_si()));
    }
    return b;
  }

  Poly<K> base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<K> p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      mpz_class num = integer();
      mpz_class den = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        den = integer();
      }
      try {
        return Poly<K>::constant(ring_, ring_->field().from_fraction(num, den));
      } catch (const InputError& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      int i = ring_->var_index(name);
      if (i < 0) {
        pos_ = start;
        fail("undeclared variable " + name);
      }
      return Poly<K>::variable(ring_, i);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  RingPtr<K> ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class K>
Poly<K> parse_poly(const RingPtr<K>& ring, std::string_view text) {
  return PolyParser<K>(ring, text).parse();
}

}  // namespace hsamuel
