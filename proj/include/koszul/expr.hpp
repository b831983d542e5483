#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace koszul {

// Error inside a formula; `column` is a 1-based offset into the formula text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column) : Error(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Operations a value type must provide to be parsed from a formula.
template <class V>
struct ExprOps {
  std::function<V(const Rational&)> constant;
  std::function<std::optional<V>(const std::string&)> variable;
  std::function<V(const V&, const V&)> add;
  std::function<V(const V&, const V&)> mul;
  std::function<V(const V&)> neg;
  std::function<V(const V&, int)> power;
  std::function<V(const V&, const V&)> divide;
};

namespace detail {

template <class V>
class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprOps<V>& ops) : s_(text), ops_(ops) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    V v = unary();
    for (;;) {
      if (accept('+')) v = ops_.add(v, unary());
      else if (accept('-')) v = ops_.add(v, ops_.neg(unary()));
      else return v;
    }
  }

  V unary() {
    if (accept('-')) return ops_.neg(unary());
    if (accept('+')) return unary();
    return product();
  }

  V product() {
    V v = power();
    for (;;) {
      if (accept('*')) v = ops_.mul(v, power());
      else if (accept('/')) v = ops_.divide(v, power());
      else return v;
    }
  }

  V power() {
    V base = atom();
    if (accept('^')) {
      skip();
      bool neg = false;
      if (accept('-')) neg = true;
      else accept('+');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return ops_.power(base, neg ? -e : e);
    }
    return base;
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of formula");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ops_.constant(Rational(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '@'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto v = ops_.variable(name);
      if (!v) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      return *v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ExprOps<V>& ops_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class V>
V parse_expression(std::string_view text, const ExprOps<V>& ops) {
  return detail::ExprParser<V>(text, ops).parse();
}

// Variable naming for a polynomial ring.
struct PolyRing {
  std::vector<std::string> even;
  std::vector<std::string> odd;

  std::size_t nev() const { return even.size(); }
  std::size_t nodd() const { return odd.size(); }
  Poly zero() const { return Poly(nev(), nodd()); }
  Poly one() const { return Poly::constant(nev(), nodd(), 1); }
  std::string format(const Poly& p) const { return p.to_string(even, odd); }
};

inline ExprOps<Poly> poly_ops(const PolyRing& ring) {
  ExprOps<Poly> ops;
  ops.constant = [&ring](const Rational& c) { return Poly::constant(ring.nev(), ring.nodd(), c); };
  ops.variable = [&ring](const std::string& name) -> std::optional<Poly> {
    for (std::size_t i = 0; i < ring.even.size(); ++i)
      if (ring.even[i] == name) return Poly::even_var(ring.nev(), ring.nodd(), i);
    for (std::size_t i = 0; i < ring.odd.size(); ++i)
      if (ring.odd[i] == name) return Poly::odd_var(ring.nev(), ring.nodd(), i);
    return std::nullopt;
  };
  ops.add = [](const Poly& a, const Poly& b) { return a + b; };
  ops.mul = [](const Poly& a, const Poly& b) { return a * b; };
  ops.neg = [](const Poly& a) { return -a; };
  ops.power = [](const Poly& a, int e) { return a.pow(e); };
  ops.divide = [](const Poly& a, const Poly& b) { return a * b.inverse(); };
  return ops;
}

inline Poly parse_poly(std::string_view text, const PolyRing& ring) {
  auto ops = poly_ops(ring);
  try {
    return parse_expression(text, ops);
  } catch (const ParseError&) {
    throw;
  } catch (const MalformedElement& e) {
    throw ParseError(e.what(), 1);
  }
}

}  // namespace koszul
