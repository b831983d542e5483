#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace koszul {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an element leaves the Laurent class (negative power of a
// non-monomial, inverse of a non-invertible body, ...).
class MalformedElement : public Error {
 public:
  using Error::Error;
};

// mpq_class(n, d) is not canonicalized; every fraction goes through here.
inline Rational fraction(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "-p", "p/q" with q > 0; result is canonical.
inline Rational parse_rational(std::string_view s) {
  std::string t(s);
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++digits;
  if (digits == 0) throw Error("malformed rational '" + t + "'");
  if (i < t.size()) {
    if (t[i] != '/') throw Error("malformed rational '" + t + "'");
    ++i;
    std::size_t den = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++den;
    if (den == 0 || i != t.size()) throw Error("malformed rational '" + t + "'");
  }
  if (t[0] == '+') t.erase(0, 1);
  Rational r;
  if (r.set_str(t, 10) != 0) throw Error("malformed rational '" + t + "'");
  if (sgn(r.get_den()) == 0) throw Error("zero denominator in '" + t + "'");
  r.canonicalize();
  return r;
}

}  // namespace koszul
