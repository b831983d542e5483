#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace koszul {

// Laurent monomial in even variables times an ordered product of distinct odd
// variables. `odds` is strictly increasing.
struct Monomial {
  std::vector<int> exps;
  std::vector<int> odds;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

namespace detail {

// Sign of merging two increasing odd lists, 0 when they overlap.
inline int merge_odds(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return (inversions % 2) ? -1 : 1;
}

}  // namespace detail

// Element of Q[y_1^{+-1},...,y_n^{+-1}] (x) Lambda[theta_1,...,theta_m]: a
// supercommutative ring with `nev` even Laurent variables and `nodd` odd
// variables. Coordinate functions, Grassmann numbers and functions on
// superdomains are all instances.
class Poly {
 public:
  using map_type = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(std::size_t nev, std::size_t nodd) : nev_(nev), nodd_(nodd) {}

  static Poly constant(std::size_t nev, std::size_t nodd, const Rational& c) {
    Poly p(nev, nodd);
    p.add_term(Monomial{std::vector<int>(nev, 0), {}}, c);
    return p;
  }
  static Poly even_var(std::size_t nev, std::size_t nodd, std::size_t i, int exponent = 1) {
    Poly p(nev, nodd);
    Monomial m{std::vector<int>(nev, 0), {}};
    m.exps.at(i) = exponent;
    p.add_term(m, Rational(1));
    return p;
  }
  static Poly odd_var(std::size_t nev, std::size_t nodd, std::size_t i) {
    if (i >= nodd) throw Error("odd variable index out of range");
    Poly p(nev, nodd);
    p.add_term(Monomial{std::vector<int>(nev, 0), {static_cast<int>(i)}}, Rational(1));
    return p;
  }
  static Poly term(std::size_t nev, std::size_t nodd, Monomial m, const Rational& c) {
    Poly p(nev, nodd);
    p.add_term(std::move(m), c);
    return p;
  }

  std::size_t nev() const { return nev_; }
  std::size_t nodd() const { return nodd_; }
  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, const Rational& c) {
    if (koszul::is_zero(c)) return;
    if (m.exps.size() != nev_) throw Error("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
      return;
    }
    it->second += c;
    if (koszul::is_zero(it->second)) terms_.erase(it);
  }

  Rational constant_term() const {
    auto it = terms_.find(Monomial{std::vector<int>(nev_, 0), {}});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{std::vector<int>(nev_, 0), {}});
  }

  // 0 even, 1 odd, -1 mixed; zero counts as even.
  int parity() const {
    int p = -2;
    for (const auto& [m, c] : terms_) {
      int q = static_cast<int>(m.odds.size() % 2);
      if (p == -2) p = q;
      else if (p != q) return -1;
    }
    return p == -2 ? 0 : p;
  }
  Poly parity_part(int parity) const {
    Poly r(nev_, nodd_);
    for (const auto& [m, c] : terms_)
      if (static_cast<int>(m.odds.size() % 2) == parity) r.terms_.emplace(m, c);
    return r;
  }
  // Part free of odd variables.
  Poly body() const {
    Poly r(nev_, nodd_);
    for (const auto& [m, c] : terms_)
      if (m.odds.empty()) r.terms_.emplace(m, c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check_ring(o);
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_ring(o);
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly operator-() const {
    Poly r(nev_, nodd_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    if (a.is_zero()) return Poly(b.nev_, b.nodd_);
    if (b.is_zero()) return Poly(a.nev_, a.nodd_);
    Poly r(a.nev_, a.nodd_);
    std::vector<int> odds;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        int s = detail::merge_odds(ma.odds, mb.odds, odds);
        if (s == 0) continue;
        Monomial m{ma.exps, odds};
        for (std::size_t i = 0; i < a.nev_; ++i) m.exps[i] += mb.exps[i];
        Rational c = ca * cb;
        if (s < 0) c = -c;
        r.add_term(std::move(m), c);
      }
    }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Poly& a, const Rational& s) {
    Poly r(a.nev_, a.nodd_);
    if (koszul::is_zero(s)) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
  Poly& operator*=(const Rational& s) { return *this = *this * s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.nev_ == b.nev_ && a.nodd_ == b.nodd_ && a.terms_ == b.terms_;
  }

  // Inverse when the body is a single Laurent monomial; the odd remainder is
  // nilpotent so a finite geometric series suffices.
  Poly inverse() const {
    Poly b = body();
    if (b.terms_.size() != 1) throw MalformedElement("element is not invertible in the Laurent class");
    const auto& [bm, bc] = *b.terms_.begin();
    Monomial im{bm.exps, {}};
    for (auto& e : im.exps) e = -e;
    Poly binv = term(nev_, nodd_, im, 1 / bc);
    Poly n = *this - b;
    if (n.is_zero()) return binv;
    Poly x = -(binv * n);
    Poly sum = constant(nev_, nodd_, 1);
    Poly pw = constant(nev_, nodd_, 1);
    for (std::size_t j = 0; j <= nodd_; ++j) {
      pw = pw * x;
      if (pw.is_zero()) break;
      sum += pw;
    }
    return binv * sum;
  }

  Poly pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Poly r = constant(nev_, nodd_, 1);
    Poly base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  Poly derivative(std::size_t i) const {
    Poly r(nev_, nodd_);
    for (const auto& [m, c] : terms_) {
      int e = m.exps.at(i);
      if (e == 0) continue;
      Monomial d = m;
      d.exps[i] -= 1;
      r.add_term(std::move(d), c * e);
    }
    return r;
  }

  // Left derivative with respect to odd variable i.
  Poly odd_derivative(std::size_t i) const {
    Poly r(nev_, nodd_);
    for (const auto& [m, c] : terms_) {
      auto it = std::find(m.odds.begin(), m.odds.end(), static_cast<int>(i));
      if (it == m.odds.end()) continue;
      Monomial d = m;
      auto pos = it - m.odds.begin();
      d.odds.erase(d.odds.begin() + pos);
      r.add_term(std::move(d), (pos % 2) ? Rational(-c) : c);
    }
    return r;
  }

  // Ring homomorphism determined by images of the variables; all images live
  // in a ring with `nev` even and `nodd` odd variables. Negative exponents
  // require invertible images.
  Poly substitute(std::size_t nev, std::size_t nodd, const std::vector<Poly>& even_images,
                  const std::vector<Poly>& odd_images) const {
    if (even_images.size() != nev_ || odd_images.size() != nodd_) throw Error("substitution arity mismatch");
    Poly r(nev, nodd);
    std::vector<std::map<int, Poly>> powers(nev_);
    auto power = [&](std::size_t i, int e) -> const Poly& {
      auto it = powers[i].find(e);
      if (it != powers[i].end()) return it->second;
      Poly v = even_images[i].pow(e);
      return powers[i].emplace(e, std::move(v)).first->second;
    };
    for (const auto& [m, c] : terms_) {
      Poly t = constant(nev, nodd, c);
      for (std::size_t i = 0; i < nev_ && !t.is_zero(); ++i)
        if (m.exps[i] != 0) t = t * power(i, m.exps[i]);
      for (int j : m.odds) {
        if (t.is_zero()) break;
        t = t * odd_images[static_cast<std::size_t>(j)];
      }
      r += t;
    }
    return r;
  }

  // Relabel variables by index maps into a larger ring.
  Poly remap(std::size_t nev, std::size_t nodd, const std::vector<std::size_t>& even_to,
             const std::vector<std::size_t>& odd_to) const {
    Poly r(nev, nodd);
    std::vector<std::pair<int, int>> tagged;
    for (const auto& [m, c] : terms_) {
      Monomial n{std::vector<int>(nev, 0), {}};
      for (std::size_t i = 0; i < nev_; ++i) n.exps[even_to.at(i)] += m.exps[i];
      std::vector<int> target;
      for (int j : m.odds) target.push_back(static_cast<int>(odd_to.at(static_cast<std::size_t>(j))));
      int inversions = 0;
      for (std::size_t a = 0; a < target.size(); ++a)
        for (std::size_t b = a + 1; b < target.size(); ++b) {
          if (target[a] == target[b]) throw Error("remap collides odd variables");
          if (target[a] > target[b]) ++inversions;
        }
      std::sort(target.begin(), target.end());
      n.odds = std::move(target);
      r.add_term(std::move(n), (inversions % 2) ? Rational(-c) : c);
    }
    return r;
  }

  // Embed into a ring with extra variables appended after the existing ones.
  Poly widen(std::size_t nev, std::size_t nodd, std::size_t even_offset = 0, std::size_t odd_offset = 0) const {
    std::vector<std::size_t> ev(nev_), od(nodd_);
    for (std::size_t i = 0; i < nev_; ++i) ev[i] = i + even_offset;
    for (std::size_t j = 0; j < nodd_; ++j) od[j] = j + odd_offset;
    return remap(nev, nodd, ev, od);
  }

  // Rational value when every variable is replaced by a constant; odd
  // variables evaluate to zero.
  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nev_) throw Error("evaluation arity mismatch");
    Rational r(0);
    for (const auto& [m, c] : terms_) {
      if (!m.odds.empty()) continue;
      Rational t = c;
      for (std::size_t i = 0; i < nev_; ++i) {
        int e = m.exps[i];
        if (e == 0) continue;
        if (koszul::is_zero(point[i]) && e < 0) throw MalformedElement("evaluation at a pole");
        Rational base = e > 0 ? point[i] : Rational(1 / point[i]);
        for (int k = 0; k < std::abs(e); ++k) t *= base;
      }
      r += t;
    }
    return r;
  }

  bool has_negative_exponent(std::size_t i) const {
    for (const auto& [m, c] : terms_)
      if (m.exps.at(i) < 0) return true;
    return false;
  }

  std::string to_string(const std::vector<std::string>& even_names, const std::vector<std::string>& odd_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < nev_; ++i) {
        if (m.exps[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += even_names.at(i);
        if (m.exps[i] != 1) mono += "^" + std::to_string(m.exps[i]);
      }
      for (int j : m.odds) {
        if (!mono.empty()) mono += "*";
        mono += odd_names.at(static_cast<std::size_t>(j));
      }
      Rational a = abs(c);
      std::string term;
      if (mono.empty()) term = koszul::to_string(a);
      else if (a == 1) term = mono;
      else term = koszul::to_string(a) + "*" + mono;
      if (first) out += (sgn(c) < 0 ? "-" : "") + term;
      else out += (sgn(c) < 0 ? " - " : " + ") + term;
      first = false;
    }
    return out;
  }

 private:
  // A zero operand adapts to the other operand's ring.
  void check_ring(const Poly& o) const {
    if ((o.nev_ != nev_ || o.nodd_ != nodd_) && !o.is_zero() && !is_zero())
      throw Error("ring mismatch between polynomial operands");
  }
  void adopt(const Poly& o) {
    if (is_zero() && !o.is_zero()) {
      nev_ = o.nev_;
      nodd_ = o.nodd_;
    }
  }

  std::size_t nev_ = 0;
  std::size_t nodd_ = 0;
  map_type terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

using CoordElement = Poly;

}  // namespace koszul
