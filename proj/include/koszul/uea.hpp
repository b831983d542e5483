#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "linear_combination.hpp"
#include "poly.hpp"
#include "super_lie_algebra.hpp"

namespace koszul {

// PBW basis element X^a T_S of U(g): exponents of the even basis and a strictly
// increasing subset of odd basis positions (0-based within the odd block).
struct PBWMonomial {
  std::vector<int> exps;
  std::vector<int> odds;
  auto operator<=>(const PBWMonomial&) const = default;
  bool operator==(const PBWMonomial&) const = default;
};

template <class C>
using UEAElement = LinearCombination<PBWMonomial, C>;

template <class C>
using UEATensor = LinearCombination<std::pair<PBWMonomial, PBWMonomial>, C>;

// Word in basis indices of g (absolute indices, odds offset by m).
using Word = std::vector<int>;

inline constexpr long kNormalizeFuel = 1000000;

class NormalizationError : public Error {
 public:
  using Error::Error;
};

inline Word to_word(const SuperLieAlgebra& g, const PBWMonomial& mono) {
  Word w;
  for (std::size_t i = 0; i < mono.exps.size(); ++i)
    for (int k = 0; k < mono.exps[i]; ++k) w.push_back(static_cast<int>(i));
  for (int j : mono.odds) w.push_back(static_cast<int>(g.even_dim()) + j);
  return w;
}

inline PBWMonomial identity_monomial(const SuperLieAlgebra& g) {
  return PBWMonomial{std::vector<int>(g.even_dim(), 0), {}};
}

template <class C>
UEAElement<C> uea_scalar(const SuperLieAlgebra& g, const C& c) {
  return UEAElement<C>(identity_monomial(g), c);
}

// Straightens a word into PBW normal form by repeated use of
// ab = (-1)^{|a||b|} ba + [a,b] and, for odd a, aa = [a,a]/2.
inline UEAElement<Rational> normalize_word(const SuperLieAlgebra& g, const Word& word) {
  const int m = static_cast<int>(g.even_dim());
  std::map<Word, Rational> pending;
  pending.emplace(word, Rational(1));
  UEAElement<Rational> out;
  long fuel = kNormalizeFuel;
  auto push = [&](Word w, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = pending.emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) pending.erase(it);
    }
  };
  while (!pending.empty()) {
    if (--fuel < 0) throw NormalizationError("normalization fuel exhausted");
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational c = node.mapped();
    std::size_t i = 0;
    for (; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) break;
      if (w[i] == w[i + 1] && w[i] >= m) break;
    }
    if (i + 1 >= w.size()) {
      PBWMonomial mono{std::vector<int>(g.even_dim(), 0), {}};
      for (int a : w) {
        if (a < m) ++mono.exps[static_cast<std::size_t>(a)];
        else mono.odds.push_back(a - m);
      }
      out.add(mono, c);
      continue;
    }
    int a = w[i], b = w[i + 1];
    auto splice = [&](const Word* mid) {
      Word r(w.begin(), w.begin() + static_cast<long>(i));
      if (mid) r.insert(r.end(), mid->begin(), mid->end());
      r.insert(r.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      return r;
    };
    if (a == b) {
      for (const auto& [k, ck] : g.bracket(a, a)) {
        Word mid{k};
        push(splice(&mid), c * ck / 2);
      }
      continue;
    }
    Word swapped{b, a};
    push(splice(&swapped), c * g.sign(a, b));
    for (const auto& [k, ck] : g.bracket(a, b)) {
      Word mid{k};
      push(splice(&mid), c * ck);
    }
  }
  return out;
}

template <class C>
UEAElement<C> uea_mul(const SuperLieAlgebra& g, const UEAElement<C>& a, const UEAElement<C>& b) {
  UEAElement<C> r;
  for (const auto& [ma, ca] : a) {
    Word wa = to_word(g, ma);
    for (const auto& [mb, cb] : b) {
      Word w = wa;
      Word wb = to_word(g, mb);
      w.insert(w.end(), wb.begin(), wb.end());
      C cab = ca * cb;
      for (const auto& [mono, c] : normalize_word(g, w)) r.add(mono, cab * c);
    }
  }
  return r;
}

// Parity of a PBW monomial.
inline int monomial_parity(const PBWMonomial& mono) { return static_cast<int>(mono.odds.size() % 2); }

// Delta(x) = x(x)1 + 1(x)x on g, extended as a superalgebra map. For a normal
// word every split into two subwords keeps both subwords normal; the sign
// counts odd letters of the right factor that precede odd letters of the left.
template <class C>
UEATensor<C> uea_coproduct(const SuperLieAlgebra& g, const UEAElement<C>& u) {
  const int m = static_cast<int>(g.even_dim());
  UEATensor<C> r;
  for (const auto& [mono, c] : u) {
    Word w = to_word(g, mono);
    const std::size_t L = w.size();
    if (L > 24) throw Error("coproduct of word longer than 24 letters");
    for (unsigned long mask = 0; mask < (1UL << L); ++mask) {
      PBWMonomial left{std::vector<int>(g.even_dim(), 0), {}}, right = left;
      int odd_right_seen = 0, inversions = 0;
      for (std::size_t p = 0; p < L; ++p) {
        bool in_left = (mask >> p) & 1UL;
        int a = w[p];
        PBWMonomial& dst = in_left ? left : right;
        if (a < m) {
          ++dst.exps[static_cast<std::size_t>(a)];
        } else {
          dst.odds.push_back(a - m);
          if (in_left) inversions += odd_right_seen;
          else ++odd_right_seen;
        }
      }
      r.add({left, right}, (inversions % 2) ? C(c * Rational(-1)) : c);
    }
  }
  return r;
}

template <class C>
C uea_counit(const SuperLieAlgebra& g, const UEAElement<C>& u, const C& zero) {
  return u.coefficient(identity_monomial(g), zero);
}

// S(w_1...w_k) = (-1)^k (-1)^{sum_{i<j}|w_i||w_j|} w_k...w_1.
template <class C>
UEAElement<C> uea_antipode(const SuperLieAlgebra& g, const UEAElement<C>& u) {
  UEAElement<C> r;
  for (const auto& [mono, c] : u) {
    Word w = to_word(g, mono);
    long k = static_cast<long>(w.size());
    long odd = static_cast<long>(mono.odds.size());
    long e = k + odd * (odd - 1) / 2;
    std::reverse(w.begin(), w.end());
    Rational s = (e % 2) ? Rational(-1) : Rational(1);
    for (const auto& [n, cn] : normalize_word(g, w)) r.add(n, c * (s * cn));
  }
  return r;
}

template <class C>
UEAElement<C> uea_from_lie(const SuperLieAlgebra& g, const LieVector& v, const C& one) {
  UEAElement<C> r;
  for (const auto& [i, c] : v) {
    Word w{i};
    for (const auto& [mono, cn] : normalize_word(g, w)) r.add(mono, one * (c * cn));
  }
  return r;
}

inline UEAElement<Rational> uea_basis(const SuperLieAlgebra& g, int i) {
  return normalize_word(g, Word{i});
}

inline std::string format_pbw(const SuperLieAlgebra& g, const PBWMonomial& mono) {
  std::string s;
  for (std::size_t i = 0; i < mono.exps.size(); ++i) {
    if (mono.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += g.name(static_cast<int>(i));
    if (mono.exps[i] != 1) s += "^" + std::to_string(mono.exps[i]);
  }
  for (int j : mono.odds) {
    if (!s.empty()) s += "*";
    s += g.name(static_cast<int>(g.even_dim()) + j);
  }
  return s.empty() ? "1" : s;
}

inline std::string format_uea(const SuperLieAlgebra& g, const UEAElement<Rational>& u) {
  if (u.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : u) {
    Rational a = abs(c);
    std::string b = format_pbw(g, mono);
    std::string t = a == 1 ? b : (b == "1" ? to_string(a) : to_string(a) + "*" + b);
    out += first ? (sgn(c) < 0 ? "-" + t : t) : (sgn(c) < 0 ? " - " + t : " + " + t);
    first = false;
  }
  return out;
}

}  // namespace koszul
