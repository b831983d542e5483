#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "uea.hpp"

namespace koszul {

// Basis wedge T_{i1} ^ ... ^ T_{ik} of Lambda(g1), indices strictly increasing.
// Ordered by (length, lexicographic).
struct Wedge {
  std::vector<int> idx;

  std::size_t degree() const { return idx.size(); }
  int parity() const { return static_cast<int>(idx.size() % 2); }
  bool empty() const { return idx.empty(); }

  friend bool operator<(const Wedge& a, const Wedge& b) {
    if (a.idx.size() != b.idx.size()) return a.idx.size() < b.idx.size();
    return a.idx < b.idx;
  }
  friend bool operator==(const Wedge& a, const Wedge& b) { return a.idx == b.idx; }
  friend bool operator!=(const Wedge& a, const Wedge& b) { return !(a == b); }
};

template <class C>
using WedgeElement = LinearCombination<Wedge, C>;

// All 2^q wedges in (length, lex) order.
inline std::vector<Wedge> all_wedges(std::size_t q) {
  std::vector<Wedge> out;
  for (unsigned long mask = 0; mask < (1UL << q); ++mask) {
    Wedge w;
    for (std::size_t i = 0; i < q; ++i)
      if ((mask >> i) & 1UL) w.idx.push_back(static_cast<int>(i));
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Sign of the shuffle that sorts the concatenation a, b; 0 when they overlap.
inline int wedge_concat_sign(const Wedge& a, const Wedge& b, Wedge& out) {
  int s = detail::merge_odds(a.idx, b.idx, out.idx);
  return s;
}

struct WedgeSplit {
  int sign;
  Wedge left;
  Wedge right;
};

// Delta_Lambda(T_W) = sum sign T_A (x) T_B over ordered splits W = A u B.
inline std::vector<WedgeSplit> wedge_coproduct(const Wedge& w) {
  std::vector<WedgeSplit> out;
  const std::size_t k = w.idx.size();
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    WedgeSplit s{1, {}, {}};
    int right_seen = 0, inversions = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if ((mask >> p) & 1UL) {
        s.left.idx.push_back(w.idx[p]);
        inversions += right_seen;
      } else {
        s.right.idx.push_back(w.idx[p]);
        ++right_seen;
      }
    }
    s.sign = (inversions % 2) ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

// Wedge of odd vectors given in odd-block coordinates, expanded multilinearly.
inline WedgeElement<Rational> wedge_of_vectors(const std::vector<std::vector<Rational>>& vectors) {
  WedgeElement<Rational> out;
  if (vectors.empty()) {
    out.add(Wedge{}, Rational(1));
    return out;
  }
  const std::size_t q = vectors.front().size();
  std::vector<int> choice(vectors.size(), 0);
  for (;;) {
    Rational c(1);
    for (std::size_t i = 0; i < vectors.size() && !is_zero(c); ++i) c *= vectors[i][static_cast<std::size_t>(choice[i])];
    if (!is_zero(c)) {
      std::vector<int> idx = choice;
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
        int inv = 0;
        for (std::size_t a = 0; a < idx.size(); ++a)
          for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] > idx[b]) ++inv;
        out.add(Wedge{sorted}, (inv % 2) ? Rational(-c) : c);
      }
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == static_cast<int>(q)) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

// Antisymmetrizer gamma(T_{i1}^...^T_{ip}) = (1/p!) sum_tau sgn(tau) T_{i tau(1)}...T_{i tau(p)}.
inline UEAElement<Rational> gamma(const SuperLieAlgebra& g, const Wedge& w) {
  const int m = static_cast<int>(g.even_dim());
  std::vector<int> perm(w.idx.size());
  std::iota(perm.begin(), perm.end(), 0);
  UEAElement<Rational> out;
  Rational fact(1);
  for (std::size_t i = 2; i <= perm.size(); ++i) fact *= static_cast<long>(i);
  do {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inv;
    Word word;
    for (int p : perm) word.push_back(m + w.idx[static_cast<std::size_t>(p)]);
    Rational s = (inv % 2) ? Rational(-1) / fact : Rational(1) / fact;
    out.add(normalize_word(g, word), s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <class C>
UEAElement<C> gamma(const SuperLieAlgebra& g, const WedgeElement<C>& w) {
  UEAElement<C> out;
  for (const auto& [wedge, c] : w)
    for (const auto& [mono, cm] : gamma(g, wedge)) out.add(mono, c * cm);
  return out;
}

// Key (Z, S) of U(g0) (x) Lambda(g1); Z given by even exponents.
struct ZWedge {
  std::vector<int> z;
  Wedge wedge;
  friend bool operator<(const ZWedge& a, const ZWedge& b) {
    if (a.wedge != b.wedge) return a.wedge < b.wedge;
    return a.z < b.z;
  }
  friend bool operator==(const ZWedge& a, const ZWedge& b) { return a.z == b.z && a.wedge == b.wedge; }
};

template <class C>
using ZWedgeElement = LinearCombination<ZWedge, C>;

// Inverse of the isomorphism U(g0) (x) Lambda(g1) -> U(g), Z (x) S -> Z gamma(S):
// peel off the top odd-degree PBW term Z T_S and subtract Z gamma(S).
template <class C>
ZWedgeElement<C> gamma_hat_inverse(const SuperLieAlgebra& g, UEAElement<C> u) {
  ZWedgeElement<C> out;
  std::map<Wedge, UEAElement<Rational>> cache;
  long fuel = kNormalizeFuel;
  while (!u.empty()) {
    if (--fuel < 0) throw NormalizationError("gamma inverse did not terminate");
    auto top = u.begin();
    for (auto it = u.begin(); it != u.end(); ++it)
      if (it->first.odds.size() > top->first.odds.size()) top = it;
    const PBWMonomial mono = top->first;
    const C c = top->second;
    Wedge s{mono.odds};
    out.add(ZWedge{mono.exps, s}, c);
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, gamma(g, s)).first;
    Word zw = to_word(g, PBWMonomial{mono.exps, {}});
    for (const auto& [gm, gc] : it->second) {
      Word w = zw;
      Word tail = to_word(g, gm);
      w.insert(w.end(), tail.begin(), tail.end());
      for (const auto& [n, cn] : normalize_word(g, w)) u.add(n, c * Rational(-gc * cn));
    }
  }
  return out;
}

inline std::string format_wedge(const SuperLieAlgebra& g, const Wedge& w, const std::string& sep = "∧") {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.idx.size(); ++i) {
    if (i) s += sep;
    s += g.name(static_cast<int>(g.even_dim()) + w.idx[i]);
  }
  return s;
}

inline std::string format_even(const SuperLieAlgebra& g, const std::vector<int>& z) {
  return format_pbw(g, PBWMonomial{z, {}});
}

}  // namespace koszul
