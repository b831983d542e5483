#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "section.hpp"

namespace koszul {

// Outcome of a seeded property suite: samples checked and the failures.
struct PropertyResult {
  std::string name;
  std::size_t samples = 0;
  ValidationReport report;
  bool ok() const { return report.ok(); }
};

namespace prop_detail {

inline Word random_word(const SuperLieAlgebra& g, std::mt19937_64& rng, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), let(0, static_cast<int>(g.dim()) - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& a : w) a = let(rng);
  return w;
}

// Random element of degree <= maxdeg: a short combination of normalized words.
inline UEAElement<Rational> random_uea(const SuperLieAlgebra& g, std::mt19937_64& rng, int maxdeg) {
  std::uniform_int_distribution<int> terms(1, 3), coef(-3, 3);
  UEAElement<Rational> u;
  for (int t = terms(rng); t > 0; --t) u.add(normalize_word(g, random_word(g, rng, maxdeg)), Rational(coef(rng)));
  return u;
}

// Every PBW monomial of total degree <= d.
inline std::vector<PBWMonomial> pbw_monomials(const SuperLieAlgebra& g, int d) {
  std::vector<PBWMonomial> out;
  std::vector<int> e(g.even_dim(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == e.size()) {
      for (const auto& w : all_wedges(g.odd_dim()))
        if (static_cast<int>(w.degree()) <= left) out.push_back(PBWMonomial{e, w.idx});
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[i] = x;
      self(self, i + 1, left - x);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

using Triple = std::tuple<PBWMonomial, PBWMonomial, PBWMonomial>;
using UEATriple = LinearCombination<Triple, Rational>;

inline UEATensor<Rational> tensor(const UEAElement<Rational>& a, const UEAElement<Rational>& b, const Rational& s) {
  UEATensor<Rational> r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) r.add({ma, mb}, s * ca * cb);
  return r;
}

}  // namespace prop_detail

// normalize(w1 w2) = normalize(w1) normalize(w2) on random word pairs of
// total length <= maxlen.
inline PropertyResult pbw_homomorphism_suite(const SuperLieAlgebra& g, std::uint64_t seed, std::size_t count,
                                             int maxlen = 6) {
  PropertyResult r{"pbw-homomorphism", 0, {}};
  if (g.dim() == 0) return r;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    Word w = prop_detail::random_word(g, rng, maxlen);
    std::uniform_int_distribution<std::size_t> cut(0, w.size());
    std::size_t c = cut(rng);
    Word a(w.begin(), w.begin() + static_cast<long>(c)), b(w.begin() + static_cast<long>(c), w.end());
    ++r.samples;
    if (normalize_word(g, w) != uea_mul(g, normalize_word(g, a), normalize_word(g, b))) {
      std::string s;
      for (int x : w) s += (s.empty() ? "" : " ") + g.name(x);
      r.report.fail("pbw-homomorphism", s + " cut at " + std::to_string(c));
    }
  }
  return r;
}

// (Delta (x) id) Delta = (id (x) Delta) Delta on PBW monomials of degree <= d.
inline PropertyResult coassociativity_suite(const SuperLieAlgebra& g, int d = 4) {
  using namespace prop_detail;
  PropertyResult r{"coassociativity", 0, {}};
  for (const auto& m : pbw_monomials(g, d)) {
    UEAElement<Rational> u(m, Rational(1));
    UEATriple lhs, rhs;
    for (const auto& [ab, c] : uea_coproduct(g, u)) {
      for (const auto& [xy, cx] : uea_coproduct(g, UEAElement<Rational>(ab.first, Rational(1))))
        lhs.add(Triple{xy.first, xy.second, ab.second}, c * cx);
      for (const auto& [xy, cx] : uea_coproduct(g, UEAElement<Rational>(ab.second, Rational(1))))
        rhs.add(Triple{ab.first, xy.first, xy.second}, c * cx);
    }
    ++r.samples;
    if (lhs != rhs) r.report.fail("coassociativity", format_pbw(g, m));
  }
  return r;
}

// m (S (x) id) Delta = m (id (x) S) Delta = eps on PBW monomials of degree <= d.
inline PropertyResult antipode_suite(const SuperLieAlgebra& g, int d = 4) {
  PropertyResult r{"antipode-axiom", 0, {}};
  for (const auto& m : prop_detail::pbw_monomials(g, d)) {
    UEAElement<Rational> u(m, Rational(1)), s1, s2;
    for (const auto& [pq, c] : uea_coproduct(g, u)) {
      UEAElement<Rational> p(pq.first, c), q(pq.second, Rational(1));
      s1 += uea_mul(g, uea_antipode(g, p), q);
      s2 += uea_mul(g, p, uea_antipode(g, q));
    }
    auto eps = uea_scalar(g, uea_counit(g, u, Rational(0)));
    ++r.samples;
    if (s1 != eps) r.report.fail("antipode-left", format_pbw(g, m));
    if (s2 != eps) r.report.fail("antipode-right", format_pbw(g, m));
  }
  return r;
}

// Delta_U(gamma(P)) = (gamma (x) gamma)(Delta_Lambda(P)) for every wedge P.
inline PropertyResult gamma_coalgebra_suite(const SuperLieAlgebra& g) {
  PropertyResult r{"gamma-coalgebra-morphism", 0, {}};
  for (const auto& w : all_wedges(g.odd_dim())) {
    UEATensor<Rational> rhs;
    for (const auto& s : wedge_coproduct(w)) rhs += prop_detail::tensor(gamma(g, s.left), gamma(g, s.right), Rational(s.sign));
    ++r.samples;
    if (uea_coproduct(g, gamma(g, w)) != rhs) r.report.fail("gamma-coalgebra-morphism", format_wedge(g, w));
  }
  return r;
}

// gamma_hat(gamma_hat^-1(u)) = u for random u of degree <= maxdeg, and
// gamma_hat^-1(gamma_hat(x)) = x for random x in U(g0) (x) Lambda(g1).
inline PropertyResult gamma_hat_roundtrip_suite(const SuperLieAlgebra& g, std::uint64_t seed, std::size_t count,
                                                int maxdeg = 4) {
  PropertyResult r{"gamma-hat-roundtrip", 0, {}};
  if (g.dim() == 0) return r;
  std::mt19937_64 rng(seed);
  auto hat = [&](const ZWedgeElement<Rational>& x) {
    UEAElement<Rational> out;
    for (const auto& [key, c] : x)
      out.add(uea_mul(g, UEAElement<Rational>(PBWMonomial{key.z, {}}, Rational(1)), gamma(g, key.wedge)), c);
    return out;
  };
  auto W = all_wedges(g.odd_dim());
  std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
  std::uniform_int_distribution<int> ex(0, 2), coef(-3, 3), terms(1, 3);
  for (std::size_t t = 0; t < count; ++t) {
    auto u = prop_detail::random_uea(g, rng, maxdeg);
    ++r.samples;
    if (hat(gamma_hat_inverse(g, u)) != u) r.report.fail("gamma-hat-after-inverse", format_uea(g, u));
    ZWedgeElement<Rational> x;
    for (int k = terms(rng); k > 0; --k) {
      std::vector<int> z(g.even_dim());
      for (auto& e : z) e = ex(rng);
      x.add(ZWedge{z, W[pick(rng)]}, Rational(coef(rng)));
    }
    ++r.samples;
    if (gamma_hat_inverse(g, hat(x)) != x) r.report.fail("inverse-after-gamma-hat", format_uea(g, hat(x)));
  }
  return r;
}

// phi(Z u) = D_Z phi(u) for every even monomial Z of degree <= zdeg, on
// random sections phi and random u.
inline PropertyResult u0_linearity_suite(const SHCP& s, std::uint64_t seed, std::size_t count, int zdeg = 2) {
  PropertyResult r{"u0-linearity", 0, {}};
  const auto& g = s.algebra();
  if (g.dim() == 0) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), coin(0, 2);
  std::vector<std::vector<int>> zs;
  for (const auto& m : prop_detail::pbw_monomials(g, zdeg))
    if (m.odds.empty()) zs.push_back(m.exps);
  for (std::size_t t = 0; t < count; ++t) {
    Section phi(section_shape(s));
    for (const auto& w : all_wedges(s.q())) {
      if (coin(rng) == 0) continue;
      Monomial m{std::vector<int>(s.k()), {}};
      for (std::size_t i = 0; i < s.k(); ++i) m.exps[i] = s.group().invertible(i) ? e(rng) : std::abs(e(rng));
      phi.add(w, Poly::term(s.k(), 0, m, Rational(c(rng))));
    }
    auto u = prop_detail::random_uea(g, rng, 3);
    Poly base = evaluate_on_uea(s, phi, u);
    for (const auto& z : zs) {
      UEAElement<Rational> zu = uea_mul(g, UEAElement<Rational>(PBWMonomial{z, {}}, Rational(1)), u);
      ++r.samples;
      if (evaluate_on_uea(s, phi, zu) != s.apply_z(z, base))
        r.report.fail("u0-linearity", format_pbw(g, PBWMonomial{z, {}}) + " on " + format_uea(g, u));
    }
  }
  return r;
}

// The six core suites at their standard sample sizes.
inline std::vector<PropertyResult> core_property_suites(const SHCP& s, std::uint64_t seed = 1) {
  const auto& g = s.algebra();
  return {pbw_homomorphism_suite(g, seed, 1000),     coassociativity_suite(g),
          antipode_suite(g),                         gamma_coalgebra_suite(g),
          gamma_hat_roundtrip_suite(g, seed, 200),   u0_linearity_suite(s, seed, 50)};
}

}  // namespace koszul
