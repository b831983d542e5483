#pragma once

#include <string>
#include <vector>

#include "grassmann.hpp"
#include "linalg.hpp"
#include "section.hpp"

namespace koszul {

// Polynomial superdomain: even generators (Laurent where flagged) and odd
// generators.
struct SuperDomain {
  std::vector<std::string> even;
  std::vector<bool> invertible;
  std::vector<std::string> odd;

  std::size_t nev() const { return even.size(); }
  std::size_t nodd() const { return odd.size(); }
  std::size_t dim() const { return nev() + nodd(); }
  PolyRing ring() const { return PolyRing{even, odd}; }
  Poly gen(std::size_t i) const {
    return i < nev() ? Poly::even_var(nev(), nodd(), i) : Poly::odd_var(nev(), nodd(), i - nev());
  }
  const std::string& name(std::size_t i) const { return i < nev() ? even.at(i) : odd.at(i - nev()); }
  void check_element(const Poly& f, std::size_t offset = 0) const {
    for (std::size_t i = 0; i < nev(); ++i)
      if (!invertible.at(i) && f.has_negative_exponent(offset + i))
        throw MalformedElement("negative power of non-invertible generator " + even[i]);
  }
};

// Derivation of O(M) of fixed parity, given by its values on the generators
// (the nev even ones first). D = sum D(x_a) d/dx_a with left derivatives.
struct SuperDerivation {
  int parity = 0;
  std::size_t nev = 0;
  std::vector<Poly> images;

  // Acts on the M variables of f, which sit at even offset `eoff` and odd
  // offset `ooff`; everything else is a constant for D.
  Poly apply(const Poly& f, std::size_t eoff = 0, std::size_t ooff = 0) const {
    Poly out(f.nev(), f.nodd());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i].is_zero()) continue;
      Poly d = i < nev ? f.derivative(eoff + i) : f.odd_derivative(ooff + i - nev);
      if (d.is_zero()) continue;
      out += images[i].widen(f.nev(), f.nodd(), eoff, ooff) * d;
    }
    return out;
  }
};

// Supercommutator [D1, D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1 on an element.
inline Poly derivation_bracket(const SuperDerivation& a, const SuperDerivation& b, const Poly& f) {
  return a.apply(b.apply(f)) - b.apply(a.apply(f)) * Rational((a.parity && b.parity) ? -1 : 1);
}

// Reduced coaction and infinitesimal action of an SHCP on M. Coaction images
// live in the ring with the reduced group variables first, then the even
// variables of M, and the odd variables of M.
struct ActionData {
  SHCP shcp;
  SuperDomain m;
  std::vector<Poly> coaction;         // one per M generator, even first
  std::vector<SuperDerivation> rho;   // one per basis element of g
};

namespace detail {

inline std::size_t action_nev(const ActionData& d) { return d.shcp.k() + d.m.nev(); }

// Substitutes the M generators of f (a polynomial on M) by `images`.
inline Poly substitute_m(const ActionData& d, const Poly& f, const std::vector<Poly>& images, std::size_t nev,
                         std::size_t nodd) {
  std::vector<Poly> ev(images.begin(), images.begin() + static_cast<long>(d.m.nev()));
  std::vector<Poly> od(images.begin() + static_cast<long>(d.m.nev()), images.end());
  return f.substitute(nev, nodd, ev, od);
}

}  // namespace detail

// abar^*(f) for f in O(M).
inline Poly coaction_apply(const ActionData& d, const Poly& f) {
  return detail::substitute_m(d, f, d.coaction, detail::action_nev(d), d.m.nodd());
}

// rho extended to U(g) as a super anti-homomorphism,
// rho(uv) = (-1)^{|u||v|} rho(v) rho(u): on a word w1...wn this is
// (-1)^{n_odd(n_odd-1)/2} rho(wn)...rho(w1), so rho(w1) acts first. f carries
// the M variables at even offset eoff, odd offset 0.
inline Poly rho_apply(const ActionData& d, const UEAElement<Rational>& u, const Poly& f, std::size_t eoff) {
  const auto& g = d.shcp.algebra();
  Poly out(f.nev(), f.nodd());
  for (const auto& [mono, c] : u) {
    Poly v = f;
    for (int letter : to_word(g, mono)) {
      v = d.rho.at(static_cast<std::size_t>(letter)).apply(v, eoff, 0);
      if (v.is_zero()) break;
    }
    std::size_t n = mono.odds.size();
    Rational sign = (n * (n - 1) / 2) % 2 ? Rational(-1) : Rational(1);
    out += v * (c * sign);
  }
  return out;
}

inline ValidationReport validate_action_data(const ActionData& d) {
  ValidationReport rep;
  const auto& s = d.shcp;
  const auto& g = s.algebra();
  const std::size_t k = s.k(), me = d.m.nev(), mo = d.m.nodd(), n = g.dim();
  if (d.coaction.size() != d.m.dim()) {
    rep.fail("shape", "one coaction image per generator of M is required");
    return rep;
  }
  if (d.rho.size() != n) {
    rep.fail("shape", "one derivation per basis element of g is required");
    return rep;
  }
  for (std::size_t i = 0; i < d.m.dim(); ++i) {
    const Poly& c = d.coaction[i];
    if (c.is_zero()) continue;
    if (c.nev() != k + me || c.nodd() != mo) rep.fail("shape", "coaction image of " + d.m.name(i) + " has wrong arity");
    int want = i < me ? 0 : 1;
    if (c.parity() != want) rep.fail("coaction-parity", d.m.name(i));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const auto& r = d.rho[a];
    if (r.images.size() != d.m.dim() || r.nev != me) {
      rep.fail("shape", "derivation for " + g.name(static_cast<int>(a)) + " has wrong arity");
      return rep;
    }
    if (r.parity != g.parity(static_cast<int>(a))) rep.fail("rho-parity", g.name(static_cast<int>(a)));
    for (std::size_t i = 0; i < d.m.dim(); ++i) {
      const Poly& img = r.images[i];
      if (img.is_zero()) continue;
      int want = ((i < me ? 0 : 1) + r.parity) % 2;
      if (img.parity() != want) rep.fail("rho-parity", g.name(static_cast<int>(a)) + " on " + d.m.name(i));
    }
  }
  if (!rep.ok()) return rep;

  // Coaction laws on generators.
  const std::size_t n2 = 2 * k + me;
  for (std::size_t i = 0; i < d.m.dim(); ++i) {
    const Poly& c = d.coaction[i];
    Poly lhs = s.group().coproduct_block(c, 0);
    // (id (x) abar^*) abar^*: M variables of c replaced by abar^*(m_j) in (h, m).
    std::vector<Poly> ev(k + me), od(mo);
    for (std::size_t t = 0; t < k; ++t) ev[t] = Poly::even_var(n2, mo, t);
    std::vector<std::size_t> emap(k + me), omap(mo);
    for (std::size_t t = 0; t < k + me; ++t) emap[t] = k + t;
    for (std::size_t t = 0; t < mo; ++t) omap[t] = t;
    for (std::size_t j = 0; j < me; ++j) ev[k + j] = d.coaction[j].remap(n2, mo, emap, omap);
    for (std::size_t j = 0; j < mo; ++j) od[j] = d.coaction[me + j].remap(n2, mo, emap, omap);
    Poly rhs = c.substitute(n2, mo, ev, od);
    if (lhs != rhs) rep.fail("coaction-associativity", d.m.name(i));
    if (s.group().evaluate_block(c, 0, s.group().identity()) != d.m.gen(i))
      rep.fail("coaction-unit", d.m.name(i));
  }

  // rho([X, Y]) = -[rho(X), rho(Y)] on generators.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t i = 0; i < d.m.dim(); ++i) {
        Poly f = d.m.gen(i);
        Poly lhs(me, mo);
        for (const auto& [c, cc] : g.bracket(static_cast<int>(a), static_cast<int>(b)))
          lhs += d.rho[static_cast<std::size_t>(c)].apply(f) * cc;
        Poly rhs = -derivation_bracket(d.rho[a], d.rho[b], f);
        if (lhs != rhs) {
          rep.fail("rho-bracket", "[" + g.name(static_cast<int>(a)) + "," + g.name(static_cast<int>(b)) + "] on " +
                                      d.m.name(i));
          break;
        }
      }

  // (a) rho(X) = (X_e (x) id) abar^* on g0.
  for (std::size_t x = 0; x < g.even_dim(); ++x)
    for (std::size_t i = 0; i < d.m.dim(); ++i) {
      Poly acc(k + me, mo);
      for (std::size_t t = 0; t < k; ++t) {
        const Rational& v = s.tangent(x).values[t];
        if (!is_zero(v)) acc += d.coaction[i].derivative(t) * v;
      }
      Poly lhs = s.group().evaluate_block(acc, 0, s.group().identity());
      if (lhs != d.rho[x].apply(d.m.gen(i)))
        rep.fail("compatibility-reduced", g.name(static_cast<int>(x)) + " on " + d.m.name(i));
    }

  // (b) rho(g.Y) = (abar^{g^{-1}})^* rho(Y) (abar^g)^*, as an identity in g.
  // (abar^g)^* f = abar^*(f) with g symbolic; (abar^{g^{-1}})^* substitutes
  // m_j by abar^*(m_j) at g^{-1}.
  std::vector<Poly> inv_images(d.m.dim());
  for (std::size_t j = 0; j < d.m.dim(); ++j) inv_images[j] = s.group().antipode_block(d.coaction[j], 0);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t i = 0; i < d.m.dim(); ++i) {
      Poly lhs(k + me, mo);
      for (std::size_t a = 0; a < n; ++a)
        if (!s.sigma(a, y).is_zero())
          lhs += s.sigma(a, y).widen(k + me, mo) * d.rho[a].apply(d.m.gen(i)).widen(k + me, mo, k);
      Poly inner = d.rho[y].apply(d.coaction[i], k, 0);
      // Replace the M variables of inner by abar^*(m_j)(g^{-1}, m); g stays.
      std::vector<Poly> ev(k + me), od(mo);
      for (std::size_t t = 0; t < k; ++t) ev[t] = Poly::even_var(k + me, mo, t);
      for (std::size_t j = 0; j < me; ++j) ev[k + j] = inv_images[j];
      for (std::size_t j = 0; j < mo; ++j) od[j] = inv_images[me + j];
      Poly rhs = inner.substitute(k + me, mo, ev, od);
      if (lhs != rhs) rep.fail("compatibility-sigma", g.name(static_cast<int>(y)) + " on " + d.m.name(i));
    }
  return rep;
}

// a^*(f) for every generator f of M: a section of G with coefficients in
// O(G0) (x) O(M), table(f)(P) = (-1)^{|P|} (id (x) rho(gamma(P))) abar^*(f).
using ActionTable = std::vector<Section>;

inline SectionShape action_shape(const ActionData& d) {
  return SectionShape{1, d.shcp.k(), d.shcp.q(), d.m.nev(), d.m.nodd()};
}

inline Section reconstruct_generator(const ActionData& d, const Poly& abar) {
  const auto& g = d.shcp.algebra();
  Section out(action_shape(d));
  for (const auto& p : all_wedges(d.shcp.q())) {
    Poly v = rho_apply(d, gamma(g, p), abar, d.shcp.k());
    out.add(p, p.parity() ? -v : v);
  }
  return out;
}

inline ActionTable reconstruct_action(const ActionData& d) {
  ActionTable t;
  for (const auto& c : d.coaction) t.push_back(reconstruct_generator(d, c));
  return t;
}

// Ring form of the table of a generator: even variables G0 then M, odd
// variables the wedge positions of G then the odd variables of M.
inline std::vector<Poly> action_ring_forms(const ActionTable& t) {
  std::vector<Poly> out;
  for (const auto& s : t) out.push_back(to_ring(s));
  return out;
}

// a o (mu x id) = a o (id x a) and a o <e, id> = id on every generator,
// compared entrywise on the G x G tables.
inline ValidationReport check_action_axioms(const ActionData& d, const ActionTable& t) {
  ValidationReport rep;
  const auto& s = d.shcp;
  const std::size_t k = s.k(), q = s.q(), me = d.m.nev(), mo = d.m.nodd();
  if (t.size() != d.m.dim()) {
    rep.fail("shape", "one table per generator of M is required");
    return rep;
  }
  auto forms = action_ring_forms(t);
  SectionShape two{2, k, q, me, mo};
  const std::size_t n2 = two.nev(), o2 = 2 * q + mo;
  // Ring form of a^*(m_j) moved to the (h, m) slots of G x G x M.
  std::vector<std::size_t> emap(k + me), omap(q + mo);
  for (std::size_t i = 0; i < k + me; ++i) emap[i] = k + i;
  for (std::size_t j = 0; j < q + mo; ++j) omap[j] = q + j;
  std::vector<Poly> ev(k + me), od(q + mo);
  for (std::size_t i = 0; i < k; ++i) ev[i] = Poly::even_var(n2, o2, i);
  for (std::size_t j = 0; j < q; ++j) od[j] = Poly::odd_var(n2, o2, j);
  for (std::size_t i = 0; i < me; ++i) ev[k + i] = forms[i].remap(n2, o2, emap, omap);
  for (std::size_t j = 0; j < mo; ++j) od[q + j] = forms[me + j].remap(n2, o2, emap, omap);
  for (std::size_t i = 0; i < d.m.dim(); ++i) {
    Section lhs = mu_pullback(s, t[i], 0);
    Section rhs = from_ring(forms[i].substitute(n2, o2, ev, od), two);
    if (!(lhs == rhs)) rep.fail("action-associativity", d.m.name(i) + " at " + first_difference(s, lhs, rhs));
    Section unit = counit_on_factor(s, t[i], 0);
    Section want(unit.shape());
    want.add(Wedge{}, d.m.gen(i));
    if (!(unit == want)) rep.fail("action-unit", d.m.name(i));
  }
  return rep;
}

// Rational point of M: values of the even generators; odd ones vanish.
using MPoint = std::vector<Rational>;

inline Rational eval_at_point(const SuperDomain& m, const Poly& f, const MPoint& p) {
  if (p.size() != m.nev()) throw Error("point of M has wrong arity");
  for (std::size_t i = 0; i < m.nev(); ++i)
    if (m.invertible[i] && is_zero(p[i])) throw Error("point vanishes at invertible generator " + m.even[i]);
  return f.body().evaluate(p);
}

// (da_p)_e: rows M generators (even then odd), columns the basis of g;
// entry ev_p(rho(X) f).
inline Matrix differential_at_identity(const ActionData& d, const MPoint& p) {
  const std::size_t n = d.shcp.algebra().dim();
  Matrix a(d.m.dim(), std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < d.m.dim(); ++i)
    for (std::size_t x = 0; x < n; ++x) a[i][x] = eval_at_point(d.m, d.rho[x].apply(d.m.gen(i)), p);
  return a;
}

struct Stabilizer {
  std::vector<LieVector> basis;  // even vectors first
  std::size_t even = 0;
  std::size_t odd = 0;
  bool bracket_closed = true;
};

// Span test: is v in the span of `basis`?
inline bool in_span(const std::vector<LieVector>& basis, const LieVector& v, std::size_t n) {
  Matrix a;
  for (const auto& b : basis) {
    std::vector<Rational> row(n, Rational(0));
    for (const auto& [i, c] : b) row[static_cast<std::size_t>(i)] = c;
    a.push_back(row);
  }
  std::size_t r = rank(a, n);
  std::vector<Rational> row(n, Rational(0));
  for (const auto& [i, c] : v) row[static_cast<std::size_t>(i)] = c;
  a.push_back(row);
  return rank(a, n) == r;
}

// g_p = ker (da_p)_e, computed per parity block.
inline Stabilizer stabilizer_subalgebra(const ActionData& d, const MPoint& p) {
  const auto& g = d.shcp.algebra();
  const std::size_t n = g.dim(), m = g.even_dim();
  Matrix a = differential_at_identity(d, p);
  Stabilizer out;
  for (int parity : {0, 1}) {
    std::vector<std::size_t> cols;
    for (std::size_t x = 0; x < n; ++x)
      if ((x >= m) == (parity == 1)) cols.push_back(x);
    Matrix block;
    for (const auto& row : a) {
      std::vector<Rational> r;
      for (auto c : cols) r.push_back(row[c]);
      block.push_back(r);
    }
    for (const auto& v : nullspace(block, cols.size())) {
      LieVector lv;
      for (std::size_t j = 0; j < cols.size(); ++j) lv.add(static_cast<int>(cols[j]), v[j]);
      out.basis.push_back(lv);
      (parity ? out.odd : out.even) += 1;
    }
  }
  for (const auto& u : out.basis)
    for (const auto& v : out.basis) {
      LieVector b;
      for (const auto& [i, ci] : u)
        for (const auto& [j, cj] : v)
          for (const auto& [t, ct] : g.bracket(i, j)) b.add(t, ci * cj * ct);
      if (!in_span(out.basis, b, n)) out.bracket_closed = false;
    }
  return out;
}

struct Transitivity {
  bool verdict = false;
  std::size_t even_rank = 0;
  std::size_t odd_rank = 0;
  bool submersive = false;
  bool reduced_transitive = false;
};

// Transitive iff the reduced action is transitive (asserted by the caller)
// and (da_p)_e is onto in both parity blocks.
inline Transitivity is_transitive_at(const ActionData& d, const MPoint& p, bool reduced_transitive) {
  const auto& g = d.shcp.algebra();
  Matrix a = differential_at_identity(d, p);
  const std::size_t me = d.m.nev(), m = g.even_dim();
  Matrix even, odd;
  for (std::size_t i = 0; i < d.m.dim(); ++i) {
    std::vector<Rational> r;
    for (std::size_t x = 0; x < g.dim(); ++x)
      if ((x >= m) == (i >= me)) r.push_back(a[i][x]);
    (i < me ? even : odd).push_back(r);
  }
  Transitivity t;
  t.even_rank = rank(even, m);
  t.odd_rank = rank(odd, g.odd_dim());
  t.submersive = t.even_rank == me && t.odd_rank == d.m.nodd();
  t.reduced_transitive = reduced_transitive;
  t.verdict = t.submersive && reduced_transitive;
  return t;
}

// Whether the rational group point h fixes p under the reduced action.
inline bool in_reduced_stabilizer(const ActionData& d, const GroupPoint& h, const MPoint& p) {
  std::vector<Rational> hp = h.values;
  hp.insert(hp.end(), p.begin(), p.end());
  for (std::size_t i = 0; i < d.m.nev(); ++i)
    if (d.coaction[i].body().evaluate(hp) != p[i]) return false;
  return true;
}

// a_p^*(f): the table of f with M evaluated at p; sections of G.
inline std::vector<Section> orbit_map_pullback(const ActionData& d, const ActionTable& t, const MPoint& p) {
  const std::size_t k = d.shcp.k();
  std::vector<Section> out;
  std::vector<Poly> ev(k + d.m.nev()), od(d.m.nodd(), Poly(k, 0));
  for (std::size_t i = 0; i < k; ++i) ev[i] = Poly::even_var(k, 0, i);
  for (std::size_t i = 0; i < d.m.nev(); ++i) {
    eval_at_point(d.m, d.m.gen(i), p);
    ev[k + i] = Poly::constant(k, 0, p[i]);
  }
  for (const auto& tab : t) {
    Section s(section_shape(d.shcp));
    for (const auto& [w, f] : tab.table()) s.add(w, f.substitute(k, 0, ev, od));
    out.push_back(s);
  }
  return out;
}

// Builds action data from formulas. Coaction formulas are over the reduced
// group generators (named by `slot_names`) and the generators of M; rho[a]
// lists the images of the M generators under the derivation of basis
// element a, as formulas on M.
inline ActionData make_action(const SHCP& s, SuperDomain m, const std::vector<std::string>& slot_names,
                              const std::vector<std::string>& coaction,
                              const std::vector<std::vector<std::string>>& rho) {
  if (slot_names.size() != s.k()) throw Error("one slot name per reduced group generator is required");
  ActionData d{s, std::move(m), {}, {}};
  PolyRing both{slot_names, d.m.odd};
  both.even.insert(both.even.end(), d.m.even.begin(), d.m.even.end());
  PolyRing mring = d.m.ring();
  for (const auto& f : coaction) d.coaction.push_back(parse_poly(f, both));
  const auto& g = s.algebra();
  for (std::size_t a = 0; a < rho.size(); ++a) {
    SuperDerivation der{g.parity(static_cast<int>(a)), d.m.nev(), {}};
    for (const auto& f : rho[a]) der.images.push_back(parse_poly(f, mring));
    d.rho.push_back(std::move(der));
  }
  return d;
}

// Expresses the ring form of a table of G with coefficients on M in new
// coordinates of G: `phi_images` gives every delta-section generator
// (phi_<generator> then Phi_<odd>) as a polynomial over the new coordinates
// (k even, q odd). The result lives in the ring with the new even
// coordinates, the even generators of M, the new odd coordinates and the odd
// generators of M.
inline Poly change_group_coordinates(const ActionData& d, const Poly& ring_form, const std::vector<Poly>& phi_images) {
  const std::size_t k = d.shcp.k(), q = d.shcp.q(), me = d.m.nev(), mo = d.m.nodd();
  const std::size_t ne = k + me, no = q + mo;
  std::vector<Poly> ev(ne), od(no);
  for (std::size_t i = 0; i < k; ++i) ev[i] = phi_images.at(i).widen(ne, no);
  for (std::size_t j = 0; j < q; ++j) od[j] = phi_images.at(k + j).widen(ne, no);
  for (std::size_t i = 0; i < me; ++i) ev[k + i] = Poly::even_var(ne, no, k + i);
  for (std::size_t j = 0; j < mo; ++j) od[q + j] = Poly::odd_var(ne, no, q + j);
  return ring_form.substitute(ne, no, ev, od);
}

// For M = G presented by the coordinates of a group model: the reconstructed
// table of every coordinate must equal mu^* of its dictionary section, with
// the second factor rewritten in the coordinates of M through `inverse`
// (phi_<generator> then Phi_<odd> as polynomials on M).
inline ValidationReport compare_with_mu_pullback(const ActionData& d, const ActionTable& t, const GroupModel& model,
                                                 const std::vector<Poly>& inverse) {
  ValidationReport rep;
  const auto& s = d.shcp;
  const std::size_t k = s.k(), q = s.q(), me = d.m.nev(), mo = d.m.nodd();
  if (model.dictionary.size() != d.m.dim() || inverse.size() != k + q) {
    rep.fail("shape", "model coordinates do not match the generators of M");
    return rep;
  }
  const std::size_t ne = k + me, no = q + mo;
  std::vector<Poly> ev(2 * k), od(2 * q);
  for (std::size_t i = 0; i < k; ++i) {
    ev[i] = Poly::even_var(ne, no, i);
    ev[k + i] = inverse[i].widen(ne, no, k, q);
  }
  for (std::size_t j = 0; j < q; ++j) {
    od[j] = Poly::odd_var(ne, no, j);
    od[q + j] = inverse[k + j].widen(ne, no, k, q);
  }
  for (std::size_t i = 0; i < d.m.dim(); ++i) {
    Poly mu = to_ring(mu_pullback(s, model.dictionary[i])).substitute(ne, no, ev, od);
    Poly rec = to_ring(t.at(i));
    if (mu != rec) {
      Section a = from_ring(rec, action_shape(d)), b = from_ring(mu, action_shape(d));
      rep.fail("reconstruction-vs-pullback", d.m.name(i) + " at " + first_difference(s, a, b));
    }
  }
  return rep;
}

// Parses a formula over (group coordinates, M) in which every odd product
// is read with the group's odd coordinates first, whatever the written
// order: "x*xi*t" means (x t) (x) xi with no sign. The result lives in the
// ring of change_group_coordinates.
inline Poly parse_group_odd_first(std::string_view text, const PolyRing& group, const SuperDomain& m) {
  PolyRing written{group.even, m.odd};
  written.even.insert(written.even.end(), m.even.begin(), m.even.end());
  written.odd.insert(written.odd.end(), group.odd.begin(), group.odd.end());
  Poly p = parse_poly(text, written);
  const int mo = static_cast<int>(m.nodd()), q = static_cast<int>(group.nodd());
  Poly r(p.nev(), p.nodd());
  for (const auto& [mono, c] : p.terms()) {
    Monomial n{mono.exps, {}};
    for (int j : mono.odds) n.odds.push_back(j < mo ? j + q : j - mo);
    std::sort(n.odds.begin(), n.odds.end());
    r += Poly::term(p.nev(), p.nodd(), n, c);
  }
  return r;
}

// Point-level check of a reconstructed table against a concrete action law:
// law[i] gives the image of the i-th generator of M as a polynomial over the
// model coordinates of G and the generators of M (even ones first, then the
// odd ones in the same order). The point of G x M joins a point of G and a
// point of M.
inline ValidationReport action_vs_model(const ActionData& d, const std::vector<Poly>& table_forms,
                                        const GroupModel& model, const std::vector<Poly>& law, const SPoint& g,
                                        const SPoint& m, std::size_t s) {
  ValidationReport rep;
  SPoint gm = join_points({g, m});
  SPoint coords = join_points({model_coordinates(model, g, s), m});
  for (std::size_t i = 0; i < d.m.dim(); ++i) {
    GrassmannNumber lhs = eval_poly_at_point(table_forms.at(i), gm, s);
    GrassmannNumber rhs = eval_poly_at_point(law.at(i), coords, s);
    if (lhs != rhs) rep.fail("action-law", d.m.name(i));
  }
  return rep;
}

inline SPoint random_domain_point(const SuperDomain& m, std::size_t s, std::mt19937_64& rng) {
  SPoint p;
  for (std::size_t i = 0; i < m.nev(); ++i) p.even.push_back(random_even(s, rng, m.invertible[i]));
  for (std::size_t j = 0; j < m.nodd(); ++j) p.odd.push_back(random_odd(s, rng));
  return p;
}

}  // namespace koszul
