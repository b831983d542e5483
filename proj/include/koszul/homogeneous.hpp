#pragma once

#include <map>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "section.hpp"

namespace koszul {

// Closed sub pair (H0, h) of a pair (G0, g). H0 is given by its coordinate
// Hopf algebra and the images q(y_i) of the generators of O(G0) in it, q being
// restriction along the inclusion. The complement spans p with g = h + p.
struct SubPairSpec {
  std::vector<LieVector> h_basis;
  CoordHopf reduced;
  std::vector<Poly> quotient;
  std::vector<LieVector> complement;
  // False when H0 may be disconnected; the conditions below then miss the
  // invariance under the component group, which must come from `points`.
  bool connected = true;
  // Rational points of H0 in G0 coordinates, checked by exact translation.
  std::vector<GroupPoint> points;
};

// Cosets gH (sections of O_{G/H}: right H-invariant, killed by D^L of h) or
// cosets Hg (sections of O_{H\G}: left H-invariant, killed by D^R of h).
enum class CosetSide { Left, Right };

inline const char* side_name(CosetSide side) { return side == CosetSide::Left ? "G/H" : "H\\G"; }

class InvarianceError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline int vector_parity(const SuperLieAlgebra& g, const LieVector& v) {
  int p = -1;
  for (const auto& [i, c] : v) {
    int t = g.parity(i);
    if (p == -1) p = t;
    else if (p != t) return -2;
  }
  return p < 0 ? 0 : p;
}

inline std::vector<Rational> coords(const LieVector& v, std::size_t n, std::size_t off = 0) {
  std::vector<Rational> r(n, Rational(0));
  for (const auto& [i, c] : v) r.at(static_cast<std::size_t>(i) - off) = c;
  return r;
}

// Odd vectors of a list in odd-block coordinates.
inline std::vector<std::vector<Rational>> odd_coords(const SuperLieAlgebra& g, const std::vector<LieVector>& vs) {
  std::vector<std::vector<Rational>> out;
  for (const auto& v : vs)
    if (vector_parity(g, v) == 1) out.push_back(coords(v, g.odd_dim(), g.even_dim()));
  return out;
}

inline std::vector<LieVector> odd_vectors(const SuperLieAlgebra& g, const std::vector<LieVector>& vs) {
  std::vector<LieVector> out;
  for (const auto& v : vs)
    if (vector_parity(g, v) == 1) out.push_back(v);
  return out;
}

// Replaces the block [off, off+k) of G0 variables by the images q(y_i) in the
// kh variables of H0, placed at [off, off+kh).
inline Poly push_block(const Poly& f, std::size_t off, std::size_t k, const std::vector<Poly>& q, std::size_t kh) {
  const std::size_t n = f.nev(), nn = n - k + kh;
  std::vector<Poly> ev(n), od(f.nodd());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < off) ev[i] = Poly::even_var(nn, f.nodd(), i);
    else if (i < off + k) ev[i] = q[i - off].widen(nn, f.nodd(), off);
    else ev[i] = Poly::even_var(nn, f.nodd(), i - k + kh);
  }
  for (std::size_t j = 0; j < f.nodd(); ++j) od[j] = Poly::odd_var(nn, f.nodd(), j);
  return f.substitute(nn, f.nodd(), ev, od);
}

// Moves the variables of f into a ring with a block of `width` fresh even
// variables inserted at `at`.
inline Poly insert_block(const Poly& f, std::size_t at, std::size_t width) {
  std::vector<std::size_t> ev(f.nev()), od(f.nodd());
  for (std::size_t i = 0; i < f.nev(); ++i) ev[i] = i < at ? i : i + width;
  for (std::size_t j = 0; j < f.nodd(); ++j) od[j] = j;
  return f.remap(f.nev() + width, f.nodd(), ev, od);
}

// "[i,j]" for a wedge of odd h vectors, by position in the h basis.
inline std::string index_list(const Wedge& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.idx.size(); ++i) out += (i ? "," : "") + std::to_string(w.idx[i] + 1);
  return out + "]";
}

// Variable names for residual values: the group generators, then u1, u2, ...
inline std::string format_residual(const SHCP& s, const Poly& f) {
  std::vector<std::string> ev, od;
  for (std::size_t i = 0; i < f.nev(); ++i) ev.push_back(i < s.k() ? s.group().names()[i] : "u" + std::to_string(i - s.k() + 1));
  for (std::size_t j = 0; j < f.nodd(); ++j) od.push_back("w" + std::to_string(j + 1));
  return f.to_string(ev, od);
}

inline Poly wedge_value(const Section& phi, const WedgeElement<Rational>& w, std::vector<Wedge> others,
                        std::size_t factor) {
  Poly acc = phi.zero();
  for (const auto& [wedge, c] : w) {
    others[factor] = wedge;
    acc += phi.at(phi.join(others)) * c;
  }
  return acc;
}

}  // namespace detail

// Closure and homogeneity of h, Hopf compatibility of q on generators,
// sigma(H0)-stability of h and, when given, complementarity of p.
inline ValidationReport validate_subpair(const SHCP& s, const SubPairSpec& h) {
  ValidationReport rep;
  const auto& g = s.algebra();
  const std::size_t n = g.dim(), k = s.k(), kh = h.reduced.k();
  for (const auto& v : h.h_basis)
    if (detail::vector_parity(g, v) < 0) rep.fail("h-homogeneous", g.format(v));
  if (!rep.ok()) return rep;
  std::vector<LieVector> basis = h.h_basis;
  if (rank([&] {
        Matrix a;
        for (const auto& v : basis) a.push_back(detail::coords(v, n));
        return a;
      }(), n) != basis.size())
    rep.fail("h-independent", "basis vectors of h are linearly dependent");
  auto in_h = [&](const LieVector& v) {
    Matrix a;
    for (const auto& b : basis) a.push_back(detail::coords(b, n));
    std::size_t r = rank(a, n);
    a.push_back(detail::coords(v, n));
    return rank(a, n) == r;
  };
  for (const auto& a : basis)
    for (const auto& b : basis) {
      LieVector br = g.bracket(a, b);
      if (!in_h(br)) rep.fail("h-closed", "[" + g.format(a) + ", " + g.format(b) + "] = " + g.format(br));
    }
  if (h.quotient.size() != k) {
    rep.fail("quotient-arity", "one image per generator of the reduced group is required");
    return rep;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Poly& qi = h.quotient[i];
    const std::string name = s.group().names()[i];
    if (qi.nev() != kh || qi.nodd() != 0) {
      rep.fail("quotient-arity", "image of " + name);
      continue;
    }
    Poly lhs = h.reduced.coproduct(qi);
    std::vector<Poly> both(2 * k);
    for (std::size_t j = 0; j < k; ++j) {
      both[j] = h.quotient[j].widen(2 * kh, 0, 0);
      both[k + j] = h.quotient[j].widen(2 * kh, 0, kh);
    }
    Poly rhs = s.group().coproduct_image(i).substitute(2 * kh, 0, both, {});
    if (lhs != rhs) rep.fail("quotient-coproduct", name);
    if (h.reduced.counit(qi) != s.group().counit_value(i)) rep.fail("quotient-counit", name);
    if (h.reduced.antipode(qi) != s.group().antipode_image(i).substitute(kh, 0, h.quotient, {}))
      rep.fail("quotient-antipode", name);
  }
  // sigma(h) maps h into itself for h in H0: every coefficient vector lies in h.
  for (const auto& v : basis) {
    std::map<Monomial, LieVector> parts;
    for (const auto& [j, c] : v)
      for (std::size_t a = 0; a < n; ++a) {
        const Poly& e = s.sigma(a, static_cast<std::size_t>(j));
        if (e.is_zero()) continue;
        Poly img = e.substitute(kh, 0, h.quotient, {});
        for (const auto& [m, cm] : img.terms())
          parts[m].add(static_cast<int>(a), cm * c);
      }
    for (const auto& [m, w] : parts)
      if (!in_h(w)) {
        rep.fail("h-sigma-stable", "sigma(h) " + g.format(v) + " leaves h");
        break;
      }
  }
  if (!h.complement.empty()) {
    Matrix a;
    for (const auto& v : h.complement) {
      if (detail::vector_parity(g, v) < 0) rep.fail("complement-homogeneous", g.format(v));
      a.push_back(detail::coords(v, n));
    }
    for (const auto& v : basis) a.push_back(detail::coords(v, n));
    if (a.size() != n || rank(a, n) != n) rep.fail("complement-rank", "h and p do not span g as a direct sum");
  }
  return rep;
}

// One linear condition on a section; the section satisfies it iff value = 0.
struct Residual {
  std::string route;  // "D" for vector fields and translations, "lemma" for the tensor identity
  std::string label;
  Poly value;
};

// All invariance conditions for phi, in a fixed order that depends only on
// the shape of phi. Route "D": D^L_X phi = 0 (D^R for Hg cosets) for the
// basis of h, r_h^* phi = phi (l_h^*) at a symbolic point of H0, and exact
// translations by the supplied points. Route "lemma": mu^*(phi) restricted
// to G x H equals pr_1^*(phi) (to H x G equals pr_2^*(phi)).
inline std::vector<Residual> invariance_residuals(const SHCP& s, const Section& phi, const SubPairSpec& h,
                                                  CosetSide side) {
  if (phi.factors() != 1) throw Error("invariance is defined for one-factor sections");
  const auto& g = s.algebra();
  const std::size_t k = s.k(), kh = h.reduced.k();
  const bool left = side == CosetSide::Left;
  const auto W = all_wedges(s.q());
  std::vector<Residual> out;
  const std::string field = left ? "D^L_" : "D^R_";
  for (const auto& x : h.h_basis) {
    auto u = uea_from_lie(g, x, Rational(1));
    Section d = left ? left_vector_field(s, u, phi) : right_vector_field(s, u, phi);
    for (const auto& p : W) out.push_back({"D", field + g.format(x) + " at " + format_wedge(g, p), d.at(p)});
  }
  Section t = left ? right_translate_generic(s, phi) : left_translate_generic(s, phi);
  const std::string tname = left ? "r_h^*" : "l_h^*";
  for (const auto& p : W) {
    Poly moved = detail::push_block(t.at(p), k, k, h.quotient, kh);
    Poly fixed = detail::insert_block(phi.at(p), k, kh);
    out.push_back({"D", tname + " at " + format_wedge(g, p), moved - fixed});
  }
  for (const auto& pt : h.points) {
    Section tp = left ? right_translate(s, phi, pt) : left_translate(s, phi, pt);
    for (const auto& p : W) out.push_back({"D", tname + " at a supplied point, " + format_wedge(g, p), tp.at(p) - phi.at(p)});
  }
  Section m = mu_pullback(s, phi);
  const auto hodd = detail::odd_coords(g, h.h_basis);
  for (const auto& qw : all_wedges(hodd.size())) {
    std::vector<std::vector<Rational>> vs;
    for (int i : qw.idx) vs.push_back(hodd[static_cast<std::size_t>(i)]);
    auto iq = wedge_of_vectors(vs);
    for (const auto& p : W) {
      Poly v = left ? detail::wedge_value(m, iq, {p, Wedge{}}, 1) : detail::wedge_value(m, iq, {Wedge{}, p}, 0);
      Poly pushed = detail::push_block(v, left ? k : 0, k, h.quotient, kh);
      Poly expect = qw.empty() ? detail::insert_block(phi.at(p), left ? k : 0, kh) : Poly(pushed.nev(), pushed.nodd());
      std::string hq = "h" + detail::index_list(qw);
      std::string cell = left ? "(" + format_wedge(g, p) + ", " + hq + ")" : "(" + hq + ", " + format_wedge(g, p) + ")";
      out.push_back({"lemma", "mu^* vs pr^* at " + cell, pushed - expect});
    }
  }
  return out;
}

struct InvarianceVerdict {
  bool d_route = true;
  bool lemma_route = true;
  ValidationReport witnesses;
  std::vector<std::string> notes;
  bool invariant() const { return d_route && lemma_route; }
};

inline InvarianceVerdict is_invariant_section(const SHCP& s, const Section& phi, const SubPairSpec& h,
                                              CosetSide side) {
  InvarianceVerdict v;
  for (const auto& r : invariance_residuals(s, phi, h, side)) {
    if (r.value.is_zero()) continue;
    (r.route == "D" ? v.d_route : v.lemma_route) = false;
    v.witnesses.fail(r.route, r.label + " = " + detail::format_residual(s, r.value));
  }
  if (!h.connected)
    v.notes.push_back("H0 marked disconnected: invariance under the component group is checked only at the " +
                      std::to_string(h.points.size()) + " supplied points");
  return v;
}

// Basis of the invariant sections whose entries lie in the span of `ansatz`
// (functions on G0), from the exact nullspace of all invariance conditions.
inline std::vector<Section> invariant_section_solve(const SHCP& s, const SubPairSpec& h,
                                                    const std::vector<Poly>& ansatz, CosetSide side) {
  std::vector<Section> unknowns;
  for (const auto& w : all_wedges(s.q()))
    for (const auto& f : ansatz) {
      s.group().check_element(f);
      if (f.is_zero()) continue;
      Section b(section_shape(s));
      b.add(w, f);
      unknowns.push_back(b);
    }
  std::map<std::pair<std::size_t, Monomial>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(unknowns.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    auto res = invariance_residuals(s, unknowns[j], h, side);
    for (std::size_t r = 0; r < res.size(); ++r)
      for (const auto& [m, c] : res[r].value.terms()) {
        auto it = rows.emplace(std::make_pair(r, m), rows.size()).first;
        cols[j].emplace_back(it->second, c);
      }
  }
  Matrix a(rows.size(), std::vector<Rational>(unknowns.size(), Rational(0)));
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    for (const auto& [r, c] : cols[j]) a[r][j] += c;
  std::vector<Section> out;
  for (const auto& v : nullspace(a, unknowns.size())) {
    Section phi(section_shape(s));
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(v[j])) phi += unknowns[j] * v[j];
    out.push_back(phi);
  }
  return out;
}

// Laurent monomials in the generators with sum of |exponents| <= degree;
// negative exponents only for invertible generators.
inline std::vector<Poly> laurent_ansatz(const CoordHopf& group, int degree) {
  std::vector<Poly> out;
  std::vector<int> e(group.k(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == group.k()) {
      Poly m = group.one();
      for (std::size_t a = 0; a < e.size(); ++a) m = m * Poly::even_var(group.k(), 0, a, e[a]);
      out.push_back(m);
      return;
    }
    for (int x = group.invertible(i) ? -left : 0; x <= left; ++x) {
      e[i] = x;
      self(self, i + 1, left - std::abs(x));
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// Table of an invariant section of O_{G/H} on Lambda(p_1): P -> phi(gamma(P))
// over the identity coset with the identity section. Values stay functions on
// G0; invariance determines them on every coset. Wedges index the odd
// complement vectors in the given order.
inline Section coset_trivialize(const SHCP& s, const Section& phi, const SubPairSpec& h) {
  if (h.complement.empty()) throw Error("trivialization needs a complement of h");
  auto verdict = is_invariant_section(s, phi, h, CosetSide::Left);
  if (!verdict.invariant()) {
    const auto& v = verdict.witnesses.violations.front();
    throw InvarianceError("section is not invariant: " + v.check + ": " + v.witness);
  }
  const auto p1 = detail::odd_coords(s.algebra(), h.complement);
  SectionShape shape = phi.shape();
  shape.q = p1.size();
  Section out(shape);
  for (const auto& w : all_wedges(p1.size())) {
    std::vector<std::vector<Rational>> vs;
    for (int i : w.idx) vs.push_back(p1[static_cast<std::size_t>(i)]);
    out.add(w, detail::wedge_value(phi, wedge_of_vectors(vs), {Wedge{}}, 0));
  }
  return out;
}

// Inverse of coset_trivialize: rebuilds phi degree by degree in the adapted
// odd basis (p_1 then h_1). For a wedge A ending in H from h_1,
// phi(gamma(A)) = phi(gamma(A) - gamma(A') H) because phi(gamma(A') H) =
// +-D^L_H phi(gamma(A')) = 0, and the difference has lower degree.
inline Section coset_untrivialize(const SHCP& s, const Section& table, const SubPairSpec& h) {
  if (h.complement.empty()) throw Error("trivialization needs a complement of h");
  const auto& g = s.algebra();
  const std::size_t q = s.q();
  auto basis = detail::odd_coords(g, h.complement);
  const std::size_t np = basis.size();
  if (table.shape().q != np) throw Error("table is not indexed by the odd complement");
  auto hodd = detail::odd_vectors(g, h.h_basis);
  for (const auto& v : detail::odd_coords(g, h.h_basis)) basis.push_back(v);
  if (basis.size() != q) throw Error("odd parts of h and p do not span g_1");
  SectionShape shape = table.shape();
  shape.q = q;
  Section phi(shape);
  auto sub = [&](const std::vector<int>& idx) {
    std::vector<std::vector<Rational>> vs;
    for (int i : idx) vs.push_back(basis[static_cast<std::size_t>(i)]);
    return wedge_of_vectors(vs);
  };
  auto lift = [&](const UEAElement<Rational>& u) { return detail::lift(u, shape.nev(), shape.nodd()); };
  for (std::size_t n = 0; n <= q; ++n) {
    std::vector<Wedge> level;
    for (const auto& w : all_wedges(q))
      if (w.idx.size() == n) level.push_back(w);
    std::vector<Poly> values;
    Matrix m;
    for (const auto& a : level) {
      auto wa = sub(a.idx);
      std::vector<Rational> row;
      for (const auto& w : level) row.push_back(wa.coefficient(w, Rational(0)));
      m.push_back(row);
      if (a.empty() || static_cast<std::size_t>(a.idx.back()) < np) {
        values.push_back(table.at(a));
        continue;
      }
      std::vector<int> rest(a.idx.begin(), a.idx.end() - 1);
      const auto& hl = hodd[static_cast<std::size_t>(a.idx.back()) - np];
      auto u = gamma(g, wa) - uea_mul(g, gamma(g, sub(rest)), uea_from_lie(g, hl, Rational(1)));
      values.push_back(evaluate_on_uea(s, phi, lift(u)));
    }
    // values = M * (phi on the standard wedges of this degree).
    Matrix inv = inverse(m);
    for (std::size_t w = 0; w < level.size(); ++w) {
      Poly acc = phi.zero();
      for (std::size_t a = 0; a < level.size(); ++a)
        if (!is_zero(inv[w][a])) acc += values[a] * inv[w][a];
      phi.add(level[w], acc);
    }
  }
  return phi;
}

// mu^* maps invariant sections of the coset space into O(G) tensor invariant
// sections: every layer of mu^*(phi) along the free slot (first slot for
// G/H, second for H\G) must be invariant, the other slot riding along as
// passive variables.
inline ValidationReport quotient_action_check(const SHCP& s, const Section& phi, const SubPairSpec& h,
                                              CosetSide side) {
  ValidationReport rep;
  const auto& g = s.algebra();
  const std::size_t k = s.k();
  const bool left = side == CosetSide::Left;
  Section m = mu_pullback(s, phi);
  SectionShape shape = phi.shape();
  shape.extra_even += k;
  std::vector<std::size_t> ev(m.shape().nev()), od(m.shape().nodd());
  for (std::size_t i = 0; i < ev.size(); ++i) ev[i] = i;
  if (left)
    for (std::size_t i = 0; i < k; ++i) {
      ev[i] = k + i;
      ev[k + i] = i;
    }
  for (std::size_t j = 0; j < od.size(); ++j) od[j] = j;
  std::map<Wedge, Section> layers;
  for (const auto& [w, f] : m.table()) {
    auto parts = m.split(w);
    const Wedge& fixed = parts[left ? 0 : 1];
    const Wedge& free = parts[left ? 1 : 0];
    auto it = layers.try_emplace(fixed, shape).first;
    int sg = (parts[0].degree() * parts[1].degree()) % 2 ? -1 : 1;
    it->second.add(free, f.remap(shape.nev(), shape.nodd(), ev, od) * Rational(sg));
  }
  for (const auto& [fixed, layer] : layers) {
    auto v = is_invariant_section(s, layer, h, side);
    for (const auto& x : v.witnesses.violations)
      rep.fail("layer " + format_wedge(g, fixed), x.check + ": " + x.witness);
  }
  return rep;
}

}  // namespace koszul
