#pragma once

#include <map>
#include <string>
#include <vector>

#include "expr.hpp"
#include "shcp.hpp"

namespace koszul {

// Layout of a section of O(G^r) in the table gauge. Wedges of the r factors
// are flattened into one wedge over r*q odd positions (factor i owns
// [i*q, (i+1)*q)); values are functions of the r reduced group variables
// (factor i owns even block [i*k, (i+1)*k)) followed by passive extra
// variables that the group operations never touch.
struct SectionShape {
  std::size_t factors = 1;
  std::size_t k = 0;
  std::size_t q = 0;
  std::size_t extra_even = 0;
  std::size_t extra_odd = 0;

  std::size_t nev() const { return factors * k + extra_even; }
  std::size_t nodd() const { return extra_odd; }
  bool operator==(const SectionShape&) const = default;
};

class Section {
 public:
  using map_type = std::map<Wedge, Poly>;

  Section() = default;
  explicit Section(SectionShape s) : shape_(s) {}

  const SectionShape& shape() const { return shape_; }
  std::size_t factors() const { return shape_.factors; }
  Poly zero() const { return Poly(shape_.nev(), shape_.nodd()); }
  Poly one() const { return Poly::constant(shape_.nev(), shape_.nodd(), 1); }

  Poly at(const Wedge& w) const {
    auto it = table_.find(w);
    return it == table_.end() ? zero() : it->second;
  }
  void add(const Wedge& w, const Poly& p) {
    if (p.is_zero()) return;
    if (p.nev() != shape_.nev() || p.nodd() != shape_.nodd()) throw Error("section entry has wrong arity");
    auto [it, fresh] = table_.emplace(w, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) table_.erase(it);
    }
  }
  const map_type& table() const { return table_; }

  // Total parity of wedge plus value; -1 when mixed. Zero is even.
  int parity() const {
    int p = -2;
    for (const auto& [w, f] : table_) {
      int vp = f.parity();
      if (vp < 0) return -1;
      int t = (w.parity() + vp) % 2;
      if (p == -2) p = t;
      else if (p != t) return -1;
    }
    return p == -2 ? 0 : p;
  }
  Section parity_part(int parity) const {
    Section r(shape_);
    for (const auto& [w, f] : table_)
      for (int vp : {0, 1})
        if ((w.parity() + vp) % 2 == parity) r.add(w, f.parity_part(vp));
    return r;
  }

  Section& operator+=(const Section& o) {
    check(o);
    for (const auto& [w, f] : o.table_) add(w, f);
    return *this;
  }
  Section& operator-=(const Section& o) {
    check(o);
    for (const auto& [w, f] : o.table_) add(w, -f);
    return *this;
  }
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(const Section& a, const Rational& s) {
    Section r(a.shape_);
    for (const auto& [w, f] : a.table_) r.add(w, f * s);
    return r;
  }
  friend bool operator==(const Section& a, const Section& b) {
    return a.shape_ == b.shape_ && a.table_ == b.table_;
  }

  // Per-factor wedges with relative indices.
  std::vector<Wedge> split(const Wedge& w) const {
    std::vector<Wedge> parts(shape_.factors);
    for (int i : w.idx) {
      std::size_t f = static_cast<std::size_t>(i) / shape_.q;
      parts.at(f).idx.push_back(i - static_cast<int>(f * shape_.q));
    }
    return parts;
  }
  static Wedge join(const std::vector<Wedge>& parts, std::size_t q) {
    Wedge w;
    for (std::size_t f = 0; f < parts.size(); ++f)
      for (int i : parts[f].idx) w.idx.push_back(i + static_cast<int>(f * q));
    return w;
  }
  Wedge join(const std::vector<Wedge>& parts) const { return join(parts, shape_.q); }

 private:
  void check(const Section& o) const {
    if (!(o.shape_ == shape_)) throw Error("section shape mismatch");
  }

  SectionShape shape_;
  map_type table_;
};

// Section of O(G x G): factor 0 is the first slot.
using TwoVarSection = Section;

inline SectionShape section_shape(const SHCP& s, std::size_t factors = 1) {
  return SectionShape{factors, s.k(), s.q(), 0, 0};
}

// phi_f: value f on the empty wedge.
inline Section function_section(const SHCP& s, const Poly& f) {
  s.group().check_element(f);
  Section r(section_shape(s));
  r.add(Wedge{}, f);
  return r;
}
inline Section delta_section(const SHCP& s, std::size_t generator) { return function_section(s, s.group().gen(generator)); }
inline Section unit_section(const SHCP& s) { return function_section(s, s.group().one()); }
// Phi_j: delta function of the odd basis element T_j.
inline Section odd_delta_section(const SHCP& s, std::size_t j) {
  Section r(section_shape(s));
  r.add(Wedge{{static_cast<int>(j)}}, s.group().one());
  return r;
}
inline Section wedge_delta(const SectionShape& shape, const Wedge& w) {
  Section r(shape);
  r.add(w, r.one());
  return r;
}

// Product dual to Delta_Lambda with the Koszul sign of the pairing:
// (a b)(R) = sum over ordered splits R = A u B of sign(A,B) (-1)^{|A||B|} a(A) b(B).
inline Section section_mul(const Section& a, const Section& b) {
  if (!(a.shape() == b.shape())) throw Error("section shape mismatch");
  if (a.shape().extra_odd) throw Error("section product with odd coefficients is not supported");
  Section r(a.shape());
  Wedge joined;
  for (const auto& [wa, fa] : a.table())
    for (const auto& [wb, fb] : b.table()) {
      int s = wedge_concat_sign(wa, wb, joined);
      if (s == 0) continue;
      if (wa.parity() && wb.parity()) s = -s;
      r.add(joined, fa * fb * Rational(s));
    }
  return r;
}

// Entries on nonempty wedges are nilpotent, so an invertible value on the
// empty wedge makes the section invertible via a finite geometric series.
inline Section section_inverse(const Section& a) {
  Section binv(a.shape());
  binv.add(Wedge{}, a.at(Wedge{}).inverse());
  Section n = a;
  n.add(Wedge{}, -a.at(Wedge{}));
  Section x = section_mul(binv, n) * Rational(-1);
  Section sum = wedge_delta(a.shape(), Wedge{}), pw = sum;
  for (std::size_t j = 0; j < a.factors() * a.shape().q; ++j) {
    pw = section_mul(pw, x);
    if (pw.table().empty()) break;
    sum += pw;
  }
  return section_mul(binv, sum);
}

inline Section section_pow(const Section& a, int e) {
  if (e < 0) return section_pow(section_inverse(a), -e);
  Section r = wedge_delta(a.shape(), Wedge{});
  for (int i = 0; i < e; ++i) r = section_mul(r, a);
  return r;
}

// s_R with Phi_{r1} ... Phi_{rn} = s_R delta_R in the flattened exterior
// algebra of `shape`, computed through the section product.
inline Rational delta_sign(const SectionShape& shape, const Wedge& w) {
  SectionShape bare{shape.factors, shape.k, shape.q, 0, 0};
  Section t = wedge_delta(bare, Wedge{});
  for (int i : w.idx) t = section_mul(t, wedge_delta(bare, Wedge{{i}}));
  Poly c = t.at(w);
  if (!c.is_constant() || c.is_zero()) throw Error("delta sign is not a unit");
  return c.constant_term();
}

// Ring form: sum over R of s_R^{-1} Phi^R f_R as a polynomial whose odd
// variables are the factors*q wedge positions followed by the extra odd ones.
inline Poly to_ring(const Section& phi) {
  const auto& sh = phi.shape();
  const std::size_t nw = sh.factors * sh.q, nodd = nw + sh.extra_odd;
  Poly out(sh.nev(), nodd);
  for (const auto& [w, f] : phi.table()) {
    Poly mono = Poly::term(sh.nev(), nodd, Monomial{std::vector<int>(sh.nev(), 0), w.idx}, 1 / delta_sign(sh, w));
    out += mono * f.widen(sh.nev(), nodd, 0, nw);
  }
  return out;
}

inline Section from_ring(const Poly& p, const SectionShape& sh) {
  const std::size_t nw = sh.factors * sh.q;
  if (p.nev() != sh.nev() || (p.nodd() != nw + sh.extra_odd && !p.is_zero())) throw Error("ring form has wrong arity");
  Section out(sh);
  for (const auto& [m, c] : p.terms()) {
    Wedge w;
    Monomial rest{m.exps, {}};
    for (int j : m.odds) {
      if (j < static_cast<int>(nw)) w.idx.push_back(j);
      else rest.odds.push_back(j - static_cast<int>(nw));
    }
    out.add(w, Poly::term(sh.nev(), sh.nodd(), rest, c * delta_sign(sh, w)));
  }
  return out;
}

// Formulas over phi_<generator> and Phi_<odd basis element>.
inline ExprOps<Section> section_ops(const SHCP& s) {
  ExprOps<Section> ops;
  ops.constant = [&s](const Rational& c) { return unit_section(s) * c; };
  ops.variable = [&s](const std::string& name) -> std::optional<Section> {
    for (std::size_t i = 0; i < s.k(); ++i)
      if (name == "phi_" + s.group().names()[i]) return delta_section(s, i);
    for (std::size_t j = 0; j < s.q(); ++j)
      if (name == "Phi_" + s.algebra().name(static_cast<int>(s.algebra().even_dim() + j))) return odd_delta_section(s, j);
    return std::nullopt;
  };
  ops.add = [](const Section& a, const Section& b) { return a + b; };
  ops.mul = [](const Section& a, const Section& b) { return section_mul(a, b); };
  ops.neg = [](const Section& a) { return a * Rational(-1); };
  ops.power = [](const Section& a, int e) { return section_pow(a, e); };
  ops.divide = [](const Section& a, const Section& b) { return section_mul(a, section_inverse(b)); };
  return ops;
}

inline Section parse_section(std::string_view text, const SHCP& s) {
  auto ops = section_ops(s);
  try {
    return parse_expression(text, ops);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1);
  }
}

namespace detail {

inline UEAElement<Poly> lift(const UEAElement<Rational>& u, std::size_t nev, std::size_t nodd) {
  UEAElement<Poly> r;
  for (const auto& [m, c] : u) r.add(m, Poly::constant(nev, nodd, c));
  return r;
}

// sum over (Z, R) of c * D_Z phi(R), factor f of a multi-factor table, for the
// slice where the other factors carry `others`.
inline Poly contract(const SHCP& s, const Section& phi, std::size_t factor, std::vector<Wedge> others,
                     const ZWedgeElement<Poly>& d) {
  Poly acc = phi.zero();
  for (const auto& [key, c] : d) {
    others[factor] = key.wedge;
    Poly v = phi.at(phi.join(others));
    if (v.is_zero()) continue;
    acc += c * s.apply_z(key.z, v, factor * s.k());
  }
  return acc;
}

// Distinct other-factor slices present in phi.
inline std::map<std::vector<Wedge>, bool> slices(const Section& phi, std::size_t factor) {
  std::map<std::vector<Wedge>, bool> out;
  for (const auto& [w, f] : phi.table()) {
    auto parts = phi.split(w);
    parts[factor] = Wedge{};
    out.emplace(std::move(parts), true);
  }
  return out;
}

}  // namespace detail

// phi(u) = sum c D_Z phi(R) over gamma_hat_inverse(u) = sum c Z gamma(R).
// Coefficients of u live in the ring of phi's values.
inline Poly evaluate_on_uea(const SHCP& s, const Section& phi, const UEAElement<Poly>& u) {
  if (phi.factors() != 1) throw Error("evaluate_on_uea needs a one-factor section");
  auto d = gamma_hat_inverse(s.algebra(), u);
  return detail::contract(s, phi, 0, {Wedge{}}, d);
}
inline Poly evaluate_on_uea(const SHCP& s, const Section& phi, const UEAElement<Rational>& u) {
  return evaluate_on_uea(s, phi, detail::lift(u, phi.shape().nev(), phi.shape().nodd()));
}

// mu^* on factor `factor`: mu^*(phi)(X, Y) = sum c(h) Delta(D_Z phi(R)) where
// (h^{-1}.gamma(X)) gamma(Y) = sum c(h) Z gamma(R). The new factor is inserted
// right after `factor`.
inline Section mu_pullback(const SHCP& s, const Section& phi, std::size_t factor = 0) {
  const auto& g = s.algebra();
  const std::size_t k = s.k(), q = s.q();
  SectionShape out_shape = phi.shape();
  out_shape.factors += 1;
  Section out(out_shape);
  auto W = all_wedges(q);
  auto sl = detail::slices(phi, factor);
  for (const auto& x : W) {
    auto hx = s.sigma_apply(gamma(g, x), true);
    for (const auto& y : W) {
      auto prod = uea_mul(g, hx, detail::lift(gamma(g, y), k, 0));
      auto d = gamma_hat_inverse(g, prod);
      if (d.empty()) continue;
      for (const auto& [others, unused] : sl) {
        (void)unused;
        Poly acc(out_shape.nev(), out_shape.nodd());
        for (const auto& [key, c] : d) {
          auto o = others;
          o[factor] = key.wedge;
          Poly v = phi.at(phi.join(o));
          if (v.is_zero()) continue;
          Poly dz = s.group().coproduct_block(s.apply_z(key.z, v, factor * k), factor * k);
          acc += c.widen(out_shape.nev(), out_shape.nodd(), (factor + 1) * k) * dz;
        }
        if (acc.is_zero()) continue;
        std::vector<Wedge> parts = others;
        parts[factor] = x;
        parts.insert(parts.begin() + static_cast<long>(factor) + 1, y);
        out.add(Section::join(parts, q), acc);
      }
    }
  }
  return out;
}

// i^*(phi)(P)(k) = phi(k.S(gamma(P)))(k^{-1}) = sum c(k) S(D_Z phi(R))(k) where
// sigma(k) S(gamma(P)) = sum c(k) Z gamma(R).
inline Section inv_pullback(const SHCP& s, const Section& phi, std::size_t factor = 0) {
  const auto& g = s.algebra();
  const std::size_t k = s.k();
  Section out(phi.shape());
  auto sl = detail::slices(phi, factor);
  for (const auto& p : all_wedges(s.q())) {
    auto d = gamma_hat_inverse(g, s.sigma_apply(uea_antipode(g, gamma(g, p)), false));
    for (const auto& [others, unused] : sl) {
      (void)unused;
      Poly acc = phi.zero();
      for (const auto& [key, c] : d) {
        auto o = others;
        o[factor] = key.wedge;
        Poly v = phi.at(phi.join(o));
        if (v.is_zero()) continue;
        Poly dz = s.group().antipode_block(s.apply_z(key.z, v, factor * k), factor * k);
        acc += c.widen(phi.shape().nev(), phi.shape().nodd(), factor * k) * dz;
      }
      auto parts = others;
      parts[factor] = p;
      out.add(phi.join(parts), acc);
    }
  }
  return out;
}

// e^* on factor `factor`: keeps entries whose factor wedge is empty and
// evaluates that factor at the identity. The factor is removed.
inline Section counit_on_factor(const SHCP& s, const Section& phi, std::size_t factor = 0) {
  SectionShape shape = phi.shape();
  shape.factors -= 1;
  Section out(shape);
  for (const auto& [w, f] : phi.table()) {
    auto parts = phi.split(w);
    if (!parts[factor].empty()) continue;
    parts.erase(parts.begin() + static_cast<long>(factor));
    out.add(Section::join(parts, shape.q), s.group().evaluate_block(f, factor * s.k(), s.group().identity()));
  }
  return out;
}

inline Rational counit_pullback(const SHCP& s, const Section& phi) {
  if (phi.factors() != 1 || phi.shape().extra_even || phi.shape().extra_odd)
    throw Error("counit_pullback needs a plain one-factor section");
  return s.group().counit(phi.at(Wedge{}));
}

// Pullback along the diagonal merging factors i and i+1:
// m(psi)(R) = sum over Delta_Lambda(R) = sum s A (x) B of s psi(A, B).
inline Section diagonal_pullback(const SHCP& s, const Section& psi, std::size_t factor = 0) {
  const std::size_t k = s.k(), q = s.q();
  SectionShape shape = psi.shape();
  shape.factors -= 1;
  Section out(shape);
  // Identify block factor+1 with block factor.
  const std::size_t n = psi.shape().nev();
  std::vector<Poly> ev(n), od(psi.shape().nodd());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t t = i;
    if (i >= (factor + 1) * k && i < (factor + 2) * k) t = i - k;
    else if (i >= (factor + 2) * k) t = i - k;
    ev[i] = Poly::even_var(shape.nev(), shape.nodd(), t);
  }
  for (std::size_t j = 0; j < od.size(); ++j) od[j] = Poly::odd_var(shape.nev(), shape.nodd(), j);
  for (const auto& [w, f] : psi.table()) {
    auto parts = psi.split(w);
    Wedge joined;
    int sg = wedge_concat_sign(parts[factor], parts[factor + 1], joined);
    if (sg == 0) continue;
    parts[factor] = joined;
    parts.erase(parts.begin() + static_cast<long>(factor) + 1);
    out.add(Section::join(parts, q), f.substitute(shape.nev(), shape.nodd(), ev, od) * Rational(sg));
  }
  return out;
}

// (l_h^* phi)(X) = l_h^*(phi(X)) with (l_h^* f)(g) = f(hg).
inline Section left_translate(const SHCP& s, const Section& phi, const GroupPoint& h) {
  if (phi.factors() != 1) throw Error("translation needs a one-factor section");
  Section out(phi.shape());
  for (const auto& [w, f] : phi.table())
    out.add(w, s.group().evaluate_block(s.group().coproduct_block(f, 0), 0, h));
  return out;
}

// (r_h^* phi)(X) = r_h^*(phi(h^{-1}.X)) with (r_h^* f)(g) = f(gh).
inline Section right_translate(const SHCP& s, const Section& phi, const GroupPoint& h) {
  if (phi.factors() != 1) throw Error("translation needs a one-factor section");
  const auto& g = s.algebra();
  Section out(phi.shape());
  for (const auto& p : all_wedges(s.q())) {
    UEAElement<Poly> u;
    for (const auto& [mono, c] : s.sigma_apply(gamma(g, p), true))
      u.add(mono, Poly::constant(phi.shape().nev(), phi.shape().nodd(), c.evaluate(h.values)));
    Poly v = evaluate_on_uea(s, phi, u);
    if (v.is_zero()) continue;
    out.add(p, s.group().evaluate_block(s.group().coproduct_block(v, 0), s.k(), h));
  }
  return out;
}

// Right translation by a symbolic point: values are functions of (g, h), with
// the h block inserted in front of any existing extra variables.
inline Section right_translate_generic(const SHCP& s, const Section& phi) {
  if (phi.factors() != 1) throw Error("generic translation needs a one-factor section");
  const auto& g = s.algebra();
  const std::size_t k = s.k();
  SectionShape shape = phi.shape();
  shape.extra_even += k;
  Section out(shape);
  for (const auto& p : all_wedges(s.q())) {
    auto d = gamma_hat_inverse(g, s.sigma_apply(gamma(g, p), true));
    Poly acc = out.zero();
    for (const auto& [key, c] : d) {
      Poly v = phi.at(key.wedge);
      if (v.is_zero()) continue;
      acc += c.widen(shape.nev(), shape.nodd(), k) * s.group().coproduct_block(s.apply_z(key.z, v, 0), 0);
    }
    out.add(p, acc);
  }
  return out;
}

// Left translation by a symbolic point: values f(hg) as functions of (g, h).
inline Section left_translate_generic(const SHCP& s, const Section& phi) {
  if (phi.factors() != 1) throw Error("generic translation needs a one-factor section");
  const std::size_t k = s.k();
  SectionShape shape = phi.shape();
  shape.extra_even += k;
  Section out(shape);
  std::vector<std::size_t> swap(shape.nev()), odd(shape.nodd());
  for (std::size_t i = 0; i < shape.nev(); ++i) swap[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    swap[i] = k + i;
    swap[k + i] = i;
  }
  for (std::size_t j = 0; j < odd.size(); ++j) odd[j] = j;
  for (const auto& [w, f] : phi.table())
    out.add(w, s.group().coproduct_block(f, 0).remap(shape.nev(), shape.nodd(), swap, odd));
  return out;
}

inline int uea_parity(const UEAElement<Rational>& x) {
  int p = -2;
  for (const auto& [m, c] : x) {
    int t = monomial_parity(m);
    if (p == -2) p = t;
    else if (p != t) return -1;
  }
  return p == -2 ? 0 : p;
}

// (D^L_X phi)(Y) = (-1)^{|X|} phi(Y X) for homogeneous X.
inline Section left_vector_field(const SHCP& s, const UEAElement<Rational>& x, const Section& phi) {
  if (phi.factors() != 1) throw Error("vector fields act on one-factor sections");
  int px = uea_parity(x);
  if (px < 0) throw Error("vector field of an inhomogeneous element");
  const auto& g = s.algebra();
  Section out(phi.shape());
  auto xl = detail::lift(x, phi.shape().nev(), phi.shape().nodd());
  for (const auto& p : all_wedges(s.q())) {
    Poly v = evaluate_on_uea(s, phi, uea_mul(g, detail::lift(gamma(g, p), phi.shape().nev(), phi.shape().nodd()), xl));
    out.add(p, px ? -v : v);
  }
  return out;
}

// (D^R_X phi)(Y)(g) = (-1)^{|X||phi|} phi((g^{-1}.X) Y)(g) for homogeneous X,
// applied to each parity component of phi.
inline Section right_vector_field(const SHCP& s, const UEAElement<Rational>& x, const Section& phi) {
  if (phi.factors() != 1) throw Error("vector fields act on one-factor sections");
  int px = uea_parity(x);
  if (px < 0) throw Error("vector field of an inhomogeneous element");
  const auto& g = s.algebra();
  auto gx = s.sigma_apply(x, true);
  UEAElement<Poly> gxl;
  for (const auto& [m, c] : gx) gxl.add(m, c.widen(phi.shape().nev(), phi.shape().nodd(), 0));
  Section out(phi.shape());
  for (int pphi : {0, 1}) {
    Section part = phi.parity_part(pphi);
    if (part.table().empty()) continue;
    bool flip = px && pphi;
    for (const auto& p : all_wedges(s.q())) {
      Poly v = evaluate_on_uea(s, part, uea_mul(g, gxl, detail::lift(gamma(g, p), phi.shape().nev(), phi.shape().nodd())));
      out.add(p, flip ? -v : v);
    }
  }
  return out;
}

inline std::string format_factor_wedges(const SHCP& s, const Section& phi, const Wedge& w) {
  std::string out = "(";
  auto parts = phi.split(w);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += format_wedge(s.algebra(), parts[i]);
  }
  return out + ")";
}

// First differing entry of two sections, for diagnostics.
inline std::string first_difference(const SHCP& s, const Section& a, const Section& b) {
  Section d = a - b;
  if (d.table().empty()) return "";
  return format_factor_wedges(s, a, d.table().begin()->first);
}

// Structural validation of the pair, then coassociativity, unit and antipode
// laws of (mu^*, e^*, i^*) on the given sections. The structural checks are
// needed: a sigma that is a comodule but not infinitesimally compatible (for
// example the identity on a torus) still satisfies the Hopf laws.
inline ValidationReport hopf_axiom_suite(const SHCP& s, const std::vector<std::pair<std::string, Section>>& sections) {
  ValidationReport rep;
  for (const auto& v : s.validate().violations) rep.fail("structure:" + v.check, v.witness);
  for (const auto& [name, phi] : sections) {
    try {
      Section m = mu_pullback(s, phi);
      Section a = mu_pullback(s, m, 0), b = mu_pullback(s, m, 1);
      if (!(a == b)) rep.fail("coassociativity", name + " at " + first_difference(s, a, b));
      if (!(counit_on_factor(s, m, 0) == phi)) rep.fail("left-unit", name);
      if (!(counit_on_factor(s, m, 1) == phi)) rep.fail("right-unit", name);
      Section eps = unit_section(s) * counit_pullback(s, phi);
      if (!(diagonal_pullback(s, inv_pullback(s, m, 0)) == eps)) rep.fail("left-antipode", name);
      if (!(diagonal_pullback(s, inv_pullback(s, m, 1)) == eps)) rep.fail("right-antipode", name);
    } catch (const Error& e) {
      rep.fail("error", name + ": " + e.what());
    }
  }
  return rep;
}

// Delta sections phi_f for the generators and Phi_j for the odd basis.
inline std::vector<std::pair<std::string, Section>> delta_sections(const SHCP& s) {
  std::vector<std::pair<std::string, Section>> out;
  for (std::size_t i = 0; i < s.k(); ++i) out.emplace_back("phi_" + s.group().names()[i], delta_section(s, i));
  for (std::size_t j = 0; j < s.q(); ++j)
    out.emplace_back("Phi_" + s.algebra().name(static_cast<int>(s.algebra().even_dim() + j)), odd_delta_section(s, j));
  return out;
}

// Cells gamma_hat^{-1}((h^{-1}.gamma(X)) gamma(Y)) over all wedges X, Y in
// (length, lexicographic) order; coefficients are functions of h on G0.
inline std::vector<std::vector<ZWedgeElement<Poly>>> twisted_gamma_table(const SHCP& s) {
  const auto& g = s.algebra();
  auto W = all_wedges(s.q());
  std::vector<std::vector<ZWedgeElement<Poly>>> out(W.size());
  for (std::size_t a = 0; a < W.size(); ++a) {
    auto lhs = s.sigma_apply(gamma(g, W[a]), true);
    for (std::size_t b = 0; b < W.size(); ++b) {
      UEAElement<Poly> yg;
      for (const auto& [mono, c] : gamma(g, W[b])) yg.add(mono, Poly::constant(s.k(), 0, c));
      out[a].push_back(gamma_hat_inverse(g, uea_mul(g, lhs, yg)));
    }
  }
  return out;
}

}  // namespace koszul
