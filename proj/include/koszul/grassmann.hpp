#pragma once

#include <random>
#include <string>
#include <vector>

#include "section.hpp"

namespace koszul {

// Element of the exterior algebra on s generators eta_1..eta_s: a polynomial
// with no even variables. The body is the constant term.
using GrassmannNumber = Poly;

inline GrassmannNumber grassmann_constant(std::size_t s, const Rational& c) { return Poly::constant(0, s, c); }
inline GrassmannNumber grassmann_generator(std::size_t s, std::size_t i) { return Poly::odd_var(0, s, i); }

// Assignment of Grassmann numbers to the variables of a ring form: even
// values must be even, odd values odd.
struct SPoint {
  std::vector<GrassmannNumber> even;
  std::vector<GrassmannNumber> odd;
};

// Point of a product: variables of the factors in order.
inline SPoint join_points(const std::vector<SPoint>& parts) {
  SPoint r;
  for (const auto& p : parts) r.even.insert(r.even.end(), p.even.begin(), p.even.end());
  for (const auto& p : parts) r.odd.insert(r.odd.end(), p.odd.begin(), p.odd.end());
  return r;
}

inline void check_point(const SPoint& p) {
  for (const auto& v : p.even)
    if (v.parity() != 0) throw Error("even coordinate assigned a non-even Grassmann number");
  for (const auto& v : p.odd)
    if (!v.is_zero() && v.parity() != 1) throw Error("odd coordinate assigned a non-odd Grassmann number");
}

// Evaluates a polynomial ring element at a point of its variables.
inline GrassmannNumber eval_poly_at_point(const Poly& f, const SPoint& p, std::size_t s) {
  std::vector<Poly> ev(p.even), od(p.odd);
  for (auto& v : ev)
    if (v.is_zero()) v = Poly(0, s);
  for (auto& v : od)
    if (v.is_zero()) v = Poly(0, s);
  if (ev.size() != f.nev() || od.size() != f.nodd()) throw Error("point has wrong arity");
  return f.substitute(0, s, ev, od);
}

// phi evaluated at a point through the delta-section expansion
// phi = sum_R phi_{f_R} delta_R. The point lists the reduced group generators
// of every factor and the extra even variables, then the odd deltas of every
// factor and the extra odd variables.
inline GrassmannNumber eval_section_at_point(const Section& phi, const SPoint& p, std::size_t s) {
  check_point(p);
  return eval_poly_at_point(to_ring(phi), p, s);
}

// Random even element: rational body (nonzero when `invertible`) plus a
// soul on all pairs. Random odd element: linear and cubic terms.
inline GrassmannNumber random_even(std::size_t s, std::mt19937_64& rng, bool invertible = true) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), body(1, 9), body_den(1, 5);
  Rational b = fraction(body(rng), body_den(rng));
  if (!invertible && num(rng) < 0) b = -b;
  GrassmannNumber g = grassmann_constant(s, b);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t c = a + 1; c < s; ++c)
      g += grassmann_generator(s, a) * grassmann_generator(s, c) * fraction(num(rng), den(rng));
  return g;
}

inline GrassmannNumber random_odd(std::size_t s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  GrassmannNumber g(0, s);
  for (std::size_t a = 0; a < s; ++a) g += grassmann_generator(s, a) * fraction(num(rng), den(rng));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      for (std::size_t c = b + 1; c < s; ++c)
        g += grassmann_generator(s, a) * grassmann_generator(s, b) * grassmann_generator(s, c) * Rational(num(rng));
  return g;
}

// Same point with every soul dropped.
inline SPoint body_point(const SPoint& p) {
  SPoint r;
  for (const auto& v : p.even) r.even.push_back(v.body());
  for (const auto& v : p.odd) r.odd.push_back(Poly(v.nev(), v.nodd()));
  return r;
}

// Group structure on the points of G with values in s Grassmann generators,
// driven by mu^*, i^* and e^* of the delta-section generators. A point
// assigns values to phi_<generator> (even) and Phi_<odd> (odd).
class GroupOracle {
 public:
  GroupOracle(const SHCP& g, std::size_t s) : g_(g), s_(s) {
    for (const auto& [name, phi] : delta_sections(g)) {
      names_.push_back(name);
      mu_.push_back(to_ring(mu_pullback(g, phi)));
      inv_.push_back(to_ring(inv_pullback(g, phi)));
    }
  }

  std::size_t generators() const { return s_; }
  const SHCP& shcp() const { return g_; }

  SPoint identity() const {
    SPoint p;
    for (std::size_t i = 0; i < g_.k(); ++i) p.even.push_back(grassmann_constant(s_, g_.group().counit_value(i)));
    for (std::size_t j = 0; j < g_.q(); ++j) p.odd.push_back(Poly(0, s_));
    return p;
  }

  SPoint random_point(std::mt19937_64& rng) const {
    SPoint p;
    for (std::size_t i = 0; i < g_.k(); ++i) p.even.push_back(random_even(s_, rng, g_.group().invertible(i)));
    for (std::size_t j = 0; j < g_.q(); ++j) p.odd.push_back(random_odd(s_, rng));
    return p;
  }

  SPoint product(const SPoint& a, const SPoint& b) const { return apply(mu_, join_points({a, b})); }
  SPoint inverse(const SPoint& a) const { return apply(inv_, a); }

  void compare(const SPoint& lhs, const SPoint& rhs, const std::string& check, ValidationReport& rep) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (value(lhs, i) != value(rhs, i)) rep.fail(check, "on " + names_[i]);
  }

 private:
  SPoint apply(const std::vector<Poly>& forms, const SPoint& p) const {
    check_point(p);
    SPoint r;
    for (std::size_t i = 0; i < forms.size(); ++i)
      (i < g_.k() ? r.even : r.odd).push_back(eval_poly_at_point(forms[i], p, s_));
    return r;
  }
  const GrassmannNumber& value(const SPoint& p, std::size_t i) const {
    return i < g_.k() ? p.even.at(i) : p.odd.at(i - g_.k());
  }

  const SHCP& g_;
  std::size_t s_;
  std::vector<std::string> names_;
  std::vector<Poly> mu_, inv_;
};

// (ab)c = a(bc) at the level of points.
inline ValidationReport associativity_probe(const GroupOracle& o, const SPoint& a, const SPoint& b, const SPoint& c) {
  ValidationReport rep;
  o.compare(o.product(o.product(a, b), c), o.product(a, o.product(b, c)), "associativity", rep);
  return rep;
}

// a a^{-1} = e = a^{-1} a and e a = a = a e.
inline ValidationReport unit_inverse_probe(const GroupOracle& o, const SPoint& a) {
  ValidationReport rep;
  SPoint e = o.identity(), inv = o.inverse(a);
  o.compare(o.product(a, inv), e, "right-inverse", rep);
  o.compare(o.product(inv, a), e, "left-inverse", rep);
  o.compare(o.product(e, a), a, "left-unit", rep);
  o.compare(o.product(a, e), a, "right-unit", rep);
  return rep;
}

// Concrete model of the supergroup: coordinates expressed as sections and a
// polynomial group law. Law entries live in the ring with the even
// coordinates of the two factors, then the odd coordinates of the two
// factors.
struct GroupModel {
  std::vector<std::string> even;
  std::vector<std::string> odd;
  std::vector<Section> dictionary;  // even coordinates, then odd ones
  std::vector<Poly> law;            // product coordinates, same order
};

// Values of the model coordinates at a point of G.
inline SPoint model_coordinates(const GroupModel& m, const SPoint& p, std::size_t s) {
  SPoint r;
  for (std::size_t i = 0; i < m.dictionary.size(); ++i)
    (i < m.even.size() ? r.even : r.odd).push_back(eval_section_at_point(m.dictionary[i], p, s));
  return r;
}

// Ring forms of mu^* of the model coordinates.
inline std::vector<Poly> model_mu_forms(const SHCP& g, const GroupModel& m) {
  std::vector<Poly> out;
  for (const auto& c : m.dictionary) out.push_back(to_ring(mu_pullback(g, c)));
  return out;
}

// (a (x) b)(mu^* c) against the model law evaluated on the coordinates of a
// and b, for every model coordinate c; mu_forms from model_mu_forms.
inline ValidationReport pullback_vs_model(const GroupModel& m, const std::vector<Poly>& mu_forms, const SPoint& a,
                                          const SPoint& b, std::size_t s) {
  ValidationReport rep;
  SPoint ab = join_points({a, b});
  check_point(ab);
  SPoint coords = join_points({model_coordinates(m, a, s), model_coordinates(m, b, s)});
  for (std::size_t i = 0; i < m.dictionary.size(); ++i) {
    GrassmannNumber lhs = eval_poly_at_point(mu_forms.at(i), ab, s);
    GrassmannNumber rhs = eval_poly_at_point(m.law.at(i), coords, s);
    if (lhs != rhs) {
      const std::string& name = i < m.even.size() ? m.even[i] : m.odd[i - m.even.size()];
      rep.fail("model-law", name + ": pullback gives " + lhs.to_string({}, {}) + ", model gives " + rhs.to_string({}, {}));
    }
  }
  return rep;
}

inline ValidationReport pullback_vs_model(const SHCP& g, const GroupModel& m, const SPoint& a, const SPoint& b,
                                          std::size_t s) {
  return pullback_vs_model(m, model_mu_forms(g, m), a, b, s);
}

struct SweepResult {
  std::size_t passed = 0;
  std::size_t total = 0;
  ValidationReport failures;
};

// Seeded sweep of pullback_vs_model over random pairs of points.
inline SweepResult model_sweep(const GroupOracle& o, const GroupModel& m, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  SweepResult out;
  auto forms = model_mu_forms(o.shcp(), m);
  for (std::size_t t = 0; t < count; ++t) {
    SPoint a = o.random_point(rng), b = o.random_point(rng);
    auto rep = pullback_vs_model(m, forms, a, b, o.generators());
    ++out.total;
    if (rep.ok()) ++out.passed;
    else out.failures.merge(rep);
  }
  return out;
}

// Seeded sweep of the associativity and unit/inverse probes.
inline SweepResult probe_sweep(const GroupOracle& o, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  SweepResult out;
  for (std::size_t t = 0; t < count; ++t) {
    SPoint a = o.random_point(rng), b = o.random_point(rng), c = o.random_point(rng);
    auto rep = associativity_probe(o, a, b, c);
    rep.merge(unit_inverse_probe(o, a));
    ++out.total;
    if (rep.ok()) ++out.passed;
    else out.failures.merge(rep);
  }
  return out;
}

}  // namespace koszul
