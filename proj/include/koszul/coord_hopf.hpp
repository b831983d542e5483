#pragma once

#include <string>
#include <vector>

#include "poly.hpp"
#include "super_lie_algebra.hpp"

namespace koszul {

// Rational point of the reduced group, one value per coordinate generator.
struct GroupPoint {
  std::vector<Rational> values;
  bool operator==(const GroupPoint&) const = default;
};

// Values X(y_i) of a tangent vector at the identity on the generators.
struct TangentFunctional {
  std::vector<Rational> values;
};

// Commutative Hopf algebra Q[y_1,...,y_k] with selected generators inverted.
// Coproduct images live in 2k variables (first slot 0..k-1, second k..2k-1).
class CoordHopf {
 public:
  CoordHopf() = default;
  CoordHopf(std::vector<std::string> names, std::vector<bool> invertible, std::vector<Poly> coproduct,
            std::vector<Rational> counit, std::vector<Poly> antipode)
      : names_(std::move(names)),
        invertible_(std::move(invertible)),
        coproduct_(std::move(coproduct)),
        counit_(std::move(counit)),
        antipode_(std::move(antipode)) {
    const std::size_t k = names_.size();
    if (invertible_.size() != k || coproduct_.size() != k || counit_.size() != k || antipode_.size() != k)
      throw Error("coordinate Hopf algebra data has inconsistent sizes");
    for (std::size_t i = 0; i < k; ++i) {
      if (coproduct_[i].nev() != 2 * k && !coproduct_[i].is_zero()) throw Error("coproduct image has wrong arity");
      if (antipode_[i].nev() != k && !antipode_[i].is_zero()) throw Error("antipode image has wrong arity");
    }
  }

  std::size_t k() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool invertible(std::size_t i) const { return invertible_.at(i); }
  const Poly& coproduct_image(std::size_t i) const { return coproduct_.at(i); }
  const Rational& counit_value(std::size_t i) const { return counit_.at(i); }
  const Poly& antipode_image(std::size_t i) const { return antipode_.at(i); }

  Poly zero() const { return Poly(k(), 0); }
  Poly one() const { return Poly::constant(k(), 0, 1); }
  Poly gen(std::size_t i) const { return Poly::even_var(k(), 0, i); }
  GroupPoint identity() const { return GroupPoint{counit_}; }

  // Throws MalformedElement when f has a negative power of a non-invertible
  // generator.
  void check_element(const Poly& f) const {
    for (std::size_t i = 0; i < k(); ++i)
      if (!invertible_[i] && f.has_negative_exponent(i))
        throw MalformedElement("negative power of non-invertible generator " + names_[i]);
  }

  // Applies Delta to the block of variables [off, off+k) of f, producing a
  // ring with k more even variables; the new second slot sits at [off+k, off+2k).
  Poly coproduct_block(const Poly& f, std::size_t off) const {
    const std::size_t n = f.nev(), nn = n + k();
    std::vector<Poly> ev(n), od(f.nodd());
    std::vector<std::size_t> map2(2 * k());
    for (std::size_t i = 0; i < 2 * k(); ++i) map2[i] = off + i;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < off) ev[i] = Poly::even_var(nn, f.nodd(), i);
      else if (i < off + k()) ev[i] = coproduct_[i - off].remap(nn, f.nodd(), map2, {});
      else ev[i] = Poly::even_var(nn, f.nodd(), i + k());
    }
    for (std::size_t j = 0; j < f.nodd(); ++j) od[j] = Poly::odd_var(nn, f.nodd(), j);
    return f.substitute(nn, f.nodd(), ev, od);
  }

  // Replaces the block [off, off+k) by constants, dropping those variables.
  Poly evaluate_block(const Poly& f, std::size_t off, const GroupPoint& p) const {
    const std::size_t n = f.nev(), nn = n - k();
    std::vector<Poly> ev(n), od(f.nodd());
    for (std::size_t i = 0; i < n; ++i) {
      if (i < off) ev[i] = Poly::even_var(nn, f.nodd(), i);
      else if (i < off + k()) ev[i] = Poly::constant(nn, f.nodd(), p.values.at(i - off));
      else ev[i] = Poly::even_var(nn, f.nodd(), i - k());
    }
    for (std::size_t j = 0; j < f.nodd(); ++j) od[j] = Poly::odd_var(nn, f.nodd(), j);
    return f.substitute(nn, f.nodd(), ev, od);
  }

  // Applies the antipode to the block [off, off+k).
  Poly antipode_block(const Poly& f, std::size_t off) const {
    const std::size_t n = f.nev();
    std::vector<Poly> ev(n), od(f.nodd());
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= off && i < off + k()) ev[i] = antipode_[i - off].widen(n, f.nodd(), off);
      else ev[i] = Poly::even_var(n, f.nodd(), i);
    }
    for (std::size_t j = 0; j < f.nodd(); ++j) od[j] = Poly::odd_var(n, f.nodd(), j);
    return f.substitute(n, f.nodd(), ev, od);
  }

  Poly coproduct(const Poly& f) const {
    check_element(f);
    return coproduct_block(f, 0);
  }
  Rational counit(const Poly& f) const {
    check_element(f);
    return f.evaluate(counit_);
  }
  Poly antipode(const Poly& f) const {
    check_element(f);
    return antipode_block(f, 0);
  }
  Rational evaluate(const Poly& f, const GroupPoint& p) const {
    check_element(f);
    return f.evaluate(p.values);
  }

  GroupPoint multiply(const GroupPoint& a, const GroupPoint& b) const {
    std::vector<Rational> ab = a.values;
    ab.insert(ab.end(), b.values.begin(), b.values.end());
    GroupPoint r;
    for (std::size_t i = 0; i < k(); ++i) r.values.push_back(coproduct_[i].evaluate(ab));
    return r;
  }
  GroupPoint inverse(const GroupPoint& a) const {
    GroupPoint r;
    for (std::size_t i = 0; i < k(); ++i) r.values.push_back(antipode_[i].evaluate(a.values));
    return r;
  }

  // X_e(f) = sum_i X(y_i) (d f / d y_i)(e).
  Rational tangent_apply(const TangentFunctional& x, const Poly& f) const {
    Rational r(0);
    for (std::size_t i = 0; i < k(); ++i)
      if (!is_zero(x.values.at(i))) r += x.values[i] * f.derivative(i).evaluate(counit_);
    return r;
  }

  // (id (x) X_e) Delta(y_i) for every generator: the left-invariant field of X
  // on generators.
  std::vector<Poly> left_field(const TangentFunctional& x) const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < k(); ++i) {
      Poly acc(k(), 0);
      for (std::size_t j = 0; j < k(); ++j) {
        if (is_zero(x.values.at(j))) continue;
        acc += evaluate_block(coproduct_[i].derivative(k() + j), k(), identity()) * x.values[j];
      }
      out.push_back(acc);
    }
    return out;
  }

  std::string format(const Poly& f) const { return f.to_string(names_, {}); }

  ValidationReport validate() const {
    ValidationReport rep;
    const std::size_t K = k();
    for (std::size_t i = 0; i < K; ++i) {
      const std::string& n = names_[i];
      try {
        for (std::size_t j = 0; j < 2 * K; ++j)
          if (!invertible_[j % K] && coproduct_[i].has_negative_exponent(j))
            rep.fail("laurent", "coproduct of " + n + " inverts non-invertible " + names_[j % K]);
        check_element(antipode_[i]);
        if (invertible_[i]) {
          if (coproduct_[i].terms().size() != 1)
            rep.fail("invertible", "coproduct of invertible " + n + " is not a monomial");
          if (antipode_[i].terms().size() != 1) rep.fail("invertible", "antipode of invertible " + n + " is not a monomial");
          if (is_zero(counit_[i])) rep.fail("invertible", "counit of invertible " + n + " vanishes");
        }
        // (eps (x) id) Delta = id = (id (x) eps) Delta
        Poly g = gen(i);
        if (evaluate_block(coproduct_[i], 0, identity()) != g) rep.fail("counit", "(eps x id)Delta(" + n + ") != " + n);
        if (evaluate_block(coproduct_[i], K, identity()) != g) rep.fail("counit", "(id x eps)Delta(" + n + ") != " + n);
        Poly a = coproduct_block(coproduct_[i], 0);
        Poly b = coproduct_block(coproduct_[i], K);
        if (a != b) rep.fail("coassociativity", "on " + n);
        // m (S (x) id) Delta = eps = m (id (x) S) Delta
        Poly eps = Poly::constant(K, 0, counit_[i]);
        std::vector<Poly> ev1(2 * K), ev2(2 * K);
        for (std::size_t j = 0; j < K; ++j) {
          ev1[j] = antipode_[j];
          ev1[K + j] = gen(j);
          ev2[j] = gen(j);
          ev2[K + j] = antipode_[j];
        }
        if (coproduct_[i].substitute(K, 0, ev1, {}) != eps) rep.fail("antipode", "m(S x id)Delta(" + n + ") != eps");
        if (coproduct_[i].substitute(K, 0, ev2, {}) != eps) rep.fail("antipode", "m(id x S)Delta(" + n + ") != eps");
      } catch (const Error& e) {
        rep.fail("malformed", n + ": " + e.what());
      }
    }
    return rep;
  }

 private:
  std::vector<std::string> names_;
  std::vector<bool> invertible_;
  std::vector<Poly> coproduct_;
  std::vector<Rational> counit_;
  std::vector<Poly> antipode_;
};

}  // namespace koszul
