#pragma once

#include <string>
#include <vector>

#include "coord_hopf.hpp"
#include "linalg.hpp"
#include "wedge.hpp"

namespace koszul {

// Super Harish-Chandra pair (G0, g, sigma) with G0 given by its coordinate
// Hopf algebra. sigma(k, j) is the coefficient of e_k in sigma(h) e_j, a
// function of h.
class SHCP {
 public:
  SHCP() = default;
  SHCP(SuperLieAlgebra g, CoordHopf group, std::vector<TangentFunctional> tangent, std::vector<std::vector<Poly>> sigma)
      : g_(std::move(g)), group_(std::move(group)), tangent_(std::move(tangent)), sigma_(std::move(sigma)) {
    const std::size_t n = g_.dim();
    if (tangent_.size() != g_.even_dim()) throw Error("one tangent functional per even basis element is required");
    for (const auto& t : tangent_)
      if (t.values.size() != group_.k()) throw Error("tangent functional has wrong arity");
    if (sigma_.size() != n) throw Error("sigma must be a square matrix over the basis of g");
    for (auto& row : sigma_) {
      if (row.size() != n) throw Error("sigma must be a square matrix over the basis of g");
      for (auto& e : row) {
        if (e.is_zero()) e = Poly(group_.k(), 0);
        else if (e.nev() != group_.k() || e.nodd() != 0) throw Error("sigma entry has wrong arity");
      }
    }
    sigma_inv_.assign(n, std::vector<Poly>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) sigma_inv_[a][b] = group_.antipode(sigma_[a][b]);
    for (const auto& t : tangent_) fields_.push_back(group_.left_field(t));
  }

  const SuperLieAlgebra& algebra() const { return g_; }
  const CoordHopf& group() const { return group_; }
  std::size_t k() const { return group_.k(); }
  std::size_t q() const { return g_.odd_dim(); }
  const TangentFunctional& tangent(std::size_t i) const { return tangent_.at(i); }
  const Poly& sigma(std::size_t k, std::size_t j) const { return sigma_.at(k).at(j); }
  // Coefficient functions of sigma(h^{-1}).
  const Poly& sigma_inverse(std::size_t k, std::size_t j) const { return sigma_inv_.at(k).at(j); }
  // (id (x) X_e) Delta(y_i) for the even basis element X.
  const std::vector<Poly>& left_field(std::size_t x) const { return fields_.at(x); }

  // sigma(h) u (or sigma(h^{-1}) u) with coefficients in O(G0); sigma extends
  // to U(g) as an algebra automorphism.
  UEAElement<Poly> sigma_apply(const UEAElement<Rational>& u, bool inverse) const {
    const auto& s = inverse ? sigma_inv_ : sigma_;
    const std::size_t n = g_.dim();
    std::vector<UEAElement<Poly>> images(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        if (!s[a][j].is_zero())
          for (const auto& [mono, c] : uea_basis(g_, static_cast<int>(a))) images[j].add(mono, s[a][j] * c);
    UEAElement<Poly> out;
    for (const auto& [mono, c] : u) {
      UEAElement<Poly> acc = uea_scalar(g_, Poly::constant(k(), 0, c));
      for (int letter : to_word(g_, mono)) acc = uea_mul(g_, acc, images[static_cast<std::size_t>(letter)]);
      out += acc;
    }
    return out;
  }

  // D_Z f for Z in U(g0) given by exponents, acting on the group block
  // [off, off+k) of f: left-invariant operator (id (x) Z_e) Delta.
  Poly apply_z(const std::vector<int>& z, Poly f, std::size_t off = 0) const {
    for (std::size_t a = z.size(); a-- > 0;)
      for (int t = 0; t < z[a]; ++t) f = apply_field(a, f, off);
    return f;
  }

  Poly apply_field(std::size_t x, const Poly& f, std::size_t off = 0) const {
    Poly out(f.nev(), f.nodd());
    for (std::size_t i = 0; i < k(); ++i) {
      Poly d = f.derivative(off + i);
      if (d.is_zero()) continue;
      out += fields_[x][i].widen(f.nev(), f.nodd(), off) * d;
    }
    return out;
  }

  ValidationReport validate() const {
    ValidationReport rep = validate_sla(g_);
    rep.merge(group_.validate());
    const std::size_t n = g_.dim(), m = g_.even_dim(), K = k();
    const auto& names = g_.names();
    auto cell = [&](std::size_t a, std::size_t b) { return "sigma(" + names[a] + "," + names[b] + ")"; };
    // Parity blocks.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (g_.parity(static_cast<int>(a)) != g_.parity(static_cast<int>(b)) && !sigma_[a][b].is_zero())
          rep.fail("sigma-parity", cell(a, b) + " couples opposite parities");
    // Comodule law and counit.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Poly lhs = group_.coproduct(sigma_[a][b]);
        Poly rhs(2 * K, 0);
        for (std::size_t l = 0; l < n; ++l)
          rhs += sigma_[a][l].widen(2 * K, 0, 0) * sigma_[l][b].widen(2 * K, 0, K);
        if (lhs != rhs) rep.fail("sigma-comodule", cell(a, b));
        Rational e = group_.counit(sigma_[a][b]);
        if (e != Rational(a == b ? 1 : 0)) rep.fail("sigma-counit", cell(a, b) + "(e) = " + to_string(e));
      }
    // Bracket equivariance: sigma[e_i, e_j] = [sigma e_i, sigma e_j].
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Poly> lhs(n, Poly(K, 0)), rhs(n, Poly(K, 0));
        for (const auto& [c, cc] : g_.bracket(static_cast<int>(i), static_cast<int>(j)))
          for (std::size_t a = 0; a < n; ++a) lhs[a] += sigma_[a][static_cast<std::size_t>(c)] * cc;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (sigma_[a][i].is_zero() || sigma_[b][j].is_zero()) continue;
            Poly f = sigma_[a][i] * sigma_[b][j];
            for (const auto& [c, cc] : g_.bracket(static_cast<int>(a), static_cast<int>(b)))
              rhs[static_cast<std::size_t>(c)] += f * cc;
          }
        for (std::size_t a = 0; a < n; ++a)
          if (lhs[a] != rhs[a]) {
            rep.fail("sigma-bracket", "[" + names[i] + "," + names[j] + "] component " + names[a]);
            break;
          }
      }
    // Infinitesimal compatibility: X_e(sigma(a, j)) = coefficient of e_a in [X, e_j].
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a) {
          Rational lhs = group_.tangent_apply(tangent_[x], sigma_[a][j]);
          Rational rhs = g_.bracket(static_cast<int>(x), static_cast<int>(j)).coefficient(static_cast<int>(a), Rational(0));
          if (lhs != rhs)
            rep.fail("sigma-infinitesimal", names[x] + "_e(" + cell(a, j) + ") = " + to_string(lhs) + ", ad gives " +
                                                to_string(rhs));
        }
    // Tangent vectors span a copy of g0: independent, brackets of the
    // left-invariant fields match.
    Matrix t;
    for (const auto& tf : tangent_) t.push_back(tf.values);
    if (rank(t, K) != m) rep.fail("tangent", "tangent functionals are not linearly independent");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t i = 0; i < K; ++i) {
          Poly y = group_.gen(i);
          Poly lhs = apply_field(a, apply_field(b, y)) - apply_field(b, apply_field(a, y));
          Poly rhs(K, 0);
          for (const auto& [c, cc] : g_.bracket(static_cast<int>(a), static_cast<int>(b)))
            rhs += apply_field(static_cast<std::size_t>(c), y) * cc;
          if (lhs != rhs) rep.fail("tangent-bracket", "[" + names[a] + "," + names[b] + "] on " + group_.names()[i]);
        }
    return rep;
  }

 private:
  SuperLieAlgebra g_;
  CoordHopf group_;
  std::vector<TangentFunctional> tangent_;
  std::vector<std::vector<Poly>> sigma_;
  std::vector<std::vector<Poly>> sigma_inv_;
  std::vector<std::vector<Poly>> fields_;
};

}  // namespace koszul
