#pragma once

#include "koszul/actions.hpp"
#include "koszul/expr.hpp"
#include "koszul/grassmann.hpp"
#include "koszul/homogeneous.hpp"
#include "koszul/shcp.hpp"

namespace fixtures {

using namespace koszul;

inline LieVector vec(std::initializer_list<std::pair<int, long>> terms) {
  LieVector v;
  for (auto [i, c] : terms) v.add(i, Rational(c));
  return v;
}

// gl(1|1): X1, X2 even; T1, T2 odd.
inline SuperLieAlgebra gl11_algebra(bool perturbed = false) {
  SuperLieAlgebra g({"X1", "X2"}, {"T1", "T2"});
  g.set_bracket(0, 2, vec({{2, 1}}));
  g.set_bracket(0, 3, vec({{3, -1}}));
  g.set_bracket(1, 2, vec({{2, -1}}));
  g.set_bracket(1, 3, vec({{3, 1}}));
  g.set_bracket(2, 3, perturbed ? vec({{0, -1}}) : vec({{0, -1}, {1, -1}}));
  return g;
}

inline CoordHopf torus(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("y" + std::to_string(i + 1));
  std::vector<Poly> cop, ant;
  for (std::size_t i = 0; i < k; ++i) {
    cop.push_back(Poly::even_var(2 * k, 0, i) * Poly::even_var(2 * k, 0, k + i));
    ant.push_back(Poly::even_var(k, 0, i, -1));
  }
  return CoordHopf(names, std::vector<bool>(k, true), cop, std::vector<Rational>(k, Rational(1)), ant);
}

inline Poly t2(const char* s) { return parse_poly(s, PolyRing{{"y1", "y2"}, {}}); }

inline SHCP gl11(bool twisted = true, bool perturbed = false) {
  std::vector<std::vector<Poly>> sigma(4, std::vector<Poly>(4, Poly(2, 0)));
  for (int i = 0; i < 4; ++i) sigma[i][i] = t2("1");
  if (twisted) {
    sigma[2][2] = t2("y1*y2^-1");
    sigma[3][3] = t2("y2*y1^-1");
  }
  std::vector<TangentFunctional> tangent{{{Rational(1), Rational(0)}}, {{Rational(0), Rational(1)}}};
  return SHCP(gl11_algebra(perturbed), torus(2), tangent, sigma);
}

// sigma(T1,T1) = y1 alone: still a comodule, no longer bracket equivariant.
inline SHCP gl11_corrupted_sigma() {
  auto base = gl11();
  std::vector<std::vector<Poly>> sigma(4, std::vector<Poly>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) sigma[i][j] = base.sigma(i, j);
  sigma[2][2] = t2("y1");
  return SHCP(base.algebra(), base.group(), {base.tangent(0), base.tangent(1)}, sigma);
}

// Purely even two-dimensional torus.
inline SHCP even_torus() {
  SuperLieAlgebra g({"X1", "X2"}, {});
  std::vector<std::vector<Poly>> sigma(2, std::vector<Poly>(2, Poly(2, 0)));
  sigma[0][0] = t2("1");
  sigma[1][1] = t2("1");
  std::vector<TangentFunctional> tangent{{{Rational(1), Rational(0)}}, {{Rational(0), Rational(1)}}};
  return SHCP(g, torus(2), tangent, sigma);
}

// Nilpotent algebra with one central even Z and odd Q1, Q2, Q3:
// [Q1,Q2] = Z, [Q3,Q3] = 2Z; reduced group the additive line.
inline SHCP nilpotent_q3() {
  SuperLieAlgebra g({"Z"}, {"Q1", "Q2", "Q3"});
  g.set_bracket(1, 2, vec({{0, 1}}));
  g.set_bracket(3, 3, vec({{0, 2}}));
  PolyRing r1{{"t"}, {}}, r2{{"t1", "t2"}, {}};
  CoordHopf line({"t"}, {false}, {parse_poly("t1 + t2", r2)}, {Rational(0)}, {parse_poly("-t", r1)});
  std::vector<std::vector<Poly>> sigma(4, std::vector<Poly>(4, Poly(1, 0)));
  for (int i = 0; i < 4; ++i) sigma[i][i] = Poly::constant(1, 0, 1);
  return SHCP(g, line, {{{Rational(1)}}}, sigma);
}

// Matrix model [[x1, t1], [t2, x2]] of GL(1|1) with its coordinate
// dictionary; `odd_sign` is the sign in t_i = odd_sign phi_i Phi_i.
inline GroupModel gl11_model(const SHCP& g, int odd_sign = -1) {
  GroupModel m;
  m.even = {"x1", "x2"};
  m.odd = {"t1", "t2"};
  std::string sg = odd_sign < 0 ? "-" : "";
  for (const char* f : {"phi_y1*(1 + 1/2*Phi_T1*Phi_T2)", "phi_y2*(1 - 1/2*Phi_T1*Phi_T2)"})
    m.dictionary.push_back(parse_section(f, g));
  m.dictionary.push_back(parse_section(sg + "phi_y1*Phi_T1", g));
  m.dictionary.push_back(parse_section(sg + "phi_y2*Phi_T2", g));
  PolyRing law{{"x1", "x2", "y1", "y2"}, {"t1", "t2", "u1", "u2"}};
  for (const char* f : {"x1*y1 + t1*u2", "x2*y2 + t2*u1", "x1*u1 + t1*y2", "t2*y1 + x2*u2"})
    m.law.push_back(parse_poly(f, law));
  return m;
}

// phi_y1, phi_y2, Phi_T1, Phi_T2 in the matrix coordinates of GL(1|1).
inline std::vector<Poly> gl11_model_inverse() {
  PolyRing m{{"y1", "y2"}, {"xi1", "xi2"}};
  std::vector<Poly> out;
  for (const char* f : {"y1 - 1/2*xi1*xi2*y2^-1", "y2 + 1/2*xi1*xi2*y1^-1", "-xi1*y1^-1", "-xi2*y2^-1"})
    out.push_back(parse_poly(f, m));
  return out;
}

inline SuperDomain gl11_domain() { return SuperDomain{{"y1", "y2"}, {true, true}, {"xi1", "xi2"}}; }

// GL(1|1) acting on itself by left multiplication; xi1 is the (1,2) entry.
inline ActionData left_multiplication(const SHCP& g, bool swap_odd = false) {
  std::vector<std::vector<std::string>> rho{
      {"y1", "0", "xi1", "0"}, {"0", "y2", "0", "xi2"}, {"xi2", "0", "y2", "0"}, {"0", "xi1", "0", "y1"}};
  if (swap_odd) std::swap(rho[2], rho[3]);
  return make_action(g, gl11_domain(), {"x1", "x2"}, {"x1*y1", "x2*y2", "x1*xi1", "x2*xi2"}, rho);
}

// Standard representation on R^{1|1} with y invertible.
inline ActionData standard_rep(const SHCP& g) {
  return make_action(g, SuperDomain{{"y"}, {true}, {"xi"}}, {"x1", "x2"}, {"x1*y", "x2*xi"},
                     {{"y", "0"}, {"0", "xi"}, {"xi", "0"}, {"0", "y"}});
}

// Conjugation m -> g m g^{-1}.
inline ActionData conjugation(const SHCP& g) {
  return make_action(g, gl11_domain(), {"x1", "x2"}, {"y1", "y2", "x1*x2^-1*xi1", "x2*x1^-1*xi2"},
                     {{"0", "0", "xi1", "-xi2"},
                      {"0", "0", "-xi1", "xi2"},
                      {"xi2", "xi2", "y2 - y1", "0"},
                      {"xi1", "xi1", "0", "y1 - y2"}});
}

// h = span{X1, X2, T1} with H0 = G0 and complement T2.
inline SubPairSpec borel_subpair() {
  SubPairSpec h;
  h.h_basis = {vec({{0, 1}}), vec({{1, 1}}), vec({{2, 1}})};
  h.reduced = torus(2);
  h.quotient = {t2("y1"), t2("y2")};
  h.complement = {vec({{3, 1}})};
  return h;
}

// h = span{X1 + X2, T1, T2} with H0 the diagonal torus y1 = y2 = t.
inline SubPairSpec diagonal_subpair() {
  SubPairSpec h;
  h.h_basis = {vec({{0, 1}, {1, 1}}), vec({{2, 1}}), vec({{3, 1}})};
  h.reduced = torus(1);
  h.quotient = {Poly::even_var(1, 0, 0), Poly::even_var(1, 0, 0)};
  h.complement = {vec({{0, 1}})};
  return h;
}

// Trivial subgroup of G0 with k generators and counit values `e`.
inline SubPairSpec trivial_subpair(const SHCP& g) {
  SubPairSpec h;
  h.reduced = CoordHopf({}, {}, {}, {}, {});
  for (std::size_t i = 0; i < g.k(); ++i) h.quotient.push_back(Poly::constant(0, 0, g.group().counit_value(i)));
  for (std::size_t i = 0; i < g.algebra().dim(); ++i) h.complement.push_back(vec({{static_cast<int>(i), 1}}));
  return h;
}

inline SubPairSpec full_subpair(const SHCP& g) {
  SubPairSpec h;
  for (std::size_t i = 0; i < g.algebra().dim(); ++i) h.h_basis.push_back(vec({{static_cast<int>(i), 1}}));
  h.reduced = g.group();
  for (std::size_t i = 0; i < g.k(); ++i) h.quotient.push_back(g.group().gen(i));
  return h;
}

}  // namespace fixtures
