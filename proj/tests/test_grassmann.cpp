#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "koszul/grassmann.hpp"

using namespace koszul;

namespace {

GrassmannNumber eta(std::size_t i) { return grassmann_generator(4, i); }
GrassmannNumber num(long c) { return grassmann_constant(4, Rational(c)); }

Section random_section(const SHCP& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-1, 1);
  Section r(section_shape(s));
  for (const auto& w : all_wedges(s.q()))
    for (int t = 0; t < 2; ++t) {
      Monomial m{{e(rng), e(rng)}, {}};
      r.add(w, Poly::term(2, 0, m, Rational(c(rng))));
    }
  return r;
}

}  // namespace

TEST(Grassmann, Arithmetic) {
  EXPECT_EQ((num(1) + eta(0) * eta(1)).inverse(), num(1) - eta(0) * eta(1));
  EXPECT_TRUE((eta(0) * eta(0)).is_zero());
  EXPECT_EQ((num(2) + eta(0)) * (num(3) - eta(1)), num(6) + eta(0) * Rational(3) - eta(1) * Rational(2) - eta(0) * eta(1));
  EXPECT_THROW((eta(0) * eta(1)).inverse(), MalformedElement);
}

TEST(Grassmann, SectionEvaluation) {
  auto g = fixtures::gl11();
  std::mt19937_64 rng(1);
  GroupOracle o(g, 4);
  SPoint p = o.random_point(rng);
  EXPECT_EQ(eval_section_at_point(unit_section(g), p, 4), num(1));
  EXPECT_EQ(eval_section_at_point(odd_delta_section(g, 0), p, 4), p.odd[0]);
  Section f = parse_section("phi_y1*Phi_T1*Phi_T2", g);
  EXPECT_EQ(eval_section_at_point(f, p, 4), p.even[0] * p.odd[0] * p.odd[1]);
}

TEST(Grassmann, EvaluationIsAMorphism) {
  auto g = fixtures::gl11();
  std::mt19937_64 rng(2);
  GroupOracle o(g, 4);
  for (int t = 0; t < 20; ++t) {
    Section a = random_section(g, rng), b = random_section(g, rng);
    SPoint p = o.random_point(rng);
    EXPECT_EQ(eval_section_at_point(section_mul(a, b), p, 4),
              eval_section_at_point(a, p, 4) * eval_section_at_point(b, p, 4));
  }
}

TEST(Grassmann, RingFormRoundTrip) {
  auto g = fixtures::gl11();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Section m = mu_pullback(g, random_section(g, rng));
    EXPECT_EQ(from_ring(to_ring(m), m.shape()), m);
  }
}

TEST(Grassmann, PullbackMatchesMatrixModel) {
  auto g = fixtures::gl11();
  GroupOracle o(g, 4);
  auto m = fixtures::gl11_model(g);
  auto forms = model_mu_forms(g, m);
  EXPECT_TRUE(pullback_vs_model(m, forms, o.identity(), o.identity(), 4).ok());
  // Bodies 2, 3 and 5, 7 with souls on distinct generators.
  SPoint a{{num(2) + eta(0) * eta(1), num(3)}, {eta(0), eta(1)}};
  SPoint b{{num(5), num(7) + eta(2) * eta(3)}, {eta(2), eta(3)}};
  auto rep = pullback_vs_model(m, forms, a, b, 4);
  for (const auto& v : rep.violations) ADD_FAILURE() << v.witness;
  auto sweep = model_sweep(o, m, 1, 50);
  EXPECT_EQ(sweep.passed, 50u);
}

TEST(Grassmann, OddCoordinateSignIsAnAutomorphism) {
  auto g = fixtures::gl11();
  GroupOracle o(g, 4);
  EXPECT_EQ(model_sweep(o, fixtures::gl11_model(g, +1), 5, 10).passed, 10u);
}

TEST(Grassmann, ProbesPassOnFixtures) {
  for (const auto& g : {fixtures::gl11(), fixtures::even_torus(), fixtures::nilpotent_q3()}) {
    GroupOracle o(g, std::max<std::size_t>(2 * g.q(), 2));
    EXPECT_TRUE(associativity_probe(o, o.identity(), o.identity(), o.identity()).ok());
    auto sweep = probe_sweep(o, 7, 10);
    EXPECT_EQ(sweep.passed, sweep.total);
    for (const auto& v : sweep.failures.violations) ADD_FAILURE() << v.check << " " << v.witness;
  }
}

TEST(Grassmann, CorruptedSigmaFailsProbe) {
  auto g = fixtures::gl11_corrupted_sigma();
  GroupOracle o(g, 4);
  EXPECT_LT(probe_sweep(o, 7, 5).passed, 5u);
}

TEST(Grassmann, SoulFreePointsFollowReducedLaw) {
  auto g = fixtures::gl11();
  GroupOracle o(g, 4);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 5; ++t) {
    SPoint a = body_point(o.random_point(rng)), b = body_point(o.random_point(rng));
    SPoint ab = o.product(a, b);
    GroupPoint pa{{a.even[0].constant_term(), a.even[1].constant_term()}};
    GroupPoint pb{{b.even[0].constant_term(), b.even[1].constant_term()}};
    GroupPoint pab = g.group().multiply(pa, pb);
    EXPECT_EQ(ab.even[0], num(0) + grassmann_constant(4, pab.values[0]));
    EXPECT_EQ(ab.even[1], grassmann_constant(4, pab.values[1]));
    EXPECT_TRUE(ab.odd[0].is_zero() && ab.odd[1].is_zero());
  }
}
