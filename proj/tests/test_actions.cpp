#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "koszul/actions.hpp"

using namespace koszul;

namespace {

void expect_ok(const ValidationReport& rep) {
  for (const auto& v : rep.violations) ADD_FAILURE() << v.check << ": " << v.witness;
}

}  // namespace

TEST(ActionData, FixturesValidate) {
  auto g = fixtures::gl11();
  expect_ok(validate_action_data(fixtures::left_multiplication(g)));
  expect_ok(validate_action_data(fixtures::standard_rep(g)));
  expect_ok(validate_action_data(fixtures::conjugation(g)));
}

TEST(ActionData, SwappedOddFieldsAreRejected) {
  auto g = fixtures::gl11();
  auto rep = validate_action_data(fixtures::left_multiplication(g, true));
  EXPECT_FALSE(rep.ok());
}

TEST(ActionData, TrivialActionOnAPoint) {
  auto g = fixtures::gl11();
  ActionData d = make_action(g, SuperDomain{}, {"x1", "x2"}, {}, {{}, {}, {}, {}});
  expect_ok(validate_action_data(d));
  auto t = reconstruct_action(d);
  EXPECT_TRUE(t.empty());
  expect_ok(check_action_axioms(d, t));
}

TEST(Reconstruction, SatisfiesActionAxioms) {
  auto g = fixtures::gl11();
  for (const auto& d : {fixtures::left_multiplication(g), fixtures::standard_rep(g), fixtures::conjugation(g)}) {
    auto t = reconstruct_action(d);
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i].at(Wedge{}), d.coaction[i]);
    expect_ok(check_action_axioms(d, t));
  }
}

TEST(Reconstruction, FlippedEntryIsPinpointed) {
  auto g = fixtures::gl11();
  auto d = fixtures::left_multiplication(g);
  auto t = reconstruct_action(d);
  Wedge w{{0}};
  Poly v = t[0].at(w);
  t[0].add(w, v * Rational(-2));
  auto rep = check_action_axioms(d, t);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations[0].check, "action-associativity");
  EXPECT_NE(rep.violations[0].witness.find("y1"), std::string::npos);
}

TEST(Reconstruction, AgreesWithMuPullback) {
  auto g = fixtures::gl11();
  auto d = fixtures::left_multiplication(g);
  auto t = reconstruct_action(d);
  expect_ok(compare_with_mu_pullback(d, t, fixtures::gl11_model(g), fixtures::gl11_model_inverse()));
}

TEST(Stabilizer, LeftMultiplicationIsFree) {
  auto g = fixtures::gl11();
  auto d = fixtures::left_multiplication(g);
  for (const MPoint& p : {MPoint{1, 1}, MPoint{2, Rational(-3)}}) {
    auto st = stabilizer_subalgebra(d, p);
    EXPECT_TRUE(st.basis.empty());
    EXPECT_TRUE(is_transitive_at(d, p, true).verdict);
  }
}

TEST(Stabilizer, ConjugationAtIdentityIsEverything) {
  auto g = fixtures::gl11();
  auto st = stabilizer_subalgebra(fixtures::conjugation(g), MPoint{1, 1});
  EXPECT_EQ(st.even, 2u);
  EXPECT_EQ(st.odd, 2u);
  EXPECT_TRUE(st.bracket_closed);
}

TEST(Stabilizer, StandardRepresentation) {
  auto g = fixtures::gl11();
  auto d = fixtures::standard_rep(g);
  MPoint p{1};
  Matrix a = differential_at_identity(d, p);
  Matrix want{{1, 0, 0, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(a, want);
  // Brute force: X in g_p iff the differential kills it, tested on every
  // vector with entries in {-1, 0, 1}.
  auto st = stabilizer_subalgebra(d, p);
  EXPECT_EQ(st.even, 1u);
  EXPECT_EQ(st.odd, 1u);
  EXPECT_TRUE(st.bracket_closed);
  for (int code = 0; code < 81; ++code) {
    LieVector v;
    int c = code;
    for (int i = 0; i < 4; ++i, c /= 3) v.add(i, Rational(c % 3 - 1));
    bool killed = true;
    for (const auto& row : a) {
      Rational s(0);
      for (const auto& [i, x] : v) s += row[static_cast<std::size_t>(i)] * x;
      killed &= is_zero(s);
    }
    EXPECT_EQ(killed, in_span(st.basis, v, 4));
  }
  auto tr = is_transitive_at(d, p, true);
  EXPECT_TRUE(tr.submersive);
  EXPECT_TRUE(tr.verdict);
  EXPECT_FALSE(is_transitive_at(d, p, false).verdict);
  EXPECT_TRUE(in_reduced_stabilizer(d, GroupPoint{{1, 5}}, p));
  EXPECT_FALSE(in_reduced_stabilizer(d, GroupPoint{{2, 5}}, p));
}

TEST(OrbitMap, AnnihilatedByStabilizerFields) {
  auto g = fixtures::gl11();
  for (const auto& d : {fixtures::standard_rep(g), fixtures::conjugation(g), fixtures::left_multiplication(g)}) {
    MPoint p(d.m.nev(), Rational(1));
    auto t = reconstruct_action(d);
    auto sections = orbit_map_pullback(d, t, p);
    auto st = stabilizer_subalgebra(d, p);
    for (const auto& x : st.basis) {
      auto u = uea_from_lie(g.algebra(), x, Rational(1));
      for (const auto& s : sections) EXPECT_TRUE(left_vector_field(g, u, s).table().empty());
    }
  }
}

TEST(OrbitMap, LeftMultiplicationAtIdentityGivesCoordinates) {
  auto g = fixtures::gl11();
  auto d = fixtures::left_multiplication(g);
  auto sections = orbit_map_pullback(d, reconstruct_action(d), MPoint{1, 1});
  auto model = fixtures::gl11_model(g);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(sections[i], model.dictionary[i]) << i;
}

TEST(ActionData, IdentitySigmaBreaksCompatibility) {
  auto g = fixtures::gl11(false);
  auto rep = validate_action_data(fixtures::left_multiplication(g));
  bool sigma = false;
  for (const auto& v : rep.violations) sigma |= v.check == "compatibility-sigma";
  EXPECT_TRUE(sigma);
}

TEST(Reconstruction, LeftMultiplicationInGroupCoordinates) {
  auto g = fixtures::gl11();
  auto d = fixtures::left_multiplication(g);
  auto t = reconstruct_action(d);
  PolyRing gx{{"x1", "x2"}, {"t1", "t2"}};
  std::vector<Poly> inv;
  for (const char* f : {"x1*(1 + 1/2*t1*t2)", "x2*(1 + 3/2*t1*t2)", "-t1", "-t2"}) inv.push_back(parse_poly(f, gx));
  const char* want[] = {"x1*y1*(1 + t1*t2) + x1*xi2*t1", "x2*y2*(1 + t1*t2) + x2*xi1*t2",
                        "x1*xi1*(1 + t1*t2) + x1*y2*t1", "x2*xi2*(1 + t1*t2) + x2*y1*t2"};
  for (std::size_t i = 0; i < 4; ++i)
    EXPECT_EQ(change_group_coordinates(d, to_ring(t[i]), inv), parse_group_odd_first(want[i], gx, d.m)) << i;
  // The sign in front of t1*t2 in the last formula cannot be -1.
  EXPECT_NE(change_group_coordinates(d, to_ring(t[3]), inv),
            parse_group_odd_first("x2*xi2*(1 - t1*t2) + x2*y1*t2", gx, d.m));
}

TEST(Reconstruction, MatchesMatrixActionAtGrassmannPoints) {
  auto g = fixtures::gl11();
  auto model = fixtures::gl11_model(g);
  GroupOracle o(g, 4);
  std::mt19937_64 rng(11);
  struct Case {
    ActionData d;
    std::vector<const char*> law;
  };
  // Matrix [[x1, t1], [t2, x2]] acting on the column (y, xi) and on matrices.
  std::vector<Case> cases{
      {fixtures::standard_rep(g), {"x1*y + t1*xi", "t2*y + x2*xi"}},
      {fixtures::left_multiplication(g), {"x1*y1 + t1*xi2", "x2*y2 + t2*xi1", "x1*xi1 + t1*y2", "t2*y1 + x2*xi2"}}};
  for (const auto& c : cases) {
    PolyRing ring{{"x1", "x2"}, {"t1", "t2"}};
    ring.even.insert(ring.even.end(), c.d.m.even.begin(), c.d.m.even.end());
    ring.odd.insert(ring.odd.end(), c.d.m.odd.begin(), c.d.m.odd.end());
    std::vector<Poly> law;
    for (const char* f : c.law) law.push_back(parse_poly(f, ring));
    auto forms = action_ring_forms(reconstruct_action(c.d));
    for (int t = 0; t < 20; ++t) {
      SPoint p = o.random_point(rng), m = random_domain_point(c.d.m, 4, rng);
      expect_ok(action_vs_model(c.d, forms, model, law, p, m, 4));
    }
  }
}

// Frozen after the matrix action check above.
TEST(Reconstruction, StandardRepresentationTable) {
  auto g = fixtures::gl11();
  auto d = fixtures::standard_rep(g);
  auto t = reconstruct_action(d);
  PolyRing ring{{"x1", "x2", "y"}, {"xi"}};
  auto entry = [&](std::size_t f, std::vector<int> w) { return ring.format(t[f].at(Wedge{std::move(w)})); };
  EXPECT_EQ(entry(0, {}), "x1*y");
  EXPECT_EQ(entry(0, {0}), "-x1*xi");
  EXPECT_EQ(entry(0, {1}), "0");
  EXPECT_EQ(entry(0, {0, 1}), "-1/2*x1*y");
  EXPECT_EQ(entry(1, {}), "x2*xi");
  EXPECT_EQ(entry(1, {0}), "0");
  EXPECT_EQ(entry(1, {1}), "-x2*y");
  EXPECT_EQ(entry(1, {0, 1}), "1/2*x2*xi");
}
