#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "koszul/homogeneous.hpp"

using namespace koszul;

namespace {

void expect_ok(const ValidationReport& rep) {
  for (const auto& v : rep.violations) ADD_FAILURE() << v.check << ": " << v.witness;
}

std::string dump(const SHCP& s, const Section& phi) {
  std::string out;
  for (const auto& [w, f] : phi.table())
    out += format_wedge(s.algebra(), w) + " -> " + f.to_string(s.group().names(), {}) + "; ";
  return out;
}

Section random_combination(const std::vector<Section>& basis, const Section& zero, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  Section out = zero;
  for (const auto& b : basis) out += b * Rational(c(rng));
  return out;
}

}  // namespace

TEST(SubPair, FixturesValidate) {
  auto g = fixtures::gl11();
  expect_ok(validate_subpair(g, fixtures::borel_subpair()));
  expect_ok(validate_subpair(g, fixtures::diagonal_subpair()));
  expect_ok(validate_subpair(g, fixtures::trivial_subpair(g)));
  expect_ok(validate_subpair(g, fixtures::full_subpair(g)));
}

TEST(SubPair, DefectsAreNamed) {
  auto g = fixtures::gl11();
  auto h = fixtures::borel_subpair();
  h.h_basis = {fixtures::vec({{2, 1}}), fixtures::vec({{3, 1}})};  // [T1,T2] leaves h
  auto rep = validate_subpair(g, h);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations.front().check, "h-closed");
  auto d = fixtures::diagonal_subpair();
  d.quotient[1] = Poly::even_var(1, 0, 0) * Rational(2);  // not a coalgebra map
  bool found = false;
  for (const auto& v : validate_subpair(g, d).violations) found |= v.check == "quotient-coproduct";
  EXPECT_TRUE(found);
  auto c = fixtures::borel_subpair();
  c.complement = {fixtures::vec({{2, 1}})};
  found = false;
  for (const auto& v : validate_subpair(g, c).violations) found |= v.check == "complement-rank";
  EXPECT_TRUE(found);
}

TEST(Invariance, UnitIsInvariantForEverySubPair) {
  auto g = fixtures::gl11();
  for (const auto& h : {fixtures::borel_subpair(), fixtures::diagonal_subpair(), fixtures::trivial_subpair(g),
                        fixtures::full_subpair(g)})
    for (auto side : {CosetSide::Left, CosetSide::Right}) {
      auto v = is_invariant_section(g, unit_section(g), h, side);
      EXPECT_TRUE(v.invariant());
      expect_ok(v.witnesses);
    }
}

TEST(Invariance, PhiOneIsNotBorelInvariant) {
  auto g = fixtures::gl11();
  auto v = is_invariant_section(g, delta_section(g, 0), fixtures::borel_subpair(), CosetSide::Left);
  EXPECT_FALSE(v.invariant());
  EXPECT_FALSE(v.d_route);
  EXPECT_FALSE(v.lemma_route);
  ASSERT_FALSE(v.witnesses.ok());
  EXPECT_NE(v.witnesses.violations.front().witness.find("D^L_X1"), std::string::npos);
  // D^L_{X1} phi_1 = phi_1.
  auto d = left_vector_field(g, uea_basis(g.algebra(), 0), delta_section(g, 0));
  EXPECT_EQ(d, delta_section(g, 0));
}

TEST(Invariance, DisconnectedSubgroupIsFlagged) {
  auto g = fixtures::gl11();
  auto h = fixtures::borel_subpair();
  h.connected = false;
  auto v = is_invariant_section(g, unit_section(g), h, CosetSide::Left);
  EXPECT_TRUE(v.invariant());
  EXPECT_EQ(v.notes.size(), 1u);
}

TEST(Solver, BorelInvariants) {
  auto g = fixtures::gl11();
  auto h = fixtures::borel_subpair();
  auto sols = invariant_section_solve(g, h, laurent_ansatz(g.group(), 2), CosetSide::Left);
  ASSERT_EQ(sols.size(), 2u);
  std::vector<std::string> got;
  for (const auto& s : sols) got.push_back(dump(g, s));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got[0], "1 -> 1; ");
  EXPECT_EQ(got[1], "T2 -> y1^-1*y2; ");
  for (const auto& s : sols) {
    auto v = is_invariant_section(g, s, h, CosetSide::Left);
    EXPECT_TRUE(v.d_route);
    EXPECT_TRUE(v.lemma_route);
  }
}

TEST(Solver, DiagonalInvariantsFrozen) {
  auto g = fixtures::gl11();
  auto h = fixtures::diagonal_subpair();
  auto sols = invariant_section_solve(g, h, laurent_ansatz(g.group(), 2), CosetSide::Left);
  std::vector<std::string> got;
  for (const auto& s : sols) got.push_back(dump(g, s));
  std::sort(got.begin(), got.end());
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0], "1 -> 1; ");
  EXPECT_EQ(got[1], "1 -> y1*y2^-1; ");
  EXPECT_EQ(got[2], "1 -> y1^-1*y2; ");
  for (const auto& s : sols) EXPECT_TRUE(is_invariant_section(g, s, h, CosetSide::Left).invariant());
}

TEST(Solver, ExtremeSubgroups) {
  auto g = fixtures::gl11();
  auto ansatz = laurent_ansatz(g.group(), 1);
  auto full = invariant_section_solve(g, fixtures::full_subpair(g), ansatz, CosetSide::Left);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(dump(g, full[0]), "1 -> 1; ");
  auto triv = invariant_section_solve(g, fixtures::trivial_subpair(g), ansatz, CosetSide::Left);
  EXPECT_EQ(triv.size(), ansatz.size() * 4);
}

TEST(Solver, RightCosetsOfBorel) {
  auto g = fixtures::gl11();
  auto h = fixtures::borel_subpair();
  auto sols = invariant_section_solve(g, h, laurent_ansatz(g.group(), 2), CosetSide::Right);
  EXPECT_FALSE(sols.empty());
  for (const auto& s : sols) EXPECT_TRUE(is_invariant_section(g, s, h, CosetSide::Right).invariant());
}

TEST(Invariance, TwoRoutesAgreeOnRandomAnsatzSections) {
  auto g = fixtures::gl11();
  std::mt19937_64 rng(20261016);
  std::size_t invariant = 0, total = 0;
  for (const auto& h : {fixtures::borel_subpair(), fixtures::diagonal_subpair()}) {
    auto ansatz = laurent_ansatz(g.group(), 1);
    auto sols = invariant_section_solve(g, h, ansatz, CosetSide::Left);
    std::vector<Section> all;
    for (const auto& w : all_wedges(g.q()))
      for (const auto& f : ansatz) {
        Section b(section_shape(g));
        b.add(w, f);
        all.push_back(b);
      }
    std::bernoulli_distribution perturb(0.5);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 250; ++t) {
      Section phi = random_combination(sols, Section(section_shape(g)), rng);
      if (perturb(rng)) phi += all[pick(rng)];
      auto v = is_invariant_section(g, phi, h, CosetSide::Left);
      EXPECT_EQ(v.d_route, v.lemma_route) << dump(g, phi);
      invariant += v.invariant();
      ++total;
    }
  }
  EXPECT_EQ(total, 500u);
  EXPECT_GT(invariant, 100u);
  EXPECT_LT(invariant, 400u);
}

TEST(Invariance, InversionExchangesSides) {
  auto g = fixtures::gl11();
  for (const auto& h : {fixtures::borel_subpair(), fixtures::diagonal_subpair()}) {
    auto ansatz = laurent_ansatz(g.group(), 2);
    for (auto side : {CosetSide::Left, CosetSide::Right}) {
      auto other = side == CosetSide::Left ? CosetSide::Right : CosetSide::Left;
      for (const auto& s : invariant_section_solve(g, h, ansatz, side)) {
        auto v = is_invariant_section(g, inv_pullback(g, s), h, other);
        EXPECT_TRUE(v.invariant()) << dump(g, s);
      }
    }
  }
}

TEST(Invariance, ProductsOfInvariantsAreInvariant) {
  auto g = fixtures::gl11();
  for (const auto& h : {fixtures::borel_subpair(), fixtures::diagonal_subpair()}) {
    auto sols = invariant_section_solve(g, h, laurent_ansatz(g.group(), 2), CosetSide::Left);
    for (const auto& a : sols)
      for (const auto& b : sols) EXPECT_TRUE(is_invariant_section(g, section_mul(a, b), h, CosetSide::Left).invariant());
  }
}

TEST(Invariance, OrbitMapsAreStabilizerInvariant) {
  auto g = fixtures::gl11();
  auto d = fixtures::standard_rep(g);
  MPoint p{Rational(1)};
  auto stab = stabilizer_subalgebra(d, p);
  // Reduced stabilizer of y = 1: {x1 = 1}, coordinate ring Q[t, t^-1] for x2.
  SubPairSpec h;
  h.h_basis = stab.basis;
  h.reduced = fixtures::torus(1);
  h.quotient = {Poly::constant(1, 0, 1), Poly::even_var(1, 0, 0)};
  expect_ok(validate_subpair(g, h));
  EXPECT_TRUE(in_reduced_stabilizer(d, GroupPoint{{Rational(1), Rational(5)}}, p));
  auto maps = orbit_map_pullback(d, reconstruct_action(d), p);
  ASSERT_EQ(maps.size(), 2u);
  for (const auto& m : maps) {
    auto v = is_invariant_section(g, m, h, CosetSide::Left);
    EXPECT_TRUE(v.invariant()) << dump(g, m);
    expect_ok(v.witnesses);
  }
}

TEST(Trivialization, UnitMapsToUnitTable) {
  auto g = fixtures::gl11();
  auto h = fixtures::borel_subpair();
  auto t = coset_trivialize(g, unit_section(g), h);
  EXPECT_EQ(t.shape().q, 1u);
  EXPECT_EQ(dump(g, t), "1 -> 1; ");
  EXPECT_EQ(coset_untrivialize(g, t, h), unit_section(g));
}

TEST(Trivialization, TrivialSubgroupIsIdentityOnTables) {
  auto g = fixtures::gl11();
  auto h = fixtures::trivial_subpair(g);
  Section phi = parse_section("phi_y1*Phi_T1 + 3*phi_y2^-1*Phi_T1*Phi_T2 + phi_y2*Phi_T2", g);
  auto t = coset_trivialize(g, phi, h);
  EXPECT_EQ(t, phi);
  EXPECT_EQ(coset_untrivialize(g, t, h), phi);
}

TEST(Trivialization, BorelRoundTrip) {
  auto g = fixtures::gl11();
  auto h = fixtures::borel_subpair();
  auto sols = invariant_section_solve(g, h, laurent_ansatz(g.group(), 2), CosetSide::Left);
  for (const auto& a : sols) {
    auto t = coset_trivialize(g, a, h);
    EXPECT_LE(t.table().size(), 2u);
    EXPECT_EQ(coset_untrivialize(g, t, h), a) << dump(g, a);
    for (const auto& b : sols)
      EXPECT_EQ(coset_trivialize(g, section_mul(a, b), h), section_mul(t, coset_trivialize(g, b, h)));
  }
  Section sum = sols[0] + sols[1];
  EXPECT_EQ(coset_trivialize(g, sum, h).table().size(), 2u);
}

TEST(Trivialization, DiagonalRoundTrip) {
  auto g = fixtures::gl11();
  auto h = fixtures::diagonal_subpair();
  for (const auto& a : invariant_section_solve(g, h, laurent_ansatz(g.group(), 2), CosetSide::Left))
    EXPECT_EQ(coset_untrivialize(g, coset_trivialize(g, a, h), h), a);
}

TEST(Trivialization, NonInvariantInputIsRejected) {
  auto g = fixtures::gl11();
  try {
    coset_trivialize(g, delta_section(g, 0), fixtures::borel_subpair());
    FAIL() << "expected rejection";
  } catch (const InvarianceError& e) {
    EXPECT_NE(std::string(e.what()).find("D^L_X1"), std::string::npos);
  }
}

TEST(QuotientAction, InvariantsPass) {
  auto g = fixtures::gl11();
  expect_ok(quotient_action_check(g, unit_section(g), fixtures::borel_subpair(), CosetSide::Left));
  for (const auto& h : {fixtures::borel_subpair(), fixtures::diagonal_subpair()})
    for (auto side : {CosetSide::Left, CosetSide::Right})
      for (const auto& s : invariant_section_solve(g, h, laurent_ansatz(g.group(), 2), side))
        expect_ok(quotient_action_check(g, s, h, side));
}

TEST(QuotientAction, NonInvariantSectionFails) {
  auto g = fixtures::gl11();
  auto rep = quotient_action_check(g, delta_section(g, 0), fixtures::borel_subpair(), CosetSide::Left);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations.front().check.rfind("layer", 0), 0u);
}
