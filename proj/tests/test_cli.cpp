#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "koszul/cli.hpp"

using namespace koszul;

namespace {

const std::string kDir = KOSZUL_FIXTURE_DIR;

Description load(const std::string& name) { return load_description(kDir + "/" + name); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Minimal valid file; tests splice defects into it.
const char* kTorus = R"(algebra:
  even: [X]
  odd: []
reduced_group:
  generators: [y]
  invertible: [y]
  coproduct: {y: "y_l*y_r"}
  counit: {y: "1"}
  antipode: {y: "y^-1"}
  tangent:
    X: {y: "1"}
)";

DescriptionError parse_error(const std::string& text) {
  try {
    parse_description(text, "t.yaml");
  } catch (const DescriptionError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a description error";
  return DescriptionError("t.yaml", 0, 0, "none");
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return s.replace(at, from.size(), to);
}

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(KOSZUL_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Description, Gl11MatchesProgrammaticFixture) {
  auto d = load("gl11.yaml");
  auto want = fixtures::gl11();
  const auto& g = d.shcp.algebra();
  ASSERT_EQ(g.names(), want.algebra().names());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(g.bracket(i, j), want.algebra().bracket(i, j)) << i << "," << j;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d.shcp.sigma(i, j), want.sigma(i, j));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(d.shcp.group().coproduct_image(i), want.group().coproduct_image(i));
    EXPECT_EQ(d.shcp.group().antipode_image(i), want.group().antipode_image(i));
  }
  for (const auto& [name, phi] : delta_sections(want)) {
    SCOPED_TRACE(name);
    EXPECT_EQ(mu_pullback(d.shcp, phi), mu_pullback(want, phi));
  }
}

TEST(Description, ActionsAndSubPairsMatchFixtures) {
  auto d = load("gl11.yaml");
  auto g = fixtures::gl11();
  EXPECT_EQ(reconstruct_action(d.action("left_multiplication").data),
            reconstruct_action(fixtures::left_multiplication(g)));
  EXPECT_EQ(reconstruct_action(d.action("standard_rep").data), reconstruct_action(fixtures::standard_rep(g)));
  EXPECT_EQ(reconstruct_action(d.action("conjugation").data), reconstruct_action(fixtures::conjugation(g)));
  auto ansatz = laurent_ansatz(g.group(), 2);
  EXPECT_EQ(invariant_section_solve(d.shcp, d.subpair("borel"), ansatz, CosetSide::Left),
            invariant_section_solve(g, fixtures::borel_subpair(), ansatz, CosetSide::Left));
  EXPECT_EQ(invariant_section_solve(d.shcp, d.subpair("diagonal"), ansatz, CosetSide::Left),
            invariant_section_solve(g, fixtures::diagonal_subpair(), ansatz, CosetSide::Left));
  auto m = fixtures::gl11_model(g);
  ASSERT_TRUE(d.model.has_value());
  EXPECT_EQ(d.model->dictionary, m.dictionary);
  EXPECT_EQ(d.model->law, m.law);
}

TEST(Description, EveryBundledFixtureParses) {
  for (const char* f : {"gl11.yaml", "gl11_perturbed.yaml", "gl11_identity_sigma.yaml", "even_torus.yaml",
                        "nilpotent_q3.yaml", "odd_line.yaml", "empty.yaml"}) {
    SCOPED_TRACE(f);
    EXPECT_NO_THROW(load(f));
  }
}

TEST(Description, DiagnosticsCarryLineAndColumn) {
  std::string base = kTorus;
  // Unknown identifier inside a quoted formula: column of the identifier.
  auto e = parse_error(replace(base, "\"y_l*y_r\"", "\"y_l*z_r\""));
  EXPECT_EQ(e.line(), 7u);
  EXPECT_EQ(e.column(), 23u);
  EXPECT_NE(std::string(e.what()).find("unknown identifier 'z_r'"), std::string::npos);

  e = parse_error(replace(base, "counit: {y: \"1\"}", "counit: {y: \"1/0x\"}"));
  EXPECT_EQ(e.line(), 8u);
  EXPECT_NE(std::string(e.what()).find("malformed rational"), std::string::npos);

  e = parse_error(replace(base, "    X: {y: \"1\"}", "    W: {y: \"1\"}"));
  EXPECT_EQ(e.line(), 11u);
  EXPECT_NE(std::string(e.what()).find("unknown even basis element 'W'"), std::string::npos);

  e = parse_error(replace(base, "  invertible: [y]\n", ""));
  EXPECT_NE(std::string(e.what()).find("negative power of non-invertible generator y"), std::string::npos);

  e = parse_error(replace(base, "  antipode: {y: \"y^-1\"}\n", ""));
  EXPECT_NE(std::string(e.what()).find("missing key 'antipode'"), std::string::npos);

  e = parse_error(replace(base, "even: [X]", "even: [X, X]"));
  EXPECT_EQ(e.line(), 2u);
  EXPECT_NE(std::string(e.what()).find("duplicate name 'X'"), std::string::npos);

  e = parse_error(base + "sigma:\n  X: {X: \"q\"}\n");
  EXPECT_EQ(e.line(), 13u);
  EXPECT_NE(std::string(e.what()).find("unknown identifier 'q'"), std::string::npos);

  e = parse_error("algebra: [unclosed\n");
  EXPECT_EQ(e.line(), 2u);
}

TEST(Description, RationalsStayExact) {
  std::string text = replace(kTorus, "    X: {y: \"1\"}", "    X: {y: \"1/3\"}");
  auto d = parse_description(text);
  EXPECT_EQ(d.shcp.tangent(0).values[0], fraction(1, 3));
}

TEST(Commands, ValidateExitStatus) {
  EXPECT_EQ(cmd_validate(load("gl11.yaml"), true, Format::Human).status, kExitOk);
  EXPECT_EQ(cmd_validate(load("empty.yaml"), true, Format::Human).status, kExitOk);
  auto bad = cmd_validate(load("gl11_perturbed.yaml"), false, Format::Human);
  EXPECT_EQ(bad.status, kExitValidation);
  EXPECT_NE(bad.output.find("FAIL shcp jacobi: (T1,T1,T2)"), std::string::npos);
  auto id = cmd_validate(load("gl11_identity_sigma.yaml"), false, Format::Human);
  EXPECT_EQ(id.status, kExitValidation);
  EXPECT_NE(id.output.find("sigma-infinitesimal"), std::string::npos);
}

TEST(Commands, MulTableLayouts) {
  auto t = cmd_mul_table(load("even_torus.yaml"), "phi_y1", Format::Human);
  EXPECT_EQ(t.output, "mu^*(phi_y1)\nX\\Y | 1\n1   | x1*y1\n");
  auto phi = cmd_mul_table(load("gl11.yaml"), "phi_y1", Format::Human).output;
  EXPECT_NE(phi.find("T1    | 0     | 0                  | -1/2*x1*y2 | 0"), std::string::npos) << phi;
  // Frozen; confirmed by the Grassmann-point sweep.
  EXPECT_EQ(cmd_mul_table(load("gl11.yaml"), "Phi_T1", Format::Human).output,
            "mu^*(Phi_T1)\n"
            "X\\Y   | 1        | T1 | T2 | T1∧T2\n"
            "1     | 0        | 1  | 0  | 0\n"
            "T1    | y1^-1*y2 | 0  | 0  | 0\n"
            "T2    | 0        | 0  | 0  | 0\n"
            "T1∧T2 | 0        | 0  | 0  | 0\n");
  EXPECT_THROW(cmd_mul_table(load("gl11.yaml"), "phi_q", Format::Human), UsageError);
}

TEST(Commands, GammaTableShapes) {
  EXPECT_EQ(cmd_gamma_table(load("empty.yaml"), Format::Human).output,
            "gamma_hat^-1((h^-1.gamma(X)) gamma(Y))\nX\\Y | 1\n1   | 1\n");
  EXPECT_EQ(cmd_gamma_table(load("odd_line.yaml"), Format::Human).output,
            "gamma_hat^-1((h^-1.gamma(X)) gamma(Y))\nX\\Y | 1 | T\n1   | 1 | T\nT   | T | 0\n");
  auto gl = cmd_gamma_table(load("gl11.yaml"), Format::Human).output;
  EXPECT_NE(gl.find("y1^-1*y2*(T1∧T2 - 1/2*X1 - 1/2*X2)"), std::string::npos) << gl;
  EXPECT_NE(gl.find("1/4*X1^2 + 1/2*X1*X2 + 1/4*X2^2"), std::string::npos) << gl;
}

TEST(Commands, ActionInGroupCoordinates) {
  auto r = cmd_action(load("gl11.yaml"), "left_multiplication", Format::Human);
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.output,
            "action left_multiplication\n"
            "a^*(y1) = x1*y1*theta1*theta2 + x1*y1 + x1*theta1*xi2\n"
            "a^*(y2) = x2*y2*theta1*theta2 + x2*y2 + x2*theta2*xi1\n"
            "a^*(xi1) = x1*y2*theta1 + x1*xi1 + x1*theta1*theta2*xi1\n"
            "a^*(xi2) = x2*y1*theta2 + x2*xi2 + x2*theta1*theta2*xi2\n"
            "ok   reconstruction-vs-mu-pullback\n");
  EXPECT_THROW(cmd_action(load("gl11.yaml"), "nope", Format::Human), Error);
  EXPECT_THROW(cmd_action(load("even_torus.yaml"), "", Format::Human), Error);
}

TEST(Commands, StabilizerAndTransitivity) {
  auto d = load("gl11.yaml");
  EXPECT_EQ(cmd_stabilizer(d, "", "y1=1,y2=1", Format::Human).output, "trivial (0|0)\nbracket-closed: yes\n");
  EXPECT_EQ(cmd_stabilizer(d, "conjugation", "y1=1,y2=1", Format::Human).output,
            "all of g (2|2)\nbracket-closed: yes\n");
  EXPECT_EQ(cmd_stabilizer(d, "standard_rep", "y=3/2", Format::Human).output,
            "stabilizer (1|1): X2, T1\nbracket-closed: yes\n");
  EXPECT_EQ(cmd_transitive(d, "", "y1=2,y2=-1", Format::Human).output.substr(0, 11), "transitive\n");
  EXPECT_EQ(cmd_transitive(d, "conjugation", "y1=1,y2=1", Format::Human).output.substr(0, 15), "not transitive\n");
  EXPECT_THROW(cmd_stabilizer(d, "", "y1=1", Format::Human), UsageError);
  EXPECT_THROW(cmd_stabilizer(d, "", "y1=1,y3=1", Format::Human), UsageError);
  EXPECT_THROW(cmd_stabilizer(d, "", "y1=1,y2=x", Format::Human), UsageError);
}

TEST(Commands, Invariants) {
  auto d = load("gl11.yaml");
  EXPECT_EQ(cmd_invariants(d, "borel", 2, CosetSide::Left, "", Format::Human).output,
            "2 invariant sections on G/H up to degree 2\n  1 -> 1\n  T2 -> y1^-1*y2\n");
  auto yes = cmd_invariants(d, "borel", 0, CosetSide::Left, "1 + phi_y1^-1*phi_y2*Phi_T2", Format::Human);
  EXPECT_EQ(yes.status, kExitOk) << yes.output;
  auto no = cmd_invariants(d, "borel", 0, CosetSide::Left, "phi_y1", Format::Human);
  EXPECT_EQ(no.status, kExitValidation);
  EXPECT_NE(no.output.find("D^L_X1"), std::string::npos);
}

TEST(Commands, OracleCounts) {
  auto r = cmd_oracle(load("gl11.yaml"), 1, 50, 4, Format::Human);
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.output, "model law: 50/50 exact matches\ngroup probes: 50/50 passed\n");
  EXPECT_THROW(cmd_oracle(load("even_torus.yaml"), 1, 5, 4, Format::Human), UsageError);
}

TEST(RoundTrip, SectionDumpsReparse) {
  auto d = load("gl11.yaml");
  const SHCP& s = d.shcp;
  for (const auto& [name, phi] : delta_sections(s)) {
    Section mu = mu_pullback(s, phi);
    auto j = section_to_json(s, mu, section_names(d, mu.shape()));
    EXPECT_EQ(section_from_json(s, json::parse(j.dump())), mu) << name;
  }
  const ActionBlock& a = d.action("conjugation");
  for (const auto& t : reconstruct_action(a.data)) {
    auto j = section_to_json(s, t, action_section_names(a));
    EXPECT_EQ(section_from_json(s, json::parse(j.dump())), t);
  }
  auto machine = json::parse(cmd_invariants(d, "diagonal", 2, CosetSide::Right, "", Format::Machine).output);
  auto sols = invariant_section_solve(s, d.subpair("diagonal"), laurent_ansatz(s.group(), 2), CosetSide::Right);
  ASSERT_EQ(machine["sections"].size(), sols.size());
  for (std::size_t i = 0; i < sols.size(); ++i) EXPECT_EQ(section_from_json(s, machine["sections"][i]), sols[i]);
}

TEST(RoundTrip, MalformedDumpsAreRejected) {
  auto d = load("gl11.yaml");
  auto j = section_to_json(d.shcp, delta_section(d.shcp, 0), section_names(d, section_shape(d.shcp)));
  auto bad = j;
  bad["entries"][0]["wedge"] = json::array({json::array({"T2", "T1"})});
  EXPECT_THROW(section_from_json(d.shcp, bad), Error);
  bad = j;
  bad["entries"][0]["wedge"] = json::array({json::array({"X1"})});
  EXPECT_THROW(section_from_json(d.shcp, bad), Error);
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  auto d1 = load("gl11.yaml");
  auto d2 = load("gl11.yaml");
  for (Format f : {Format::Human, Format::Machine}) {
    EXPECT_EQ(cmd_mul_table(d1, "phi_y2", f).output, cmd_mul_table(d2, "phi_y2", f).output);
    EXPECT_EQ(cmd_gamma_table(d1, f).output, cmd_gamma_table(d2, f).output);
    EXPECT_EQ(cmd_action(d1, "conjugation", f).output, cmd_action(d2, "conjugation", f).output);
    EXPECT_EQ(cmd_oracle(d1, 7, 10, 3, f).output, cmd_oracle(d2, 7, 10, 3, f).output);
  }
}

TEST(Binary, ExitCodesAndOutput) {
  const std::string f = " --file " + kDir + "/";
  auto ok = run_cli("validate" + f + "gl11.yaml");
  EXPECT_EQ(ok.status, 0) << ok.out;
  auto bad = run_cli("validate" + f + "gl11_perturbed.yaml");
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("jacobi"), std::string::npos);
  EXPECT_EQ(run_cli("validate" + f + "empty.yaml").status, 0);
  EXPECT_EQ(run_cli("frobnicate" + f + "gl11.yaml").status, 2);
  EXPECT_EQ(run_cli("validate").status, 2);
  EXPECT_EQ(run_cli("mul-table --section phi_q" + f + "gl11.yaml").status, 2);
  EXPECT_EQ(run_cli("validate --file /nonexistent.yaml").status, 2);
  auto stab = run_cli("stabilizer --point y1=1,y2=1" + f + "gl11.yaml");
  EXPECT_EQ(stab.status, 0);
  EXPECT_EQ(stab.out.substr(0, 14), "trivial (0|0)\n");
  auto orc = run_cli("oracle --seed 1 --count 50" + f + "gl11.yaml");
  EXPECT_NE(orc.out.find("50/50 exact matches"), std::string::npos);
}

TEST(Binary, OutFileMatchesStdoutAndIsStable) {
  const std::string f = " --file " + kDir + "/gl11.yaml";
  const std::string path = testing::TempDir() + "koszul_mul.json";
  auto a = run_cli("mul-table --section phi_y1 --format machine" + f);
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(run_cli("mul-table --section phi_y1 --format machine --out " + path + f).status, 0);
  EXPECT_EQ(read_file(path), a.out);
  EXPECT_EQ(run_cli("mul-table --section phi_y1 --format machine" + f).out, a.out);
  auto d = load("gl11.yaml");
  auto j = json::parse(a.out);
  EXPECT_EQ(section_from_json(d.shcp, j["pullback"]), mu_pullback(d.shcp, delta_section(d.shcp, 0)));
}
