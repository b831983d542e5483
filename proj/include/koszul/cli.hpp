#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"

namespace koszul {

enum class Format { Human, Machine };

// Exit status and the text a command prints.
struct CommandResult {
  int status = 0;
  std::string output;
};

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

// Usage errors: unknown names, malformed points.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace cli_detail {

inline std::string report_lines(const ValidationReport& rep, const std::string& scope) {
  std::string out;
  for (const auto& v : rep.violations) out += "FAIL " + scope + " " + v.check + ": " + v.witness + "\n";
  if (rep.ok()) out += "ok   " + scope + "\n";
  return out;
}

inline json report_json(const ValidationReport& rep) {
  json a = json::array();
  for (const auto& v : rep.violations) a.push_back({{"check", v.check}, {"witness", v.witness}});
  return a;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string format_section_line(const SHCP& s, const Section& phi, const SectionNames& names) {
  if (phi.table().empty()) return "0";
  std::string out;
  for (const auto& [w, f] : phi.table()) {
    if (!out.empty()) out += "; ";
    out += format_wedge(s.algebra(), w) + " -> " + f.to_string(names.even, names.odd);
  }
  return out;
}

inline std::string format_lie_list(const SuperLieAlgebra& g, const std::vector<LieVector>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : ", ") + g.format(v);
  return out;
}

}  // namespace cli_detail

// "y1=1,y2=2/3": values of the even generators of M; odd ones vanish.
inline MPoint parse_point(const std::string& text, const SuperDomain& m) {
  MPoint p(m.nev());
  std::vector<bool> seen(m.nev(), false);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("point entry '" + item + "' is not name=value");
    std::string name = item.substr(0, eq), value = item.substr(eq + 1);
    auto it = std::find(m.even.begin(), m.even.end(), name);
    if (it == m.even.end()) throw UsageError("unknown even generator '" + name + "' in point");
    auto i = static_cast<std::size_t>(it - m.even.begin());
    try {
      p[i] = parse_rational(value);
    } catch (const Error&) {
      throw UsageError("malformed rational '" + value + "' in point");
    }
    seen[i] = true;
  }
  for (std::size_t i = 0; i < m.nev(); ++i)
    if (!seen[i]) throw UsageError("point has no value for '" + m.even[i] + "'");
  return p;
}

inline CommandResult cmd_validate(const Description& d, bool laws, Format fmt) {
  using namespace cli_detail;
  const SHCP& s = d.shcp;
  std::vector<std::pair<std::string, ValidationReport>> parts;
  parts.emplace_back("shcp", s.validate());
  if (laws) parts.emplace_back("hopf-laws", hopf_axiom_suite(s, delta_sections(s)));
  for (const auto& a : d.actions) parts.emplace_back("action:" + a.name, validate_action_data(a.data));
  for (const auto& [name, h] : d.subpairs) parts.emplace_back("subpair:" + name, validate_subpair(s, h));
  bool ok = true;
  for (const auto& [_, r] : parts) ok = ok && r.ok();
  CommandResult res{ok ? kExitOk : kExitValidation, ""};
  if (fmt == Format::Machine) {
    json j;
    j["ok"] = ok;
    for (const auto& [scope, r] : parts) j["reports"][scope] = report_json(r);
    res.output = dump(j);
  } else {
    for (const auto& [scope, r] : parts) res.output += report_lines(r, scope);
  }
  return res;
}

inline CommandResult cmd_mul_table(const Description& d, const std::string& section, Format fmt) {
  const SHCP& s = d.shcp;
  Section phi;
  try {
    phi = parse_section(section, s);
  } catch (const ParseError& e) {
    throw UsageError("section '" + section + "': " + e.what());
  }
  Section mu = mu_pullback(s, phi);
  SectionNames names = section_names(d, mu.shape());
  if (fmt == Format::Machine) {
    json j;
    j["section"] = section;
    j["pullback"] = section_to_json(s, mu, names);
    return {kExitOk, cli_detail::dump(j)};
  }
  return {kExitOk, "mu^*(" + section + ")\n" + render_two_factor(s, mu, names)};
}

inline CommandResult cmd_gamma_table(const Description& d, Format fmt) {
  const SHCP& s = d.shcp;
  const auto& g = s.algebra();
  const auto& names = s.group().names();
  auto table = twisted_gamma_table(s);
  auto W = all_wedges(s.q());
  if (fmt == Format::Machine) {
    json j = json::array();
    for (std::size_t a = 0; a < W.size(); ++a)
      for (std::size_t b = 0; b < W.size(); ++b)
        j.push_back({{"x", wedge_to_json(g, W[a])}, {"y", wedge_to_json(g, W[b])},
                     {"value", zwedge_to_json(g, table[a][b], names)}});
    return {kExitOk, cli_detail::dump(j)};
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"X\\Y"};
  for (const auto& w : W) head.push_back(format_wedge(g, w));
  rows.push_back(head);
  for (std::size_t a = 0; a < W.size(); ++a) {
    std::vector<std::string> row{format_wedge(g, W[a])};
    for (std::size_t b = 0; b < W.size(); ++b) row.push_back(format_zwedge(g, table[a][b], names));
    rows.push_back(row);
  }
  return {kExitOk, "gamma_hat^-1((h^-1.gamma(X)) gamma(Y))\n" + render_grid(rows)};
}

// Reconstructed action table; in the block's coordinates when given.
inline CommandResult cmd_action(const Description& d, const std::string& name, Format fmt) {
  using namespace cli_detail;
  const ActionBlock& a = d.action(name);
  const ActionData& ad = a.data;
  const SHCP& s = d.shcp;
  ValidationReport data = validate_action_data(ad);
  if (!data.ok()) {
    if (fmt == Format::Machine) return {kExitValidation, dump({{"action", a.name}, {"validation", report_json(data)}})};
    return {kExitValidation, report_lines(data, "action:" + a.name)};
  }
  ActionTable t = reconstruct_action(ad);
  SectionNames names = action_section_names(a);
  std::vector<std::string> formulas;
  if (a.coordinates) {
    std::vector<std::string> ev = a.coordinates->even, od = a.coordinates->odd;
    ev.insert(ev.end(), ad.m.even.begin(), ad.m.even.end());
    od.insert(od.end(), ad.m.odd.begin(), ad.m.odd.end());
    for (const auto& f : action_ring_forms(t))
      formulas.push_back(change_group_coordinates(ad, f, a.delta_images).to_string(ev, od));
  }
  std::optional<ValidationReport> two_route;
  if (d.model && !a.model_inverse.empty()) two_route = compare_with_mu_pullback(ad, t, *d.model, a.model_inverse);
  int status = two_route && !two_route->ok() ? kExitValidation : kExitOk;
  if (fmt == Format::Machine) {
    json j;
    j["action"] = a.name;
    json gens = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
      json g;
      g["generator"] = ad.m.name(i);
      g["table"] = section_to_json(s, t[i], names);
      if (!formulas.empty()) g["formula"] = formulas[i];
      gens.push_back(g);
    }
    j["generators"] = gens;
    if (two_route) j["mu_pullback_mismatches"] = report_json(*two_route);
    return {status, dump(j)};
  }
  std::string out = "action " + a.name + "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!formulas.empty()) out += "a^*(" + ad.m.name(i) + ") = " + formulas[i] + "\n";
    else out += "a^*(" + ad.m.name(i) + "): " + format_section_line(s, t[i], names) + "\n";
  }
  if (two_route) out += report_lines(*two_route, "reconstruction-vs-mu-pullback");
  return {status, out};
}

inline CommandResult cmd_stabilizer(const Description& d, const std::string& name, const std::string& point,
                                    Format fmt) {
  const ActionBlock& a = d.action(name);
  MPoint p = parse_point(point, a.data.m);
  Stabilizer st = stabilizer_subalgebra(a.data, p);
  const auto& g = d.shcp.algebra();
  std::string dims = "(" + std::to_string(st.even) + "|" + std::to_string(st.odd) + ")";
  if (fmt == Format::Machine) {
    json basis = json::array();
    for (const auto& v : st.basis) basis.push_back(g.format(v));
    return {kExitOk, cli_detail::dump({{"action", a.name},
                                       {"point", point},
                                       {"even", st.even},
                                       {"odd", st.odd},
                                       {"basis", basis},
                                       {"bracket_closed", st.bracket_closed}})};
  }
  std::string out;
  if (st.basis.empty()) out = "trivial " + dims + "\n";
  else if (st.basis.size() == g.dim()) out = "all of g " + dims + "\n";
  else out = "stabilizer " + dims + ": " + cli_detail::format_lie_list(g, st.basis) + "\n";
  out += std::string("bracket-closed: ") + (st.bracket_closed ? "yes" : "no") + "\n";
  return {kExitOk, out};
}

inline CommandResult cmd_transitive(const Description& d, const std::string& name, const std::string& point,
                                    Format fmt) {
  const ActionBlock& a = d.action(name);
  MPoint p = parse_point(point, a.data.m);
  Transitivity t = is_transitive_at(a.data, p, a.reduced_transitive);
  if (fmt == Format::Machine)
    return {kExitOk, cli_detail::dump({{"action", a.name},
                                       {"point", point},
                                       {"transitive", t.verdict},
                                       {"even_rank", t.even_rank},
                                       {"odd_rank", t.odd_rank},
                                       {"submersive", t.submersive},
                                       {"reduced_transitive", t.reduced_transitive}})};
  std::string out = t.verdict ? "transitive\n" : "not transitive\n";
  out += "rank of da_p: (" + std::to_string(t.even_rank) + "|" + std::to_string(t.odd_rank) + ") against dim M (" +
         std::to_string(a.data.m.nev()) + "|" + std::to_string(a.data.m.nodd()) + ")\n";
  out += std::string("reduced action transitive: ") + (t.reduced_transitive ? "yes" : "no") + "\n";
  return {kExitOk, out};
}

// Without `section`: solve over Laurent monomials of total degree <= degree.
// With it: membership test of that section.
inline CommandResult cmd_invariants(const Description& d, const std::string& subpair, int degree, CosetSide side,
                                    const std::string& section, Format fmt) {
  using namespace cli_detail;
  const SHCP& s = d.shcp;
  const SubPairSpec& h = d.subpair(subpair);
  ValidationReport valid = validate_subpair(s, h);
  if (!valid.ok()) return {kExitValidation, report_lines(valid, "subpair")};
  SectionNames names = section_names(d, section_shape(s));
  if (!section.empty()) {
    Section phi;
    try {
      phi = parse_section(section, s);
    } catch (const ParseError& e) {
      throw UsageError("section '" + section + "': " + e.what());
    }
    InvarianceVerdict v = is_invariant_section(s, phi, h, side);
    int status = v.invariant() ? kExitOk : kExitValidation;
    if (fmt == Format::Machine)
      return {status, dump({{"side", side_name(side)},
                            {"invariant", v.invariant()},
                            {"d_route", v.d_route},
                            {"lemma_route", v.lemma_route},
                            {"witnesses", report_json(v.witnesses)},
                            {"notes", v.notes}})};
    std::string out = std::string(v.invariant() ? "invariant" : "not invariant") + " on " + side_name(side) +
                      " (D-conditions: " + (v.d_route ? "pass" : "fail") +
                      ", pullback identity: " + (v.lemma_route ? "pass" : "fail") + ")\n";
    for (const auto& w : v.witnesses.violations) out += "  " + w.check + ": " + w.witness + "\n";
    for (const auto& n : v.notes) out += "note: " + n + "\n";
    return {status, out};
  }
  if (degree < 0) throw UsageError("degree must be non-negative");
  auto sols = invariant_section_solve(s, h, laurent_ansatz(s.group(), degree), side);
  if (fmt == Format::Machine) {
    json a = json::array();
    for (const auto& phi : sols) a.push_back(section_to_json(s, phi, names));
    return {kExitOk, dump({{"side", side_name(side)}, {"degree", degree}, {"sections", a}})};
  }
  std::string out = std::to_string(sols.size()) + " invariant sections on " + side_name(side) + " up to degree " +
                    std::to_string(degree) + "\n";
  for (const auto& phi : sols) out += "  " + format_section_line(s, phi, names) + "\n";
  if (!h.connected) out += "note: H0 is disconnected; solutions are checked on the identity component only\n";
  return {kExitOk, out};
}

// Seeded sweep of the model law and the group probes at Grassmann points
// with `odd` auxiliary odd generators.
inline CommandResult cmd_oracle(const Description& d, std::uint64_t seed, std::size_t count, std::size_t odd,
                                Format fmt) {
  if (!d.model) throw UsageError("description has no model block");
  GroupOracle o(d.shcp, odd);
  SweepResult m = model_sweep(o, *d.model, seed, count);
  SweepResult p = probe_sweep(o, seed, count);
  int status = m.passed == m.total && p.passed == p.total ? kExitOk : kExitValidation;
  if (fmt == Format::Machine)
    return {status, cli_detail::dump({{"seed", seed},
                                      {"count", count},
                                      {"odd_generators", odd},
                                      {"model_passed", m.passed},
                                      {"probes_passed", p.passed},
                                      {"failures", cli_detail::report_json(m.failures)}})};
  std::string out = "model law: " + std::to_string(m.passed) + "/" + std::to_string(m.total) + " exact matches\n";
  out += "group probes: " + std::to_string(p.passed) + "/" + std::to_string(p.total) + " passed\n";
  for (const auto& v : m.failures.violations) out += "FAIL " + v.check + ": " + v.witness + "\n";
  for (const auto& v : p.failures.violations) out += "FAIL " + v.check + ": " + v.witness + "\n";
  return {status, out};
}

}  // namespace koszul
