#pragma once

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "actions.hpp"
#include "grassmann.hpp"
#include "homogeneous.hpp"
#include "json.hpp"

namespace koszul {

// Error in a description file with a 1-based line and column.
class DescriptionError : public Error {
 public:
  DescriptionError(const std::string& file, std::size_t line, std::size_t column, const std::string& msg)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct ActionBlock {
  std::string name;
  ActionData data;
  std::vector<std::string> slots;
  bool reduced_transitive = false;
  // Optional coordinates of G for printing the reconstructed action:
  // phi_<generator> then Phi_<odd> as polynomials over them.
  std::optional<PolyRing> coordinates;
  std::vector<Poly> delta_images;
  // Optional, for M = G: phi_<generator> then Phi_<odd> as polynomials on M.
  std::vector<Poly> model_inverse;
};

struct Description {
  std::string path;
  SHCP shcp;
  // Display names of the reduced group generators in factor 0 and factor 1.
  std::vector<std::vector<std::string>> display;
  std::optional<GroupModel> model;
  std::vector<ActionBlock> actions;
  std::vector<std::pair<std::string, SubPairSpec>> subpairs;

  const ActionBlock& action(const std::string& name) const {
    if (actions.empty()) throw Error("description has no action block");
    if (name.empty()) return actions.front();
    for (const auto& a : actions)
      if (a.name == name) return a;
    throw Error("unknown action '" + name + "'");
  }
  const SubPairSpec& subpair(const std::string& name) const {
    if (subpairs.empty()) throw Error("description has no subpair block");
    if (name.empty()) return subpairs.front().second;
    for (const auto& [n, h] : subpairs)
      if (n == name) return h;
    throw Error("unknown subpair '" + name + "'");
  }
};

namespace io_detail {

// Default-constructed nodes are defined but null; treat both as absent.
inline bool present(const YAML::Node& n) { return n.IsDefined() && !n.IsNull(); }

class Reader {
 public:
  explicit Reader(std::string file) : file_(std::move(file)) {}

  [[noreturn]] void fail(const YAML::Node& n, const std::string& msg, std::size_t offset = 0) const {
    // Missing nodes carry no mark; report them at the start of the file.
    YAML::Mark m = n.IsDefined() ? n.Mark() : YAML::Mark::null_mark();
    std::size_t line = m.line < 0 ? 1 : static_cast<std::size_t>(m.line + 1);
    std::size_t column = m.column < 0 ? 1 : static_cast<std::size_t>(m.column + 1);
    throw DescriptionError(file_, line, column + offset, msg);
  }

  YAML::Node need(const YAML::Node& n, const std::string& key) const {
    if (!n || !n.IsMap()) fail(n, "expected a map");
    YAML::Node c = n[key];
    if (!c) fail(n, "missing key '" + key + "'");
    return c;
  }

  std::string scalar(const YAML::Node& n) const {
    if (!n.IsScalar()) fail(n, "expected a scalar");
    return n.Scalar();
  }

  std::vector<std::string> names(const YAML::Node& n) const {
    std::vector<std::string> out;
    if (!n || n.IsNull()) return out;
    if (!n.IsSequence()) fail(n, "expected a list");
    for (const auto& x : n) {
      std::string s = scalar(x);
      if (std::find(out.begin(), out.end(), s) != out.end()) fail(x, "duplicate name '" + s + "'");
      out.push_back(s);
    }
    return out;
  }

  Rational rational(const YAML::Node& n) const {
    std::string s = scalar(n);
    try {
      return parse_rational(s);
    } catch (const Error&) {
      fail(n, "malformed rational '" + s + "'");
    }
  }

  bool boolean(const YAML::Node& n) const {
    std::string s = scalar(n);
    if (s == "true") return true;
    if (s == "false") return false;
    fail(n, "expected true or false");
  }

  Poly formula(const YAML::Node& n, const PolyRing& ring) const {
    std::string s = scalar(n);
    try {
      return parse_poly(s, ring);
    } catch (const ParseError& e) {
      fail(n, e.what(), formula_offset(n, e));
    } catch (const Error& e) {
      fail(n, e.what());
    }
  }

  // Column shift from the node mark to the offending character; quoted
  // scalars (tag "!") start one column after their mark.
  static std::size_t formula_offset(const YAML::Node& n, const ParseError& e) {
    return e.column() - 1 + (n.Tag() == "!" ? 1 : 0);
  }

  // Linear combination of basis names.
  LieVector lie_vector(const YAML::Node& n, const SuperLieAlgebra& g) const {
    PolyRing ring{g.names(), {}};
    Poly p = formula(n, ring);
    LieVector v;
    for (const auto& [m, c] : p.terms()) {
      int idx = -1, total = 0;
      for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i]) {
          total += m.exps[i];
          idx = static_cast<int>(i);
        }
      if (total != 1 || std::count(m.exps.begin(), m.exps.end(), 0) + 1 != static_cast<long>(m.exps.size()))
        fail(n, "expected a linear combination of basis elements");
      v.add(idx, c);
    }
    return v;
  }

  std::size_t index(const YAML::Node& n, const std::vector<std::string>& names, const std::string& what) const {
    std::string s = scalar(n);
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) fail(n, "unknown " + what + " '" + s + "'");
    return static_cast<std::size_t>(it - names.begin());
  }

  // Map from declared names to nodes; every key must be declared.
  std::vector<YAML::Node> keyed(const YAML::Node& n, const std::vector<std::string>& names, const std::string& what,
                                bool all) const {
    std::vector<YAML::Node> out(names.size());
    if (!n || n.IsNull()) {
      if (all && !names.empty()) fail(n, "missing entries for every " + what);
      return out;
    }
    if (!n.IsMap()) fail(n, "expected a map keyed by " + what);
    for (const auto& kv : n) out[index(kv.first, names, what)] = kv.second;
    if (all)
      for (std::size_t i = 0; i < names.size(); ++i)
        if (!present(out[i])) fail(n, "missing entry for " + what + " '" + names[i] + "'");
    return out;
  }

  CoordHopf group(const YAML::Node& n) const {
    auto gens = names(need(n, "generators"));
    const std::size_t k = gens.size();
    std::vector<bool> inv(k, false);
    if (n["invertible"])
      for (const auto& x : n["invertible"]) inv[index(x, gens, "generator")] = true;
    PolyRing one{gens, {}}, two;
    for (const auto& g : gens) two.even.push_back(g + "_l");
    for (const auto& g : gens) two.even.push_back(g + "_r");
    std::vector<Poly> cop, ant;
    std::vector<Rational> cou;
    auto block = [&](const std::string& key) { return k ? need(n, key) : n[key]; };
    auto c = keyed(block("coproduct"), gens, "generator", true);
    auto e = keyed(block("counit"), gens, "generator", true);
    auto s = keyed(block("antipode"), gens, "generator", true);
    // Negative powers are allowed only for invertible generators.
    auto check = [&](const YAML::Node& at, const Poly& p, std::size_t copies) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t f = 0; f < copies; ++f)
          if (!inv[i] && p.has_negative_exponent(f * k + i))
            fail(at, "negative power of non-invertible generator " + gens[i]);
    };
    for (std::size_t i = 0; i < k; ++i) {
      cop.push_back(formula(c[i], two));
      check(c[i], cop.back(), 2);
      cou.push_back(rational(e[i]));
      ant.push_back(formula(s[i], one));
      check(s[i], ant.back(), 1);
    }
    try {
      return CoordHopf(gens, inv, cop, cou, ant);
    } catch (const Error& err) {
      fail(n, err.what());
    }
  }

  const std::string& file() const { return file_; }

 private:
  std::string file_;
};

inline SuperLieAlgebra read_algebra(const Reader& r, const YAML::Node& n) {
  SuperLieAlgebra g(r.names(n["even"]), r.names(n["odd"]));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g.name(static_cast<int>(i)) == g.name(static_cast<int>(j))) r.fail(n, "duplicate basis name");
  if (n["brackets"]) {
    if (!n["brackets"].IsSequence()) r.fail(n["brackets"], "expected a list of [a, b, value]");
    for (const auto& b : n["brackets"]) {
      if (!b.IsSequence() || b.size() != 3) r.fail(b, "expected [a, b, value]");
      int i = static_cast<int>(r.index(b[0], g.names(), "basis element"));
      int j = static_cast<int>(r.index(b[1], g.names(), "basis element"));
      g.set_bracket(i, j, r.lie_vector(b[2], g));
    }
  }
  return g;
}

inline SubPairSpec read_subpair(const Reader& r, const YAML::Node& n, const SHCP& s) {
  SubPairSpec h;
  const auto& g = s.algebra();
  if (n["h"])
    for (const auto& v : n["h"]) h.h_basis.push_back(r.lie_vector(v, g));
  h.reduced = r.group(r.need(n, "reduced_group"));
  PolyRing hr{h.reduced.names(), {}};
  auto q = r.keyed(r.need(n, "quotient"), s.group().names(), "generator", true);
  for (const auto& x : q) h.quotient.push_back(r.formula(x, hr));
  if (n["complement"])
    for (const auto& v : n["complement"]) h.complement.push_back(r.lie_vector(v, g));
  if (n["connected"]) h.connected = r.boolean(n["connected"]);
  if (n["points"])
    for (const auto& p : n["points"]) {
      GroupPoint pt;
      for (const auto& x : r.keyed(p, s.group().names(), "generator", true)) pt.values.push_back(r.rational(x));
      h.points.push_back(pt);
    }
  return h;
}

inline ActionBlock read_action(const Reader& r, const std::string& name, const YAML::Node& n, const SHCP& s) {
  ActionBlock a;
  a.name = name;
  const YAML::Node dom = r.need(n, "domain");
  SuperDomain m;
  m.even = r.names(dom["even"]);
  m.odd = r.names(dom["odd"]);
  m.invertible.assign(m.even.size(), false);
  if (dom["invertible"])
    for (const auto& x : dom["invertible"]) m.invertible[r.index(x, m.even, "domain generator")] = true;
  std::vector<std::string> all = m.even;
  all.insert(all.end(), m.odd.begin(), m.odd.end());
  a.slots = r.names(r.need(n, "slots"));
  if (a.slots.size() != s.k()) r.fail(n["slots"], "one slot name per reduced group generator is required");
  auto coaction = r.keyed(r.need(n, "coaction"), all, "domain generator", true);
  PolyRing both{a.slots, m.odd};
  both.even.insert(both.even.end(), m.even.begin(), m.even.end());
  PolyRing mring = m.ring();
  ActionData d{s, m, {}, {}};
  for (const auto& c : coaction) {
    Poly p = r.formula(c, both);
    try {
      m.check_element(p, s.k());
    } catch (const Error& e) {
      r.fail(c, e.what());
    }
    d.coaction.push_back(p);
  }
  auto rho = r.keyed(r.need(n, "rho"), s.algebra().names(), "basis element", false);
  const auto& g = s.algebra();
  for (std::size_t x = 0; x < g.dim(); ++x) {
    SuperDerivation der{g.parity(static_cast<int>(x)), m.nev(), std::vector<Poly>(m.dim(), mring.zero())};
    if (present(rho[x])) {
      auto imgs = r.keyed(rho[x], all, "domain generator", false);
      for (std::size_t i = 0; i < all.size(); ++i)
        if (present(imgs[i])) der.images[i] = r.formula(imgs[i], mring);
    }
    d.rho.push_back(der);
  }
  a.data = d;
  if (n["reduced_transitive"]) a.reduced_transitive = r.boolean(n["reduced_transitive"]);
  std::vector<std::string> deltas = s.group().names();
  for (std::size_t j = 0; j < s.q(); ++j) deltas.push_back(g.name(static_cast<int>(g.even_dim() + j)));
  if (n["coordinates"]) {
    const YAML::Node c = n["coordinates"];
    PolyRing cr{r.names(c["even"]), r.names(c["odd"])};
    if (cr.nev() != s.k() || cr.nodd() != s.q()) r.fail(c, "coordinates must match the dimension of G");
    for (const auto& x : r.keyed(r.need(c, "delta"), deltas, "delta generator", true))
      a.delta_images.push_back(r.formula(x, cr));
    a.coordinates = cr;
  }
  if (n["model_inverse"])
    for (const auto& x : r.keyed(n["model_inverse"], deltas, "delta generator", true))
      a.model_inverse.push_back(r.formula(x, mring));
  return a;
}

inline GroupModel read_model(const Reader& r, const YAML::Node& n, const SHCP& s) {
  GroupModel m;
  m.even = r.names(n["even"]);
  m.odd = r.names(n["odd"]);
  std::vector<std::string> all = m.even;
  all.insert(all.end(), m.odd.begin(), m.odd.end());
  PolyRing law;
  for (const auto& v : m.even) law.even.push_back(v + "_l");
  for (const auto& v : m.even) law.even.push_back(v + "_r");
  for (const auto& v : m.odd) law.odd.push_back(v + "_l");
  for (const auto& v : m.odd) law.odd.push_back(v + "_r");
  for (const auto& x : r.keyed(r.need(n, "dictionary"), all, "model coordinate", true)) {
    try {
      m.dictionary.push_back(parse_section(r.scalar(x), s));
    } catch (const ParseError& e) {
      r.fail(x, e.what(), io_detail::Reader::formula_offset(x, e));
    }
  }
  for (const auto& x : r.keyed(r.need(n, "law"), all, "model coordinate", true)) m.law.push_back(r.formula(x, law));
  return m;
}

}  // namespace io_detail

inline Description parse_description(const std::string& text, const std::string& path = "<input>") {
  io_detail::Reader r(path);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw DescriptionError(path, static_cast<std::size_t>(e.mark.line + 1), static_cast<std::size_t>(e.mark.column + 1),
                           e.msg);
  }
  if (!root.IsMap()) throw DescriptionError(path, 1, 1, "expected a map at top level");
  Description d;
  d.path = path;
  SuperLieAlgebra g = io_detail::read_algebra(r, r.need(root, "algebra"));
  const YAML::Node gn = r.need(root, "reduced_group");
  CoordHopf group = r.group(gn);
  std::vector<std::string> evens(g.names().begin(), g.names().begin() + static_cast<long>(g.even_dim()));
  std::vector<TangentFunctional> tangent;
  auto tn = r.keyed(evens.empty() ? gn["tangent"] : r.need(gn, "tangent"), evens, "even basis element", true);
  for (const auto& t : tn) {
    TangentFunctional f{std::vector<Rational>(group.k(), Rational(0))};
    for (const auto& kv : t) f.values[r.index(kv.first, group.names(), "generator")] = r.rational(kv.second);
    tangent.push_back(f);
  }
  const std::size_t n = g.dim();
  std::vector<std::vector<Poly>> sigma(n, std::vector<Poly>(n, group.zero()));
  for (std::size_t i = 0; i < n; ++i) sigma[i][i] = group.one();
  PolyRing one{group.names(), {}};
  if (root["sigma"] && !root["sigma"].IsNull()) {
    auto cols = r.keyed(root["sigma"], g.names(), "basis element", false);
    for (std::size_t j = 0; j < n; ++j) {
      if (!io_detail::present(cols[j])) continue;
      sigma[j][j] = group.zero();
      auto entries = r.keyed(cols[j], g.names(), "basis element", false);
      for (std::size_t a = 0; a < n; ++a)
        if (io_detail::present(entries[a])) {
          Poly p = r.formula(entries[a], one);
          try {
            group.check_element(p);
          } catch (const Error& e) {
            r.fail(entries[a], e.what());
          }
          sigma[a][j] = p;
        }
    }
  }
  try {
    d.shcp = SHCP(g, group, tangent, sigma);
  } catch (const Error& e) {
    r.fail(root["algebra"], e.what());
  }
  d.display.resize(2);
  if (gn["display"]) {
    const YAML::Node disp = gn["display"];
    if (!disp.IsSequence() || disp.size() != 2) r.fail(disp, "display needs two lists of names");
    for (std::size_t f = 0; f < 2; ++f) {
      d.display[f] = r.names(disp[f]);
      if (d.display[f].size() != group.k()) r.fail(disp[f], "one display name per generator is required");
    }
  } else {
    for (const auto& x : group.names()) {
      d.display[0].push_back(x + "_l");
      d.display[1].push_back(x + "_r");
    }
  }
  if (root["model"]) d.model = io_detail::read_model(r, root["model"], d.shcp);
  if (root["actions"]) {
    if (!root["actions"].IsMap()) r.fail(root["actions"], "expected a map of named actions");
    for (const auto& kv : root["actions"]) d.actions.push_back(io_detail::read_action(r, r.scalar(kv.first), kv.second, d.shcp));
  }
  if (root["subpairs"]) {
    if (!root["subpairs"].IsMap()) r.fail(root["subpairs"], "expected a map of named sub pairs");
    for (const auto& kv : root["subpairs"])
      d.subpairs.emplace_back(r.scalar(kv.first), io_detail::read_subpair(r, kv.second, d.shcp));
  }
  return d;
}

inline Description load_description(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_description(ss.str(), path);
}

namespace detail {

inline void check_distinct(const std::vector<std::string>& even, const std::vector<std::string>& odd) {
  std::vector<std::string> all = even;
  all.insert(all.end(), odd.begin(), odd.end());
  std::sort(all.begin(), all.end());
  auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) throw Error("variable name '" + *dup + "' is used twice");
}

}  // namespace detail

// Variable names for the values of a section: display names of the group
// factors, then the extra variables.
struct SectionNames {
  std::vector<std::string> even;
  std::vector<std::string> odd;
  PolyRing ring() const { return PolyRing{even, odd}; }
};

inline SectionNames section_names(const Description& d, const SectionShape& shape,
                                  const std::vector<std::string>& extra_even = {},
                                  const std::vector<std::string>& extra_odd = {}) {
  SectionNames n;
  for (std::size_t f = 0; f < shape.factors; ++f) {
    if (shape.factors == 1) n.even.insert(n.even.end(), d.shcp.group().names().begin(), d.shcp.group().names().end());
    else if (f < d.display.size()) n.even.insert(n.even.end(), d.display[f].begin(), d.display[f].end());
    else
      for (const auto& x : d.shcp.group().names()) n.even.push_back(x + "_" + std::to_string(f + 1));
  }
  if (extra_even.size() != shape.extra_even || extra_odd.size() != shape.extra_odd)
    throw Error("names for the extra variables do not match the section shape");
  n.even.insert(n.even.end(), extra_even.begin(), extra_even.end());
  n.odd = extra_odd;
  detail::check_distinct(n.even, n.odd);
  return n;
}

// Names for action tables: the block's slot names for G0, then M.
inline SectionNames action_section_names(const ActionBlock& a) {
  SectionNames n{a.slots, a.data.m.odd};
  n.even.insert(n.even.end(), a.data.m.even.begin(), a.data.m.even.end());
  detail::check_distinct(n.even, n.odd);
  return n;
}

using json = nlohmann::ordered_json;

inline json wedge_to_json(const SuperLieAlgebra& g, const Wedge& w) {
  json a = json::array();
  for (int i : w.idx) a.push_back(g.name(static_cast<int>(g.even_dim()) + i));
  return a;
}

inline Wedge wedge_from_json(const SuperLieAlgebra& g, const json& a) {
  Wedge w;
  for (const auto& x : a) {
    int i = g.index_of(x.get<std::string>());
    if (i < static_cast<int>(g.even_dim())) throw Error("unknown odd basis element " + x.dump());
    w.idx.push_back(i - static_cast<int>(g.even_dim()));
  }
  if (!std::is_sorted(w.idx.begin(), w.idx.end())) throw Error("wedge not in increasing order");
  return w;
}

// Machine form of a section: shape, variable names and one entry per
// nonzero wedge, in (length, lexicographic) order per factor.
inline json section_to_json(const SHCP& s, const Section& phi, const SectionNames& names) {
  const auto& sh = phi.shape();
  json j;
  j["factors"] = sh.factors;
  j["even"] = names.even;
  j["odd"] = names.odd;
  j["extra_even"] = sh.extra_even;
  j["extra_odd"] = sh.extra_odd;
  json entries = json::array();
  for (const auto& [w, f] : phi.table()) {
    json e;
    json parts = json::array();
    for (const auto& p : phi.split(w)) parts.push_back(wedge_to_json(s.algebra(), p));
    e["wedge"] = parts;
    e["value"] = f.to_string(names.even, names.odd);
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

inline Section section_from_json(const SHCP& s, const json& j) {
  SectionShape sh{j.at("factors").get<std::size_t>(), s.k(), s.q(), j.at("extra_even").get<std::size_t>(),
                  j.at("extra_odd").get<std::size_t>()};
  PolyRing ring{j.at("even").get<std::vector<std::string>>(), j.at("odd").get<std::vector<std::string>>()};
  if (ring.nev() != sh.nev() || ring.nodd() != sh.nodd()) throw Error("variable names do not match the shape");
  detail::check_distinct(ring.even, ring.odd);
  Section phi(sh);
  for (const auto& e : j.at("entries")) {
    std::vector<Wedge> parts;
    for (const auto& p : e.at("wedge")) parts.push_back(wedge_from_json(s.algebra(), p));
    if (parts.size() != sh.factors) throw Error("entry has the wrong number of factors");
    phi.add(phi.join(parts), parse_poly(e.at("value").get<std::string>(), ring));
  }
  return phi;
}

// Cell of the twisted product table: sum of c(h) Z gamma(S), top wedges
// first, then even monomials in descending exponent order.
inline std::string format_zwedge(const SuperLieAlgebra& g, const ZWedgeElement<Poly>& e,
                                 const std::vector<std::string>& names) {
  if (e.empty()) return "0";
  std::vector<std::pair<ZWedge, Poly>> terms(e.begin(), e.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.wedge.degree() != b.first.wedge.degree()) return a.first.wedge.degree() > b.first.wedge.degree();
    if (a.first.wedge != b.first.wedge) return a.first.wedge < b.first.wedge;
    return a.first.z > b.first.z;
  });
  // A common Laurent monomial is factored out: y1^-1*y2*(T1∧T2 - 1/2*X1 - 1/2*X2).
  std::optional<Monomial> common;
  bool factor = true;
  for (const auto& [key, c] : terms) {
    if (c.terms().size() != 1) {
      factor = false;
      break;
    }
    const Monomial& m = c.terms().begin()->first;
    if (!common) common = m;
    else if (!(*common == m)) factor = false;
  }
  auto basis = [&](const ZWedge& key) {
    std::string z = format_even(g, key.z), w = format_wedge(g, key.wedge);
    if (z == "1") return w;
    if (w == "1") return z;
    return z + "*" + w;
  };
  std::string out;
  bool first = true;
  if (factor) {
    const std::size_t nev = terms.front().second.nev();
    std::string inner;
    for (const auto& [key, c] : terms) {
      Rational r = c.terms().begin()->second;
      Rational a = abs(r);
      std::string b = basis(key);
      std::string t = a == 1 ? b : (b == "1" ? to_string(a) : to_string(a) + "*" + b);
      inner += first ? (sgn(r) < 0 ? "-" + t : t) : (sgn(r) < 0 ? " - " + t : " + " + t);
      first = false;
    }
    std::string p = Poly::term(nev, 0, *common, Rational(1)).to_string(names, {});
    if (p == "1") return inner;
    return terms.size() == 1 && inner[0] != '-' ? p + "*" + inner : p + "*(" + inner + ")";
  }
  for (const auto& [key, c] : terms) {
    std::string t = "(" + c.to_string(names, {}) + ")*" + basis(key);
    out += first ? t : " + " + t;
    first = false;
  }
  return out;
}

inline json zwedge_to_json(const SuperLieAlgebra& g, const ZWedgeElement<Poly>& e, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& [key, c] : e) {
    json t;
    t["z"] = key.z;
    t["wedge"] = wedge_to_json(g, key.wedge);
    t["coefficient"] = c.to_string(names, {});
    a.push_back(t);
  }
  return a;
}

// Plain-text grid with aligned columns.
inline std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  auto len = [](const std::string& s) {
    // Display width: count code points, not bytes.
    std::size_t n = 0;
    for (unsigned char c : s)
      if ((c & 0xC0) != 0x80) ++n;
    return n;
  };
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], len(r[i]));
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += (i ? " | " : "") + r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - len(r[i]), ' ');
    }
    out += line + "\n";
  }
  return out;
}

// 2^q x 2^q table of a two-factor section: rows are first-slot wedges.
inline std::string render_two_factor(const SHCP& s, const Section& phi, const SectionNames& names) {
  const auto& g = s.algebra();
  auto W = all_wedges(s.q());
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"X\\Y"};
  for (const auto& w : W) head.push_back(format_wedge(g, w));
  rows.push_back(head);
  for (const auto& x : W) {
    std::vector<std::string> row{format_wedge(g, x)};
    for (const auto& y : W) row.push_back(phi.at(phi.join({x, y})).to_string(names.even, names.odd));
    rows.push_back(row);
  }
  return render_grid(rows);
}

inline std::string render_one_factor(const SHCP& s, const Section& phi, const SectionNames& names) {
  std::vector<std::vector<std::string>> rows{{"wedge", "value"}};
  for (const auto& w : all_wedges(s.q()))
    rows.push_back({format_wedge(s.algebra(), w), phi.at(w).to_string(names.even, names.odd)});
  return render_grid(rows);
}

}  // namespace koszul
