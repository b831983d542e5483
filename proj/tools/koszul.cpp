#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "koszul/cli.hpp"

using namespace koszul;

int main(int argc, char** argv) {
  CLI::App app{"Super Lie groups from super Harish-Chandra pairs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string file, format = "human", out;
  app.add_option("--file", file, "description file")->required();
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--out", out, "write the result to this path");

  bool laws = false;
  auto* validate = app.add_subcommand("validate", "validate the pair, its actions and sub pairs");
  validate->add_flag("--laws", laws, "also run the Hopf law suite on the delta sections");

  std::string section;
  auto* mul = app.add_subcommand("mul-table", "table of mu^* of a section");
  mul->add_option("--section", section, "section formula, e.g. phi_y1 or Phi_T1")->required();

  auto* gamma = app.add_subcommand("gamma-table", "twisted gamma_hat^-1 table");

  std::string action;
  auto* act = app.add_subcommand("action", "reconstruct an action from its infinitesimal data");
  act->add_option("--action", action, "action block name (default: first)");

  std::string point;
  auto* stab = app.add_subcommand("stabilizer", "stabilizer subalgebra at a point");
  stab->add_option("--action", action, "action block name (default: first)");
  stab->add_option("--point", point, "values k=v,... of the even generators of M")->required();
  auto* trans = app.add_subcommand("transitive", "transitivity verdict at a point");
  trans->add_option("--action", action, "action block name (default: first)");
  trans->add_option("--point", point, "values k=v,... of the even generators of M")->required();

  std::string subpair, side = "left";
  int degree = 2;
  auto* inv = app.add_subcommand("invariants", "invariant sections for a sub pair");
  inv->add_option("--subpair", subpair, "subpair block name (default: first)");
  inv->add_option("--degree", degree, "total degree of the Laurent ansatz");
  inv->add_option("--side", side, "left (G/H) or right (H\\G)")->check(CLI::IsMember({"left", "right"}));
  inv->add_option("--section", section, "test this section instead of solving");

  std::uint64_t seed = 1;
  std::size_t count = 50, odd = 4;
  auto* oracle = app.add_subcommand("oracle", "seeded Grassmann-point sweeps");
  oracle->add_option("--seed", seed, "random seed");
  oracle->add_option("--count", count, "number of sampled points");
  oracle->add_option("--odd", odd, "auxiliary odd generators per point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Format fmt = format == "machine" ? Format::Machine : Format::Human;
  CommandResult r;
  try {
    Description d = load_description(file);
    if (validate->parsed()) r = cmd_validate(d, laws, fmt);
    else if (mul->parsed()) r = cmd_mul_table(d, section, fmt);
    else if (gamma->parsed()) r = cmd_gamma_table(d, fmt);
    else if (act->parsed()) r = cmd_action(d, action, fmt);
    else if (stab->parsed()) r = cmd_stabilizer(d, action, point, fmt);
    else if (trans->parsed()) r = cmd_transitive(d, action, point, fmt);
    else if (inv->parsed())
      r = cmd_invariants(d, subpair, degree, side == "left" ? CosetSide::Left : CosetSide::Right, section, fmt);
    else if (oracle->parsed()) r = cmd_oracle(d, seed, count, odd, fmt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out.empty()) {
    std::cout << r.output;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return kExitUsage;
    }
    f << r.output;
  }
  return r.status;
}
