#include <CLI11.hpp>
#include <iostream>

#include "dlang/commands.hpp"

namespace {

void add_common(CLI::App* sub, dlang::CommonOptions& o, bool with_place = true) {
  if (with_place) {
    sub->add_option("--place", o.place, "working place: a monic irreducible polynomial or 'inf'");
    sub->add_option("--precision", o.precision, "digits of the local ring")->check(CLI::PositiveNumber);
  }
  sub->add_flag("--json", o.json, "emit the machine-readable report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit and subvariety intersections for products of Drinfeld modules"};
  app.set_version_flag("--version", std::string("dlang ") + dlang::kVersion);
  app.require_subcommand(1);
  std::string file;

  dlang::CheckOptions check;
  auto* c = app.add_subcommand("check", "validate a problem file and report reduction, balls and torsion");
  c->add_option("file", file, "problem file")->required();
  add_common(c, check);

  dlang::IntersectOptions inter;
  auto* i = app.add_subcommand("intersect", "compute the orbit intersection and its coset structure");
  i->add_option("file", file, "problem file")->required();
  i->add_option("--degree", inter.degree, "enumerate P with deg P < D")->check(CLI::PositiveNumber);
  i->add_option("--modulus-cap", inter.modulus_cap, "largest coset modulus degree")->check(CLI::NonNegativeNumber);
  i->add_flag("--verify", inter.verify, "certify each coset analytically");
  i->add_option("--threads", inter.threads, "orbit scan workers")->check(CLI::Range(1u, 256u));
  add_common(i, inter);

  dlang::ExplogOptions el;
  auto* e = app.add_subcommand("explog", "exponential and logarithm coefficients and evaluation");
  e->add_option("file", file, "problem file")->required();
  e->add_option("--terms", el.terms, "coefficients to print")->check(CLI::NonNegativeNumber);
  e->add_option("--at", el.at, "evaluate exp and log at this element");
  add_common(e, el);

  dlang::PlacesOptions pl;
  auto* p = app.add_subcommand("places", "valuations and the product formula");
  p->add_option("file", file, "problem file")->required();
  p->add_option("--at", pl.at, "element to analyse instead of the point coordinates");
  add_common(p, pl, false);

  dlang::OrbitOptions ob;
  auto* o = app.add_subcommand("orbit", "list the orbit points phi_P(x) with deg P < D");
  o->add_option("file", file, "problem file")->required();
  o->add_option("--degree", ob.degree, "degree bound D")->check(CLI::NonNegativeNumber);
  add_common(o, ob, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return dlang::exit_code::usage;
  }

  dlang::CommandResult r;
  if (c->parsed()) r = dlang::cmd_check(file, check);
  else if (i->parsed()) r = dlang::cmd_intersect(file, inter);
  else if (e->parsed()) r = dlang::cmd_explog(file, el);
  else if (p->parsed()) r = dlang::cmd_places(file, pl);
  else r = dlang::cmd_orbit(file, ob);
  std::cout << r.output;
  std::cerr << r.errors;
  return r.exit_code;
}
