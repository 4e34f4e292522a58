// Batch CLI: reads JSON documents, dispatches to the computation modules,
// writes canonical JSON results.  Exit codes: 0 success (and "equal"),
// 1 "not equal", 2 schema violation, 3 computation error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "burnside/json_io.hpp"

namespace {

using burnside::io::json;

void write_output(const json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw burnside::SchemaError("cannot open output file: " + path);
  out << doc.dump(2) << "\n";
}

struct CommonOpts {
  std::string input = "-";
  std::string output;
};

void add_io(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("input", opts.input, "input JSON document (- for stdin)");
  cmd->add_option("-o,--output", opts.output, "output path (default stdout)");
}

std::vector<burnside::OSymbol> seeds_of(const burnside::ObarElement& e) {
  std::vector<burnside::OSymbol> seeds;
  for (const auto& [sym, c] : e.terms()) seeds.push_back(sym);
  return seeds;
}

} // namespace

int main(int argc, char** argv) {
  using namespace burnside;

  CLI::App app{"refined Burnside group calculator"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::size_t max_universe = 100000;
  std::int64_t grading = -1;

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  add_io(snf, opts);

  auto* group = app.add_subcommand("group", "finite abelian group operations");
  add_io(group, opts);

  auto* normalize = app.add_subcommand("normalize", "canonical form of a symbol");
  add_io(normalize, opts);

  auto* relate = app.add_subcommand("relate", "apply one relation instance");
  add_io(relate, opts);

  auto* equal = app.add_subcommand("equal", "lattice equality with certificate");
  add_io(equal, opts);
  equal->add_option("--max-universe", max_universe, "universe size bound");

  auto* certify = app.add_subcommand("certify", "replay an equality certificate");
  add_io(certify, opts);

  auto* cls = app.add_subcommand("class", "class of a stratified orbifold");
  add_io(cls, opts);
  bool f_cburn = false, f_naive = false, f_open = false, f_openp = false;
  cls->add_flag("--cburn", f_cburn, "finer class from stack labels");
  cls->add_flag("--naive", f_naive, "naive class from field labels");
  cls->add_flag("--open", f_open, "snc-complement class");
  cls->add_flag("--open-punctured", f_openp, "punctured form of the open class");

  auto* toric = app.add_subcommand("toric-class", "class of a toric stack");
  add_io(toric, opts);
  std::string toric_mode = "obar";
  toric->add_option("--mode", toric_mode, "obar or cburn");

  auto* subdivide = app.add_subcommand("subdivide", "stacky star subdivision");
  add_io(subdivide, opts);
  std::vector<std::int64_t> ray;
  subdivide->add_option("--ray", ray, "lattice point, e.g. --ray 2 1")
      ->expected(-1);

  auto* root = app.add_subcommand("root", "scale a ray generator");
  add_io(root, opts);
  std::size_t ray_index = 0;
  std::int64_t order = 1;
  root->add_option("--index", ray_index, "ray index")->required();
  root->add_option("--order", order, "scaling factor")->required();

  auto* kappa = app.add_subcommand("kappa", "comparison map, vanishing to t-trade");
  add_io(kappa, opts);
  auto* inv_kappa =
      app.add_subcommand("inv-kappa", "comparison map, t-trade to vanishing");
  add_io(inv_kappa, opts);

  auto* classical = app.add_subcommand("classical", "projection to field classes");
  add_io(classical, opts);
  auto* groth =
      app.add_subcommand("grothendieck", "projection killing charactered terms");
  add_io(groth, opts);

  auto* spec = app.add_subcommand("specialize", "specialization of a model");
  add_io(spec, opts);
  spec->add_option("--grading", grading, "grading of the output element")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (snf->parsed()) {
      json j = io::read_json_file(opts.input);
      IntMat m = io::parse_matrix(j.at("matrix"));
      SnfDecomposition s = smith_normal_form(m);
      write_output(json{{"U", io::dump_matrix(s.u)},
                        {"D", io::dump_matrix(s.d)},
                        {"V", io::dump_matrix(s.v)},
                        {"rank", s.rank}},
                   opts.output);
    } else if (group->parsed()) {
      json j = io::read_json_file(opts.input);
      std::string op = j.at("op").get<std::string>();
      if (op == "cokernel") {
        IntMat m = io::parse_matrix(j.at("matrix"));
        auto [g, proj] = cokernel(m, m.rows());
        write_output(json{{"group", io::dump_group(g)},
                          {"projection", io::dump_matrix(proj.matrix)}},
                     opts.output);
      } else if (op == "quotient") {
        FinAbGroup a = io::parse_group(j.at("A"));
        std::vector<GroupElement> gens;
        for (const auto& g : j.at("gens"))
          gens.emplace_back(a, g.get<std::vector<std::int64_t>>());
        auto [q, pi] = quotient(a, gens);
        write_output(json{{"group", io::dump_group(q)},
                          {"projection", io::dump_hom(pi)}},
                     opts.output);
      } else if (op == "contains") {
        FinAbGroup a = io::parse_group(j.at("A"));
        std::vector<GroupElement> gens;
        for (const auto& g : j.at("gens"))
          gens.emplace_back(a, g.get<std::vector<std::int64_t>>());
        GroupElement x(a, j.at("x").get<std::vector<std::int64_t>>());
        write_output(json{{"contains", subgroup_contains(a, gens, x)}},
                     opts.output);
      } else if (op == "generates") {
        FinAbGroup a = io::parse_group(j.at("A"));
        std::vector<GroupElement> gens;
        for (const auto& g : j.at("gens"))
          gens.emplace_back(a, g.get<std::vector<std::int64_t>>());
        write_output(json{{"generates", generates(a, gens)}}, opts.output);
      } else if (op == "automorphisms") {
        FinAbGroup a = io::parse_group(j.at("A"));
        json homs = json::array();
        for (const auto& h : automorphisms(a))
          homs.push_back(io::dump_matrix(h.matrix));
        write_output(json{{"count", homs.size()}, {"automorphisms", homs}},
                     opts.output);
      } else {
        throw SchemaError("unknown group op: " + op);
      }
    } else if (normalize->parsed()) {
      json j = io::read_json_file(opts.input);
      Presentation pres =
          presentation_from_name(j.at("presentation").get<std::string>());
      OSymbol sym = io::parse_osymbol(j.at("symbol"));
      write_output(io::dump_element(canonical_element(sym, pres)), opts.output);
    } else if (relate->parsed()) {
      json j = io::read_json_file(opts.input);
      Presentation pres =
          presentation_from_name(j.at("presentation").get<std::string>());
      OSymbol sym = io::parse_osymbol(j.at("symbol"));
      std::size_t i = j.at("i").get<std::size_t>();
      std::size_t jj = j.at("j").get<std::size_t>();
      std::string kind = j.value("kind", std::string("blowup"));
      ObarElement rhs;
      if (kind == "blowup") {
        rhs = pres == Presentation::ObarVanishing
                  ? blowup_relation_obar(sym, i, jj)
                  : blowup_relation_oburn(sym, i, jj);
      } else if (kind == "vanishing") {
        if (pres == Presentation::OburnTTrade)
          rhs.add(tpair_relation_oburn(sym, i, jj), 1);
        // in the vanishing presentation the right-hand side is zero
      } else {
        throw SchemaError("unknown relation kind: " + kind);
      }
      write_output(json{{"lhs", io::dump_element(canonical_element(sym, pres))},
                        {"rhs", io::dump_element(rhs)}},
                   opts.output);
    } else if (equal->parsed()) {
      json j = io::read_json_file(opts.input);
      Presentation pres =
          presentation_from_name(j.at("presentation").get<std::string>());
      std::int64_t n = j.at("grading").get<std::int64_t>();
      ObarElement lhs = io::parse_element(j.at("lhs"));
      ObarElement rhs = io::parse_element(j.at("rhs"));
      ObarElement diff = lhs - rhs;
      std::vector<OSymbol> seeds = seeds_of(diff);
      if (j.contains("seeds"))
        for (const auto& s : j.at("seeds"))
          seeds.push_back(io::parse_osymbol(s));
      SymbolUniverse u = close_universe(seeds, n, pres, max_universe);
      RelationLattice lat(std::move(u));
      auto verdict = lat.is_zero(diff);
      write_output(io::dump_verdict(lat.universe(), seeds, diff, verdict),
                   opts.output);
      return verdict.zero ? 0 : 1;
    } else if (certify->parsed()) {
      json j = io::read_json_file(opts.input);
      io::CertificateDocument doc = io::parse_certificate(j);
      if (!doc.equal) throw CertificateMismatch("document carries no certificate");
      SymbolUniverse u =
          close_universe(doc.seeds, doc.grading, doc.presentation, max_universe);
      RelationLattice lat(std::move(u));
      RelationLattice::Certificate cert{doc.combination};
      if (!lat.replay(cert, doc.element))
        throw CertificateMismatch("certificate mismatch");
      write_output(json{{"verified", true}}, opts.output);
    } else if (cls->parsed()) {
      json j = io::read_json_file(opts.input);
      if (int(f_cburn) + int(f_naive) + int(f_open) + int(f_openp) != 1)
        throw SchemaError("class: exactly one mode flag required");
      if (f_cburn) {
        LabelRegistry reg;
        OrbifoldDescription d = io::parse_orbifold(j, &reg);
        write_output(io::dump_celement(class_of_orbifold(d, reg)), opts.output);
      } else if (f_naive) {
        OrbifoldDescription d = io::parse_orbifold(j);
        write_output(io::dump_element(naive_class_open(d)), opts.output);
      } else {
        SncOpenDescription d = io::parse_snc(j);
        ObarElement e = f_open ? class_open(d) : class_open_punctured_form(d);
        write_output(io::dump_element(e), opts.output);
      }
    } else if (toric->parsed()) {
      json j = io::read_json_file(opts.input);
      StackyFan fan = io::parse_fan(j);
      if (toric_mode == "obar") {
        write_output(io::dump_element(toric_class_obar(fan)), opts.output);
      } else if (toric_mode == "cburn") {
        LabelRegistry reg;
        write_output(io::dump_celement(toric_class_cburn(fan, reg)),
                     opts.output);
      } else {
        throw SchemaError("toric-class: unknown mode " + toric_mode);
      }
    } else if (subdivide->parsed()) {
      json j = io::read_json_file(opts.input);
      StackyFan fan = io::parse_fan(j);
      write_output(io::dump_fan(stacky_star_subdivision(fan, ray)), opts.output);
    } else if (root->parsed()) {
      json j = io::read_json_file(opts.input);
      StackyFan fan = io::parse_fan(j);
      write_output(io::dump_fan(root_ray(fan, ray_index, order)), opts.output);
    } else if (kappa->parsed()) {
      json j = io::read_json_file(opts.input);
      ObarElement e = j.is_array() ? io::parse_element(j) : [&] {
        ObarElement single;
        single.add(io::parse_osymbol(j), 1);
        return single;
      }();
      write_output(io::dump_element(kappa_bar(e)), opts.output);
    } else if (inv_kappa->parsed()) {
      json j = io::read_json_file(opts.input);
      ObarElement e = j.is_array() ? io::parse_element(j) : [&] {
        ObarElement single;
        single.add(io::parse_osymbol(j), 1);
        return single;
      }();
      write_output(io::dump_element(kappa_bar_inverse(e)), opts.output);
    } else if (classical->parsed()) {
      json j = io::read_json_file(opts.input);
      write_output(io::dump_free_class(to_classical(io::parse_element(j))),
                   opts.output);
    } else if (groth->parsed()) {
      json j = io::read_json_file(opts.input);
      write_output(io::dump_free_class(to_grothendieck(io::parse_element(j))),
                   opts.output);
    } else if (spec->parsed()) {
      json j = io::read_json_file(opts.input);
      ModelDescription m = io::parse_model(j);
      write_output(io::dump_element(specialize(m, grading)), opts.output);
    }
  } catch (const SchemaError& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << json{{"error", "SchemaError"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return 0;
}
