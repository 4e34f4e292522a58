#include "burnside/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace burnside::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw SchemaError(std::string("missing field: ") + name);
  return j.at(name);
}

std::int64_t int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw SchemaError(std::string(name) + ": integer expected");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + ": array expected");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw SchemaError(std::string(what) + ": integer entries expected");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

CharSeq char_seq(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + ": array expected");
  CharSeq out;
  for (const auto& v : j) out.push_back(int_vector(v, what));
  return out;
}

json dump_int(const Int& v) {
  // Emit as JSON integer when it fits; decimal string otherwise.
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

Int parse_int(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw SchemaError(std::string(what) + ": integer or decimal string expected");
}

} // namespace

json read_json_file(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw SchemaError("cannot open input file: " + path);
    in = &file;
  }
  json j;
  try {
    *in >> j;
  } catch (const std::exception& e) {
    throw SchemaError(std::string("JSON parse error: ") + e.what());
  }
  return j;
}

json dump_group(const FinAbGroup& g) {
  return json{{"invariants", g.invariants}};
}

FinAbGroup parse_group(const json& j) {
  try {
    return FinAbGroup(int_vector(field(j, "invariants"), "invariants"));
  } catch (const PreconditionFailed& e) {
    throw SchemaError(std::string("invalid group: ") + e.what());
  }
}

json dump_field(const FieldLabel& f) {
  return json{{"base", f.base}, {"trdeg", f.base_trdeg}, {"t", f.t_count}};
}

FieldLabel parse_field(const json& j) {
  FieldLabel f;
  f.base = field(j, "base").get<std::string>();
  f.base_trdeg = int_field(j, "trdeg");
  f.t_count = int_field(j, "t");
  if (f.base_trdeg < 0 || f.t_count < 0)
    throw SchemaError("field label with negative transcendence data");
  if (f.base == "k" && f.base_trdeg != 0)
    throw SchemaError("ground field label must have trdeg 0");
  return f;
}

json dump_osymbol(const OSymbol& s) {
  return json{{"field", dump_field(s.field)},
              {"A", dump_group(s.group)},
              {"S", s.chars},
              {"n", s.grading()}};
}

OSymbol parse_osymbol(const json& j) {
  FieldLabel f = parse_field(field(j, "field"));
  FinAbGroup g = parse_group(field(j, "A"));
  CharSeq chars = char_seq(field(j, "S"), "S");
  OSymbol s;
  try {
    s = make_osymbol(f, g, chars);
  } catch (const CharacterOutsideGroup& e) {
    throw SchemaError(std::string("invalid symbol: ") + e.what());
  }
  if (j.contains("n") && int_field(j, "n") != s.grading())
    throw SchemaError("symbol grading does not match field/character data");
  return s;
}

json dump_element(const ObarElement& e) {
  json terms = json::array();
  for (const auto& [sym, c] : e.terms())
    terms.push_back(json{{"symbol", dump_osymbol(sym)}, {"coeff", c}});
  return terms;
}

ObarElement parse_element(const json& j) {
  if (!j.is_array()) throw SchemaError("element: array of terms expected");
  ObarElement e;
  for (const auto& t : j) {
    OSymbol sym = parse_osymbol(field(t, "symbol"));
    e.add(sym, int_field(t, "coeff"));
  }
  return e;
}

json dump_stack_label(const StackLabel& l) {
  if (const auto* at = std::get_if<StackLabelNode::Atomic>(&l->kind)) {
    return json{{"kind", "atomic"},
                {"id", at->id},
                {"dim", l->dim},
                {"chars", dump_group(l->stabilizer_chars)}};
  }
  const auto& act = std::get<StackLabelNode::Action>(l->kind);
  return json{{"kind", "action"},
              {"parent", dump_stack_label(act.parent)},
              {"char", act.character}};
}

StackLabel parse_stack_label(const json& j, LabelRegistry& reg) {
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "atomic") {
    return reg.atomic(field(j, "id").get<std::string>(), int_field(j, "dim"),
                      parse_group(field(j, "chars")));
  }
  if (kind == "action") {
    StackLabel parent = parse_stack_label(field(j, "parent"), reg);
    auto coords = int_vector(field(j, "char"), "char");
    return reg.action_construct(parent,
                                GroupElement(parent->stabilizer_chars, coords));
  }
  throw SchemaError("unknown stack label kind: " + kind);
}

json dump_csymbol(const CSymbol& s) {
  return json{{"stack", dump_stack_label(s.stack)},
              {"alpha", s.chars},
              {"n", s.grading()}};
}

CSymbol parse_csymbol(const json& j, LabelRegistry& reg) {
  StackLabel l = parse_stack_label(field(j, "stack"), reg);
  return CSymbol{l, char_seq(field(j, "alpha"), "alpha")};
}

json dump_celement(const CburnElement& e) {
  json terms = json::array();
  for (const auto& [key, c] : e.terms())
    terms.push_back(json{{"label", key.label},
                         {"dim", key.dim},
                         {"A", dump_group(key.group)},
                         {"alpha", key.chars},
                         {"coeff", c}});
  return terms;
}

json dump_matrix(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(dump_int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat parse_matrix(const json& j) {
  if (!j.is_array()) throw SchemaError("matrix: array of rows expected");
  std::size_t rows = j.size(), cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw SchemaError("matrix: rows must be arrays");
    cols = j[0].size();
  }
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw SchemaError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = parse_int(j[i][c], "matrix entry");
  }
  return m;
}

json dump_hom(const GroupHom& h) {
  return json{{"source", dump_group(h.source)},
              {"target", dump_group(h.target)},
              {"matrix", dump_matrix(h.matrix)}};
}

json dump_fan(const StackyFan& f) {
  json cones = json::array();
  for (const auto& c : f.cones) cones.push_back(c);
  return json{{"rank", f.rank}, {"rays", f.rays}, {"cones", cones}};
}

StackyFan parse_fan(const json& j) {
  StackyFan f;
  f.rank = int_field(j, "rank");
  const json& rays = field(j, "rays");
  if (!rays.is_array()) throw SchemaError("rays: array expected");
  for (const auto& r : rays) f.rays.push_back(int_vector(r, "ray"));
  const json& cones = field(j, "cones");
  if (!cones.is_array()) throw SchemaError("cones: array expected");
  for (const auto& c : cones) {
    auto raw = int_vector(c, "cone");
    Cone cone;
    for (auto v : raw) {
      if (v < 0) throw SchemaError("cone with negative ray index");
      cone.push_back(static_cast<std::size_t>(v));
    }
    f.cones.insert(std::move(cone));
  }
  return f;
}

json dump_component(const StabilizerComponentData& c) {
  json out{{"dim", c.dim}, {"A", dump_group(c.group)}, {"beta", c.beta}};
  if (c.field) out["field"] = dump_field(*c.field);
  if (c.stack) out["stack"] = dump_stack_label(*c.stack);
  if (c.in_divisor) out["in_divisor"] = true;
  return out;
}

StabilizerComponentData parse_component(const json& j, LabelRegistry* reg) {
  StabilizerComponentData c;
  c.dim = int_field(j, "dim");
  c.group = parse_group(field(j, "A"));
  c.beta = char_seq(field(j, "beta"), "beta");
  if (j.contains("field")) c.field = parse_field(j.at("field"));
  if (j.contains("stack")) {
    if (!reg) throw SchemaError("stack labels need a registry context");
    c.stack = parse_stack_label(j.at("stack"), *reg);
  }
  if (j.contains("in_divisor")) c.in_divisor = j.at("in_divisor").get<bool>();
  return c;
}

json dump_orbifold(const OrbifoldDescription& d) {
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back(dump_component(c));
  return json{{"n", d.grading}, {"components", comps}};
}

OrbifoldDescription parse_orbifold(const json& j, LabelRegistry* reg) {
  OrbifoldDescription d;
  d.grading = int_field(j, "n");
  const json& comps = field(j, "components");
  if (!comps.is_array()) throw SchemaError("components: array expected");
  for (const auto& c : comps) d.components.push_back(parse_component(c, reg));
  return d;
}

json dump_snc(const SncOpenDescription& d) {
  json strata = json::array();
  for (const auto& st : d.strata) {
    json comps = json::array();
    for (const auto& comp : st.components) {
      json c = dump_component(comp.data);
      c["normal_chars"] = comp.normal_chars;
      comps.push_back(std::move(c));
    }
    json names = json::array();
    for (auto i : st.divisor_indices) names.push_back(d.divisor_ids[i]);
    strata.push_back(json{{"I", names}, {"components", comps}});
  }
  return json{{"ambient", dump_orbifold(d.ambient)},
              {"divisors", d.divisor_ids},
              {"strata", strata}};
}

SncOpenDescription parse_snc(const json& j) {
  SncOpenDescription d;
  d.ambient = parse_orbifold(field(j, "ambient"));
  const json& divisors = field(j, "divisors");
  if (!divisors.is_array()) throw SchemaError("divisors: array expected");
  for (const auto& id : divisors) d.divisor_ids.push_back(id.get<std::string>());
  const json& strata = field(j, "strata");
  if (!strata.is_array()) throw SchemaError("strata: array expected");
  for (const auto& st : strata) {
    SncStratum stratum;
    for (const auto& name : field(st, "I")) {
      auto it = std::find(d.divisor_ids.begin(), d.divisor_ids.end(),
                          name.get<std::string>());
      if (it == d.divisor_ids.end())
        throw SchemaError("stratum references unknown divisor");
      stratum.divisor_indices.push_back(
          static_cast<std::size_t>(it - d.divisor_ids.begin()));
    }
    std::sort(stratum.divisor_indices.begin(), stratum.divisor_indices.end());
    for (const auto& c : field(st, "components")) {
      SncStratumComponent comp;
      comp.data = parse_component(c, nullptr);
      comp.normal_chars = char_seq(field(c, "normal_chars"), "normal_chars");
      stratum.components.push_back(std::move(comp));
    }
    d.strata.push_back(std::move(stratum));
  }
  return d;
}

ModelDescription parse_model(const json& j) {
  ModelDescription m;
  for (const auto& c : field(j, "components")) {
    ModelDescription::Component comp;
    comp.id = field(c, "id").get<std::string>();
    comp.multiplicity = int_field(c, "multiplicity");
    m.components.push_back(std::move(comp));
  }
  for (const auto& inc : field(j, "incidences")) {
    ModelIncidence mi;
    for (const auto& id : field(inc, "I")) mi.divisors.push_back(id.get<std::string>());
    for (const auto& st : field(inc, "strata")) {
      ModelStratum ms;
      ms.cover = parse_field(field(st, "cover"));
      ms.group = parse_group(field(st, "A"));
      ms.beta = char_seq(field(st, "beta"), "beta");
      mi.strata.push_back(std::move(ms));
    }
    m.incidences.push_back(std::move(mi));
  }
  return m;
}

json dump_model(const ModelDescription& m) {
  json comps = json::array();
  for (const auto& c : m.components)
    comps.push_back(json{{"id", c.id}, {"multiplicity", c.multiplicity}});
  json incs = json::array();
  for (const auto& inc : m.incidences) {
    json strata = json::array();
    for (const auto& st : inc.strata)
      strata.push_back(json{{"cover", dump_field(st.cover)},
                            {"A", dump_group(st.group)},
                            {"beta", st.beta}});
    incs.push_back(json{{"I", inc.divisors}, {"strata", strata}});
  }
  return json{{"components", comps}, {"incidences", incs}};
}

json dump_free_class(const FreeFieldClass& c) {
  json terms = json::array();
  for (const auto& [f, v] : c.terms)
    terms.push_back(json{{"field", dump_field(f)}, {"coeff", v}});
  return terms;
}

json dump_verdict(const SymbolUniverse& universe,
                  const std::vector<OSymbol>& seeds, const ObarElement& element,
                  const RelationLattice::Verdict& verdict) {
  json seeds_json = json::array();
  for (const auto& s : seeds) seeds_json.push_back(dump_osymbol(s));
  json out{{"presentation", presentation_name(universe.presentation)},
           {"grading", universe.grading},
           {"seeds", seeds_json},
           {"element", dump_element(element)},
           {"equal", verdict.zero}};
  if (verdict.certificate) {
    json cert = json::object();
    for (const auto& [rid, coeff] : verdict.certificate->combination)
      cert[std::to_string(rid)] = dump_int(coeff);
    out["certificate"] = std::move(cert);
  }
  if (verdict.witness) {
    json values = json::array();
    for (std::size_t i = 0; i < verdict.witness->values.size(); ++i) {
      if (verdict.witness->values[i] == 0) continue;
      values.push_back(json{{"symbol", dump_osymbol(universe.symbols[i])},
                            {"value", dump_int(verdict.witness->values[i])}});
    }
    out["witness"] =
        json{{"functional", values}, {"modulus", dump_int(verdict.witness->modulus)}};
  }
  return out;
}

CertificateDocument parse_certificate(const json& j) {
  CertificateDocument doc;
  doc.presentation =
      presentation_from_name(field(j, "presentation").get<std::string>());
  doc.grading = int_field(j, "grading");
  for (const auto& s : field(j, "seeds")) doc.seeds.push_back(parse_osymbol(s));
  doc.element = parse_element(field(j, "element"));
  doc.equal = field(j, "equal").get<bool>();
  if (j.contains("certificate")) {
    const json& cert = j.at("certificate");
    if (!cert.is_object()) throw SchemaError("certificate: object expected");
    for (const auto& [key, value] : cert.items()) {
      std::size_t rid = 0;
      try {
        rid = std::stoull(key);
      } catch (const std::exception&) {
        throw SchemaError("certificate: relation ids must be integers");
      }
      doc.combination[rid] = parse_int(value, "certificate coefficient");
    }
  }
  return doc;
}

} // namespace burnside::io
