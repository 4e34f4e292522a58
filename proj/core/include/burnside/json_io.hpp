#pragma once

#include <nlohmann/json_fwd.hpp>

#include "burnside/classes.hpp"
#include "burnside/lattice.hpp"
#include "burnside/maps.hpp"
#include "burnside/toric.hpp"

// Document (de)serialization for the CLI and fixtures.  Schemas are
// documented in docs/formats.md.  Parsers throw SchemaError on malformed
// input; all emitters produce canonically ordered output.

namespace burnside::io {

using json = nlohmann::json;

json dump_group(const FinAbGroup& g);
FinAbGroup parse_group(const json& j);

json dump_field(const FieldLabel& f);
FieldLabel parse_field(const json& j);

json dump_osymbol(const OSymbol& s);
OSymbol parse_osymbol(const json& j);

json dump_element(const ObarElement& e);
ObarElement parse_element(const json& j);

json dump_stack_label(const StackLabel& l);
StackLabel parse_stack_label(const json& j, LabelRegistry& reg);

json dump_csymbol(const CSymbol& s);
CSymbol parse_csymbol(const json& j, LabelRegistry& reg);

json dump_celement(const CburnElement& e);

json dump_hom(const GroupHom& h);
json dump_matrix(const IntMat& m);
IntMat parse_matrix(const json& j);

json dump_fan(const StackyFan& f);
StackyFan parse_fan(const json& j);

json dump_orbifold(const OrbifoldDescription& d);
OrbifoldDescription parse_orbifold(const json& j, LabelRegistry* reg = nullptr);

json dump_snc(const SncOpenDescription& d);
SncOpenDescription parse_snc(const json& j);

ModelDescription parse_model(const json& j);
json dump_model(const ModelDescription& m);

json dump_free_class(const FreeFieldClass& c);

/// Self-contained equality verdict: enough to rebuild the universe and
/// replay the certificate.
json dump_verdict(const SymbolUniverse& universe,
                  const std::vector<OSymbol>& seeds, const ObarElement& element,
                  const RelationLattice::Verdict& verdict);

struct CertificateDocument {
  Presentation presentation;
  std::int64_t grading = 0;
  std::vector<OSymbol> seeds;
  ObarElement element;
  bool equal = false;
  std::map<std::size_t, Int> combination;
};
CertificateDocument parse_certificate(const json& j);

json read_json_file(const std::string& path);

} // namespace burnside::io
