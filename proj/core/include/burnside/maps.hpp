#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "burnside/symbols.hpp"

namespace burnside {

/// Formal integer combination of field labels (the classical projection's
/// codomain), graded by total transcendence degree.
struct FreeFieldClass {
  std::map<FieldLabel, std::int64_t> terms;

  void add(const FieldLabel& f, std::int64_t c) {
    if (c == 0) return;
    auto it = terms.find(f);
    if (it == terms.end())
      terms.emplace(f, c);
    else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool operator==(const FreeFieldClass&) const = default;
};

/// Comparison map between the vanishing presentation and the t-trade
/// presentation: signed sum over subsets I of character slots, pushing all
/// characters to the quotient by the I-characters.
ObarElement kappa_bar(const OSymbol& sym);
ObarElement kappa_bar(const ObarElement& e);

/// Inverse direction: unsigned sum over subsets, dropping the I-characters
/// and trading each for a transcendental variable.
ObarElement kappa_bar_inverse(const OSymbol& sym);
ObarElement kappa_bar_inverse(const ObarElement& e);

/// Triple (H, field-with-action, beta) from the equivariant theory.
struct EquivariantSymbol {
  FinAbGroup stabilizer_chars;
  FieldLabel field;
  std::string action_attr; // opaque description of the residual action
  CharSeq beta;
};

/// Deterministic translation to a finer symbol: one atomic stack label per
/// (field, action) pair, reused on repetition.
CSymbol from_equivariant(const EquivariantSymbol& sym, LabelRegistry& reg);

/// (K, A, S) -> [K(t_1..t_{|S|})], extended linearly.
FreeFieldClass to_classical(const ObarElement& e);

/// Annihilate terms with characters, keep the labels of bare terms.
FreeFieldClass to_grothendieck(const ObarElement& e);
std::map<std::string, std::int64_t> to_grothendieck(const CburnElement& e,
                                                    const LabelRegistry& reg);

/// Regular-model description feeding the specialization sum: multiplicity
/// data for the special-fiber components, and for every declared nonempty
/// intersection the stabilizer strata of the punctured normal bundle with
/// their user-supplied cover labels.
struct ModelStratum {
  FieldLabel cover;  // function field of the component's cover locus
  FinAbGroup group;
  CharSeq beta;
};
struct ModelIncidence {
  std::vector<std::string> divisors; // nonempty I, sorted component ids
  std::vector<ModelStratum> strata;
};
struct ModelDescription {
  struct Component {
    std::string id;
    std::int64_t multiplicity = 1;
  };
  std::vector<Component> components;
  std::vector<ModelIncidence> incidences;
};

/// The alternating specialization sum over declared incidences; each
/// stratum contributes its cover symbol with sign (-1)^{|I|-1}.
ObarElement specialize(const ModelDescription& model, std::int64_t grading);

} // namespace burnside
