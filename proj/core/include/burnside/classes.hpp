#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burnside/symbols.hpp"

namespace burnside {

/// One stabilizer component of a stratified orbifold: its generic-point
/// label, dimension, stabilizer character group, and the normal-bundle
/// characters at the generic point.
struct StabilizerComponentData {
  std::optional<FieldLabel> field; // coarse function-field label
  std::optional<StackLabel> stack; // finer label, when available
  std::int64_t dim = 0;
  FinAbGroup group;
  CharSeq beta;
  bool in_divisor = false; // used by open descriptions only

  std::int64_t ambient_grading() const {
    return dim + static_cast<std::int64_t>(beta.size());
  }
};

struct OrbifoldDescription {
  std::int64_t grading = 0;
  std::vector<StabilizerComponentData> components;
};

/// Checks the stratification shape: one generic component (trivial group,
/// full dimension, no normal characters) and consistent gradings.
void validate_orbifold(const OrbifoldDescription& desc);

/// Sum of one finer symbol per component.  Components must carry stack
/// labels, nonzero generating normal characters.
CburnElement class_of_orbifold(const OrbifoldDescription& desc,
                               const LabelRegistry& reg);

/// Same sum mapped to coarse symbols through the components' field labels.
ObarElement naive_class_open(const OrbifoldDescription& desc);

/// Class of the total space of a sum of r line bundles on a stratified
/// base: per component and per admissible subset I of the bundle indices
/// (no leftover character falls into the span of the chosen ones), a
/// symbol over the quotient with the leftover and normal characters pushed
/// forward and |I| new transcendental variables.  `chars` holds, per base
/// component, the r restriction characters.
ObarElement line_bundle_sum_naive_class(
    const OrbifoldDescription& base,
    const std::vector<CharSeq>& chars);

/// Total space minus all zero sections: one term per component whose
/// normal characters survive in the quotient by all bundle characters.
ObarElement punctured_bundle_class(const OrbifoldDescription& base,
                                   const std::vector<CharSeq>& chars);

/// Snc-complement data: ambient stratification, divisor index set, and for
/// each declared nonempty intersection the component data of the stratum
/// together with per-component normal characters of the divisors in I.
struct SncStratumComponent {
  StabilizerComponentData data;
  std::vector<CharSeq> normal_chars_unused; // reserved
  CharSeq normal_chars;                     // |I| characters, in I order
};
struct SncStratum {
  std::vector<std::size_t> divisor_indices; // sorted, into divisor_ids
  std::vector<SncStratumComponent> components;
};
struct SncOpenDescription {
  OrbifoldDescription ambient;
  std::vector<std::string> divisor_ids;
  std::vector<SncStratum> strata;
};

void validate_snc(const SncOpenDescription& desc);

/// Inclusion-exclusion form: ambient class plus the alternating sum of
/// normal-bundle classes over the declared intersections.
ObarElement class_open(const SncOpenDescription& desc);

/// Equivalent punctured form: the open naive class plus the alternating
/// sum of punctured normal-bundle classes.
ObarElement class_open_punctured_form(const SncOpenDescription& desc);

} // namespace burnside
