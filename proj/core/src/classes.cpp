#include "burnside/classes.hpp"

#include <algorithm>
#include <set>

namespace burnside {

namespace {

bool coords_zero(const std::vector<std::int64_t>& c) {
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

std::vector<GroupElement> as_elements(const FinAbGroup& a, const CharSeq& cs) {
  std::vector<GroupElement> v;
  v.reserve(cs.size());
  for (const auto& c : cs) v.emplace_back(a, c);
  return v;
}

void validate_component(const StabilizerComponentData& c, std::int64_t grading) {
  if (c.ambient_grading() != grading)
    throw InvalidComponent("component dimension plus characters != grading");
  if (c.field && c.field->total_trdeg() != c.dim)
    throw InvalidComponent("field label transcendence degree != dimension");
}

void require_valid_beta(const StabilizerComponentData& c) {
  for (const auto& b : c.beta) {
    if (b.size() != c.group.arity())
      throw CharacterOutsideGroup("normal character arity mismatch");
    if (coords_zero(GroupElement(c.group, b).coords))
      throw InvalidComponent("trivial character in normal data");
  }
  if (!generates(c.group, as_elements(c.group, c.beta)))
    throw InvalidComponent("normal characters do not generate");
}

} // namespace

void validate_orbifold(const OrbifoldDescription& desc) {
  std::size_t generic = 0;
  for (const auto& c : desc.components) {
    validate_component(c, desc.grading);
    if (c.group.trivial() && c.dim == desc.grading) ++generic;
  }
  if (generic != 1)
    throw InvalidComponent("stratification needs exactly one generic component");
}

CburnElement class_of_orbifold(const OrbifoldDescription& desc,
                               const LabelRegistry& reg) {
  validate_orbifold(desc);
  CburnElement out;
  for (const auto& c : desc.components) {
    if (!c.stack) throw InvalidComponent("component without stack label");
    require_valid_beta(c);
    CSymbol sym = normalize_cburn(CSymbol{*c.stack, c.beta});
    out.add(csymbol_key(sym, &reg), 1);
  }
  return out;
}

ObarElement naive_class_open(const OrbifoldDescription& desc) {
  validate_orbifold(desc);
  ObarElement out;
  for (const auto& c : desc.components) {
    if (!c.field) throw InvalidComponent("component without field label");
    require_valid_beta(c);
    out += normalize_obar(make_osymbol(*c.field, c.group, c.beta));
  }
  return out;
}

namespace {

// Shared by the bundle-class formulas: one component's contribution.
ObarElement component_bundle_sum(const StabilizerComponentData& c,
                                 const CharSeq& alpha) {
  if (!c.field) throw InvalidComponent("component without field label");
  const FinAbGroup& a = c.group;
  for (const auto& ch : alpha)
    if (ch.size() != a.arity())
      throw CharacterOutsideGroup("bundle character arity mismatch");

  const std::size_t r = alpha.size();
  ObarElement out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t(1) << i)) gens.emplace_back(a, alpha[i]);
    bool admissible = true;
    for (std::size_t jx = 0; jx < r && admissible; ++jx) {
      if (mask & (std::size_t(1) << jx)) continue;
      if (subgroup_contains(a, gens, GroupElement(a, alpha[jx])))
        admissible = false;
    }
    if (!admissible) continue;

    auto [q, pi] = quotient(a, gens);
    CharSeq chars;
    for (std::size_t jx = 0; jx < r; ++jx) {
      if (mask & (std::size_t(1) << jx)) continue;
      chars.push_back(pi.apply_coords(GroupElement(a, alpha[jx]).coords));
    }
    for (const auto& b : c.beta)
      chars.push_back(pi.apply_coords(GroupElement(a, b).coords));
    out += normalize_obar(OSymbol{
        c.field->with_t(std::popcount(mask)), q, std::move(chars)});
  }
  return out;
}

ObarElement component_punctured(const StabilizerComponentData& c,
                                const CharSeq& alpha) {
  if (!c.field) throw InvalidComponent("component without field label");
  const FinAbGroup& a = c.group;
  for (const auto& ch : alpha)
    if (ch.size() != a.arity())
      throw CharacterOutsideGroup("bundle character arity mismatch");

  auto [q, pi] = quotient(a, as_elements(a, alpha));
  CharSeq chars;
  for (const auto& b : c.beta) {
    auto img = pi.apply_coords(GroupElement(a, b).coords);
    if (coords_zero(img)) return {}; // component dies in the quotient
    chars.push_back(std::move(img));
  }
  ObarElement out;
  out += normalize_obar(OSymbol{
      c.field->with_t(static_cast<std::int64_t>(alpha.size())), q,
      std::move(chars)});
  return out;
}

void check_char_lists(const OrbifoldDescription& base,
                      const std::vector<CharSeq>& chars) {
  if (chars.size() != base.components.size())
    throw CharacterOutsideGroup("one character list per component required");
  std::size_t r = chars.empty() ? 0 : chars.front().size();
  for (const auto& cs : chars)
    if (cs.size() != r)
      throw CharacterOutsideGroup("bundle rank differs between components");
}

} // namespace

ObarElement line_bundle_sum_naive_class(const OrbifoldDescription& base,
                                        const std::vector<CharSeq>& chars) {
  check_char_lists(base, chars);
  ObarElement out;
  for (std::size_t i = 0; i < base.components.size(); ++i)
    out += component_bundle_sum(base.components[i], chars[i]);
  return out;
}

ObarElement punctured_bundle_class(const OrbifoldDescription& base,
                                   const std::vector<CharSeq>& chars) {
  check_char_lists(base, chars);
  ObarElement out;
  for (std::size_t i = 0; i < base.components.size(); ++i)
    out += component_punctured(base.components[i], chars[i]);
  return out;
}

void validate_snc(const SncOpenDescription& desc) {
  validate_orbifold(desc.ambient);
  std::set<std::vector<std::size_t>> declared;
  for (const auto& st : desc.strata) {
    if (st.divisor_indices.empty())
      throw MissingIncidenceData("stratum with empty divisor set");
    auto ids = st.divisor_indices;
    if (!std::is_sorted(ids.begin(), ids.end()) ||
        std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      throw MissingIncidenceData("divisor indices must be sorted and distinct");
    for (auto i : ids)
      if (i >= desc.divisor_ids.size())
        throw MissingIncidenceData("divisor index out of range");
    declared.insert(ids);
    const std::int64_t stratum_dim =
        desc.ambient.grading - static_cast<std::int64_t>(ids.size());
    for (const auto& comp : st.components) {
      if (comp.data.ambient_grading() != stratum_dim)
        throw InvalidComponent("stratum component grading mismatch");
      if (comp.normal_chars.size() != ids.size())
        throw MissingIncidenceData("one normal character per divisor required");
    }
  }
  // Downward consistency.
  for (const auto& ids : declared) {
    const std::size_t n = ids.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) sub.push_back(ids[i]);
      if (!declared.count(sub))
        throw MissingIncidenceData("undeclared nonempty sub-intersection");
    }
  }
}

namespace {

ObarElement stratum_bundle_class(const SncStratum& st, bool punctured) {
  ObarElement out;
  for (const auto& comp : st.components) {
    out += punctured ? component_punctured(comp.data, comp.normal_chars)
                     : component_bundle_sum(comp.data, comp.normal_chars);
  }
  return out;
}

} // namespace

ObarElement class_open(const SncOpenDescription& desc) {
  validate_snc(desc);
  ObarElement out = naive_class_open(desc.ambient);
  for (const auto& st : desc.strata) {
    const int sign = st.divisor_indices.size() % 2 == 1 ? -1 : 1;
    ObarElement part = stratum_bundle_class(st, false);
    for (const auto& [sym, c] : part.terms()) out.add(sym, c * sign);
  }
  return out;
}

ObarElement class_open_punctured_form(const SncOpenDescription& desc) {
  validate_snc(desc);
  ObarElement out;
  for (const auto& c : desc.ambient.components) {
    if (c.in_divisor) continue;
    if (!c.field) throw InvalidComponent("component without field label");
    require_valid_beta(c);
    out += normalize_obar(make_osymbol(*c.field, c.group, c.beta));
  }
  for (const auto& st : desc.strata) {
    const int sign = st.divisor_indices.size() % 2 == 1 ? -1 : 1;
    ObarElement part = stratum_bundle_class(st, true);
    for (const auto& [sym, c] : part.terms()) out.add(sym, c * sign);
  }
  return out;
}

} // namespace burnside
