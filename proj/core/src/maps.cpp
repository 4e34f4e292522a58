#include "burnside/maps.hpp"

#include <algorithm>
#include <set>

namespace burnside {

namespace {

std::vector<GroupElement> subset_gens(const OSymbol& sym, std::size_t mask) {
  std::vector<GroupElement> gens;
  for (std::size_t m = 0; m < sym.chars.size(); ++m)
    if (mask & (std::size_t(1) << m))
      gens.emplace_back(sym.group, sym.chars[m]);
  return gens;
}

} // namespace

ObarElement kappa_bar(const OSymbol& sym) {
  const std::size_t m = sym.chars.size();
  if (m > 30) throw GroupTooLarge("character sequence too long for subset sum");
  ObarElement out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    auto [q, pi] = quotient(sym.group, subset_gens(sym, mask));
    CharSeq chars;
    chars.reserve(m);
    for (const auto& c : sym.chars) chars.push_back(pi.apply_coords(c));
    const int sign = std::popcount(mask) % 2 == 0 ? 1 : -1;
    out.add(normalize_oburn(OSymbol{sym.field, q, std::move(chars)}), sign);
  }
  return out;
}

ObarElement kappa_bar(const ObarElement& e) {
  ObarElement out;
  for (const auto& [sym, c] : e.terms()) {
    ObarElement img = kappa_bar(sym);
    for (const auto& [t, v] : img.terms()) out.add(t, v * c);
  }
  return out;
}

ObarElement kappa_bar_inverse(const OSymbol& sym) {
  const std::size_t m = sym.chars.size();
  if (m > 30) throw GroupTooLarge("character sequence too long for subset sum");
  ObarElement out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    auto [q, pi] = quotient(sym.group, subset_gens(sym, mask));
    CharSeq chars;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t(1) << i)) continue;
      chars.push_back(pi.apply_coords(sym.chars[i]));
    }
    out += normalize_obar(OSymbol{
        sym.field.with_t(std::popcount(mask)), q, std::move(chars)});
  }
  return out;
}

ObarElement kappa_bar_inverse(const ObarElement& e) {
  ObarElement out;
  for (const auto& [sym, c] : e.terms()) {
    ObarElement img = kappa_bar_inverse(sym);
    for (const auto& [t, v] : img.terms()) out.add(t, v * c);
  }
  return out;
}

CSymbol from_equivariant(const EquivariantSymbol& sym, LabelRegistry& reg) {
  for (const auto& c : sym.beta) {
    GroupElement e(sym.stabilizer_chars, c);
    if (e.is_zero())
      throw InvalidComponent("equivariant symbol with trivial character");
  }
  if (!generates(sym.stabilizer_chars,
                 [&] {
                   std::vector<GroupElement> v;
                   for (const auto& c : sym.beta)
                     v.emplace_back(sym.stabilizer_chars, c);
                   return v;
                 }()))
    throw InvalidComponent("equivariant characters do not generate");

  std::string id = "equivariant:" + sym.field.base + ":t" +
                   std::to_string(sym.field.t_count) + ":" + sym.action_attr;
  StackLabel label =
      reg.atomic(id, sym.field.total_trdeg(), sym.stabilizer_chars);
  return normalize_cburn(CSymbol{label, sym.beta});
}

FreeFieldClass to_classical(const ObarElement& e) {
  FreeFieldClass out;
  for (const auto& [sym, c] : e.terms())
    out.add(sym.field.with_t(static_cast<std::int64_t>(sym.chars.size())), c);
  return out;
}

FreeFieldClass to_grothendieck(const ObarElement& e) {
  FreeFieldClass out;
  for (const auto& [sym, c] : e.terms())
    if (sym.chars.empty()) out.add(sym.field, c);
  return out;
}

std::map<std::string, std::int64_t> to_grothendieck(const CburnElement& e,
                                                    const LabelRegistry& reg) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [key, c] : e.terms()) {
    if (!key.chars.empty()) continue;
    out[key.label] += c;
    if (out[key.label] == 0) out.erase(key.label);
  }
  return out;
}

ObarElement specialize(const ModelDescription& model, std::int64_t grading) {
  std::set<std::string> known;
  for (const auto& c : model.components) {
    if (c.multiplicity < 1)
      throw PreconditionFailed("component multiplicities must be positive");
    known.insert(c.id);
  }

  // Downward consistency: every nonempty subset of a declared incidence
  // must itself be declared.
  std::set<std::vector<std::string>> declared;
  for (const auto& inc : model.incidences) {
    if (inc.divisors.empty())
      throw MissingIncidenceData("incidence with empty divisor set");
    std::vector<std::string> ids = inc.divisors;
    std::sort(ids.begin(), ids.end());
    for (const auto& id : ids)
      if (!known.count(id))
        throw MissingIncidenceData("incidence names unknown component " + id);
    declared.insert(ids);
  }
  for (const auto& ids : declared) {
    const std::size_t n = ids.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      std::vector<std::string> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) sub.push_back(ids[i]);
      if (!declared.count(sub))
        throw MissingIncidenceData("undeclared nonempty sub-incidence");
    }
  }

  ObarElement out;
  for (const auto& inc : model.incidences) {
    const int sign = inc.divisors.size() % 2 == 1 ? 1 : -1;
    for (const auto& st : inc.strata) {
      OSymbol sym = make_osymbol(st.cover, st.group, st.beta);
      if (sym.grading() != grading)
        throw GradingMismatch("stratum grading does not match request");
      ObarElement canon = normalize_obar(sym);
      for (const auto& [t, v] : canon.terms()) out.add(t, v * sign);
    }
  }
  return out;
}

} // namespace burnside
