#include "burnside/symbols.hpp"

#include <algorithm>
#include <sstream>

namespace burnside {

namespace {

bool char_is_zero(const std::vector<std::int64_t>& c) {
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

CharSeq reduce_chars(const FinAbGroup& a, const CharSeq& chars) {
  CharSeq out;
  out.reserve(chars.size());
  for (const auto& c : chars) {
    if (c.size() != a.arity())
      throw CharacterOutsideGroup("character arity does not match group");
    out.push_back(GroupElement(a, c).coords);
  }
  return out;
}

std::vector<GroupElement> elements_of(const FinAbGroup& a, const CharSeq& chars) {
  std::vector<GroupElement> v;
  v.reserve(chars.size());
  for (const auto& c : chars) v.emplace_back(a, c);
  return v;
}

void require_generates(const FinAbGroup& a, const CharSeq& chars) {
  if (!generates(a, elements_of(a, chars)))
    throw InvalidComponent("characters do not generate the stabilizer dual");
}

} // namespace

OSymbol make_osymbol(FieldLabel field, FinAbGroup group, CharSeq chars) {
  OSymbol s{std::move(field), group, reduce_chars(group, chars)};
  return s;
}

// ---------------------------------------------------------------------------
// Canonical forms

CharSeq canonical_chars(const FinAbGroup& a, const CharSeq& chars_in) {
  CharSeq chars = reduce_chars(a, chars_in);
  std::sort(chars.begin(), chars.end());
  if (a.trivial() || chars.empty()) return chars;
  const auto& auts = automorphisms_cached(a);
  CharSeq best;
  bool have = false;
  for (const auto& phi : auts) {
    CharSeq mapped;
    mapped.reserve(chars.size());
    for (const auto& c : chars) mapped.push_back(phi.apply_coords(c));
    std::sort(mapped.begin(), mapped.end());
    if (!have || mapped < best) {
      best = std::move(mapped);
      have = true;
    }
  }
  return best;
}

ObarElement normalize_obar(const OSymbol& sym) {
  CharSeq chars = reduce_chars(sym.group, sym.chars);
  for (const auto& c : chars)
    if (char_is_zero(c)) return {};
  CharSeq canon = canonical_chars(sym.group, chars);
  require_generates(sym.group, canon);
  ObarElement e;
  e.add(OSymbol{sym.field, sym.group, std::move(canon)}, 1);
  return e;
}

OSymbol normalize_oburn(const OSymbol& sym) {
  CharSeq chars = reduce_chars(sym.group, sym.chars);
  CharSeq kept;
  std::int64_t dropped = 0;
  for (auto& c : chars) {
    if (char_is_zero(c))
      ++dropped;
    else
      kept.push_back(std::move(c));
  }
  CharSeq canon = canonical_chars(sym.group, kept);
  require_generates(sym.group, canon);
  return OSymbol{sym.field.with_t(dropped), sym.group, std::move(canon)};
}

CSymbol normalize_cburn(const CSymbol& sym) {
  CharSeq chars = reduce_chars(sym.stack->stabilizer_chars, sym.chars);
  for (const auto& c : chars)
    if (char_is_zero(c))
      throw InvalidComponent("finer symbols admit no trivial characters");
  std::sort(chars.begin(), chars.end());
  require_generates(sym.stack->stabilizer_chars, chars);
  return CSymbol{sym.stack, std::move(chars)};
}

// ---------------------------------------------------------------------------
// Stack labels

StackLabel LabelRegistry::atomic(const std::string& id, std::int64_t dim,
                                 const FinAbGroup& chars) {
  auto it = atoms_.find(id);
  if (it != atoms_.end()) {
    if (it->second->dim != dim || it->second->stabilizer_chars != chars)
      throw InvalidComponent("atomic label re-registered with different data");
    return it->second;
  }
  auto node = std::make_shared<StackLabelNode>();
  node->kind = StackLabelNode::Atomic{id};
  node->dim = dim;
  node->stabilizer_chars = chars;
  atoms_.emplace(id, node);
  parent_.emplace(id, id);
  return node;
}

StackLabel LabelRegistry::action_construct(const StackLabel& parent,
                                           const GroupElement& character) const {
  if (character.parent != parent->stabilizer_chars)
    throw CharacterOutsideGroup("action character not in parent's group");
  auto [q, pi] = quotient(parent->stabilizer_chars, {character});
  auto node = std::make_shared<StackLabelNode>();
  node->kind = StackLabelNode::Action{parent, character.coords};
  node->dim = parent->dim + 1;
  node->stabilizer_chars = q;
  return node;
}

GroupHom LabelRegistry::action_projection(const StackLabel& node) const {
  const auto* act = std::get_if<StackLabelNode::Action>(&node->kind);
  if (!act) throw PreconditionFailed("label is not an action construction");
  GroupElement c(act->parent->stabilizer_chars, act->character);
  return quotient(act->parent->stabilizer_chars, {c}).second;
}

std::string LabelRegistry::find(const std::string& id) const {
  auto it = parent_.find(id);
  if (it == parent_.end()) return id;
  std::string root = id;
  while (parent_.at(root) != root) root = parent_.at(root);
  // path compression
  std::string cur = id;
  while (parent_.at(cur) != root) {
    std::string next = parent_.at(cur);
    parent_[cur] = root;
    cur = next;
  }
  return root;
}

void LabelRegistry::declare_equivalent(const std::string& id_a,
                                       const std::string& id_b) {
  auto a = atoms_.find(id_a), b = atoms_.find(id_b);
  if (a == atoms_.end() || b == atoms_.end())
    throw InvalidComponent("equivalence declared between unknown labels");
  if (a->second->dim != b->second->dim ||
      a->second->stabilizer_chars != b->second->stabilizer_chars)
    throw InvalidComponent(
        "equivalence requires equal dimension and stabilizer character group");
  std::string ra = find(id_a), rb = find(id_b);
  if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
}

std::string LabelRegistry::representative(const std::string& id) const {
  return find(id);
}

std::string label_key(const StackLabel& label, const LabelRegistry* reg) {
  std::ostringstream os;
  if (const auto* at = std::get_if<StackLabelNode::Atomic>(&label->kind)) {
    os << "atom:" << (reg ? reg->representative(at->id) : at->id);
  } else {
    const auto& act = std::get<StackLabelNode::Action>(label->kind);
    os << "act[";
    for (std::size_t i = 0; i < act.character.size(); ++i) {
      if (i) os << ",";
      os << act.character[i];
    }
    os << "]:" << label_key(act.parent, reg);
  }
  return os.str();
}

CSymbolKey csymbol_key(const CSymbol& sym, const LabelRegistry* reg) {
  return CSymbolKey{label_key(sym.stack, reg), sym.stack->dim,
                    sym.stack->stabilizer_chars, sym.chars};
}

// ---------------------------------------------------------------------------
// Relations

namespace {

void check_pair(const CharSeq& chars, std::size_t i, std::size_t j) {
  if (i >= chars.size() || j >= chars.size())
    throw IndexOutOfRange("relation index out of range");
  if (i == j) throw IndexOutOfRange("relation requires two distinct slots");
}

std::vector<std::int64_t> coord_sub(const FinAbGroup& a,
                                    const std::vector<std::int64_t>& x,
                                    const std::vector<std::int64_t>& y) {
  return elem_sub(GroupElement(a, x), GroupElement(a, y)).coords;
}

CharSeq mapped_chars(const GroupHom& pi, const CharSeq& chars,
                     std::size_t skip1, std::size_t skip2 = SIZE_MAX) {
  CharSeq out;
  out.reserve(chars.size());
  for (std::size_t m = 0; m < chars.size(); ++m) {
    if (m == skip1 || m == skip2) continue;
    out.push_back(pi.apply_coords(chars[m]));
  }
  return out;
}

} // namespace

ObarElement blowup_relation_obar(const OSymbol& sym, std::size_t i,
                                 std::size_t j) {
  check_pair(sym.chars, i, j);
  const FinAbGroup& a = sym.group;
  CharSeq t1 = sym.chars, t2 = sym.chars;
  t1[j] = coord_sub(a, sym.chars[j], sym.chars[i]);
  t2[i] = coord_sub(a, sym.chars[i], sym.chars[j]);

  GroupElement diff(a, coord_sub(a, sym.chars[i], sym.chars[j]));
  auto [q, pi] = quotient(a, {diff});

  ObarElement out;
  out += normalize_obar(OSymbol{sym.field, a, std::move(t1)});
  out += normalize_obar(OSymbol{sym.field, a, std::move(t2)});
  out += normalize_obar(
      OSymbol{sym.field.with_t(1), q, mapped_chars(pi, sym.chars, i)});
  return out;
}

ObarElement blowup_relation_oburn(const OSymbol& sym, std::size_t i,
                                  std::size_t j) {
  check_pair(sym.chars, i, j);
  const FinAbGroup& a = sym.group;
  CharSeq t1 = sym.chars, t2 = sym.chars;
  t1[j] = coord_sub(a, sym.chars[j], sym.chars[i]);
  t2[i] = coord_sub(a, sym.chars[i], sym.chars[j]);

  GroupElement diff(a, coord_sub(a, sym.chars[i], sym.chars[j]));
  auto [q, pi] = quotient(a, {diff});

  ObarElement out;
  out.add(normalize_oburn(OSymbol{sym.field, a, std::move(t1)}), 1);
  out.add(normalize_oburn(OSymbol{sym.field, a, std::move(t2)}), 1);
  out.add(normalize_oburn(
              OSymbol{sym.field.with_t(1), q, mapped_chars(pi, sym.chars, i)}),
          -1);
  return out;
}

OSymbol tpair_relation_oburn(const OSymbol& sym, std::size_t i, std::size_t j) {
  check_pair(sym.chars, i, j);
  const FinAbGroup& a = sym.group;
  GroupElement sum =
      elem_add(GroupElement(a, sym.chars[i]), GroupElement(a, sym.chars[j]));
  if (!sum.is_zero())
    throw PreconditionFailed("slots do not carry opposite characters");
  auto [q, pi] = quotient(a, {GroupElement(a, sym.chars[j])});
  return normalize_oburn(
      OSymbol{sym.field.with_t(2), q, mapped_chars(pi, sym.chars, i, j)});
}

CburnElement blowup_relation_cburn(const CSymbol& sym, std::size_t i,
                                   std::size_t j, const LabelRegistry& reg) {
  if (sym.chars.size() < 2)
    throw SequenceTooShort("blow-up relation needs at least two characters");
  check_pair(sym.chars, i, j);
  const FinAbGroup& a = sym.stack->stabilizer_chars;
  GroupElement diff(a, coord_sub(a, sym.chars[i], sym.chars[j]));

  CburnElement out;
  if (!diff.is_zero()) {
    CharSeq t1 = sym.chars, t2 = sym.chars;
    t1[j] = coord_sub(a, sym.chars[j], sym.chars[i]);
    t2[i] = coord_sub(a, sym.chars[i], sym.chars[j]);
    CSymbol s1 = normalize_cburn(CSymbol{sym.stack, std::move(t1)});
    CSymbol s2 = normalize_cburn(CSymbol{sym.stack, std::move(t2)});
    out.add(csymbol_key(s1, &reg), 1);
    out.add(csymbol_key(s2, &reg), 1);
  }

  // Theta_2 vanishes when some character lies in <diff>.
  bool theta2_zero = false;
  for (const auto& c : sym.chars)
    if (subgroup_contains(a, {diff}, GroupElement(a, c))) {
      theta2_zero = true;
      break;
    }
  if (!theta2_zero) {
    StackLabel y = reg.action_construct(sym.stack, diff);
    GroupHom pi = reg.action_projection(y);
    CSymbol s3 = normalize_cburn(CSymbol{y, mapped_chars(pi, sym.chars, i)});
    out.add(csymbol_key(s3, &reg), 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derived relations

ObarElement replay_derivation(const DerivationCertificate& cert) {
  ObarElement acc;
  for (const auto& [step, coeff] : cert.steps) {
    ObarElement row = normalize_obar(step.base);
    if (step.kind == RelationKind::Blowup)
      row -= blowup_relation_obar(step.base, step.p, step.q);
    for (const auto& [sym, c] : row.terms()) acc.add(sym, c * coeff);
  }
  return acc;
}

namespace {

void accumulate(DerivationCertificate& into, const DerivationCertificate& from,
                std::int64_t coeff) {
  for (const auto& [step, c] : from.steps) {
    auto it = std::find_if(into.steps.begin(), into.steps.end(),
                           [&](const auto& p) { return p.first == step; });
    if (it == into.steps.end())
      into.steps.emplace_back(step, c * coeff);
    else {
      it->second += c * coeff;
      if (it->second == 0) into.steps.erase(it);
    }
  }
}

bool symbol_vanishes_obar(const OSymbol& sym) {
  for (const auto& c : sym.chars)
    if (char_is_zero(c)) return true;
  return false;
}

// Core recursion; `sym` carries its characters in derivation order with the
// zero-sum prefix of length j at the front.
DerivationCertificate derived_vanishing_impl(const OSymbol& sym,
                                             std::size_t j) {
  DerivationCertificate cert;
  const FinAbGroup& a = sym.group;
  if (j == 2) {
    cert.steps.emplace_back(
        DerivationStep{RelationKind::Vanishing, sym, 0, 1}, 1);
    return cert;
  }

  // Replace slot 1 by a_0 + a_1; the modified symbol has a zero-sum prefix
  // of length j-1 on slots {1, ..., j-1}.
  GroupElement a0(a, sym.chars[0]), a1(a, sym.chars[1]);
  GroupElement s01 = elem_add(a0, a1);
  CharSeq lchars = sym.chars;
  lchars[1] = s01.coords;
  OSymbol lsym{sym.field, a, lchars};

  // Row of the blow-up instance on lsym at (0, 1):
  //   canon(lsym) = [sym] + [tau] + [theta]  (+ row)
  cert.steps.emplace_back(DerivationStep{RelationKind::Blowup, lsym, 0, 1}, -1);

  auto reorder_prefix = [&](const OSymbol& s,
                            const std::vector<std::size_t>& front) {
    CharSeq chars;
    chars.reserve(s.chars.size());
    std::vector<bool> used(s.chars.size(), false);
    for (auto idx : front) {
      chars.push_back(s.chars[idx]);
      used[idx] = true;
    }
    for (std::size_t m = 0; m < s.chars.size(); ++m)
      if (!used[m]) chars.push_back(s.chars[m]);
    return OSymbol{s.field, s.group, std::move(chars)};
  };

  // lsym reordered to (a0+a1, a2, ..., a_{j-1}, a0, tail)
  {
    std::vector<std::size_t> front{1};
    for (std::size_t m = 2; m < j; ++m) front.push_back(m);
    OSymbol lre = reorder_prefix(lsym, front);
    if (!symbol_vanishes_obar(lre))
      accumulate(cert, derived_vanishing_impl(lre, j - 1), 1);
  }

  // tau = lsym with slot 0 replaced by a0 - (a0+a1) = -a1.
  {
    CharSeq tchars = lchars;
    tchars[0] = elem_neg(a1).coords;
    OSymbol tau{sym.field, a, tchars};
    std::vector<std::size_t> front{1};
    for (std::size_t m = 2; m < j; ++m) front.push_back(m);
    OSymbol tre = reorder_prefix(tau, front);
    if (!symbol_vanishes_obar(tre))
      accumulate(cert, derived_vanishing_impl(tre, j - 1), -1);
  }

  // theta = quotient term of the instance: drop slot 0, push the rest to
  // A/<a0 - (a0+a1)> = A/<a1>.
  {
    auto [q, pi] = quotient(a, {a1});
    CharSeq qchars;
    for (std::size_t m = 1; m < lchars.size(); ++m)
      qchars.push_back(pi.apply_coords(lchars[m]));
    OSymbol theta{sym.field.with_t(1), q, std::move(qchars)};
    if (!symbol_vanishes_obar(theta))
      accumulate(cert, derived_vanishing_impl(theta, j - 1), -1);
  }

  return cert;
}

} // namespace

DerivationCertificate derived_vanishing(const OSymbol& sym, std::size_t j) {
  if (j < 2 || j > sym.chars.size())
    throw PreconditionFailed("prefix length out of range");
  const FinAbGroup& a = sym.group;
  GroupElement acc = zero_element(a);
  for (std::size_t m = 0; m < j; ++m)
    acc = elem_add(acc, GroupElement(a, sym.chars[m]));
  if (!acc.is_zero())
    throw PreconditionFailed("prefix characters do not sum to zero");
  for (const auto& c : sym.chars)
    if (char_is_zero(c))
      throw PreconditionFailed("symbol carries a trivial character");
  return derived_vanishing_impl(sym, j);
}

ObarElement derived_blowup_expansion(const OSymbol& sym, std::size_t j,
                                     PivotRule rule) {
  if (sym.chars.size() < 2 || j < 2)
    throw SequenceTooShort("expansion needs at least two characters");
  if (j > sym.chars.size())
    throw IndexOutOfRange("expansion prefix exceeds character count");
  const FinAbGroup& a = sym.group;

  ObarElement out;
  const std::size_t subsets = std::size_t(1) << j;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t m = 0; m < j; ++m)
      if (mask & (std::size_t(1) << m)) idx.push_back(m);
    const std::size_t i0 = rule == PivotRule::Min ? idx.front() : idx.back();

    std::vector<GroupElement> gens;
    for (auto m : idx)
      gens.emplace_back(a, coord_sub(a, sym.chars[m], sym.chars[i0]));
    auto [q, pi] = quotient(a, gens);

    CharSeq chars;
    chars.push_back(pi.apply_coords(sym.chars[i0]));
    for (std::size_t m = 0; m < j; ++m) {
      if (mask & (std::size_t(1) << m)) continue;
      chars.push_back(pi.apply_coords(coord_sub(a, sym.chars[m], sym.chars[i0])));
    }
    for (std::size_t m = j; m < sym.chars.size(); ++m)
      chars.push_back(pi.apply_coords(sym.chars[m]));

    // Terms with a dying character are exactly the ones the condition
    // removes; normalize_obar returns zero for them.
    out += normalize_obar(OSymbol{
        sym.field.with_t(static_cast<std::int64_t>(idx.size()) - 1), q,
        std::move(chars)});
  }
  return out;
}

CburnElement derived_blowup_expansion(const CSymbol& sym, std::size_t j,
                                      const LabelRegistry& reg,
                                      PivotRule rule) {
  if (sym.chars.size() < 2 || j < 2)
    throw SequenceTooShort("expansion needs at least two characters");
  if (j > sym.chars.size())
    throw IndexOutOfRange("expansion prefix exceeds character count");
  const FinAbGroup& a = sym.stack->stabilizer_chars;

  CburnElement out;
  const std::size_t subsets = std::size_t(1) << j;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t m = 0; m < j; ++m)
      if (mask & (std::size_t(1) << m)) idx.push_back(m);
    const std::size_t i0 = rule == PivotRule::Min ? idx.front() : idx.back();

    // Iterated one-character constructions in ascending slot order.
    StackLabel label = sym.stack;
    GroupHom pi = identity_hom(a);
    for (auto m : idx) {
      if (m == i0) continue;
      std::vector<std::int64_t> g =
          pi.apply_coords(coord_sub(a, sym.chars[m], sym.chars[i0]));
      GroupElement ge(label->stabilizer_chars, g);
      StackLabel next = reg.action_construct(label, ge);
      pi = compose(reg.action_projection(next), pi);
      label = next;
    }

    CharSeq chars;
    chars.push_back(pi.apply_coords(sym.chars[i0]));
    for (std::size_t m = 0; m < j; ++m) {
      if (mask & (std::size_t(1) << m)) continue;
      chars.push_back(pi.apply_coords(coord_sub(a, sym.chars[m], sym.chars[i0])));
    }
    for (std::size_t m = j; m < sym.chars.size(); ++m)
      chars.push_back(pi.apply_coords(sym.chars[m]));

    bool dies = false;
    for (const auto& c : chars)
      if (char_is_zero(c)) {
        dies = true;
        break;
      }
    if (dies) continue;
    CSymbol term = normalize_cburn(CSymbol{label, std::move(chars)});
    out.add(csymbol_key(term, &reg), 1);
  }
  return out;
}

} // namespace burnside
