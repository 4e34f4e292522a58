#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "burnside/abelian.hpp"

namespace burnside {

/// Function-field label: an opaque base field extended by t_count purely
/// transcendental variables.  Base "k" is the ground field.  Two labels
/// are equal only componentwise; no field isomorphisms are inferred.
struct FieldLabel {
  std::string base = "k";
  std::int64_t base_trdeg = 0;
  std::int64_t t_count = 0;

  std::int64_t total_trdeg() const { return base_trdeg + t_count; }
  FieldLabel with_t(std::int64_t dt) const {
    return FieldLabel{base, base_trdeg, t_count + dt};
  }
  static FieldLabel ground() { return FieldLabel{}; }

  auto operator<=>(const FieldLabel&) const = default;
};

using CharSeq = std::vector<std::vector<std::int64_t>>;

/// Symbol (K, A, S): function field, character group of the generic
/// stabilizer, and a character sequence.  Grading n = trdeg(K) + |S|.
struct OSymbol {
  FieldLabel field;
  FinAbGroup group;
  CharSeq chars;

  std::int64_t grading() const {
    return field.total_trdeg() + static_cast<std::int64_t>(chars.size());
  }
  GroupElement char_at(std::size_t i) const {
    return GroupElement(group, chars.at(i));
  }

  auto operator<=>(const OSymbol&) const = default;
};

OSymbol make_osymbol(FieldLabel field, FinAbGroup group, CharSeq chars);

// ---------------------------------------------------------------------------
// Stack labels (generators of the finer grading-compatible group)

class LabelRegistry;

struct StackLabelNode;
using StackLabel = std::shared_ptr<const StackLabelNode>;

struct StackLabelNode {
  struct Atomic {
    std::string id;
  };
  struct Action {
    StackLabel parent;
    std::vector<std::int64_t> character; // in parent's character group
  };
  std::variant<Atomic, Action> kind;
  std::int64_t dim = 0;
  FinAbGroup stabilizer_chars;

  bool atomic() const { return std::holds_alternative<Atomic>(kind); }
};

/// Structural key used for ordering and equality of stack labels; atomic
/// ids are resolved through the registry's declared-equivalence partition
/// when one is supplied.
std::string label_key(const StackLabel& label, const LabelRegistry* reg = nullptr);

/// Interning registry for atomic labels plus the user-maintained partition
/// of declared birational equivalences.  Single writer; readers see value
/// snapshots through label_key.
class LabelRegistry {
public:
  StackLabel atomic(const std::string& id, std::int64_t dim,
                    const FinAbGroup& chars);
  /// Construction over `parent` with one character: dimension grows by one
  /// and the character group becomes parent's modulo the character.
  StackLabel action_construct(const StackLabel& parent,
                              const GroupElement& character) const;
  /// The projection hom used by an action node (parent chars -> node chars).
  GroupHom action_projection(const StackLabel& node) const;

  /// Merge the equivalence classes of two atomic labels.  Only labels of
  /// equal dimension and equal canonical character group may be merged.
  void declare_equivalent(const std::string& id_a, const std::string& id_b);
  std::string representative(const std::string& id) const;

private:
  std::map<std::string, StackLabel> atoms_;
  mutable std::map<std::string, std::string> parent_; // union-find
  std::string find(const std::string& id) const;
};

/// Symbol (stack, alpha) of the finer group; grading n = dim + |alpha|.
struct CSymbol {
  StackLabel stack;
  CharSeq chars;

  std::int64_t grading() const {
    return stack->dim + static_cast<std::int64_t>(chars.size());
  }
};

/// Ordering key for formal sums; equivalence-aware when a registry is given.
struct CSymbolKey {
  std::string label;
  std::int64_t dim;
  FinAbGroup group;
  CharSeq chars;
  auto operator<=>(const CSymbolKey&) const = default;
};
CSymbolKey csymbol_key(const CSymbol& sym, const LabelRegistry* reg = nullptr);

// ---------------------------------------------------------------------------
// Formal sums

/// Integer-coefficient formal sum of symbols in one grading.
template <class Sym, class Key = Sym>
class FormalSum {
public:
  FormalSum() = default;

  void add(const Key& key, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  FormalSum operator-() const {
    FormalSum r;
    for (const auto& [k, c] : terms_) r.add(k, -c);
    return r;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  bool operator==(const FormalSum&) const = default;

  /// Common grading of the stored symbols, when any.
  template <class F>
  std::optional<std::int64_t> grading(F&& sym_grading) const {
    if (terms_.empty()) return std::nullopt;
    return sym_grading(terms_.begin()->first);
  }

private:
  std::map<Key, std::int64_t> terms_;
};

using ObarElement = FormalSum<OSymbol>;
using CburnElement = FormalSum<CSymbol, CSymbolKey>;

// ---------------------------------------------------------------------------
// Canonical forms

/// Lexicographically least sorted character sequence over the
/// automorphism orbit of the group.  Requires all characters nonzero.
CharSeq canonical_chars(const FinAbGroup& a, const CharSeq& chars);

/// Canonical form for the presentation with trivial-character vanishing:
/// zero if some character is trivial, otherwise the single sorted,
/// automorphism-minimized symbol.  Idempotent and permutation-invariant.
ObarElement normalize_obar(const OSymbol& sym);

/// Canonical form for the presentation where a trivial character trades
/// for one transcendental variable.  Idempotent.
OSymbol normalize_oburn(const OSymbol& sym);

CSymbol normalize_cburn(const CSymbol& sym);

// ---------------------------------------------------------------------------
// Relations (single instances, right-hand sides)

/// Blow-up relation: the right-hand side
///   (K,A,(..a_i..a_j..)) = (K,A,(..a_i..a_j-a_i..)) + (K,A,(..a_i-a_j..a_j..))
///                          + (K(t), A/<a_i-a_j>, images of S minus slot i)
/// with every term normalized.
ObarElement blowup_relation_obar(const OSymbol& sym, std::size_t i,
                                 std::size_t j);

/// Same shape with the t-trade presentation's signs: the quotient term
/// enters with coefficient -1 and terms are normalized by normalize_oburn.
ObarElement blowup_relation_oburn(const OSymbol& sym, std::size_t i,
                                  std::size_t j);

/// For a pair with a_i + a_j = 0, the derived identity
///   (K, A, S) = (K(t^2), A/<a_j>, images of S minus slots i and j),
/// valid in the t-trade presentation.  Returns the right-hand side.
OSymbol tpair_relation_oburn(const OSymbol& sym, std::size_t i, std::size_t j);

/// Blow-up relation on the finer symbols: Theta_1 + Theta_2.
CburnElement blowup_relation_cburn(const CSymbol& sym, std::size_t i,
                                   std::size_t j, const LabelRegistry& reg);

// ---------------------------------------------------------------------------
// Derived relations

enum class RelationKind { Vanishing, Blowup };

/// One step of a replayable derivation.  `base` may carry trivial
/// characters; the row it denotes is
///   Vanishing: canon(base)            (a zero-sum pair at (p, q))
///   Blowup:    canon(base) - blowup_relation_obar(base, p, q)
struct DerivationStep {
  RelationKind kind;
  OSymbol base;
  std::size_t p = 0, q = 0;

  auto operator<=>(const DerivationStep&) const = default;
};

struct DerivationCertificate {
  std::vector<std::pair<DerivationStep, std::int64_t>> steps;
};

/// Formal sum of the certificate's weighted rows; equals the canonical
/// element of the derived-zero symbol when the certificate is valid.
ObarElement replay_derivation(const DerivationCertificate& cert);

/// Certificate that a symbol whose first j characters sum to zero is a
/// consequence of the vanishing and blow-up relations.  Replaying the
/// certificate telescopes exactly to the canonical element of sym.
DerivationCertificate derived_vanishing(const OSymbol& sym, std::size_t j);

enum class PivotRule { Min, Max };

/// Expansion of a symbol over nonempty subsets of its first j character
/// slots: each subset I with representative i0 contributes the symbol on
/// the iterated construction over the characters a_i - a_{i0} (i in I),
/// with characters  a_{i0}, (a_i - a_{i0})_{i <= j, i not in I}, tail  all
/// pushed to the quotient; terms where some pushed character dies are
/// omitted.  With j = 2 this is exactly the blow-up relation.
ObarElement derived_blowup_expansion(const OSymbol& sym, std::size_t j,
                                     PivotRule rule = PivotRule::Min);
CburnElement derived_blowup_expansion(const CSymbol& sym, std::size_t j,
                                      const LabelRegistry& reg,
                                      PivotRule rule = PivotRule::Min);

} // namespace burnside
