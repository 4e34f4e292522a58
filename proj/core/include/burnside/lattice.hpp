#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burnside/symbols.hpp"

namespace burnside {

enum class Presentation { ObarVanishing, OburnTTrade };

std::string presentation_name(Presentation p);
Presentation presentation_from_name(const std::string& name);

/// Where a universe member came from (seed, or relation firing).
struct SymbolProvenance {
  enum class Origin { Seed, Relation } origin = Origin::Seed;
  std::size_t seed_index = 0;     // when Origin::Seed
  std::size_t parent = 0;         // when Origin::Relation
  RelationKind kind = RelationKind::Blowup;
  std::size_t p = 0, q = 0;
};

/// Finite set of canonical symbols in one grading, closed under every
/// relation instance of the presentation.
struct SymbolUniverse {
  std::int64_t grading = 0;
  Presentation presentation = Presentation::ObarVanishing;
  std::vector<OSymbol> symbols;
  std::map<OSymbol, std::size_t> index;
  std::vector<SymbolProvenance> provenance;

  std::size_t require(const OSymbol& sym) const;
  bool contains(const OSymbol& sym) const { return index.count(sym) != 0; }
};

/// Least closed superset of the seeds, breadth first, deterministic.
/// Throws UniverseOverflow when the closure would exceed max_size.
SymbolUniverse close_universe(const std::vector<OSymbol>& seeds,
                              std::int64_t grading, Presentation presentation,
                              std::size_t max_size = 100000);

/// A relation instance fired on a universe member.
struct RelationInstance {
  RelationKind kind;
  std::size_t symbol = 0;
  std::size_t p = 0, q = 0;
};

using SparseRow = std::map<std::size_t, std::int64_t>;

/// Row lattice spanned by all relation instances over a closed universe,
/// with a Hermite-style echelon basis for exact membership.
class RelationLattice {
public:
  explicit RelationLattice(SymbolUniverse universe);

  const SymbolUniverse& universe() const { return universe_; }
  const std::vector<RelationInstance>& instances() const { return instances_; }
  const std::vector<SparseRow>& rows() const { return rows_; }

  /// Echelon basis rows (pivot-sorted), for golden tests.
  std::vector<std::vector<Int>> hermite_basis() const;

  struct Certificate {
    std::map<std::size_t, Int> combination; // instance id -> coefficient
  };
  struct WitnessFunctional {
    std::vector<Int> values; // indexed by universe symbol
    Int modulus = 0;         // 0 means: functional vanishes exactly
  };
  struct Verdict {
    bool zero = false;
    std::optional<Certificate> certificate;
    std::optional<WitnessFunctional> witness;
  };

  Verdict is_zero(const ObarElement& e) const;
  Verdict is_equal(const ObarElement& a, const ObarElement& b) const;

  /// Exact replay: does the stated combination of relation rows equal e?
  bool replay(const Certificate& cert, const ObarElement& e) const;

  std::vector<Int> to_vector(const ObarElement& e) const;

private:
  SymbolUniverse universe_;
  std::vector<RelationInstance> instances_;
  std::vector<SparseRow> rows_;

  struct BasisRow {
    std::vector<Int> v;
    std::map<std::size_t, Int> combo;
  };
  std::map<std::size_t, BasisRow> basis_; // pivot column -> row

  void insert_row(std::vector<Int> v, std::map<std::size_t, Int> combo);
  WitnessFunctional witness_for(const std::vector<Int>& e) const;
};

/// All relation instances of the presentation fired on one symbol, with
/// their right-hand sides (shared by closure, row assembly and replay).
struct FiredInstance {
  RelationKind kind;
  std::size_t p, q;
  ObarElement rhs;
};
std::vector<FiredInstance> fire_relations(const OSymbol& sym,
                                          Presentation presentation);

/// Convenience: canonical element of a raw symbol in a presentation.
ObarElement canonical_element(const OSymbol& sym, Presentation presentation);

} // namespace burnside
