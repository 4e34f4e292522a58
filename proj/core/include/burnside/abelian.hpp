#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "burnside/intmat.hpp"

namespace burnside {

/// Finite abelian group in invariant-factor form: Z/d_1 x ... x Z/d_k with
/// d_i | d_{i+1} and every d_i >= 2.  The empty list is the trivial group.
/// Two groups are equal iff their invariant lists are equal.
struct FinAbGroup {
  std::vector<std::int64_t> invariants;

  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> inv);

  std::size_t arity() const { return invariants.size(); }
  bool trivial() const { return invariants.empty(); }
  Int order() const;

  auto operator<=>(const FinAbGroup&) const = default;
};

/// Element of a FinAbGroup, coordinates reduced into [0, d_i).
struct GroupElement {
  FinAbGroup parent;
  std::vector<std::int64_t> coords;

  GroupElement() = default;
  GroupElement(FinAbGroup a, std::vector<std::int64_t> c);

  bool is_zero() const;
  auto operator<=>(const GroupElement&) const = default;
};

GroupElement elem_add(const GroupElement& x, const GroupElement& y);
GroupElement elem_neg(const GroupElement& x);
GroupElement elem_sub(const GroupElement& x, const GroupElement& y);
std::int64_t elem_order(const GroupElement& x);
GroupElement zero_element(const FinAbGroup& a);

/// Homomorphism between finite abelian groups, acting on coordinate
/// tuples: column j of `matrix` is the image of the j-th generator.
struct GroupHom {
  FinAbGroup source;
  FinAbGroup target;
  IntMat matrix; // target.arity() x source.arity()

  GroupElement apply(const GroupElement& x) const;
  std::vector<std::int64_t> apply_coords(
      const std::vector<std::int64_t>& coords) const;
  /// matrix * diag(source invariants) must vanish in the target.
  bool well_defined() const;
};

GroupHom identity_hom(const FinAbGroup& a);
GroupHom compose(const GroupHom& g, const GroupHom& f); // g after f

/// Projection from a free ambient lattice Z^rows onto a finite cokernel.
struct CokernelProjection {
  std::size_t ambient_rank = 0;
  FinAbGroup target;
  IntMat matrix; // target.arity() x ambient_rank

  GroupElement apply(const std::vector<std::int64_t>& ambient) const;
};

/// Z^rows / column-span(m).  Throws InfiniteCokernel unless m has full
/// row rank over the rationals.  Deterministic: output fixed by m.
std::pair<FinAbGroup, CokernelProjection> cokernel(const IntMat& m,
                                                   std::size_t rows);

/// A / <gens>, with the canonical projection.  With no (nonzero) gens the
/// projection is the identity.
std::pair<FinAbGroup, GroupHom> quotient(const FinAbGroup& a,
                                         const std::vector<GroupElement>& gens);

/// Exact membership of x in the subgroup generated by gens.
bool subgroup_contains(const FinAbGroup& a,
                       const std::vector<GroupElement>& gens,
                       const GroupElement& x);

/// True iff <s> = A.
bool generates(const FinAbGroup& a, const std::vector<GroupElement>& s);

/// Complete list of automorphisms, by brute force over generator images.
/// Throws GroupTooLarge when |A| exceeds `bound` (or the image-enumeration
/// space is impractically large).
std::vector<GroupHom> automorphisms(const FinAbGroup& a,
                                    std::int64_t bound = 256);

/// Memoized automorphism list shared by symbol canonicalization.
const std::vector<GroupHom>& automorphisms_cached(const FinAbGroup& a);

/// A + B in canonical form, with the two coordinate embeddings.
struct DirectSum {
  FinAbGroup group;
  GroupHom embed_left;
  GroupHom embed_right;
};
DirectSum direct_sum(const FinAbGroup& a, const FinAbGroup& b);

/// All elements of A in lexicographic coordinate order.
std::vector<GroupElement> all_elements(const FinAbGroup& a);

} // namespace burnside
