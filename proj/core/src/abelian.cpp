#include "burnside/abelian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace burnside {

FinAbGroup::FinAbGroup(std::vector<std::int64_t> inv)
    : invariants(std::move(inv)) {
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (invariants[i] < 2)
      throw PreconditionFailed("invariant factors must be >= 2");
    if (i > 0 && invariants[i] % invariants[i - 1] != 0)
      throw PreconditionFailed("invariant factors must form a divisibility chain");
  }
}

Int FinAbGroup::order() const {
  Int n = 1;
  for (auto d : invariants) n *= d;
  return n;
}

GroupElement::GroupElement(FinAbGroup a, std::vector<std::int64_t> c)
    : parent(std::move(a)), coords(std::move(c)) {
  if (coords.size() != parent.arity())
    throw ElementNotInGroup("coordinate count does not match group arity");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::int64_t d = parent.invariants[i];
    coords[i] %= d;
    if (coords[i] < 0) coords[i] += d;
  }
}

bool GroupElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](std::int64_t c) { return c == 0; });
}

GroupElement zero_element(const FinAbGroup& a) {
  return GroupElement(a, std::vector<std::int64_t>(a.arity(), 0));
}

GroupElement elem_add(const GroupElement& x, const GroupElement& y) {
  if (x.parent != y.parent) throw ParentMismatch("elem_add: parent mismatch");
  std::vector<std::int64_t> c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] + y.coords[i];
  return GroupElement(x.parent, std::move(c));
}

GroupElement elem_neg(const GroupElement& x) {
  std::vector<std::int64_t> c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -x.coords[i];
  return GroupElement(x.parent, std::move(c));
}

GroupElement elem_sub(const GroupElement& x, const GroupElement& y) {
  return elem_add(x, elem_neg(y));
}

std::int64_t elem_order(const GroupElement& x) {
  // lcm over coordinates of d_i / gcd(d_i, c_i)
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    std::int64_t d = x.parent.invariants[i];
    std::int64_t c = x.coords[i];
    std::int64_t oi = c == 0 ? 1 : d / std::gcd(d, c);
    ord = std::lcm(ord, oi);
  }
  return ord;
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  if (x.parent != source) throw ParentMismatch("hom applied to foreign element");
  return GroupElement(target, apply_coords(x.coords));
}

std::vector<std::int64_t> GroupHom::apply_coords(
    const std::vector<std::int64_t>& coords) const {
  if (coords.size() != source.arity())
    throw ParentMismatch("hom applied to wrong arity");
  std::vector<std::int64_t> out(target.arity(), 0);
  for (std::size_t i = 0; i < target.arity(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < source.arity(); ++j)
      acc += matrix(i, j) * coords[j];
    Int d = target.invariants[i];
    Int r = acc % d;
    if (r < 0) r += d;
    out[i] = static_cast<std::int64_t>(r);
  }
  return out;
}

bool GroupHom::well_defined() const {
  for (std::size_t j = 0; j < source.arity(); ++j) {
    for (std::size_t i = 0; i < target.arity(); ++i) {
      Int v = matrix(i, j) * source.invariants[j];
      if (v % target.invariants[i] != 0) return false;
    }
  }
  return true;
}

GroupHom identity_hom(const FinAbGroup& a) {
  return GroupHom{a, a, IntMat::identity(a.arity())};
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.target != g.source) throw ParentMismatch("compose: middle group mismatch");
  return GroupHom{f.source, g.target, g.matrix * f.matrix};
}

GroupElement CokernelProjection::apply(
    const std::vector<std::int64_t>& ambient) const {
  if (ambient.size() != ambient_rank)
    throw ParentMismatch("projection applied to wrong ambient rank");
  std::vector<std::int64_t> out(target.arity(), 0);
  for (std::size_t i = 0; i < target.arity(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < ambient_rank; ++j)
      acc += matrix(i, j) * ambient[j];
    Int d = target.invariants[i];
    Int r = acc % d;
    if (r < 0) r += d;
    out[i] = static_cast<std::int64_t>(r);
  }
  return GroupElement(target, std::move(out));
}

std::pair<FinAbGroup, CokernelProjection> cokernel(const IntMat& m,
                                                   std::size_t rows) {
  if (m.rows() != rows)
    throw IndexOutOfRange("cokernel: ambient rank does not match matrix rows");
  SnfDecomposition s = smith_normal_form(m);
  if (s.rank < rows)
    throw InfiniteCokernel("matrix does not have full row rank");
  std::vector<std::int64_t> inv;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < rows; ++i) {
    const Int& d = s.d(i, i);
    if (d >= 2) {
      inv.push_back(static_cast<std::int64_t>(d));
      kept.push_back(i);
    }
  }
  FinAbGroup q{inv};
  // Coordinates in the quotient are the kept rows of U, reduced mod d.
  IntMat proj(kept.size(), rows);
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t c = 0; c < rows; ++c) {
      Int v = s.u(kept[r], c) % inv[r];
      if (v < 0) v += inv[r];
      proj(r, c) = v;
    }
  return {q, CokernelProjection{rows, q, std::move(proj)}};
}

std::pair<FinAbGroup, GroupHom> quotient(const FinAbGroup& a,
                                         const std::vector<GroupElement>& gens) {
  std::vector<const GroupElement*> nz;
  for (const auto& g : gens) {
    if (g.parent != a) throw ElementNotInGroup("quotient: generator not in group");
    if (!g.is_zero()) nz.push_back(&g);
  }
  if (nz.empty()) return {a, identity_hom(a)};

  const std::size_t k = a.arity();
  IntMat m(k, k + nz.size());
  for (std::size_t i = 0; i < k; ++i) m(i, i) = a.invariants[i];
  for (std::size_t j = 0; j < nz.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) m(i, k + j) = nz[j]->coords[i];
  auto [q, proj] = cokernel(m, k);
  return {q, GroupHom{a, q, proj.matrix}};
}

bool subgroup_contains(const FinAbGroup& a,
                       const std::vector<GroupElement>& gens,
                       const GroupElement& x) {
  if (x.parent != a) throw ElementNotInGroup("subgroup_contains: x not in group");
  for (const auto& g : gens)
    if (g.parent != a)
      throw ElementNotInGroup("subgroup_contains: generator not in group");
  const std::size_t k = a.arity();
  if (k == 0) return true;
  // x in <gens> + diag(d) Z^k, an integer lattice membership problem.
  IntMat m(k, k + gens.size());
  for (std::size_t i = 0; i < k; ++i) m(i, i) = a.invariants[i];
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) m(i, k + j) = gens[j].coords[i];
  std::vector<Int> rhs(k);
  for (std::size_t i = 0; i < k; ++i) rhs[i] = x.coords[i];
  return solve_integer(m, rhs);
}

bool generates(const FinAbGroup& a, const std::vector<GroupElement>& s) {
  auto [q, proj] = quotient(a, s);
  return q.trivial();
}

namespace {

std::int64_t coord_order_constraint(std::int64_t d_i, std::int64_t d_j) {
  // Images of a generator of order d_j must be killed by d_j:
  // coordinate i must be divisible by d_i / gcd(d_i, d_j).
  return d_i / std::gcd(d_i, d_j);
}

} // namespace

std::vector<GroupElement> all_elements(const FinAbGroup& a) {
  std::vector<GroupElement> out;
  std::vector<std::int64_t> c(a.arity(), 0);
  for (;;) {
    out.push_back(GroupElement(a, c));
    std::size_t i = a.arity();
    while (i > 0) {
      --i;
      if (++c[i] < a.invariants[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (a.arity() == 0) return out;
  }
}

std::vector<GroupHom> automorphisms(const FinAbGroup& a, std::int64_t bound) {
  if (a.order() > bound)
    throw GroupTooLarge("automorphism enumeration beyond configured bound");
  const std::size_t k = a.arity();
  if (k == 0) return {identity_hom(a)};

  // Valid images per generator slot.
  std::vector<std::vector<std::vector<std::int64_t>>> candidates(k);
  Int total = 1;
  for (std::size_t j = 0; j < k; ++j) {
    for (const auto& e : all_elements(a)) {
      bool ok = true;
      for (std::size_t i = 0; i < k; ++i)
        if (e.coords[i] % coord_order_constraint(a.invariants[i],
                                                 a.invariants[j]) != 0) {
          ok = false;
          break;
        }
      if (ok) candidates[j].push_back(e.coords);
    }
    total *= candidates[j].size();
  }
  if (total > 10'000'000)
    throw GroupTooLarge("automorphism image space impractically large");

  std::vector<GroupHom> result;
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    IntMat m(k, k);
    std::vector<GroupElement> images;
    images.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) m(i, j) = candidates[j][pick[j]][i];
      images.push_back(GroupElement(a, candidates[j][pick[j]]));
    }
    if (generates(a, images)) // surjective == bijective on a finite group
      result.push_back(GroupHom{a, a, std::move(m)});
    std::size_t j = k;
    bool done = false;
    while (j > 0) {
      --j;
      if (++pick[j] < candidates[j].size()) break;
      pick[j] = 0;
      if (j == 0) done = true;
    }
    if (done) break;
  }
  return result;
}

const std::vector<GroupHom>& automorphisms_cached(const FinAbGroup& a) {
  static std::mutex mu;
  static std::map<FinAbGroup, std::vector<GroupHom>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(a);
  if (it == cache.end()) it = cache.emplace(a, automorphisms(a)).first;
  return it->second;
}

DirectSum direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  const std::size_t ka = a.arity(), kb = b.arity();
  IntMat m(ka + kb, ka + kb);
  for (std::size_t i = 0; i < ka; ++i) m(i, i) = a.invariants[i];
  for (std::size_t i = 0; i < kb; ++i) m(ka + i, ka + i) = b.invariants[i];
  auto [q, proj] = cokernel(m, ka + kb);
  IntMat ma(q.arity(), ka), mb(q.arity(), kb);
  for (std::size_t i = 0; i < q.arity(); ++i) {
    for (std::size_t j = 0; j < ka; ++j) ma(i, j) = proj.matrix(i, j);
    for (std::size_t j = 0; j < kb; ++j) mb(i, j) = proj.matrix(i, ka + j);
  }
  return DirectSum{q, GroupHom{a, q, std::move(ma)}, GroupHom{b, q, std::move(mb)}};
}

} // namespace burnside
