#include "burnside/lattice.hpp"

#include <algorithm>
#include <deque>

namespace burnside {

std::string presentation_name(Presentation p) {
  return p == Presentation::ObarVanishing ? "obar" : "oburn";
}

Presentation presentation_from_name(const std::string& name) {
  if (name == "obar") return Presentation::ObarVanishing;
  if (name == "oburn") return Presentation::OburnTTrade;
  throw SchemaError("unknown presentation: " + name);
}

std::size_t SymbolUniverse::require(const OSymbol& sym) const {
  auto it = index.find(sym);
  if (it == index.end())
    throw SymbolOutsideUniverse("symbol not in the closed universe");
  return it->second;
}

ObarElement canonical_element(const OSymbol& sym, Presentation presentation) {
  if (presentation == Presentation::ObarVanishing) return normalize_obar(sym);
  ObarElement e;
  e.add(normalize_oburn(sym), 1);
  return e;
}

std::vector<FiredInstance> fire_relations(const OSymbol& sym,
                                          Presentation presentation) {
  std::vector<FiredInstance> fired;
  const std::size_t m = sym.chars.size();
  const FinAbGroup& a = sym.group;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      GroupElement sum = elem_add(GroupElement(a, sym.chars[p]),
                                  GroupElement(a, sym.chars[q]));
      if (sum.is_zero()) {
        if (presentation == Presentation::ObarVanishing) {
          fired.push_back({RelationKind::Vanishing, p, q, {}});
        } else {
          ObarElement rhs;
          rhs.add(tpair_relation_oburn(sym, p, q), 1);
          fired.push_back({RelationKind::Vanishing, p, q, std::move(rhs)});
        }
      }
      ObarElement rhs = presentation == Presentation::ObarVanishing
                            ? blowup_relation_obar(sym, p, q)
                            : blowup_relation_oburn(sym, p, q);
      fired.push_back({RelationKind::Blowup, p, q, std::move(rhs)});
    }
  }
  return fired;
}

SymbolUniverse close_universe(const std::vector<OSymbol>& seeds,
                              std::int64_t grading, Presentation presentation,
                              std::size_t max_size) {
  SymbolUniverse u;
  u.grading = grading;
  u.presentation = presentation;

  auto push = [&](const OSymbol& sym, SymbolProvenance prov) -> bool {
    if (u.index.count(sym)) return false;
    if (sym.grading() != grading)
      throw GradingMismatch("universe member with wrong grading");
    if (u.symbols.size() >= max_size)
      throw UniverseOverflow("universe closure exceeds max size " +
                             std::to_string(max_size));
    u.index.emplace(sym, u.symbols.size());
    u.symbols.push_back(sym);
    u.provenance.push_back(prov);
    return true;
  };

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    ObarElement canon = canonical_element(seeds[i], presentation);
    for (const auto& [sym, c] : canon.terms()) {
      SymbolProvenance prov;
      prov.origin = SymbolProvenance::Origin::Seed;
      prov.seed_index = i;
      push(sym, prov);
    }
  }

  // Breadth first: symbols fire in insertion order.
  for (std::size_t at = 0; at < u.symbols.size(); ++at) {
    const OSymbol sym = u.symbols[at]; // copy: vector may grow
    for (const auto& inst : fire_relations(sym, presentation)) {
      for (const auto& [term, c] : inst.rhs.terms()) {
        SymbolProvenance prov;
        prov.origin = SymbolProvenance::Origin::Relation;
        prov.parent = at;
        prov.kind = inst.kind;
        prov.p = inst.p;
        prov.q = inst.q;
        push(term, prov);
      }
    }
  }
  return u;
}

RelationLattice::RelationLattice(SymbolUniverse universe)
    : universe_(std::move(universe)) {
  for (std::size_t s = 0; s < universe_.symbols.size(); ++s) {
    for (const auto& inst : fire_relations(universe_.symbols[s],
                                           universe_.presentation)) {
      SparseRow row;
      row[s] += 1;
      for (const auto& [term, c] : inst.rhs.terms()) {
        row[universe_.require(term)] -= c;
      }
      std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
      instances_.push_back({inst.kind, s, inst.p, inst.q});
      rows_.push_back(std::move(row));
    }
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::vector<Int> v(universe_.symbols.size(), 0);
    for (const auto& [c, val] : rows_[r]) v[c] = val;
    insert_row(std::move(v), {{r, Int(1)}});
  }
}

void RelationLattice::insert_row(std::vector<Int> v,
                                 std::map<std::size_t, Int> combo) {
  const std::size_t n = v.size();
  for (std::size_t c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    auto it = basis_.find(c);
    if (it == basis_.end()) {
      if (v[c] < 0) {
        for (auto& x : v) x = -x;
        for (auto& [k, x] : combo) x = -x;
      }
      basis_.emplace(c, BasisRow{std::move(v), std::move(combo)});
      return;
    }
    BasisRow& b = it->second;
    if (v[c] % b.v[c] == 0) {
      Int q = v[c] / b.v[c];
      for (std::size_t k = c; k < n; ++k) v[k] -= q * b.v[k];
      for (const auto& [rid, x] : b.combo) {
        combo[rid] -= q * x;
        if (combo[rid] == 0) combo.erase(rid);
      }
    } else {
      // gcd combine; basis row shrinks, incoming row gets cleared at c.
      Int a0 = b.v[c], b0 = v[c];
      Int x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a0, bb = b0;
      while (bb != 0) {
        Int qq = aa / bb;
        Int r = aa - qq * bb;
        aa = bb;
        bb = r;
        Int nx = x0 - qq * x1, ny = y0 - qq * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
      }
      Int g = aa, x = x0, y = y0;
      if (g < 0) {
        g = -g;
        x = -x;
        y = -y;
      }
      Int ag = a0 / g, bg = b0 / g;
      std::vector<Int> nb(n, 0), nv(n, 0);
      for (std::size_t k = 0; k < n; ++k) {
        nb[k] = x * b.v[k] + y * v[k];
        nv[k] = -bg * b.v[k] + ag * v[k];
      }
      std::map<std::size_t, Int> ncb, ncv;
      auto axpy = [](std::map<std::size_t, Int>& dst, const Int& s,
                     const std::map<std::size_t, Int>& src) {
        for (const auto& [rid, val] : src) {
          dst[rid] += s * val;
          if (dst[rid] == 0) dst.erase(rid);
        }
      };
      axpy(ncb, x, b.combo);
      axpy(ncb, y, combo);
      axpy(ncv, -bg, b.combo);
      axpy(ncv, ag, combo);
      b.v = std::move(nb);
      b.combo = std::move(ncb);
      v = std::move(nv);
      combo = std::move(ncv);
    }
  }
}

std::vector<Int> RelationLattice::to_vector(const ObarElement& e) const {
  std::vector<Int> v(universe_.symbols.size(), 0);
  for (const auto& [sym, c] : e.terms()) v[universe_.require(sym)] = c;
  return v;
}

RelationLattice::Verdict RelationLattice::is_zero(const ObarElement& e) const {
  if (auto g = e.grading([](const OSymbol& s) { return s.grading(); });
      g && *g != universe_.grading)
    throw GradingMismatch("element grading does not match universe");

  std::vector<Int> v = to_vector(e);
  const std::size_t n = v.size();
  Certificate cert;
  for (std::size_t c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    auto it = basis_.find(c);
    if (it == basis_.end() || v[c] % it->second.v[c] != 0) {
      Verdict verdict;
      verdict.zero = false;
      verdict.witness = witness_for(to_vector(e));
      return verdict;
    }
    const BasisRow& b = it->second;
    Int q = v[c] / b.v[c];
    for (std::size_t k = c; k < n; ++k) v[k] -= q * b.v[k];
    for (const auto& [rid, x] : b.combo) {
      cert.combination[rid] += q * x;
      if (cert.combination[rid] == 0) cert.combination.erase(rid);
    }
  }
  Verdict verdict;
  verdict.zero = true;
  verdict.certificate = std::move(cert);
  return verdict;
}

RelationLattice::Verdict RelationLattice::is_equal(const ObarElement& a,
                                                   const ObarElement& b) const {
  return is_zero(a - b);
}

bool RelationLattice::replay(const Certificate& cert,
                             const ObarElement& e) const {
  std::vector<Int> acc(universe_.symbols.size(), 0);
  for (const auto& [rid, coeff] : cert.combination) {
    if (rid >= rows_.size()) return false;
    for (const auto& [c, val] : rows_[rid]) acc[c] += coeff * val;
  }
  std::vector<Int> target = to_vector(e);
  return acc == target;
}

std::vector<std::vector<Int>> RelationLattice::hermite_basis() const {
  // Fully reduced: entries above each pivot lie in [0, pivot).
  std::vector<std::pair<std::size_t, std::vector<Int>>> rows;
  for (const auto& [piv, b] : basis_) rows.emplace_back(piv, b.v);
  for (std::size_t i = rows.size(); i-- > 0;) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const std::size_t pj = rows[j].first;
      const Int& pivot = rows[j].second[pj];
      Int& entry = rows[i].second[pj];
      if (entry == 0) continue;
      Int q = entry / pivot;
      if (entry % pivot < 0) q -= 1; // floor
      if (q != 0)
        for (std::size_t k = 0; k < rows[i].second.size(); ++k)
          rows[i].second[k] -= q * rows[j].second[k];
    }
  }
  std::vector<std::vector<Int>> out;
  out.reserve(rows.size());
  for (auto& [piv, v] : rows) out.push_back(std::move(v));
  return out;
}

RelationLattice::WitnessFunctional RelationLattice::witness_for(
    const std::vector<Int>& e) const {
  // Assemble the basis matrix and diagonalize; the columns of V give
  // functionals that vanish modulo the elementary divisors on the lattice.
  const std::size_t n = universe_.symbols.size();
  std::vector<const BasisRow*> rows;
  for (const auto& [piv, b] : basis_) rows.push_back(&b);
  const std::size_t k = rows.size();
  IntMat bmat(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) bmat(i, j) = rows[i]->v[j];
  SnfDecomposition s = smith_normal_form(bmat);

  // x in lattice iff (x V)_i is divisible by d_i (and zero past the rank).
  std::vector<Int> sv(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) sv[j] += e[i] * s.v(i, j);

  for (std::size_t j = 0; j < n; ++j) {
    Int d = (j < std::min(k, n)) ? s.d(j, j) : Int(0);
    bool bad = d == 0 ? sv[j] != 0 : sv[j] % d != 0;
    if (!bad) continue;
    WitnessFunctional w;
    w.modulus = d;
    w.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) w.values[i] = s.v(i, j);
    return w;
  }
  throw PreconditionFailed("witness requested for a lattice member");
}

} // namespace burnside
