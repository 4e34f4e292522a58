#include "burnside/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace burnside {

namespace {

bool vector_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

IntMat ray_matrix(const StackyFan& fan, const Cone& cone) {
  IntMat m(fan.rank, cone.size());
  for (std::size_t j = 0; j < cone.size(); ++j)
    for (std::size_t i = 0; i < std::size_t(fan.rank); ++i)
      m(i, j) = fan.rays[cone[j]][i];
  return m;
}

// Coefficients of `point` on the cone's ray generators, when the point
// lies in the rational span.
bool cone_coefficients(const StackyFan& fan, const Cone& cone,
                       const std::vector<std::int64_t>& point,
                       std::vector<Rat>* coeffs) {
  IntMat m = ray_matrix(fan, cone);
  std::vector<Int> rhs(fan.rank);
  for (std::size_t i = 0; i < std::size_t(fan.rank); ++i) rhs[i] = point[i];
  return solve_rational(m, rhs, coeffs);
}

} // namespace

StackyFan canonical_fan(const StackyFan& fan) {
  std::vector<std::size_t> order(fan.rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fan.rays[a] < fan.rays[b];
  });
  std::vector<std::size_t> where(fan.rays.size());
  for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = i;

  StackyFan out;
  out.rank = fan.rank;
  for (auto idx : order) out.rays.push_back(fan.rays[idx]);
  for (const auto& cone : fan.cones) {
    Cone c;
    for (auto idx : cone) c.push_back(where[idx]);
    std::sort(c.begin(), c.end());
    out.cones.insert(std::move(c));
  }
  return out;
}

std::vector<FanDiagnostic> validate(const StackyFan& fan) {
  std::vector<FanDiagnostic> diags;
  if (fan.rank < 0) diags.push_back({"negative rank", {}});

  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    if (fan.rays[i].size() != std::size_t(fan.rank)) {
      diags.push_back({"ray dimension does not match rank", {i}});
      return diags;
    }
    if (vector_zero(fan.rays[i])) diags.push_back({"zero ray generator", {i}});
  }

  // Distinct rays on a common half-line (positive multiples) are invalid
  // unless the generators are literally equal.
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    for (std::size_t j = i + 1; j < fan.rays.size(); ++j) {
      if (fan.rays[i] == fan.rays[j]) continue;
      // r_i = c r_j with c > 0?
      bool proportional = true;
      Rat c;
      bool have = false;
      for (std::size_t d = 0; d < std::size_t(fan.rank); ++d) {
        std::int64_t a = fan.rays[i][d], b = fan.rays[j][d];
        if (b == 0) {
          if (a != 0) proportional = false;
          continue;
        }
        Rat ratio(Int(a), Int(b));
        if (!have) {
          c = ratio;
          have = true;
        } else if (!(c == ratio)) {
          proportional = false;
        }
      }
      if (proportional && have && c.positive())
        diags.push_back({"distinct rays on one half-line", {i, j}});
    }

  if (!fan.cones.count(Cone{}))
    diags.push_back({"not face-closed: empty cone missing", {}});
  for (const auto& cone : fan.cones) {
    if (!std::is_sorted(cone.begin(), cone.end()) ||
        std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      diags.push_back({"cone indices not sorted and distinct", cone});
      continue;
    }
    for (auto idx : cone)
      if (idx >= fan.rays.size()) {
        diags.push_back({"cone references unknown ray", cone});
        return diags;
      }
    if (!cone.empty() && rational_rank(ray_matrix(fan, cone)) != cone.size())
      diags.push_back({"not simplicial: dependent rays", cone});
    // Faces must be present.
    const std::size_t n = cone.size();
    for (std::size_t mask = 0; mask + 1 < (std::size_t(1) << n); ++mask) {
      Cone face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t(1) << b)) face.push_back(cone[b]);
      if (!fan.cones.count(face)) {
        diags.push_back({"not face-closed", cone});
        break;
      }
    }
  }
  return diags;
}

ConeStabilizer cone_stabilizer(const StackyFan& fan, const Cone& cone) {
  if (!fan.cones.count(cone))
    throw ConeNotInFan("cone is not part of the fan");
  ConeStabilizer out;
  out.cone = cone;
  if (cone.empty()) {
    out.group = FinAbGroup{};
    return out;
  }
  const std::size_t s = cone.size();
  IntMat b = ray_matrix(fan, cone);
  SnfDecomposition snf = smith_normal_form(b);
  if (snf.rank < s)
    throw InfiniteStabilizer("cone rays are linearly dependent");
  // Ray coordinates in a saturated basis of the spanned sublattice: the
  // first s rows of U*B.
  IntMat ub = snf.u * b;
  IntMat m(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m(i, j) = ub(i, j);
  auto [group, proj] = cokernel(m.transposed(), s);
  out.group = group;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<std::int64_t> e(s, 0);
    e[i] = 1;
    out.coord_chars.push_back(proj.apply(e).coords);
  }
  return out;
}

StackyFan stacky_star_subdivision(const StackyFan& fan,
                                  const std::vector<std::int64_t>& ray) {
  if (ray.size() != std::size_t(fan.rank))
    throw RayNotInteriorToAnyCone("ray dimension does not match fan rank");
  // Minimal cone with the point in its relative interior: all ray
  // coefficients strictly positive.
  const Cone* minimal = nullptr;
  for (const auto& cone : fan.cones) {
    if (cone.empty()) continue;
    std::vector<Rat> coeffs;
    if (!cone_coefficients(fan, cone, ray, &coeffs)) continue;
    bool interior = std::all_of(coeffs.begin(), coeffs.end(),
                                [](const Rat& c) { return c.positive(); });
    if (interior) {
      minimal = &cone;
      break; // unique: relative interiors partition the support
    }
  }
  if (!minimal || minimal->size() < 2)
    throw RayNotInteriorToAnyCone(
        "point is not interior to any cone of dimension >= 2");

  StackyFan out;
  out.rank = fan.rank;
  out.rays = fan.rays;
  out.rays.push_back(ray);
  const std::size_t new_index = out.rays.size() - 1;

  for (const auto& cone : fan.cones) {
    bool contains = std::includes(cone.begin(), cone.end(), minimal->begin(),
                                  minimal->end());
    if (!contains) {
      out.cones.insert(cone);
      continue;
    }
    const std::size_t n = cone.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      Cone face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t(1) << b)) face.push_back(cone[b]);
      bool face_contains = std::includes(face.begin(), face.end(),
                                         minimal->begin(), minimal->end());
      if (face_contains) continue;
      face.push_back(new_index);
      std::sort(face.begin(), face.end());
      out.cones.insert(std::move(face));
    }
  }
  return out;
}

StackyFan root_ray(const StackyFan& fan, std::size_t i, std::int64_t r) {
  if (i >= fan.rays.size())
    throw IndexOutOfRange("root: ray index out of range");
  if (r < 1) throw IndexOutOfRange("root: order must be >= 1");
  StackyFan out = fan;
  for (auto& c : out.rays[i]) c *= r;
  return out;
}

namespace {

Int stabilizer_order(const StackyFan& fan, const Cone& cone,
                     std::map<Cone, Int>& cache) {
  auto it = cache.find(cone);
  if (it != cache.end()) return it->second;
  Int order = cone_stabilizer(fan, cone).group.order();
  cache.emplace(cone, order);
  return order;
}

} // namespace

OrbifoldDescription stabilizer_components(const StackyFan& fan) {
  auto diags = validate(fan);
  if (!diags.empty())
    throw PreconditionFailed("fan does not validate: " + diags.front().message);

  OrbifoldDescription desc;
  desc.grading = fan.rank;
  std::map<Cone, Int> orders;

  for (const auto& cone : fan.cones) {
    // Critical: no proper face has an orbit stabilizer of the same order
    // (the face map is always injective, so equal order means isomorphic).
    Int order = stabilizer_order(fan, cone, orders);
    bool critical = true;
    const std::size_t n = cone.size();
    for (std::size_t mask = 0; critical && mask + 1 < (std::size_t(1) << n);
         ++mask) {
      Cone face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t(1) << b)) face.push_back(cone[b]);
      if (stabilizer_order(fan, face, orders) == order) critical = false;
    }
    if (!critical) continue;

    ConeStabilizer stab = cone_stabilizer(fan, cone);
    for (const auto& c : stab.coord_chars)
      if (vector_zero(c))
        throw NonDivisorialInput(
            "critical cone with a trivial coordinate character");

    StabilizerComponentData comp;
    comp.dim = fan.rank - static_cast<std::int64_t>(cone.size());
    comp.field = FieldLabel{"k", 0, comp.dim};
    comp.group = stab.group;
    comp.beta = stab.coord_chars;
    desc.components.push_back(std::move(comp));
  }
  validate_orbifold(desc);
  return desc;
}

CburnElement toric_class_cburn(const StackyFan& fan, LabelRegistry& reg) {
  OrbifoldDescription desc = stabilizer_components(fan);
  // Recover the cones to name the orbit closures.
  std::size_t at = 0;
  for (const auto& cone : fan.cones) {
    ConeStabilizer stab = cone_stabilizer(fan, cone);
    Int order = stab.group.order();
    // Re-run the criticality filter in the same order as above.
    bool critical = true;
    const std::size_t n = cone.size();
    for (std::size_t mask = 0; critical && mask + 1 < (std::size_t(1) << n);
         ++mask) {
      Cone face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t(1) << b)) face.push_back(cone[b]);
      if (cone_stabilizer(fan, face).group.order() == order) critical = false;
    }
    if (!critical) continue;
    std::ostringstream id;
    id << "toric:V([";
    for (std::size_t i = 0; i < cone.size(); ++i) {
      if (i) id << ",";
      id << cone[i];
    }
    id << "])";
    desc.components[at].stack = reg.atomic(
        id.str(), desc.components[at].dim, desc.components[at].group);
    ++at;
  }
  return class_of_orbifold(desc, reg);
}

ObarElement toric_class_obar(const StackyFan& fan) {
  return naive_class_open(stabilizer_components(fan));
}

bool in_support(const StackyFan& fan, const std::vector<std::int64_t>& point) {
  for (const auto& cone : fan.cones) {
    if (cone.empty()) {
      if (vector_zero(point)) return true;
      continue;
    }
    std::vector<Rat> coeffs;
    if (!cone_coefficients(fan, cone, point, &coeffs)) continue;
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) {
          return c.positive() || c.zero();
        }))
      return true;
  }
  return false;
}

} // namespace burnside
