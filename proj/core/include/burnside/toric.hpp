#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "burnside/classes.hpp"

namespace burnside {

using Cone = std::vector<std::size_t>; // sorted ray indices

/// Stacky fan: ambient lattice rank, ray generators, simplicial cones as
/// sorted ray-index sets (face closed, containing the empty cone).
struct StackyFan {
  std::int64_t rank = 0;
  std::vector<std::vector<std::int64_t>> rays;
  std::set<Cone> cones;

  bool operator==(const StackyFan&) const = default;
};

/// Sorted rays and re-indexed cones; the documented canonical form used
/// for fan equality.
StackyFan canonical_fan(const StackyFan& fan);

struct FanDiagnostic {
  std::string message;
  Cone cone; // offending cone when applicable
};

/// All fan invariants; returns an empty list when the fan is well formed.
std::vector<FanDiagnostic> validate(const StackyFan& fan);

/// Stabilizer of the torus orbit of a cone: the character group of the
/// chart together with the character of each ray coordinate.
struct ConeStabilizer {
  Cone cone;
  FinAbGroup group;
  CharSeq coord_chars; // one per ray of the cone, in cone order
};

/// Cokernel of the transposed ray matrix in a saturated basis of the
/// sublattice spanned by the cone.
ConeStabilizer cone_stabilizer(const StackyFan& fan, const Cone& cone);

/// Star subdivision at a lattice point in the relative interior of a cone
/// of dimension >= 2: the point joins the fan as a new ray and every cone
/// containing the minimal cone around it is replaced by joins of its
/// other faces with the new ray.
StackyFan stacky_star_subdivision(const StackyFan& fan,
                                  const std::vector<std::int64_t>& ray);

/// Scale ray i by r (r = 1 is the identity).
StackyFan root_ray(const StackyFan& fan, std::size_t i, std::int64_t r);

/// Stabilizer stratification of the associated stack: one component per
/// critical cone (no proper face with the same orbit stabilizer), with
/// purely transcendental field labels of the orbit-closure dimension.
OrbifoldDescription stabilizer_components(const StackyFan& fan);

enum class ToricClassMode { Cburn, Obar };

CburnElement toric_class_cburn(const StackyFan& fan, LabelRegistry& reg);
ObarElement toric_class_obar(const StackyFan& fan);

/// Rational membership of a point in the support of the fan.
bool in_support(const StackyFan& fan, const std::vector<std::int64_t>& point);

} // namespace burnside
