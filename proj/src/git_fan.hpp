#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cone.hpp"
#include "orbit_cones.hpp"

namespace gitfan {

/// Collection of cones closed under faces, in canonical order.
struct GITFan {
  Cone weight_cone;
  std::vector<Cone> cones;
  std::vector<std::size_t> maximal;  // indices into cones
};

/// Largest ambient dimension accepted by enumerate_gitfan.
inline constexpr std::size_t kMaxFanDimension = 3;

/// Indices of the orbit cones containing u.
std::vector<std::size_t> orbit_cones_containing(const IntVector& u, const OrbitConeSet& oc);

/// Intersection of all orbit cones containing u. Throws Domain when u is not
/// in the weight cone or no orbit cone contains it.
Cone git_cone(const IntVector& u, const OrbitConeSet& oc);

/// Maximal cells of the hyperplane arrangement restricted to `region`; every
/// cell has the dimension of `region`.
std::vector<Cone> arrangement_chambers(const Cone& region, const std::vector<IntVector>& normals);

/// One integral relative-interior point for every relatively open cell of the
/// arrangement restricted to `region` (all dimensions), in canonical cell order.
std::vector<IntVector> arrangement_samples(const Cone& region, const std::vector<IntVector>& normals);

/// All GIT-cones: samples every cell of the arrangement of orbit-cone facet
/// hyperplanes, evaluates git_cone there, deduplicates and closes under faces.
/// Throws Dimension for ambient dimension above kMaxFanDimension and Internal
/// if the result fails verify_fan.
GITFan enumerate_gitfan(const OrbitConeSet& oc);

struct FanCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Face closure, pairwise intersections being faces of both, containment in
/// the weight cone, and coverage of the weight cone.
FanCheck verify_fan(const GITFan& fan);

/// Builds a GITFan from arbitrary cones: sorts canonically and marks maximal
/// members. Does not add faces.
GITFan make_fan(const Cone& weight_cone, std::vector<Cone> cones);

/// Adds every face of every member.
std::vector<Cone> close_under_faces(const std::vector<Cone>& cones);

struct CommonConeResult {
  std::optional<Cone> cone;
  /// Orbit cones containing u+v but missing u or v.
  std::vector<std::size_t> failing;
};

/// Orbit-cone form of X(u) and X(v) meeting in X(u+v): when every orbit cone
/// containing u+v also contains u and v, returns lambda(u+v).
CommonConeResult common_git_cone(const IntVector& u, const IntVector& v, const OrbitConeSet& oc);

/// Index of a fan member containing both points, if any.
std::optional<std::size_t> shared_fan_member(const IntVector& u, const IntVector& v, const GITFan& fan);

}  // namespace gitfan
