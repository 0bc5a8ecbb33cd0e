#include "git_fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"

namespace gitfan {

namespace {

void require_in_weight_cone(const IntVector& u, const OrbitConeSet& oc, const char* name) {
  if (u.size() != oc.ambient_dim()) {
    throw Error(ErrorKind::Contract, std::string(name) + " has length " + std::to_string(u.size()) +
                                         ", lattice rank is " + std::to_string(oc.ambient_dim()));
  }
  if (!oc.weight_cone.contains(u)) {
    throw Error(ErrorKind::Domain, std::string(name) + " = " + u.to_string() + " is not in the weight cone");
  }
}

// Hyperplane normal up to sign: primitive, first nonzero entry positive.
IntVector normalized_normal(const IntVector& a) {
  IntVector p = primitive(a);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (p[i] < 0) p = -p;
    break;
  }
  return p;
}

void sort_canonical(std::vector<Cone>& cones) {
  std::sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) { return canonical_order(a, b) < 0; });
}

std::vector<IntVector> facet_hyperplanes(const std::vector<Cone>& cones) {
  std::set<IntVector> normals;
  for (const auto& c : cones) {
    for (const auto& a : c.inequalities()) normals.insert(normalized_normal(a));
    for (const auto& e : c.equations()) normals.insert(normalized_normal(e));
  }
  return {normals.begin(), normals.end()};
}

}  // namespace

std::vector<std::size_t> orbit_cones_containing(const IntVector& u, const OrbitConeSet& oc) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < oc.cones.size(); ++k)
    if (oc.cones[k].contains(u)) out.push_back(k);
  return out;
}

Cone git_cone(const IntVector& u, const OrbitConeSet& oc) {
  require_in_weight_cone(u, oc, "u");
  const auto containing = orbit_cones_containing(u, oc);
  if (containing.empty()) {
    throw Error(ErrorKind::Domain, "no orbit cone contains " + u.to_string());
  }
  std::vector<IntVector> ineq, eq;
  for (auto k : containing) {
    const Cone& c = oc.cones[k];
    ineq.insert(ineq.end(), c.inequalities().begin(), c.inequalities().end());
    eq.insert(eq.end(), c.equations().begin(), c.equations().end());
  }
  return Cone::from_inequalities(oc.ambient_dim(), ineq, eq);
}

std::vector<Cone> arrangement_chambers(const Cone& region, const std::vector<IntVector>& normals) {
  std::vector<Cone> cells{region};
  for (const auto& h : normals) {
    std::vector<Cone> next;
    for (auto& c : cells) {
      bool has_pos = false, has_neg = false;
      for (const auto& g : c.generators()) {
        const int s = sgn(dot(h, g));
        has_pos |= s > 0;
        has_neg |= s < 0;
      }
      if (!(has_pos && has_neg)) {
        next.push_back(std::move(c));
        continue;
      }
      for (const IntVector& side : {h, -h}) {
        std::vector<IntVector> ineq = c.inequalities();
        ineq.push_back(side);
        next.push_back(Cone::from_inequalities(c.ambient_dim(), ineq, c.equations()));
      }
    }
    cells = std::move(next);
  }
  sort_canonical(cells);
  return cells;
}

std::vector<IntVector> arrangement_samples(const Cone& region, const std::vector<IntVector>& normals) {
  std::map<std::string, Cone> cells;
  for (const auto& chamber : arrangement_chambers(region, normals))
    for (auto& f : faces(chamber)) cells.try_emplace(f.canonical_key(), std::move(f));
  std::vector<Cone> sorted;
  for (auto& [key, c] : cells) sorted.push_back(std::move(c));
  sort_canonical(sorted);
  std::vector<IntVector> samples;
  for (const auto& c : sorted) samples.push_back(c.relative_interior_point());
  return samples;
}

std::vector<Cone> close_under_faces(const std::vector<Cone>& cones) {
  std::map<std::string, Cone> all;
  for (const auto& c : cones)
    for (auto& f : faces(c)) all.try_emplace(f.canonical_key(), std::move(f));
  std::vector<Cone> out;
  for (auto& [key, c] : all) out.push_back(std::move(c));
  sort_canonical(out);
  return out;
}

GITFan make_fan(const Cone& weight_cone, std::vector<Cone> cones) {
  sort_canonical(cones);
  GITFan fan{weight_cone, std::move(cones), {}};
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < fan.cones.size() && maximal; ++j) {
      if (i == j || fan.cones[j].dim() <= fan.cones[i].dim()) continue;
      if (is_subcone(fan.cones[i], fan.cones[j])) maximal = false;
    }
    if (maximal) fan.maximal.push_back(i);
  }
  return fan;
}

GITFan enumerate_gitfan(const OrbitConeSet& oc) {
  const std::size_t d = oc.ambient_dim();
  if (d > kMaxFanDimension) {
    throw Error(ErrorKind::Dimension, "full GIT-fan enumeration supports lattice rank <= " +
                                          std::to_string(kMaxFanDimension) + ", got " + std::to_string(d) +
                                          "; git_cone and pair classification still work");
  }
  std::map<std::string, Cone> distinct;
  for (const auto& s : arrangement_samples(oc.weight_cone, facet_hyperplanes(oc.cones))) {
    Cone c = git_cone(s, oc);
    distinct.try_emplace(c.canonical_key(), std::move(c));
  }
  std::vector<Cone> cones;
  for (auto& [key, c] : distinct) cones.push_back(std::move(c));
  GITFan fan = make_fan(oc.weight_cone, close_under_faces(cones));

  const FanCheck check = verify_fan(fan);
  if (!check.ok) {
    std::string what = "GIT-fan failed verification:";
    for (const auto& d : check.diagnostics) what += " " + d + ";";
    throw Error(ErrorKind::Internal, what);
  }
  return fan;
}

FanCheck verify_fan(const GITFan& fan) {
  FanCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.diagnostics.push_back(std::move(msg));
  };

  std::set<std::string> keys;
  for (const auto& c : fan.cones) keys.insert(c.canonical_key());

  for (const auto& c : fan.cones) {
    if (c.ambient_dim() != fan.weight_cone.ambient_dim()) {
      fail("cone " + c.canonical_key() + " has the wrong ambient dimension");
      return check;
    }
    if (!is_subcone(c, fan.weight_cone)) fail("cone " + c.canonical_key() + " leaves the weight cone");
    for (const auto& f : faces(c))
      if (!keys.count(f.canonical_key())) fail("face " + f.canonical_key() + " of " + c.canonical_key() + " is missing");
  }

  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      const Cone& a = fan.cones[i];
      const Cone& b = fan.cones[j];
      const Cone meet = intersect(a, b);
      if (!is_face(meet, a) || !is_face(meet, b)) {
        fail("intersection " + meet.canonical_key() + " of " + a.canonical_key() + " and " + b.canonical_key() +
             " is not a face of both");
      }
    }
  }

  for (const auto& chamber : arrangement_chambers(fan.weight_cone, facet_hyperplanes(fan.cones))) {
    const IntVector s = chamber.relative_interior_point();
    const bool covered =
        std::any_of(fan.cones.begin(), fan.cones.end(), [&](const Cone& c) { return c.contains(s); });
    if (!covered) fail("weight cone point " + s.to_string() + " is not covered");
  }
  return check;
}

CommonConeResult common_git_cone(const IntVector& u, const IntVector& v, const OrbitConeSet& oc) {
  require_in_weight_cone(u, oc, "u");
  require_in_weight_cone(v, oc, "v");
  const IntVector sum = u + v;
  CommonConeResult result;
  for (std::size_t k = 0; k < oc.cones.size(); ++k) {
    const Cone& c = oc.cones[k];
    if (c.contains(sum) && !(c.contains(u) && c.contains(v))) result.failing.push_back(k);
  }
  if (result.failing.empty()) result.cone = git_cone(sum, oc);
  return result;
}

std::optional<std::size_t> shared_fan_member(const IntVector& u, const IntVector& v, const GITFan& fan) {
  for (std::size_t k = 0; k < fan.cones.size(); ++k)
    if (fan.cones[k].contains(u) && fan.cones[k].contains(v)) return k;
  return std::nullopt;
}

}  // namespace gitfan
