#include "cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "error.hpp"

namespace gitfan {

namespace {

void require_dim(const IntVector& v, std::size_t dim, const char* what) {
  if (v.size() != dim) {
    throw Error(ErrorKind::Contract, std::string(what) + " has length " + std::to_string(v.size()) +
                                         ", ambient dimension is " + std::to_string(dim));
  }
}

void require_same_ambient(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::Contract, "cones live in different ambient dimensions");
  }
}

std::vector<bool> tight_set(const IntVector& ray, const std::vector<IntVector>& processed) {
  std::vector<bool> z(processed.size());
  for (std::size_t j = 0; j < processed.size(); ++j) z[j] = dot(processed[j], ray) == 0;
  return z;
}

}  // namespace

DualDescription double_description(const std::vector<IntVector>& inequalities, std::size_t dim) {
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<IntVector> rays;
  std::vector<IntVector> processed;

  for (const auto& a : inequalities) {
    require_dim(a, dim, "inequality");
    if (a.is_zero()) continue;

    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const IntVector& l) { return dot(a, l) != 0; });
    if (pivot != lineality.end()) {
      // a cuts the lineality space: one lineality direction turns into a ray.
      IntVector l = *pivot;
      if (dot(a, l) < 0) l = -l;
      const Integer al = dot(a, l);
      lineality.erase(pivot);
      for (auto& other : lineality) other = primitive(al * other - dot(a, other) * l);
      for (auto& r : rays) r = primitive(al * r - dot(a, r) * l);
      rays.push_back(primitive(l));
      processed.push_back(a);
      continue;
    }

    std::vector<IntVector> pos, zero, neg;
    for (auto& r : rays) {
      const int s = sgn(dot(a, r));
      (s > 0 ? pos : (s < 0 ? neg : zero)).push_back(std::move(r));
    }
    std::vector<IntVector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    if (!neg.empty() && !pos.empty()) {
      // Two rays are adjacent iff their common tight constraints cut out a 2-face.
      const long target = static_cast<long>(dim) - static_cast<long>(lineality.size()) - 2;
      std::vector<std::vector<bool>> pos_tight, neg_tight;
      for (const auto& p : pos) pos_tight.push_back(tight_set(p, processed));
      for (const auto& n : neg) neg_tight.push_back(tight_set(n, processed));
      for (std::size_t i = 0; i < pos.size(); ++i) {
        for (std::size_t k = 0; k < neg.size(); ++k) {
          std::vector<IntVector> common;
          for (std::size_t j = 0; j < processed.size(); ++j)
            if (pos_tight[i][j] && neg_tight[k][j]) common.push_back(processed[j]);
          if (static_cast<long>(common.size()) < target) continue;
          if (static_cast<long>(rank(common, dim)) != target) continue;
          next.push_back(primitive(dot(a, pos[i]) * neg[k] - dot(a, neg[k]) * pos[i]));
        }
      }
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  DualDescription out;
  out.lineality = canonical_span_basis(lineality, dim);
  std::set<IntVector> unique;
  for (const auto& r : rays) unique.insert(reduce_modulo(r, out.lineality));
  out.rays.assign(unique.begin(), unique.end());
  return out;
}

Cone Cone::zero(std::size_t ambient_dim) { return from_generators(ambient_dim, {}); }

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<IntVector>& generators) {
  for (const auto& g : generators) require_dim(g, ambient_dim, "generator");
  Cone c;
  c.ambient_dim_ = ambient_dim;

  // Facets of the cone are the extreme rays of its dual.
  DualDescription dual = double_description(generators, ambient_dim);
  c.equations_ = std::move(dual.lineality);
  c.inequalities_ = std::move(dual.rays);

  std::vector<IntVector> h = c.inequalities_;
  for (const auto& e : c.equations_) {
    h.push_back(e);
    h.push_back(-e);
  }
  DualDescription primal = double_description(h, ambient_dim);
  c.lineality_ = std::move(primal.lineality);
  c.rays_ = std::move(primal.rays);
  return c;
}

Cone Cone::from_inequalities(std::size_t ambient_dim, const std::vector<IntVector>& inequalities,
                             const std::vector<IntVector>& equations) {
  std::vector<IntVector> h = inequalities;
  for (const auto& e : equations) {
    require_dim(e, ambient_dim, "equation");
    h.push_back(e);
    h.push_back(-e);
  }
  DualDescription primal = double_description(h, ambient_dim);
  std::vector<IntVector> gens = primal.rays;
  for (const auto& l : primal.lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return from_generators(ambient_dim, gens);
}

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(-l);
  }
  return g;
}

bool Cone::contains(const IntVector& p) const {
  require_dim(p, ambient_dim_, "point");
  for (const auto& e : equations_)
    if (dot(e, p) != 0) return false;
  for (const auto& a : inequalities_)
    if (dot(a, p) < 0) return false;
  return true;
}

bool Cone::relative_interior_contains(const IntVector& p) const {
  require_dim(p, ambient_dim_, "point");
  for (const auto& e : equations_)
    if (dot(e, p) != 0) return false;
  for (const auto& a : inequalities_)
    if (dot(a, p) <= 0) return false;
  return true;
}

IntVector Cone::relative_interior_point() const {
  IntVector s(ambient_dim_);
  for (const auto& r : rays_) s += r;
  return s;
}

std::string Cone::canonical_key() const {
  std::ostringstream out;
  auto list = [&](const std::vector<IntVector>& vs) {
    out << '[';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i].to_string();
    out << ']';
  };
  out << "L";
  list(lineality_);
  out << " R";
  list(rays_);
  return out.str();
}

std::strong_ordering canonical_order(const Cone& a, const Cone& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.rays() <=> b.rays(); c != 0) return c;
  return a.lineality() <=> b.lineality();
}

bool contains(const Cone& c, const IntVector& p) { return c.contains(p); }

bool relative_interior_contains(const Cone& c, const IntVector& p) {
  return c.relative_interior_contains(p);
}

bool is_subcone(const Cone& c1, const Cone& c2) {
  require_same_ambient(c1, c2);
  for (const auto& g : c1.generators())
    if (!c2.contains(g)) return false;
  return true;
}

bool cones_equal(const Cone& c1, const Cone& c2) {
  if (c1.ambient_dim() != c2.ambient_dim()) return false;
  return is_subcone(c1, c2) && is_subcone(c2, c1);
}

Cone intersect(const Cone& c1, const Cone& c2) {
  require_same_ambient(c1, c2);
  std::vector<IntVector> ineq = c1.inequalities();
  ineq.insert(ineq.end(), c2.inequalities().begin(), c2.inequalities().end());
  std::vector<IntVector> eq = c1.equations();
  eq.insert(eq.end(), c2.equations().begin(), c2.equations().end());
  return Cone::from_inequalities(c1.ambient_dim(), ineq, eq);
}

namespace {

// Face of c cut out by the facets flagged in `active`.
std::vector<IntVector> face_generators(const Cone& c, const std::vector<bool>& active) {
  std::vector<IntVector> gens;
  for (const auto& r : c.rays()) {
    bool tight = true;
    for (std::size_t j = 0; j < active.size() && tight; ++j)
      if (active[j] && dot(c.inequalities()[j], r) != 0) tight = false;
    if (tight) gens.push_back(r);
  }
  for (const auto& l : c.lineality()) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return gens;
}

std::vector<bool> facets_tight_on(const Cone& c, const std::vector<IntVector>& gens) {
  std::vector<bool> active(c.inequalities().size());
  for (std::size_t j = 0; j < active.size(); ++j) {
    active[j] = std::all_of(gens.begin(), gens.end(), [&](const IntVector& g) {
      return dot(c.inequalities()[j], g) == 0;
    });
  }
  return active;
}

}  // namespace

bool is_face(const Cone& f, const Cone& c) {
  require_same_ambient(f, c);
  if (!is_subcone(f, c)) return false;
  const auto active = facets_tight_on(c, f.generators());
  return cones_equal(f, Cone::from_generators(c.ambient_dim(), face_generators(c, active)));
}

std::vector<Cone> faces(const Cone& c) {
  const std::size_t m = c.inequalities().size();
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(m, false)};
  seen.insert(queue.front());
  std::vector<Cone> out;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<bool> active = queue[head];
    const auto gens = face_generators(c, active);
    out.push_back(Cone::from_generators(c.ambient_dim(), gens));
    for (std::size_t j = 0; j < m; ++j) {
      if (active[j]) continue;
      auto next = active;
      next[j] = true;
      next = facets_tight_on(c, face_generators(c, next));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) { return canonical_order(a, b) < 0; });
  return out;
}

}  // namespace gitfan
