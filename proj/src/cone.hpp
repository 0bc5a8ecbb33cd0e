#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "exact.hpp"

namespace gitfan {

/// Lineality basis and extreme rays (taken modulo the lineality space) of a
/// cone given by inequalities.
struct DualDescription {
  std::vector<IntVector> lineality;  // canonical basis, see canonical_span_basis
  std::vector<IntVector> rays;       // primitive, reduced modulo lineality, sorted
};

/// Incremental double description for {x in Q^dim : <a, x> >= 0 for all a}.
DualDescription double_description(const std::vector<IntVector>& inequalities, std::size_t dim);

/// Polyhedral cone in Q^d holding both descriptions in canonical form.
///
/// The generator side is (rays, lineality): lineality is the reduced row
/// echelon basis of the lineality space scaled to primitive integers, rays are
/// primitive and reduced modulo that basis. The inequality side mirrors this:
/// equations span the orthogonal complement of the linear hull, inequalities
/// are the irredundant facet normals reduced modulo the equations. Two cones
/// are equal iff their canonical data coincide.
class Cone {
 public:
  static Cone zero(std::size_t ambient_dim);
  static Cone from_generators(std::size_t ambient_dim, const std::vector<IntVector>& generators);
  static Cone from_inequalities(std::size_t ambient_dim, const std::vector<IntVector>& inequalities,
                                const std::vector<IntVector>& equations = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return ambient_dim_ - equations_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& inequalities() const { return inequalities_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  /// Rays followed by the lineality basis and its negatives.
  std::vector<IntVector> generators() const;

  bool is_pointed() const { return lineality_.empty(); }
  bool contains(const IntVector& p) const;
  bool relative_interior_contains(const IntVector& p) const;

  /// Sum of the rays: a point of the relative interior (0 when there are no rays).
  IntVector relative_interior_point() const;

  /// Stable textual key: lineality basis and rays, e.g. "L[] R[(1,2),(2,1)]".
  std::string canonical_key() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.lineality_ == b.lineality_ && a.rays_ == b.rays_;
  }

 private:
  Cone() = default;

  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> inequalities_;
  std::vector<IntVector> equations_;
};

/// Deterministic order: dimension, then rays, then lineality basis.
std::strong_ordering canonical_order(const Cone& a, const Cone& b);

inline Cone cone_from_generators(std::size_t ambient_dim, const std::vector<IntVector>& generators) {
  return Cone::from_generators(ambient_dim, generators);
}

bool contains(const Cone& c, const IntVector& p);
bool relative_interior_contains(const Cone& c, const IntVector& p);

/// c1 is a subset of c2.
bool is_subcone(const Cone& c1, const Cone& c2);

/// Mutual containment.
bool cones_equal(const Cone& c1, const Cone& c2);

Cone intersect(const Cone& c1, const Cone& c2);

bool is_face(const Cone& f, const Cone& c);

/// All faces from the lineality space up to c itself, in canonical order.
std::vector<Cone> faces(const Cone& c);

}  // namespace gitfan
