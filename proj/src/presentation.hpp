#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cone.hpp"
#include "exact.hpp"
#include "polynomial.hpp"

namespace gitfan {

/// Polynomial ring Q[T1..Tr] graded by an integer weight matrix, together with
/// homogeneous relations generating the kernel of K[T] -> A.
class GradedPresentation {
 public:
  /// Throws Parse when shapes disagree or names are not usable identifiers.
  GradedPresentation(std::vector<std::string> variables, std::vector<IntVector> weights,
                     std::vector<Polynomial> relations);

  /// Reads the JSON input document {"variables": [...], "weights": [[...], ...],
  /// "relations": ["..."]}. `variables` defaults to T1..Tr and `relations` to
  /// none; any other key is rejected.
  static GradedPresentation from_document(const std::string& text);
  std::string to_document() const;

  std::size_t variable_count() const { return weights_.size(); }
  std::size_t lattice_rank() const { return weights_.front().size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  /// Column i is deg(T_{i+1}).
  const std::vector<IntVector>& weights() const { return weights_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  bool relation_free() const { return relations_.empty(); }

  IntVector degree(const Monomial& m) const;

  /// 16 hex digits of FNV-1a over the canonical document.
  std::string digest() const;

 private:
  std::vector<std::string> variables_;
  std::vector<IntVector> weights_;
  std::vector<Polynomial> relations_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> problems;
  std::vector<std::string> assumptions;
};

/// Homogeneity and properness of every relation. Integrality of A is not
/// decidable here and is listed under `assumptions`.
ValidationReport validate(const GradedPresentation& p);

/// Throws Invalid carrying the first problem found by validate().
void require_valid(const GradedPresentation& p);

/// Assumption echoed in every report.
const char* integrality_assumption();

Cone weight_cone(const GradedPresentation& p);

/// ker(Q) meets the positive orthant only in 0, i.e. every fiber polytope is bounded.
bool fibers_bounded(const std::vector<IntVector>& weights);
inline bool fibers_bounded(const GradedPresentation& p) { return fibers_bounded(p.weights()); }

}  // namespace gitfan
