#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"
#include "presentation.hpp"

namespace gitfan {

/// Lattice points of the fiber polytope {a >= 0 : Q a = u}, sorted lexicographically.
struct FiberPoints {
  IntVector weight;
  std::vector<IntVector> points;
};

/// Enumerates fibers of a fixed weight matrix. Construction finds an integral
/// functional c with <c, w_i> > 0 for every column, which bounds each
/// exponent by <c, u> / <c, w_i>.
class FiberEnumerator {
 public:
  /// Throws Unbounded when ker(Q) meets the positive orthant nontrivially.
  explicit FiberEnumerator(std::vector<IntVector> weights);

  const IntVector& functional() const { return functional_; }
  FiberPoints points(const IntVector& u) const;

 private:
  std::vector<IntVector> weights_;
  IntVector functional_;
  std::vector<Integer> column_values_;  // <c, w_i>
};

FiberPoints fiber_lattice_points(const std::vector<IntVector>& weights, const IntVector& u);

/// {p + q}, deduplicated and sorted.
std::vector<IntVector> minkowski_sum(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

/// Multiplication map A_{nu} x A_{nv} -> A_{n(u+v)} on monomials at one degree.
struct DegreeOutcome {
  unsigned n = 0;
  std::size_t u_points = 0;
  std::size_t v_points = 0;
  std::size_t target_points = 0;
  std::size_t sum_points = 0;
  bool surjective = false;
  /// Lexicographically smallest target point outside the Minkowski sum.
  std::optional<IntVector> witness;
};

/// Throws Unsupported when p has relations and Unbounded when fibers are unbounded.
DegreeOutcome surjectivity_check(const GradedPresentation& p, const IntVector& u, const IntVector& v, unsigned n);

struct OracleReport {
  IntVector u;
  IntVector v;
  unsigned bound = 0;
  std::vector<DegreeOutcome> degrees;   // n = 1..bound
  std::vector<unsigned> surjective_at;  // the set S
  /// Smallest m <= bound whose scanned multiples are all surjective.
  std::optional<unsigned> generating_m;

  /// "evidence: generating pattern" or "evidence: not generating up to bound".
  std::string annotation() const;
};

OracleReport oracle_scan(const GradedPresentation& p, const IntVector& u, const IntVector& v, unsigned bound);

/// Plain-text table, one line per degree; stable across runs.
std::string oracle_table(const OracleReport& report);

}  // namespace gitfan
