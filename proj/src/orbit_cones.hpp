#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cone.hpp"
#include "groebner.hpp"
#include "presentation.hpp"

namespace gitfan {

/// Variable index set, 0-based and ascending.
using IndexSet = std::vector<std::size_t>;

/// Distinct orbit cones in canonical order, each with the relevant subsets
/// producing it.
struct OrbitConeSet {
  Cone weight_cone;
  std::vector<Cone> cones;
  std::vector<std::vector<IndexSet>> witnesses;
  std::size_t relevant_subset_count = 0;

  std::size_t ambient_dim() const { return weight_cone.ambient_dim(); }
};

struct OrbitConeOptions {
  std::uint64_t subset_cap = std::uint64_t{1} << 20;
};

/// Decides relevance of index sets, memoizing Groebner bases of the
/// substituted relation ideals (many subsets substitute to the same ideal).
class RelevanceTester {
 public:
  explicit RelevanceTester(const GradedPresentation& p) : presentation_(p) {}

  /// prod_{i in I} T_i is not in the radical of <q_1^I, ..., q_s^I>.
  bool relevant(const std::vector<bool>& subset);

 private:
  const GradedPresentation& presentation_;
  std::map<std::string, Ideal> bases_;
};

bool relevant_subset(const std::vector<bool>& subset, const GradedPresentation& p);
bool relevant_subset(const IndexSet& subset, const GradedPresentation& p);

/// Tests all 2^r subsets. Throws SubsetCap when 2^r exceeds the cap.
OrbitConeSet enumerate_orbit_cones(const GradedPresentation& p, const OrbitConeOptions& options = {});

std::string format_index_set(const IndexSet& s);  // "{1,4}" (1-based)

}  // namespace gitfan
