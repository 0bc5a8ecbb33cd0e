#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cone.hpp"
#include "fiber_oracle.hpp"
#include "orbit_cones.hpp"
#include "presentation.hpp"

namespace gitfan {

enum class Verdict { NotGenerating, Generating, BoundaryUndetermined };

const char* verdict_name(Verdict v);

struct PairClassification {
  Verdict verdict = Verdict::NotGenerating;
  std::optional<Cone> common_cone;
  bool u_interior = false;
  bool v_interior = false;
  /// Orbit cones (indices) that contain u+v but miss u or v.
  std::vector<std::size_t> failing_orbit_cones;
};

/// No common GIT-cone: not generating. A common cone with u or v in its
/// relative interior: generating. Otherwise the fan alone cannot decide.
PairClassification classify_pair(const IntVector& u, const IntVector& v, const OrbitConeSet& oc);

struct PairReport {
  IntVector u;
  IntVector v;
  std::string presentation_digest;
  std::vector<std::string> assumptions;
  PairClassification classification;
  std::optional<OracleReport> oracle;
  /// Set when the oracle was wanted but cannot run here.
  std::optional<std::string> oracle_unavailable;
};

struct ReportOptions {
  unsigned oracle_bound = 12;
  /// Run the oracle even when the verdict is already decided by the fan.
  bool force_oracle = false;
};

/// Classification plus lattice-point evidence. The oracle is attached for
/// BoundaryUndetermined verdicts (or on request) when the presentation is
/// relation-free with bounded fibers; it never changes the verdict.
PairReport full_report(const IntVector& u, const IntVector& v, const GradedPresentation& p, const OrbitConeSet& oc,
                       const ReportOptions& options = {});
PairReport full_report(const IntVector& u, const IntVector& v, const GradedPresentation& p,
                       const ReportOptions& options = {});

}  // namespace gitfan
