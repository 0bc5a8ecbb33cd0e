#include "pair_classifier.hpp"

#include "error.hpp"
#include "git_fan.hpp"

namespace gitfan {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotGenerating: return "NotGenerating";
    case Verdict::Generating: return "Generating";
    case Verdict::BoundaryUndetermined: return "BoundaryUndetermined";
  }
  return "?";
}

PairClassification classify_pair(const IntVector& u, const IntVector& v, const OrbitConeSet& oc) {
  CommonConeResult common = common_git_cone(u, v, oc);
  PairClassification out;
  out.failing_orbit_cones = std::move(common.failing);
  if (!common.cone) {
    out.verdict = Verdict::NotGenerating;
    return out;
  }
  out.u_interior = common.cone->relative_interior_contains(u);
  out.v_interior = common.cone->relative_interior_contains(v);
  out.verdict = (out.u_interior || out.v_interior) ? Verdict::Generating : Verdict::BoundaryUndetermined;
  out.common_cone = std::move(common.cone);
  return out;
}

PairReport full_report(const IntVector& u, const IntVector& v, const GradedPresentation& p, const OrbitConeSet& oc,
                       const ReportOptions& options) {
  require_valid(p);
  PairReport report;
  report.u = u;
  report.v = v;
  report.presentation_digest = p.digest();
  report.assumptions.push_back(integrality_assumption());
  report.classification = classify_pair(u, v, oc);

  const bool wanted = options.force_oracle || report.classification.verdict == Verdict::BoundaryUndetermined;
  if (!wanted) return report;
  if (!p.relation_free()) {
    report.oracle_unavailable = "presentation has relations; the lattice-point criterion covers polynomial rings only";
  } else if (!fibers_bounded(p)) {
    report.oracle_unavailable = "fiber polytopes are unbounded";
  } else {
    report.oracle = oracle_scan(p, u, v, options.oracle_bound);
  }
  return report;
}

PairReport full_report(const IntVector& u, const IntVector& v, const GradedPresentation& p,
                       const ReportOptions& options) {
  require_valid(p);
  return full_report(u, v, p, enumerate_orbit_cones(p), options);
}

}  // namespace gitfan
