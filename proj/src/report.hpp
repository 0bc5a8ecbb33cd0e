#pragma once

// JSON documents and the SVG fan drawing. Keys are emitted in a fixed order so
// output is byte-identical across runs.

#include <string>

#include "json.hpp"

#include "cone.hpp"
#include "fiber_oracle.hpp"
#include "git_fan.hpp"
#include "orbit_cones.hpp"
#include "pair_classifier.hpp"
#include "presentation.hpp"

namespace gitfan {

using Document = nlohmann::ordered_json;

Document vector_json(const IntVector& v);
Document cone_json(const Cone& c);
Document validation_json(const GradedPresentation& p, const ValidationReport& report);
Document weight_cone_json(const GradedPresentation& p);
Document orbit_cones_json(const GradedPresentation& p, const OrbitConeSet& oc);
Document fan_json(const GITFan& fan);
Document oracle_json(const OracleReport& report);
Document pair_report_json(const PairReport& report, const OrbitConeSet& oc);

/// Two-dimensional fans only (throws Dimension otherwise): one shaded polygon
/// per 2-dimensional cone and one labeled segment per ray.
std::string fan_svg(const GITFan& fan);

/// Stable serialization used for every document.
std::string dump(const Document& doc);

}  // namespace gitfan
