#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "error.hpp"

namespace gitfan {

namespace {

Document integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Document(x.get_si());
  return Document(x.get_str());
}

Document vector_list(const std::vector<IntVector>& vs) {
  Document out = Document::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

Document index_set_json(const IndexSet& s) {
  Document out = Document::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

}  // namespace

std::string dump(const Document& doc) { return doc.dump(2) + "\n"; }

Document vector_json(const IntVector& v) {
  Document out = Document::array();
  for (const auto& e : v.entries()) out.push_back(integer_json(e));
  return out;
}

Document cone_json(const Cone& c) {
  Document out;
  out["dim"] = c.dim();
  out["rays"] = vector_list(c.rays());
  out["lineality"] = vector_list(c.lineality());
  out["inequalities"] = vector_list(c.inequalities());
  out["equations"] = vector_list(c.equations());
  return out;
}

Document validation_json(const GradedPresentation& p, const ValidationReport& report) {
  Document out;
  out["command"] = "validate";
  out["presentation_digest"] = p.digest();
  out["variables"] = p.variable_count();
  out["lattice_rank"] = p.lattice_rank();
  out["relations"] = p.relations().size();
  out["valid"] = report.valid;
  out["problems"] = report.problems;
  out["assumptions"] = report.assumptions;
  return out;
}

Document weight_cone_json(const GradedPresentation& p) {
  Document out;
  out["command"] = "weight-cone";
  out["presentation_digest"] = p.digest();
  out["weight_cone"] = cone_json(weight_cone(p));
  out["fibers_bounded"] = fibers_bounded(p);
  return out;
}

Document orbit_cones_json(const GradedPresentation& p, const OrbitConeSet& oc) {
  Document out;
  out["command"] = "orbit-cones";
  out["presentation_digest"] = p.digest();
  out["assumptions"] = Document::array({integrality_assumption()});
  out["subsets_tested"] = std::uint64_t{1} << p.variable_count();
  out["relevant_subsets"] = oc.relevant_subset_count;
  out["weight_cone"] = cone_json(oc.weight_cone);
  Document cones = Document::array();
  for (std::size_t k = 0; k < oc.cones.size(); ++k) {
    Document c;
    c["index"] = k;
    c["dim"] = oc.cones[k].dim();
    c["rays"] = vector_list(oc.cones[k].rays());
    c["lineality"] = vector_list(oc.cones[k].lineality());
    Document w = Document::array();
    for (const auto& s : oc.witnesses[k]) w.push_back(index_set_json(s));
    c["witness_subsets"] = std::move(w);
    cones.push_back(std::move(c));
  }
  out["orbit_cones"] = std::move(cones);
  return out;
}

Document fan_json(const GITFan& fan) {
  Document out;
  out["command"] = "gitfan";
  out["ambient_dim"] = fan.weight_cone.ambient_dim();
  out["weight_cone"] = cone_json(fan.weight_cone);
  Document cones = Document::array();
  for (std::size_t k = 0; k < fan.cones.size(); ++k) {
    const Cone& c = fan.cones[k];
    Document j;
    j["index"] = k;
    j["dim"] = c.dim();
    j["rays"] = vector_list(c.rays());
    j["lineality"] = vector_list(c.lineality());
    Document facets = Document::array();
    for (std::size_t f = 0; f < fan.cones.size(); ++f) {
      if (fan.cones[f].dim() + 1 == c.dim() && is_subcone(fan.cones[f], c)) facets.push_back(f);
    }
    j["facets"] = std::move(facets);
    cones.push_back(std::move(j));
  }
  out["cones"] = std::move(cones);
  out["maximal"] = fan.maximal;
  out["verified"] = verify_fan(fan).ok;
  return out;
}

Document oracle_json(const OracleReport& report) {
  Document out;
  out["u"] = vector_json(report.u);
  out["v"] = vector_json(report.v);
  out["bound"] = report.bound;
  Document degrees = Document::array();
  for (const auto& d : report.degrees) {
    Document j;
    j["n"] = d.n;
    j["surjective"] = d.surjective;
    j["witness"] = d.witness ? vector_json(*d.witness) : Document(nullptr);
    j["fiber_nu"] = d.u_points;
    j["fiber_nv"] = d.v_points;
    j["target"] = d.target_points;
    j["minkowski_sum"] = d.sum_points;
    degrees.push_back(std::move(j));
  }
  out["degrees"] = std::move(degrees);
  out["surjective_at"] = report.surjective_at;
  out["generating_m"] = report.generating_m ? Document(*report.generating_m) : Document(nullptr);
  out["annotation"] = report.annotation();
  out["note"] = "per-degree outcomes are exact; the annotation is bounded evidence, not a proof";
  return out;
}

Document pair_report_json(const PairReport& report, const OrbitConeSet& oc) {
  const PairClassification& cls = report.classification;
  Document out;
  out["command"] = "classify";
  out["u"] = vector_json(report.u);
  out["v"] = vector_json(report.v);
  out["presentation_digest"] = report.presentation_digest;
  out["assumptions"] = report.assumptions;
  out["verdict"] = verdict_name(cls.verdict);
  out["common_cone"] = cls.common_cone ? cone_json(*cls.common_cone) : Document(nullptr);
  if (cls.common_cone) {
    Document interior;
    interior["u"] = cls.u_interior;
    interior["v"] = cls.v_interior;
    out["relative_interior"] = std::move(interior);
  } else {
    out["relative_interior"] = nullptr;
  }
  Document failing = Document::array();
  const IntVector sum = report.u + report.v;
  for (auto k : cls.failing_orbit_cones) {
    const Cone& c = oc.cones[k];
    Document j;
    j["orbit_cone"] = k;
    j["rays"] = vector_list(c.rays());
    j["lineality"] = vector_list(c.lineality());
    j["contains_sum"] = vector_json(sum);
    Document misses = Document::array();
    if (!c.contains(report.u)) misses.push_back("u");
    if (!c.contains(report.v)) misses.push_back("v");
    j["misses"] = std::move(misses);
    failing.push_back(std::move(j));
  }
  out["diagnostics"] = Document{{"failing_orbit_cones", std::move(failing)}};
  out["oracle"] = report.oracle ? oracle_json(*report.oracle) : Document(nullptr);
  out["oracle_unavailable"] = report.oracle_unavailable ? Document(*report.oracle_unavailable) : Document(nullptr);
  return out;
}

namespace {

constexpr double kSize = 440.0;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 170.0;

double angle_of(const IntVector& v) { return std::atan2(v[1].get_d(), v[0].get_d()); }

std::pair<std::string, std::string> coords(double angle, double radius) {
  char x[32], y[32];
  std::snprintf(x, sizeof x, "%.2f", kCenter + radius * std::cos(angle));
  std::snprintf(y, sizeof y, "%.2f", kCenter - radius * std::sin(angle));
  return {x, y};
}

std::string point(double angle, double radius) {
  const auto [x, y] = coords(angle, radius);
  return x + "," + y;
}

// Counterclockwise angular sector [start, start + sweep] covered by a 2-dim cone.
std::pair<double, double> sector(const Cone& c) {
  constexpr double pi = std::numbers::pi;
  if (c.lineality().size() == 2) return {0.0, 2 * pi};
  if (c.lineality().size() == 1) {
    const IntVector& l = c.lineality().front();
    const IntVector& r = c.rays().front();
    const Integer cross = l[0] * r[1] - l[1] * r[0];
    return {cross > 0 ? angle_of(l) : angle_of(-l), pi};
  }
  const IntVector& a = c.rays()[0];
  const IntVector& b = c.rays()[1];
  const Integer cross = a[0] * b[1] - a[1] * b[0];
  const IntVector& first = cross > 0 ? a : b;
  const IntVector& second = cross > 0 ? b : a;
  double sweep = angle_of(second) - angle_of(first);
  if (sweep < 0) sweep += 2 * pi;
  return {angle_of(first), sweep};
}

}  // namespace

std::string fan_svg(const GITFan& fan) {
  if (fan.weight_cone.ambient_dim() != 2) {
    throw Error(ErrorKind::Dimension, "plot needs lattice rank 2, got " +
                                          std::to_string(fan.weight_cone.ambient_dim()));
  }
  static const char* const palette[] = {"#9ecae1", "#fdd0a2", "#c7e9c0", "#dadaeb", "#fcbba1", "#d9d9d9"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::size_t shade = 0;
  for (const auto& c : fan.cones) {
    if (c.dim() != 2) continue;
    const auto [start, sweep] = sector(c);
    const int steps = std::max(2, static_cast<int>(std::ceil(sweep / (std::numbers::pi / 90))));
    out << "<polygon class=\"chamber\" fill=\"" << palette[shade++ % std::size(palette)]
        << "\" fill-opacity=\"0.8\" stroke=\"none\" points=\"";
    if (sweep < 2 * std::numbers::pi) out << point(0, 0) << ' ';
    for (int i = 0; i <= steps; ++i) out << point(start + sweep * i / steps, kRadius) << (i < steps ? " " : "");
    out << "\"><title>" << c.canonical_key() << "</title></polygon>\n";
  }

  for (const auto& c : fan.cones) {
    if (c.dim() != 1) continue;
    std::vector<IntVector> directions = c.rays();
    if (!c.lineality().empty()) directions = {c.lineality().front(), -c.lineality().front()};
    for (const auto& dir : directions) {
      const auto [x, y] = coords(angle_of(dir), kRadius);
      out << "<line class=\"ray\" x1=\"" << kCenter << "\" y1=\"" << kCenter << "\" x2=\"" << x << "\" y2=\"" << y
          << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    const auto [x, y] = coords(angle_of(directions.front()), kRadius + 18);
    out << "<text class=\"ray-label\" x=\"" << x << "\" y=\"" << y
        << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
        << directions.front().to_string() << "</text>\n";
  }
  out << "<circle cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\"2.5\" fill=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace gitfan
