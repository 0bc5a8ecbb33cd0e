#include "fiber_oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cone.hpp"
#include "error.hpp"

namespace gitfan {

FiberEnumerator::FiberEnumerator(std::vector<IntVector> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorKind::Contract, "empty weight matrix");
  if (!fibers_bounded(weights_)) {
    throw Error(ErrorKind::Unbounded,
                "fiber polytopes are unbounded: a nonzero nonnegative exponent vector has weight 0");
  }
  const std::size_t d = weights_.front().size();
  // Any relative-interior point of the dual of the weight cone is strictly
  // positive on every nonzero column once the weight cone is pointed.
  const Cone dual = Cone::from_inequalities(d, weights_);
  functional_ = dual.relative_interior_point();
  for (const auto& w : weights_) {
    column_values_.push_back(dot(functional_, w));
    if (column_values_.back() <= 0) {
      throw Error(ErrorKind::Internal, "no strictly positive functional found for bounded fibers");
    }
  }
}

FiberPoints FiberEnumerator::points(const IntVector& u) const {
  const std::size_t r = weights_.size();
  if (u.size() != weights_.front().size()) {
    throw Error(ErrorKind::Contract, "weight " + u.to_string() + " has the wrong length");
  }
  FiberPoints out{u, {}};
  IntVector a(r);
  IntVector rem = u;

  // Depth-first over the exponents in index order, so output is lexicographic.
  auto descend = [&](auto&& self, std::size_t i) -> void {
    if (i + 1 == r) {
      // The last exponent is forced: rem must be a nonnegative multiple of w_{r}.
      const Integer level = dot(functional_, rem);
      if (level < 0 || level % column_values_[i] != 0) return;
      const Integer k = level / column_values_[i];
      if (k * weights_[i] != rem) return;
      a[i] = k;
      out.points.push_back(a);
      a[i] = 0;
      return;
    }
    const Integer cap = dot(functional_, rem) / column_values_[i];
    const IntVector saved = rem;
    for (Integer k = 0; k <= cap; ++k) {
      a[i] = k;
      self(self, i + 1);
      rem -= weights_[i];
    }
    a[i] = 0;
    rem = saved;
  };
  if (dot(functional_, rem) >= 0) descend(descend, 0);
  return out;
}

FiberPoints fiber_lattice_points(const std::vector<IntVector>& weights, const IntVector& u) {
  return FiberEnumerator(weights).points(u);
}

std::vector<IntVector> minkowski_sum(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::set<IntVector> sums;
  for (const auto& p : a)
    for (const auto& q : b) sums.insert(p + q);
  return {sums.begin(), sums.end()};
}

namespace {

void require_oracle_scope(const GradedPresentation& p) {
  if (!p.relation_free()) {
    throw Error(ErrorKind::Unsupported,
                "the lattice-point criterion holds for polynomial rings only; this presentation has relations");
  }
}

IntVector column_image(const std::vector<IntVector>& weights, const IntVector& a) {
  IntVector image(weights.front().size());
  for (std::size_t i = 0; i < weights.size(); ++i) image += a[i] * weights[i];
  return image;
}

DegreeOutcome check_degree(const FiberEnumerator& fibers, const std::vector<IntVector>& weights,
                           const IntVector& u, const IntVector& v, unsigned n) {
  const Integer scale(n);
  const auto du = fibers.points(scale * u).points;
  const auto dv = fibers.points(scale * v).points;
  const IntVector target_weight = scale * (u + v);
  const auto target = fibers.points(target_weight).points;
  const auto sum = minkowski_sum(du, dv);

  if (!std::includes(target.begin(), target.end(), sum.begin(), sum.end())) {
    throw Error(ErrorKind::Internal, "Minkowski sum leaves the target fiber at n = " + std::to_string(n));
  }

  DegreeOutcome out;
  out.n = n;
  out.u_points = du.size();
  out.v_points = dv.size();
  out.target_points = target.size();
  out.sum_points = sum.size();
  out.surjective = sum.size() == target.size();
  if (!out.surjective) {
    std::vector<IntVector> missing;
    std::set_difference(target.begin(), target.end(), sum.begin(), sum.end(), std::back_inserter(missing));
    const IntVector& w = missing.front();
    if (!w.is_nonnegative() || column_image(weights, w) != target_weight ||
        std::binary_search(sum.begin(), sum.end(), w)) {
      throw Error(ErrorKind::Internal, "witness " + w.to_string() + " failed re-verification");
    }
    out.witness = w;
  }
  return out;
}

}  // namespace

DegreeOutcome surjectivity_check(const GradedPresentation& p, const IntVector& u, const IntVector& v, unsigned n) {
  require_oracle_scope(p);
  const FiberEnumerator fibers(p.weights());
  return check_degree(fibers, p.weights(), u, v, n);
}

OracleReport oracle_scan(const GradedPresentation& p, const IntVector& u, const IntVector& v, unsigned bound) {
  require_oracle_scope(p);
  const FiberEnumerator fibers(p.weights());
  OracleReport report{u, v, bound, {}, {}, std::nullopt};
  for (unsigned n = 1; n <= bound; ++n) {
    report.degrees.push_back(check_degree(fibers, p.weights(), u, v, n));
    if (report.degrees.back().surjective) report.surjective_at.push_back(n);
  }
  for (unsigned m = 1; m <= bound && !report.generating_m; ++m) {
    bool all = true;
    for (unsigned km = m; km <= bound && all; km += m) all = report.degrees[km - 1].surjective;
    if (all) report.generating_m = m;
  }
  return report;
}

std::string OracleReport::annotation() const {
  return generating_m ? "evidence: generating pattern" : "evidence: not generating up to bound";
}

std::string oracle_table(const OracleReport& report) {
  std::ostringstream out;
  out << "u=" << report.u.to_string() << " v=" << report.v.to_string() << " bound=" << report.bound << '\n';
  for (const auto& d : report.degrees) {
    out << "n=" << d.n << " fiber_nu=" << d.u_points << " fiber_nv=" << d.v_points
        << " target=" << d.target_points << " sum=" << d.sum_points
        << " surjective=" << (d.surjective ? "yes" : "no")
        << " witness=" << (d.witness ? d.witness->to_string() : "-") << '\n';
  }
  out << "S={";
  for (std::size_t i = 0; i < report.surjective_at.size(); ++i) out << (i ? "," : "") << report.surjective_at[i];
  out << "}\n";
  out << report.annotation();
  if (report.generating_m) out << " (m=" << *report.generating_m << ")";
  out << '\n';
  return out.str();
}

}  // namespace gitfan
