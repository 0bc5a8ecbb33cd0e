#pragma once

#include <random>
#include <string>
#include <vector>

#include "cone.hpp"
#include "presentation.hpp"

namespace gitfan::testing {

inline IntVector iv(std::initializer_list<long> xs) { return IntVector(xs); }

inline Cone cone_of(std::initializer_list<IntVector> gens) {
  const std::size_t d = gens.size() ? gens.begin()->size() : 0;
  return Cone::from_generators(d, std::vector<IntVector>(gens));
}

inline Cone cone2(std::initializer_list<IntVector> gens) {
  return Cone::from_generators(2, std::vector<IntVector>(gens));
}

/// Weights (4,1), (2,1), (1,2), (1,3), no relations.
inline GradedPresentation four_weights() {
  return GradedPresentation({}, {iv({4, 1}), iv({2, 1}), iv({1, 2}), iv({1, 3})}, {});
}

/// Weights (1,0), (1,1), (0,1), (0,2) with relation T1*T4 - T2*T3.
inline GradedPresentation binomial() {
  const auto names = Polynomial::default_names(4);
  return GradedPresentation({}, {iv({1, 0}), iv({1, 1}), iv({0, 1}), iv({0, 2})},
                            {Polynomial::parse("T1*T4 - T2*T3", names)});
}

inline GradedPresentation relation_free(std::vector<IntVector> weights) {
  return GradedPresentation({}, std::move(weights), {});
}

inline IntVector random_vector(std::mt19937& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

/// Random nonnegative integer combination of the columns: a lattice point of the weight cone.
inline IntVector random_cone_point(std::mt19937& rng, const std::vector<IntVector>& weights, long max_coeff) {
  std::uniform_int_distribution<long> dist(0, max_coeff);
  IntVector p(weights.front().size());
  for (const auto& w : weights) p += Integer(dist(rng)) * w;
  return p;
}

}  // namespace gitfan::testing
