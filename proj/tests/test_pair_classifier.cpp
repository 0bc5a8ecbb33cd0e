#include "doctest.h"

#include <random>

#include "pair_classifier.hpp"
#include "support.hpp"

using namespace gitfan;
using namespace gitfan::testing;

TEST_SUITE("pair-classifier") {
  TEST_CASE("examples") {
    const auto oc = enumerate_orbit_cones(four_weights());
    const auto a = classify_pair(iv({2, 1}), iv({1, 2}), oc);
    CHECK(a.verdict == Verdict::BoundaryUndetermined);
    REQUIRE(a.common_cone);
    CHECK(*a.common_cone == cone2({iv({2, 1}), iv({1, 2})}));
    CHECK_FALSE(a.u_interior);
    CHECK_FALSE(a.v_interior);

    const auto b = classify_pair(iv({3, 2}), iv({2, 1}), oc);
    CHECK(b.verdict == Verdict::Generating);
    CHECK(b.u_interior);
    CHECK_FALSE(b.v_interior);

    const auto c = classify_pair(iv({4, 1}), iv({1, 3}), oc);
    CHECK(c.verdict == Verdict::NotGenerating);
    CHECK_FALSE(c.common_cone);
    CHECK_FALSE(c.failing_orbit_cones.empty());
    CHECK(std::string(verdict_name(c.verdict)) == "NotGenerating");
  }

  TEST_CASE("full_report") {
    const auto p = four_weights();
    const auto a = full_report(iv({2, 1}), iv({1, 2}), p);
    REQUIRE(a.oracle);
    CHECK(a.oracle->degrees.size() == 12);
    for (const auto& d : a.oracle->degrees) CHECK(d.surjective == (d.n == 1));
    CHECK(a.classification.verdict == Verdict::BoundaryUndetermined);
    CHECK(a.presentation_digest == p.digest());

    const auto b = full_report(iv({3, 2}), iv({2, 1}), p);
    CHECK_FALSE(b.oracle);
    ReportOptions forced;
    forced.force_oracle = true;
    const auto c = full_report(iv({3, 2}), iv({2, 1}), p, forced);
    REQUIRE(c.oracle);
    CHECK(c.oracle->generating_m.has_value());
    CHECK(c.classification.verdict == Verdict::Generating);

    const auto d = full_report(iv({1, 1}), iv({1, 1}), binomial(), forced);
    CHECK_FALSE(d.oracle);
    CHECK(d.oracle_unavailable.has_value());
  }

  TEST_CASE("property: symmetry, diagonal and scaling") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 2 + rng() % 4;
      std::vector<IntVector> w;
      for (std::size_t i = 0; i < r; ++i) w.push_back(random_vector(rng, 2, 1, 5));
      const auto oc = enumerate_orbit_cones(relation_free(w));
      for (int k = 0; k < 8; ++k) {
        const IntVector u = random_cone_point(rng, w, 3);
        const IntVector v = random_cone_point(rng, w, 3);
        const auto uv = classify_pair(u, v, oc);
        const auto vu = classify_pair(v, u, oc);
        CHECK(uv.verdict == vu.verdict);
        CHECK(uv.u_interior == vu.v_interior);
        CHECK(classify_pair(u, u, oc).verdict != Verdict::NotGenerating);
        for (long s = 1; s <= 3; ++s)
          CHECK(classify_pair(Integer(s) * u, Integer(s) * v, oc).verdict == uv.verdict);
      }
    }
  }
}
