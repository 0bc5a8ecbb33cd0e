#include "doctest.h"

#include <random>

#include "error.hpp"
#include "git_fan.hpp"
#include "support.hpp"

using namespace gitfan;
using namespace gitfan::testing;

namespace {

bool implication_holds(const IntVector& u, const IntVector& v, const OrbitConeSet& oc) {
  const IntVector s = u + v;
  for (const auto& omega : oc.cones)
    if (omega.contains(s) && !(omega.contains(u) && omega.contains(v))) return false;
  return true;
}

std::size_t count_dim(const GITFan& fan, std::size_t dim) {
  return std::count_if(fan.cones.begin(), fan.cones.end(), [&](const Cone& c) { return c.dim() == dim; });
}

}  // namespace

TEST_SUITE("git-fan") {
  TEST_CASE("git_cone examples") {
    const auto oc = enumerate_orbit_cones(four_weights());
    CHECK(git_cone(iv({3, 2}), oc) == cone2({iv({2, 1}), iv({1, 2})}));
    CHECK(git_cone(iv({2, 1}), oc) == cone2({iv({2, 1})}));
    CHECK(git_cone(iv({4, 1}), oc) == cone2({iv({4, 1})}));
    CHECK(git_cone(iv({0, 0}), oc) == Cone::zero(2));
    CHECK(git_cone(iv({6, 2}), oc) == cone2({iv({4, 1}), iv({2, 1})}));
    CHECK_THROWS_AS(git_cone(iv({1, 0}), oc), Error);
    CHECK_THROWS_AS(git_cone(iv({-1, -1}), oc), Error);
  }

  TEST_CASE("enumerate_gitfan: four weights") {
    const auto fan = enumerate_gitfan(enumerate_orbit_cones(four_weights()));
    CHECK(fan.cones.size() == 8);
    CHECK(count_dim(fan, 0) == 1);
    CHECK(count_dim(fan, 1) == 4);
    CHECK(count_dim(fan, 2) == 3);
    std::vector<Cone> maximal;
    for (auto k : fan.maximal) maximal.push_back(fan.cones[k]);
    std::vector<Cone> expected{cone2({iv({4, 1}), iv({2, 1})}), cone2({iv({2, 1}), iv({1, 2})}),
                               cone2({iv({1, 2}), iv({1, 3})})};
    CHECK(maximal.size() == 3);
    for (const auto& e : expected) CHECK(std::find(maximal.begin(), maximal.end(), e) != maximal.end());
    CHECK(verify_fan(fan).ok);
  }

  TEST_CASE("enumerate_gitfan: small systems") {
    const auto ray = enumerate_gitfan(enumerate_orbit_cones(relation_free({iv({1})})));
    CHECK(ray.cones.size() == 2);
    const auto quadrant = enumerate_gitfan(enumerate_orbit_cones(relation_free({iv({1, 0}), iv({0, 1})})));
    const auto q = cone2({iv({1, 0}), iv({0, 1})});
    CHECK(quadrant.cones.size() == 4);
    for (const auto& f : faces(q)) CHECK(std::find(quadrant.cones.begin(), quadrant.cones.end(), f) != quadrant.cones.end());
    CHECK_THROWS_AS(enumerate_gitfan(enumerate_orbit_cones(relation_free({iv({1, 0, 0, 0}), iv({0, 1, 0, 0}),
                                                                         iv({0, 0, 1, 0}), iv({0, 0, 0, 1})}))),
                    Error);
  }

  TEST_CASE("enumerate_gitfan: binomial relation") {
    const auto oc = enumerate_orbit_cones(binomial());
    const auto fan = enumerate_gitfan(oc);
    CHECK(verify_fan(fan).ok);
    for (const auto& c : fan.cones) CHECK(git_cone(c.relative_interior_point(), oc) == c);
  }

  TEST_CASE("verify_fan") {
    const auto wc = cone2({iv({1, 0}), iv({0, 1})});
    // Literal collection: these two cones only meet in the origin.
    const auto literal = make_fan(wc, close_under_faces({cone2({iv({1, 0}), iv({1, 1})}), cone2({iv({1, 2}), iv({0, 1})})}));
    CHECK_FALSE(verify_fan(literal).ok);  // does not cover the quadrant
    const auto overlapping =
        make_fan(wc, close_under_faces({cone2({iv({1, 0}), iv({1, 2})}), cone2({iv({1, 1}), iv({0, 1})})}));
    const auto check = verify_fan(overlapping);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.diagnostics.empty());
    CHECK(verify_fan(make_fan(wc, faces(wc))).ok);
    // Missing a face.
    CHECK_FALSE(verify_fan(make_fan(wc, {wc})).ok);
  }

  TEST_CASE("common_git_cone") {
    const auto oc = enumerate_orbit_cones(four_weights());
    const auto a = common_git_cone(iv({2, 1}), iv({1, 2}), oc);
    REQUIRE(a.cone);
    CHECK(*a.cone == cone2({iv({2, 1}), iv({1, 2})}));
    const auto b = common_git_cone(iv({4, 1}), iv({1, 3}), oc);
    CHECK_FALSE(b.cone);
    bool listed = false;
    for (auto k : b.failing) listed |= oc.cones[k] == cone2({iv({2, 1}), iv({1, 2})});
    CHECK(listed);
    for (const auto& u : {iv({3, 2}), iv({4, 1}), iv({7, 5})}) {
      const auto c = common_git_cone(u, u, oc);
      REQUIRE(c.cone);
      CHECK(*c.cone == git_cone(u + u, oc));
    }
    CHECK_THROWS_AS(common_git_cone(iv({1, 0}), iv({1, 1}), oc), Error);
  }

  TEST_CASE("property: fan invariants on random relation-free systems") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t d = 2 + rng() % 2;
      const std::size_t r = 2 + rng() % 3;
      std::vector<IntVector> w;
      for (std::size_t i = 0; i < r; ++i) w.push_back(random_vector(rng, d, 0, 4));
      if (std::all_of(w.begin(), w.end(), [](const IntVector& x) { return x == IntVector(x.size()); })) continue;
      const auto oc = enumerate_orbit_cones(relation_free(w));
      const auto fan = enumerate_gitfan(oc);
      CHECK(verify_fan(fan).ok);
      for (const auto& c : fan.cones) CHECK(git_cone(c.relative_interior_point(), oc) == c);
      for (int k = 0; k < 10; ++k) {
        const IntVector u = random_cone_point(rng, w, 3);
        const IntVector v = random_cone_point(rng, w, 3);
        const Cone gu = git_cone(u, oc);
        for (const auto& tau : fan.cones)
          if (tau.contains(u)) CHECK(is_subcone(gu, tau));
        const bool a = common_git_cone(u, v, oc).cone.has_value();
        const bool b = shared_fan_member(u, v, fan).has_value();
        CHECK(a == b);
        CHECK(a == implication_holds(u, v, oc));
        const bool same_cell = gu == git_cone(v, oc);
        CHECK(same_cell == (orbit_cones_containing(u, oc) == orbit_cones_containing(v, oc)));
      }
    }
  }
}
