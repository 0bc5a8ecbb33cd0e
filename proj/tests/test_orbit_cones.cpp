#include "doctest.h"

#include <random>

#include "error.hpp"
#include "orbit_cones.hpp"
#include "support.hpp"

using namespace gitfan;
using namespace gitfan::testing;

namespace {

// Brute force for relation-free presentations: every subset is relevant, so
// the orbit cones are all subset cones, deduplicated by mutual containment.
std::vector<Cone> all_subset_cones(const std::vector<IntVector>& w) {
  std::vector<Cone> out;
  const std::size_t r = w.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1U) gens.push_back(w[i]);
    Cone c = Cone::from_generators(w.front().size(), gens);
    bool fresh = true;
    for (const auto& o : out) fresh &= !cones_equal(o, c);
    if (fresh) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_SUITE("orbit-cones") {
  TEST_CASE("relevant_subset on the four-weight ring: everything is relevant") {
    const auto p = four_weights();
    for (std::size_t mask = 0; mask < 16; ++mask) {
      std::vector<bool> s(4);
      for (std::size_t i = 0; i < 4; ++i) s[i] = mask >> i & 1U;
      CHECK(relevant_subset(s, p));
    }
  }

  TEST_CASE("relevant_subset with the binomial relation") {
    const auto p = binomial();
    CHECK_FALSE(relevant_subset(IndexSet{0, 3}, p));
    CHECK_FALSE(relevant_subset(IndexSet{1, 2}, p));
    CHECK(relevant_subset(IndexSet{0, 1}, p));
    CHECK(relevant_subset(IndexSet{}, p));
    CHECK(relevant_subset(IndexSet{0, 1, 2, 3}, p));
    CHECK_THROWS_AS(relevant_subset(IndexSet{7}, p), Error);
  }

  TEST_CASE("enumerate_orbit_cones: four weights gives 11 cones") {
    const auto oc = enumerate_orbit_cones(four_weights());
    CHECK(oc.relevant_subset_count == 16);
    REQUIRE(oc.cones.size() == 11);
    CHECK(oc.cones.size() == all_subset_cones(four_weights().weights()).size());
    CHECK(oc.cones[0] == Cone::zero(2));
    for (std::size_t k = 1; k <= 4; ++k) CHECK(oc.cones[k].dim() == 1);
    for (std::size_t k = 5; k < 11; ++k) CHECK(oc.cones[k].dim() == 2);
    // cone(w1, w4) is the whole weight cone; the four-element subset lands there too.
    bool found = false;
    for (std::size_t k = 0; k < oc.cones.size(); ++k) {
      if (oc.cones[k] != oc.weight_cone) continue;
      found = true;
      CHECK(std::find(oc.witnesses[k].begin(), oc.witnesses[k].end(), IndexSet{0, 1, 2, 3}) != oc.witnesses[k].end());
      CHECK(oc.witnesses[k].front() == IndexSet{0, 3});
    }
    CHECK(found);
  }

  TEST_CASE("enumerate_orbit_cones: single variable") {
    const auto oc = enumerate_orbit_cones(relation_free({iv({1})}));
    REQUIRE(oc.cones.size() == 2);
    CHECK(oc.cones[0] == Cone::zero(1));
    CHECK(oc.cones[1] == Cone::from_generators(1, {iv({1})}));
  }

  TEST_CASE("enumerate_orbit_cones: binomial relation excludes {1,4} and {2,3}") {
    const auto oc = enumerate_orbit_cones(binomial());
    for (const auto& ws : oc.witnesses) {
      for (const auto& s : ws) {
        CHECK(s != IndexSet{0, 3});
        CHECK(s != IndexSet{1, 2});
      }
    }
    // A proper superset of exactly one binomial term support kills the other term.
    CHECK(oc.relevant_subset_count == 10);
    CHECK_FALSE(relevant_subset(IndexSet{0, 1, 3}, binomial()));
    CHECK_FALSE(relevant_subset(IndexSet{0, 1, 2}, binomial()));
  }

  TEST_CASE("subset cap") {
    OrbitConeOptions options;
    options.subset_cap = 8;
    try {
      enumerate_orbit_cones(four_weights(), options);
      FAIL("expected a refusal");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SubsetCap);
    }
    options.subset_cap = 16;
    CHECK(enumerate_orbit_cones(four_weights(), options).cones.size() == 11);
  }

  TEST_CASE("property: relation-free counts, monotonicity, containment in the weight cone") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t d = 1 + rng() % 3;
      const std::size_t r = 1 + rng() % 5;
      std::vector<IntVector> w;
      for (std::size_t i = 0; i < r; ++i) w.push_back(random_vector(rng, d, -2, 3));
      const auto p = relation_free(w);
      const auto oc = enumerate_orbit_cones(p);
      CHECK(oc.relevant_subset_count == (std::size_t{1} << r));
      CHECK(oc.cones.size() == all_subset_cones(w).size());
      for (std::size_t k = 0; k < oc.cones.size(); ++k) {
        CHECK(is_subcone(oc.cones[k], oc.weight_cone));
        for (const auto& s : oc.witnesses[k]) {
          std::vector<IntVector> gens;
          for (auto i : s) gens.push_back(w[i]);
          CHECK(Cone::from_generators(d, gens) == oc.cones[k]);
        }
      }
      // The full index set is relevant, so the weight cone is an orbit cone.
      CHECK(std::find(oc.cones.begin(), oc.cones.end(), oc.weight_cone) != oc.cones.end());
    }
  }

  TEST_CASE("property: monotone cone map on relevant subsets with relations") {
    const auto p = binomial();
    RelevanceTester tester(p);
    std::vector<std::pair<std::size_t, Cone>> relevant;
    for (std::size_t mask = 0; mask < 16; ++mask) {
      std::vector<bool> s(4);
      std::vector<IntVector> gens;
      for (std::size_t i = 0; i < 4; ++i) {
        s[i] = mask >> i & 1U;
        if (s[i]) gens.push_back(p.weights()[i]);
      }
      if (tester.relevant(s)) relevant.emplace_back(mask, Cone::from_generators(2, gens));
    }
    for (const auto& [a, ca] : relevant)
      for (const auto& [b, cb] : relevant)
        if ((a & b) == a) CHECK(is_subcone(ca, cb));
  }
}
