#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "error.hpp"
#include "fiber_oracle.hpp"
#include "support.hpp"

using namespace gitfan;
using namespace gitfan::testing;

namespace {

// Every a in the box a_i <= total / min_entry(w_i) with Q a = u.
std::vector<IntVector> box_fiber(const std::vector<IntVector>& w, const IntVector& u) {
  std::vector<long> bound;
  long total = 0;
  for (std::size_t k = 0; k < u.size(); ++k) total += u[k].get_si();
  for (const auto& col : w) {
    long m = col[0].get_si();
    for (std::size_t k = 1; k < col.size(); ++k) m = std::min(m, col[k].get_si());
    bound.push_back(total / m);
  }
  std::vector<IntVector> out;
  IntVector a(w.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      IntVector s(u.size());
      for (std::size_t j = 0; j < w.size(); ++j) s += a[j] * w[j];
      if (s == u) out.push_back(a);
      return;
    }
    for (long x = 0; x <= bound[i]; ++x) {
      a[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(GITFAN_SOURCE_DIR) + "/tests/golden/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("fiber-oracle") {
  TEST_CASE("fiber examples") {
    const auto w = four_weights().weights();
    CHECK(fiber_lattice_points(w, iv({4, 2})).points == std::vector<IntVector>{iv({0, 2, 0, 0})});
    CHECK(fiber_lattice_points(w, iv({2, 4})).points == std::vector<IntVector>{iv({0, 0, 2, 0})});
    CHECK(fiber_lattice_points(w, iv({6, 6})).points == std::vector<IntVector>{iv({0, 2, 2, 0}), iv({1, 0, 1, 1})});
    CHECK(fiber_lattice_points(w, iv({0, 0})).points == std::vector<IntVector>{iv({0, 0, 0, 0})});
    CHECK(fiber_lattice_points(w, iv({1, 1})).points.empty());
    CHECK_THROWS_AS(FiberEnumerator({iv({1}), iv({-1})}), Error);
  }

  TEST_CASE("minkowski_sum") {
    CHECK(minkowski_sum({iv({1, 0}), iv({0, 1})}, {iv({1, 0}), iv({0, 1})}) ==
          std::vector<IntVector>{iv({0, 2}), iv({1, 1}), iv({2, 0})});
    CHECK(minkowski_sum({}, {iv({1})}).empty());
    CHECK(minkowski_sum({iv({3})}, {iv({0})}) == std::vector<IntVector>{iv({3})});
  }

  TEST_CASE("surjectivity_check") {
    const auto p = four_weights();
    const auto one = surjectivity_check(p, iv({2, 1}), iv({1, 2}), 1);
    CHECK(one.surjective);
    CHECK(one.target_points == 1);
    const auto two = surjectivity_check(p, iv({2, 1}), iv({1, 2}), 2);
    CHECK_FALSE(two.surjective);
    REQUIRE(two.witness);
    CHECK(*two.witness == iv({1, 0, 1, 1}));
    for (unsigned n = 1; n <= 5; ++n) CHECK(surjectivity_check(p, iv({5, 4}), iv({0, 0}), n).surjective);
    for (unsigned n = 1; n <= 3; ++n) CHECK(surjectivity_check(p, iv({2, 1}), iv({2, 1}), n).surjective);
    // Degree (16,8) has a second monomial that is not a product from degree (8,4).
    const auto diag = surjectivity_check(p, iv({2, 1}), iv({2, 1}), 4);
    CHECK_FALSE(diag.surjective);
    CHECK(diag.witness == iv({3, 1, 2, 0}));
    CHECK_THROWS_AS(surjectivity_check(binomial(), iv({1, 1}), iv({1, 1}), 1), Error);
    try {
      surjectivity_check(binomial(), iv({1, 1}), iv({1, 1}), 1);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Unsupported);
    }
    CHECK_THROWS_AS(surjectivity_check(relation_free({iv({1}), iv({-1})}), iv({1}), iv({1}), 1), Error);
  }

  TEST_CASE("oracle_scan on the boundary pair") {
    const auto report = oracle_scan(four_weights(), iv({2, 1}), iv({1, 2}), 12);
    CHECK(report.surjective_at == std::vector<unsigned>{1});
    CHECK_FALSE(report.generating_m);
    CHECK(report.annotation() == "evidence: not generating up to bound");
    for (const auto& d : report.degrees) {
      if (d.n < 2) continue;
      REQUIRE(d.witness);
      const long n = d.n;
      CHECK(*d.witness == iv({1, n - 2, n - 1, 1}));
    }
    CHECK(oracle_table(report) == read_golden("oracle_2-1_1-2_N12.txt"));
  }

  TEST_CASE("golden table for (3,2),(2,1)") {
    const auto report = oracle_scan(four_weights(), iv({3, 2}), iv({2, 1}), 12);
    CHECK(oracle_table(report) == read_golden("oracle_3-2_2-1_N12.txt"));
    CHECK(report.generating_m == 7U);
    CHECK(oracle_table(report) == oracle_table(oracle_scan(four_weights(), iv({3, 2}), iv({2, 1}), 12)));
  }

  TEST_CASE("property: enumeration matches a full box up to total degree 8") {
    const auto w = four_weights().weights();
    for (long a = 0; a <= 8; ++a) {
      for (long b = 0; a + b <= 8; ++b) {
        const IntVector u = iv({a, b});
        CHECK(fiber_lattice_points(w, u).points == box_fiber(w, u));
      }
    }
  }

  TEST_CASE("property: Minkowski sums stay in the target fiber and witnesses are genuine") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 2 + rng() % 3;
      std::vector<IntVector> w;
      for (std::size_t i = 0; i < r; ++i) w.push_back(random_vector(rng, 2, 1, 4));
      const IntVector u = random_cone_point(rng, w, 2);
      const IntVector v = random_cone_point(rng, w, 2);
      for (unsigned n = 1; n <= 3; ++n) {
        const Integer k(n);
        const auto fu = fiber_lattice_points(w, k * u).points;
        const auto fv = fiber_lattice_points(w, k * v).points;
        const auto target = fiber_lattice_points(w, k * (u + v)).points;
        const std::set<IntVector> tset(target.begin(), target.end());
        const auto sum = minkowski_sum(fu, fv);
        for (const auto& s : sum) CHECK(tset.count(s) == 1);
        const auto outcome = surjectivity_check(relation_free(w), u, v, n);
        CHECK(outcome.surjective == (sum.size() == target.size()));
        if (outcome.witness) {
          CHECK(tset.count(*outcome.witness) == 1);
          CHECK_FALSE(std::binary_search(sum.begin(), sum.end(), *outcome.witness));
        }
      }
    }
  }
}
