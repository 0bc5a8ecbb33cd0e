#include "doctest.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gitfan/gitfan.h"

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(GITFAN_SOURCE_DIR) + "/fixtures/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string take(char* s) {
  std::string out = s ? s : "";
  gf_string_free(s);
  return out;
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

struct Handles {
  gf_presentation* p = nullptr;
  gf_orbit_cones* oc = nullptr;
  ~Handles() {
    gf_orbit_cones_free(oc);
    gf_presentation_free(p);
  }
};

}  // namespace

TEST_SUITE("c-api") {
  TEST_CASE("presentation handles") {
    Handles h;
    REQUIRE(gf_presentation_from_document(fixture("four-weights.input").c_str(), &h.p) == GF_OK);
    CHECK(gf_presentation_variable_count(h.p) == 4);
    CHECK(gf_presentation_lattice_rank(h.p) == 2);
    char* out = nullptr;
    REQUIRE(gf_validate(h.p, &out) == GF_OK);
    CHECK(nlohmann::json::parse(take(out))["valid"] == true);
    REQUIRE(gf_weight_cone(h.p, &out) == GF_OK);
    const auto wc = nlohmann::json::parse(take(out));
    CHECK(wc.dump().find("[4,1]") != std::string::npos);
    CHECK(wc.dump().find("[1,3]") != std::string::npos);
  }

  TEST_CASE("status codes") {
    gf_presentation* p = nullptr;
    CHECK(gf_presentation_from_document("{\"weights\": 3}", &p) == GF_ERR_PARSE);
    CHECK(p == nullptr);
    CHECK(std::string(gf_last_error()).rfind("parse-error: ", 0) == 0);
    CHECK(gf_presentation_from_document(nullptr, &p) == GF_ERR_CONTRACT);
    CHECK(gf_presentation_from_document("{}", nullptr) == GF_ERR_CONTRACT);
    CHECK(std::string(gf_status_name(GF_ERR_DIMENSION)) == "dimension-refused");

    Handles bad;
    REQUIRE(gf_presentation_from_document(fixture("inhomogeneous.input").c_str(), &bad.p) == GF_OK);
    char* out = nullptr;
    CHECK(gf_validate(bad.p, &out) == GF_ERR_INVALID);
    CHECK(take(out).find("T1 - T2") != std::string::npos);
    CHECK(gf_orbit_cones_compute(bad.p, 0, &bad.oc) == GF_ERR_INVALID);

    Handles capped;
    REQUIRE(gf_presentation_from_document(fixture("four-weights.input").c_str(), &capped.p) == GF_OK);
    CHECK(gf_orbit_cones_compute(capped.p, 4, &capped.oc) == GF_ERR_SUBSET_CAP);

    Handles wide;
    REQUIRE(gf_presentation_from_document("{\"weights\": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}", &wide.p) ==
            GF_OK);
    REQUIRE(gf_orbit_cones_compute(wide.p, 0, &wide.oc) == GF_OK);
    CHECK(gf_gitfan_document(wide.oc, &out) == GF_ERR_DIMENSION);
  }

  TEST_CASE("fan documents and drawing") {
    Handles h;
    REQUIRE(gf_presentation_from_document(fixture("four-weights.input").c_str(), &h.p) == GF_OK);
    REQUIRE(gf_orbit_cones_compute(h.p, 0, &h.oc) == GF_OK);
    char* out = nullptr;
    REQUIRE(gf_orbit_cones_document(h.oc, &out) == GF_OK);
    CHECK(nlohmann::json::parse(take(out))["orbit_cones"].size() == 11);
    REQUIRE(gf_gitfan_document(h.oc, &out) == GF_OK);
    const auto fan = nlohmann::json::parse(take(out));
    CHECK(fan["cones"].size() == 8);
    CHECK(fan["maximal"].size() == 3);
    CHECK(fan["verified"] == true);
    REQUIRE(gf_gitfan_svg(h.oc, &out) == GF_OK);
    const std::string svg = take(out);
    CHECK(occurrences(svg, "class=\"chamber\"") == 3);
    CHECK(occurrences(svg, "class=\"ray-label\"") == 4);
  }

  TEST_CASE("pairs") {
    Handles h;
    REQUIRE(gf_presentation_from_document(fixture("four-weights.input").c_str(), &h.p) == GF_OK);
    REQUIRE(gf_orbit_cones_compute(h.p, 0, &h.oc) == GF_OK);
    const int64_t u[] = {2, 1};
    const int64_t v[] = {1, 2};
    char* out = nullptr;
    REQUIRE(gf_classify(h.oc, u, v, 2, 12, 0, &out) == GF_OK);
    const auto report = nlohmann::json::parse(take(out));
    CHECK(report["verdict"] == "BoundaryUndetermined");
    CHECK(report.dump().find("[1,0,1,1]") != std::string::npos);

    const int64_t outside[] = {1, 0};
    CHECK(gf_classify(h.oc, outside, v, 2, 12, 0, &out) == GF_ERR_DOMAIN);
    CHECK(gf_classify(h.oc, u, v, 3, 12, 0, &out) == GF_ERR_CONTRACT);
    CHECK(gf_classify(nullptr, u, v, 2, 12, 0, &out) == GF_ERR_CONTRACT);

    const int64_t a[] = {3, 2};
    REQUIRE(gf_oracle_table(h.p, a, u, 2, 12, &out) == GF_OK);
    std::ifstream in(std::string(GITFAN_SOURCE_DIR) + "/tests/golden/oracle_3-2_2-1_N12.txt");
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(take(out) == golden.str());
    REQUIRE(gf_oracle(h.p, a, u, 2, 12, &out) == GF_OK);
    CHECK_FALSE(take(out).empty());

    Handles rel;
    REQUIRE(gf_presentation_from_document(fixture("binomial.input").c_str(), &rel.p) == GF_OK);
    CHECK(gf_oracle(rel.p, u, v, 2, 4, &out) == GF_ERR_UNSUPPORTED);
  }
}
