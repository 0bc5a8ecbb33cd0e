#include "gitfan/gitfan.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "fiber_oracle.hpp"
#include "git_fan.hpp"
#include "orbit_cones.hpp"
#include "pair_classifier.hpp"
#include "presentation.hpp"
#include "report.hpp"

struct gf_presentation {
  gitfan::GradedPresentation value;
};

struct gf_orbit_cones {
  gitfan::GradedPresentation presentation;
  gitfan::OrbitConeSet value;
};

namespace {

thread_local std::string last_error;

gf_status status_of(gitfan::ErrorKind kind) {
  using gitfan::ErrorKind;
  switch (kind) {
    case ErrorKind::Contract: return GF_ERR_CONTRACT;
    case ErrorKind::Parse: return GF_ERR_PARSE;
    case ErrorKind::Invalid: return GF_ERR_INVALID;
    case ErrorKind::Dimension: return GF_ERR_DIMENSION;
    case ErrorKind::Unbounded: return GF_ERR_UNBOUNDED;
    case ErrorKind::SubsetCap: return GF_ERR_SUBSET_CAP;
    case ErrorKind::Domain: return GF_ERR_DOMAIN;
    case ErrorKind::Unsupported: return GF_ERR_UNSUPPORTED;
    case ErrorKind::Internal: return GF_ERR_INTERNAL;
  }
  return GF_ERR_INTERNAL;
}

gf_status fail(gf_status status, const std::string& message) {
  last_error = std::string(gf_status_name(status)) + ": " + message;
  return status;
}

template <typename F>
gf_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const gitfan::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GF_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(GF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GF_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* ptr, const char* name) {
  if (!ptr) throw gitfan::Error(gitfan::ErrorKind::Contract, std::string(name) + " is null");
}

gitfan::IntVector to_vector(const int64_t* data, size_t len) {
  gitfan::IntVector v(len);
  for (size_t i = 0; i < len; ++i) v[i] = gitfan::Integer(std::to_string(data[i]));
  return v;
}

}  // namespace

extern "C" {

const char* gf_status_name(gf_status status) {
  switch (status) {
    case GF_OK: return "ok";
    case GF_ERR_PARSE: return gitfan::error_kind_name(gitfan::ErrorKind::Parse);
    case GF_ERR_INVALID: return gitfan::error_kind_name(gitfan::ErrorKind::Invalid);
    case GF_ERR_DIMENSION: return gitfan::error_kind_name(gitfan::ErrorKind::Dimension);
    case GF_ERR_UNBOUNDED: return gitfan::error_kind_name(gitfan::ErrorKind::Unbounded);
    case GF_ERR_SUBSET_CAP: return gitfan::error_kind_name(gitfan::ErrorKind::SubsetCap);
    case GF_ERR_DOMAIN: return gitfan::error_kind_name(gitfan::ErrorKind::Domain);
    case GF_ERR_UNSUPPORTED: return gitfan::error_kind_name(gitfan::ErrorKind::Unsupported);
    case GF_ERR_CONTRACT: return gitfan::error_kind_name(gitfan::ErrorKind::Contract);
    case GF_ERR_INTERNAL: return gitfan::error_kind_name(gitfan::ErrorKind::Internal);
    case GF_ERR_OUT_OF_MEMORY: return "out-of-memory";
  }
  return "unknown";
}

const char* gf_last_error(void) { return last_error.c_str(); }

void gf_string_free(char* s) { std::free(s); }

gf_status gf_presentation_from_document(const char* text, gf_presentation** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new gf_presentation{gitfan::GradedPresentation::from_document(text)};
    return GF_OK;
  });
}

void gf_presentation_free(gf_presentation* p) { delete p; }

size_t gf_presentation_variable_count(const gf_presentation* p) { return p ? p->value.variable_count() : 0; }

size_t gf_presentation_lattice_rank(const gf_presentation* p) { return p ? p->value.lattice_rank() : 0; }

gf_status gf_validate(const gf_presentation* p, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    require(json_out, "json_out");
    const auto report = gitfan::validate(p->value);
    *json_out = copy_out(gitfan::dump(gitfan::validation_json(p->value, report)));
    if (!report.valid) return fail(GF_ERR_INVALID, report.problems.front());
    return GF_OK;
  });
}

gf_status gf_weight_cone(const gf_presentation* p, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    require(json_out, "json_out");
    gitfan::require_valid(p->value);
    *json_out = copy_out(gitfan::dump(gitfan::weight_cone_json(p->value)));
    return GF_OK;
  });
}

gf_status gf_orbit_cones_compute(const gf_presentation* p, uint64_t subset_cap, gf_orbit_cones** out) {
  return guarded([&] {
    require(p, "presentation");
    require(out, "out");
    gitfan::require_valid(p->value);
    gitfan::OrbitConeOptions options;
    if (subset_cap != 0) options.subset_cap = subset_cap;
    *out = new gf_orbit_cones{p->value, gitfan::enumerate_orbit_cones(p->value, options)};
    return GF_OK;
  });
}

void gf_orbit_cones_free(gf_orbit_cones* oc) { delete oc; }

gf_status gf_orbit_cones_document(const gf_orbit_cones* oc, char** json_out) {
  return guarded([&] {
    require(oc, "orbit cones");
    require(json_out, "json_out");
    *json_out = copy_out(gitfan::dump(gitfan::orbit_cones_json(oc->presentation, oc->value)));
    return GF_OK;
  });
}

gf_status gf_gitfan_document(const gf_orbit_cones* oc, char** json_out) {
  return guarded([&] {
    require(oc, "orbit cones");
    require(json_out, "json_out");
    *json_out = copy_out(gitfan::dump(gitfan::fan_json(gitfan::enumerate_gitfan(oc->value))));
    return GF_OK;
  });
}

gf_status gf_gitfan_svg(const gf_orbit_cones* oc, char** svg_out) {
  return guarded([&] {
    require(oc, "orbit cones");
    require(svg_out, "svg_out");
    if (oc->value.ambient_dim() != 2) {
      throw gitfan::Error(gitfan::ErrorKind::Dimension,
                          "plot needs lattice rank 2, got " + std::to_string(oc->value.ambient_dim()));
    }
    *svg_out = copy_out(gitfan::fan_svg(gitfan::enumerate_gitfan(oc->value)));
    return GF_OK;
  });
}

gf_status gf_classify(const gf_orbit_cones* oc, const int64_t* u, const int64_t* v, size_t len, unsigned bound,
                      int force_oracle, char** json_out) {
  return guarded([&] {
    require(oc, "orbit cones");
    require(u, "u");
    require(v, "v");
    require(json_out, "json_out");
    if (len != oc->value.ambient_dim()) {
      throw gitfan::Error(gitfan::ErrorKind::Contract, "weights have length " + std::to_string(len) +
                                                           ", lattice rank is " +
                                                           std::to_string(oc->value.ambient_dim()));
    }
    gitfan::ReportOptions options;
    options.oracle_bound = bound;
    options.force_oracle = force_oracle != 0;
    const auto report =
        gitfan::full_report(to_vector(u, len), to_vector(v, len), oc->presentation, oc->value, options);
    *json_out = copy_out(gitfan::dump(gitfan::pair_report_json(report, oc->value)));
    return GF_OK;
  });
}

namespace {

gitfan::OracleReport run_oracle(const gf_presentation* p, const int64_t* u, const int64_t* v, size_t len,
                                unsigned bound) {
  require(p, "presentation");
  require(u, "u");
  require(v, "v");
  gitfan::require_valid(p->value);
  if (len != p->value.lattice_rank()) {
    throw gitfan::Error(gitfan::ErrorKind::Contract, "weights have length " + std::to_string(len) +
                                                         ", lattice rank is " +
                                                         std::to_string(p->value.lattice_rank()));
  }
  return gitfan::oracle_scan(p->value, to_vector(u, len), to_vector(v, len), bound);
}

}  // namespace

gf_status gf_oracle(const gf_presentation* p, const int64_t* u, const int64_t* v, size_t len, unsigned bound,
                    char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    auto doc = gitfan::oracle_json(run_oracle(p, u, v, len, bound));
    gitfan::Document out;
    out["command"] = "oracle";
    out["presentation_digest"] = p->value.digest();
    for (auto& [key, value] : doc.items()) out[key] = value;
    *json_out = copy_out(gitfan::dump(out));
    return GF_OK;
  });
}

gf_status gf_oracle_table(const gf_presentation* p, const int64_t* u, const int64_t* v, size_t len, unsigned bound,
                          char** text_out) {
  return guarded([&] {
    require(text_out, "text_out");
    *text_out = copy_out(gitfan::oracle_table(run_oracle(p, u, v, len, bound)));
    return GF_OK;
  });
}

}  // extern "C"
