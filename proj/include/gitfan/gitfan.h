#ifndef GITFAN_GITFAN_H
#define GITFAN_GITFAN_H

/*
 * C interface to the GIT-fan library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a gf_status; on failure gf_last_error() holds a
 * one-line reason of the form "<kind>: <message>" for the calling thread.
 * Strings handed out through char** parameters are NUL-terminated, owned by
 * the caller and released with gf_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GF_API __declspec(dllexport)
#else
#define GF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf_status {
  GF_OK = 0,
  GF_ERR_PARSE = 3,
  GF_ERR_INVALID = 4,
  GF_ERR_DIMENSION = 5,
  GF_ERR_UNBOUNDED = 6,
  GF_ERR_SUBSET_CAP = 7,
  GF_ERR_DOMAIN = 8,
  GF_ERR_UNSUPPORTED = 9,
  GF_ERR_CONTRACT = 10,
  GF_ERR_INTERNAL = 11,
  GF_ERR_OUT_OF_MEMORY = 12
} gf_status;

typedef struct gf_presentation gf_presentation;
typedef struct gf_orbit_cones gf_orbit_cones;

GF_API const char* gf_status_name(gf_status status);
GF_API const char* gf_last_error(void);
GF_API void gf_string_free(char* s);

/* Presentation documents: {"variables": [...], "weights": [[...]], "relations": [...]} */
GF_API gf_status gf_presentation_from_document(const char* text, gf_presentation** out);
GF_API void gf_presentation_free(gf_presentation* p);
GF_API size_t gf_presentation_variable_count(const gf_presentation* p);
GF_API size_t gf_presentation_lattice_rank(const gf_presentation* p);

/* Writes the validation report. Returns GF_ERR_INVALID (report still written) when invalid. */
GF_API gf_status gf_validate(const gf_presentation* p, char** json_out);
GF_API gf_status gf_weight_cone(const gf_presentation* p, char** json_out);

/* Orbit cones of a valid presentation; the handle keeps its own copy of p.
 * A subset_cap of 0 selects the default of 2^20 subsets. */
GF_API gf_status gf_orbit_cones_compute(const gf_presentation* p, uint64_t subset_cap, gf_orbit_cones** out);
GF_API void gf_orbit_cones_free(gf_orbit_cones* oc);
GF_API gf_status gf_orbit_cones_document(const gf_orbit_cones* oc, char** json_out);

/* Full GIT-fan (lattice rank <= 3) as JSON, or as an SVG drawing (rank 2). */
GF_API gf_status gf_gitfan_document(const gf_orbit_cones* oc, char** json_out);
GF_API gf_status gf_gitfan_svg(const gf_orbit_cones* oc, char** svg_out);

/*
 * Pair report for weights u, v of length `len` (the lattice rank). The oracle
 * scan up to `bound` is attached for undecided verdicts, or always when
 * force_oracle is nonzero.
 */
GF_API gf_status gf_classify(const gf_orbit_cones* oc, const int64_t* u, const int64_t* v, size_t len,
                             unsigned bound, int force_oracle, char** json_out);

/* Lattice-point scan n = 1..bound for a relation-free presentation. */
GF_API gf_status gf_oracle(const gf_presentation* p, const int64_t* u, const int64_t* v, size_t len, unsigned bound,
                           char** json_out);

/* Same scan rendered as the plain-text degree table. */
GF_API gf_status gf_oracle_table(const gf_presentation* p, const int64_t* u, const int64_t* v, size_t len,
                                 unsigned bound, char** text_out);

#ifdef __cplusplus
}
#endif

#endif /* GITFAN_GITFAN_H */
