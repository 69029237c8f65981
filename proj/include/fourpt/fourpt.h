#ifndef FOURPT_H
#define FOURPT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FOURPT_BUILDING)
#    define FOURPT_API __declspec(dllexport)
#  else
#    define FOURPT_API __declspec(dllimport)
#  endif
#else
#  define FOURPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fp_curve fp_curve;
typedef struct fp_front fp_front;

typedef enum fp_status {
    FP_OK = 0,
    FP_ERR_NON_CONVEX,
    FP_ERR_DEGENERATE_SAMPLING,
    FP_ERR_DEGENERATE_PROFILE,
    FP_ERR_NON_UNIFORM_GRID,
    FP_ERR_ALL_BELOW_TOLERANCE,
    FP_ERR_AT_CUSP,
    FP_ERR_NOT_CONTAINED,
    FP_ERR_BAD_PARAMETRIZATION,
    FP_ERR_NOT_IN_HEMISPHERE,
    FP_ERR_NOT_BISECTING,
    FP_ERR_FRENET_BREAKDOWN,
    FP_ERR_NOT_HOROCYCLICALLY_CONVEX,
    FP_ERR_COTH_DOMAIN,
    FP_ERR_INVALID_SPEC,
    FP_ERR_PARSE,
    FP_ERR_SCHEMA,
    FP_ERR_INVALID_ARGUMENT,
    FP_ERR_INTERNAL
} fp_status;

typedef enum fp_geometry { FP_EUCLIDEAN = 0, FP_SPHERICAL = 1, FP_HYPERBOLIC = 2 } fp_geometry;

typedef struct fp_options {
    double tol;          /* pass threshold, <= 0 selects 1e-6 */
    double crossing_tol; /* <= 0 selects 1e-7 times the mean curvature */
    const double* t_grid;
    size_t n_t;          /* 0 selects the default grid */
    int force;           /* hyperbolic collapse on non-convex curves */
} fp_options;

typedef struct fp_curve_info {
    fp_geometry geometry;
    size_t n_samples;
    double length;
    double area;
    double mean_curvature;
    double min_curvature;
    double max_curvature;
} fp_curve_info;

typedef struct fp_front_info {
    double t;
    double signed_length;
    double area;
    size_t cusp_count;
    int regular;
} fp_front_info;

/* Strings returned through char** are owned by the caller and released
 * with fp_string_free. On failure the out pointer is left untouched and
 * fp_last_error describes the problem (per thread). */

FOURPT_API const char* fp_version(void);
FOURPT_API const char* fp_status_name(fp_status s);
FOURPT_API const char* fp_last_error(void);
FOURPT_API void fp_string_free(char* s);

/* n_samples = 0 keeps the value from the document. */
FOURPT_API fp_status fp_curve_from_json(const char* json, size_t n_samples, fp_curve** out);
FOURPT_API fp_status fp_curve_from_file(const char* path, size_t n_samples, fp_curve** out);
FOURPT_API void fp_curve_free(fp_curve* c);
FOURPT_API fp_status fp_curve_info_get(const fp_curve* c, fp_curve_info* out);

FOURPT_API fp_status fp_analyze(const fp_curve* c, const fp_options* opt, char** report_json);
/* all_pass receives 1 when every check passed. */
FOURPT_API fp_status fp_verify(const fp_curve* c, const fp_options* opt, char** report_json, int* all_pass);
FOURPT_API fp_status fp_verify_population(fp_geometry g, size_t count, uint64_t seed, size_t n_samples,
                                          const fp_options* opt, char** report_json, int* all_pass);
FOURPT_API fp_status fp_propagate_report(const fp_curve* c, const double* t, size_t n_t, char** report_json);
FOURPT_API fp_status fp_counterexample(const double* r, size_t n_r, double corner_scale, double flat_deviation,
                                       size_t n_samples, char** report_json, int* all_pass);

/* format: "csv", "json", "svg", "profile_csv" or "spectrum_csv". */
FOURPT_API fp_status fp_curve_export(const fp_curve* c, const char* format, char** text);

FOURPT_API fp_status fp_propagate(const fp_curve* c, double t, fp_front** out);
FOURPT_API void fp_front_free(fp_front* f);
FOURPT_API fp_status fp_front_info_get(const fp_front* f, fp_front_info* out);
/* format: "csv" or "svg". */
FOURPT_API fp_status fp_front_export(const fp_front* f, const char* format, char** text);

#ifdef __cplusplus
}
#endif

#endif
