#ifndef HYPMORSE_H
#define HYPMORSE_H

/* C interface to the hyperbolic magnetic and Morse kernel library.
 *
 * Every call that can fail returns an hm_status. The message of the last
 * failure on a context is available from hm_last_error until the next call
 * on that context. Contexts are not thread-safe; use one per thread. */

#include <stddef.h>

#if defined(HM_BUILDING_LIBRARY)
#define HM_API __attribute__((visibility("default")))
#else
#define HM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hm_status {
    HM_OK = 0,
    HM_INVALID_ARGUMENT = 1,
    HM_DOMAIN = 2,
    HM_POLE = 3,
    HM_NON_CONVERGENCE = 4,
    HM_TAIL_DIVERGENCE = 5,
    HM_CONVERGENCE_VIOLATED = 6,
    HM_OUTSIDE_SUPPORT = 7,
    HM_UNSUPPORTED = 8,
    HM_CALIBRATION = 9,
    HM_IO = 10,
    HM_INTERNAL = 99
} hm_status;

HM_API const char* hm_status_name(hm_status s);

typedef struct hm_context hm_context;
typedef struct hm_report hm_report;

HM_API hm_status hm_context_create(hm_context** out);
HM_API void hm_context_destroy(hm_context* ctx);
/* Never NULL; empty when the last call succeeded. */
HM_API const char* hm_last_error(const hm_context* ctx);

/* Runs the convention calibration. Returns HM_CALIBRATION when some group
 * has no unique passing candidate; the record is kept either way. */
HM_API hm_status hm_calibrate(hm_context* ctx);
HM_API int hm_is_calibrated(const hm_context* ctx);
HM_API hm_status hm_calibration_save(hm_context* ctx, const char* path);
/* Loads a record written by hm_calibration_save. A record whose ok flag is
 * false is loaded and HM_CALIBRATION returned. */
HM_API hm_status hm_calibration_load(hm_context* ctx, const char* path);
/* Overlays per-identity tolerances from a JSON object file. */
HM_API hm_status hm_set_tolerances_file(hm_context* ctx, const char* path);

typedef struct hm_params {
    double k;
    double mu_re, mu_im;
    double lambda;
    double x, y;    /* z  */
    double xp, yp;  /* z' */
    double X, Xp;
    double t;
    double b;
} hm_params;

HM_API void hm_params_default(hm_params* p);

typedef struct hm_value {
    double re, im;
    double err_estimate;
    int converged;
} hm_value;

/* kernel is one of hres hheat hwave mres mheat mwave. Calibrates first if
 * the context has no record yet. */
HM_API hm_status hm_eval(hm_context* ctx, const char* kernel, const hm_params* p, hm_value* out);

/* Runs a verification suite. The report is owned by the caller. */
HM_API hm_status hm_verify(hm_context* ctx, const char* suite, hm_report** out);
HM_API int hm_report_passed(const hm_report* r);
HM_API size_t hm_report_count(const hm_report* r);

typedef struct hm_identity {
    const char* identity_id;
    const char* grid_spec;
    const char* worst_point;
    const char* note;
    double max_rel_err;
    double tolerance;
    double literal_rel_err; /* negative when not applicable */
    double runtime_ms;
    int n_points;
    int n_errors;
    int passed;
} hm_identity;

/* Strings stay valid while the report lives. */
HM_API hm_status hm_report_get(const hm_report* r, size_t i, hm_identity* out);
HM_API hm_status hm_report_write_json(hm_context* ctx, const hm_report* r, const char* path);
HM_API void hm_report_destroy(hm_report* r);

/* Evaluates a kernel over a grid spec file and writes CSV. n_failed (may be
 * NULL) receives the number of points that raised. */
HM_API hm_status hm_grid(hm_context* ctx, const char* kernel, const char* spec_path,
                         const char* csv_path, size_t* n_failed);

#ifdef __cplusplus
}
#endif

#endif
