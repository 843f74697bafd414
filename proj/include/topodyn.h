/* topodyn C API: opaque handles over the computational dynamics core.
 *
 * Every entry point returns a td_status; on failure td_last_error() carries a
 * thread-local message. Handles are created by td_* constructors and released
 * with the matching td_*_free. Distances cross this boundary as decimal
 * strings, matching the CLI and file formats.
 */
#ifndef TOPODYN_H
#define TOPODYN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TOPODYN_API __declspec(dllexport)
#else
#define TOPODYN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum td_status {
    TD_OK = 0,
    TD_ERR_INVALID_ARGUMENT = 1,
    TD_ERR_PARSE = 2,
    TD_ERR_NOT_FOUND = 3,
    TD_ERR_PRECONDITION = 4,
    TD_ERR_SEARCH_FAILED = 5,
    TD_ERR_UNSUPPORTED = 6,
    TD_ERR_IO = 7,
    TD_ERR_INTERNAL = 8
} td_status;

typedef struct td_system td_system; /* finite metric system */
typedef struct td_sft td_sft;       /* subshift of finite type */
typedef struct td_report td_report; /* named text artifacts + exit code */

TOPODYN_API const char* td_version(void);
TOPODYN_API const char* td_status_name(td_status s);
/* Thread-local message describing the most recent failure. */
TOPODYN_API const char* td_last_error(void);

/* ------------------------------------------------------------------ *
 * construction                                                        */
TOPODYN_API td_status td_system_parse(const char* text, td_system** out);
TOPODYN_API td_status td_system_load(const char* path, td_system** out);
TOPODYN_API td_status td_cantor_fan(int64_t fibers, int64_t max_period, td_system** out);
TOPODYN_API td_status td_circle_accumulation(int64_t depth, td_system** out);
TOPODYN_API td_status td_sft_parse(const char* text, td_sft** out);
TOPODYN_API td_status td_sft_load(const char* path, td_sft** out);
TOPODYN_API td_status td_sft_full_shift(uint32_t alphabet, td_sft** out);
TOPODYN_API td_status td_sft_golden_mean(td_sft** out);
/* Finite system on the periodic points of period <= max_period. */
TOPODYN_API td_status td_sft_truncation(const td_sft* s, int64_t max_period, td_system** out);
TOPODYN_API void td_system_free(td_system* s);
TOPODYN_API void td_sft_free(td_sft* s);

TOPODYN_API size_t td_system_size(const td_system* s);
TOPODYN_API td_status td_system_serialize(const td_system* s, td_report** out);
TOPODYN_API td_status td_sft_entropy(const td_sft* s, double* out);
TOPODYN_API td_status td_sft_word_count_entropy(const td_sft* s, int64_t n_max, double* out);

/* Symbolic points cross the boundary as `(left).center.(right)@start`
 * strings. The shadowing entry takes whitespace-separated points forming a
 * periodic pseudo-orbit window anchored at index 0. */
TOPODYN_API td_status td_shift_metric(const char* p, const char* q, double* out);
TOPODYN_API td_status td_sft_expansivity_horizon(const td_sft* s, const char* e,
                                                 const char* eps, int64_t* out);
TOPODYN_API td_status td_sft_shadow(const td_sft* s, const char* points, const char* delta,
                                    td_report** out);
TOPODYN_API td_status td_sft_asymptotic_pair(const td_sft* s, const char* point,
                                             td_report** out);
TOPODYN_API td_status td_sft_local_stable_set(const td_sft* s, const char* point,
                                              const char* r, int64_t horizon, td_report** out);
TOPODYN_API td_status td_sft_locally_maximal(const td_sft* ambient, const td_sft* sub,
                                             int64_t horizon, td_report** out);

/* ------------------------------------------------------------------ *
 * analyses                                                            *
 * subset_or_null: name of a subset attached to the system; NULL means  *
 * the whole state set.                                                */
TOPODYN_API td_status td_chain_analysis(const td_system* s, const char* deltas,
                                        td_report** out);
TOPODYN_API td_status td_sensitivity(const td_system* s, const char* subset_or_null,
                                     const char* a, td_report** out);
TOPODYN_API td_status td_entropy_estimate(const td_system* s, const char* subset_or_null,
                                          const char* r_list_or_null, int64_t n_max,
                                          td_report** out);
/* word_length: the length of the realized two-symbol patterns (2^word_length
 * shadowing points are materialized). On finite systems the spliced orbits
 * have period word_length * m, so the state set must carry that period. */
TOPODYN_API td_status td_horseshoe_sft(const td_sft* s, const char* base_or_null,
                                       const char* eps, const char* a, int64_t word_length,
                                       td_report** out);
TOPODYN_API td_status td_horseshoe_system(const td_system* s, const char* subset_or_null,
                                          const char* eps, const char* a, int64_t word_length,
                                          td_report** out);
TOPODYN_API td_status td_model_build(const td_sft* ambient, const td_sft* lambda, int64_t n,
                                     const char* c_or_null, td_report** out);
TOPODYN_API td_status td_thm11_truncations(const td_sft* s, int64_t p_min, int64_t p_max,
                                           const char* a, const char* deltas,
                                           int64_t threshold, td_report** out);
/* schedule_or_null: space-separated key=value overrides of the default
 * schedule, e.g. "nmax=4 eps=0.5,0.25 c=0.5 b=0.5 e=0.5 a=0.25 parte=0.75".
 * Ladder values are comma-separated. */
TOPODYN_API td_status td_thm12_sft(const td_sft* ambient, const td_sft* lambda,
                                   const char* schedule_or_null, td_report** out);
TOPODYN_API td_status td_thm12_system(const td_system* s, const char* subset_or_null,
                                      const char* schedule_or_null, td_report** out);
TOPODYN_API td_status td_appendix_verify(const td_system* s, const char* a, const char* r,
                                         td_report** out);
TOPODYN_API td_status td_verify_certificate(const char* json_text, td_report** out);

/* Runs a pipeline config; when out_dir is non-NULL the artifacts are written
 * there atomically. The report's exit code carries the pipeline convention:
 * 0 consistent, 2 refuted-hypothesis, 1 error. */
TOPODYN_API td_status td_pipeline_run(const char* config_path, const char* out_dir_or_null,
                                      td_report** out);
TOPODYN_API td_status td_pipeline_run_text(const char* config_text, const char* base_dir,
                                           const char* out_dir_or_null, td_report** out);

/* ------------------------------------------------------------------ *
 * reports                                                             */
TOPODYN_API size_t td_report_artifact_count(const td_report* r);
TOPODYN_API const char* td_report_artifact_name(const td_report* r, size_t i);
TOPODYN_API const char* td_report_artifact_content(const td_report* r, size_t i);
TOPODYN_API const char* td_report_text(const td_report* r);
TOPODYN_API int td_report_exit_code(const td_report* r);
TOPODYN_API void td_report_free(td_report* r);

#ifdef __cplusplus
}
#endif

#endif /* TOPODYN_H */
