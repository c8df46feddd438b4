#ifndef VARCROSS_VARCROSS_H_
#define VARCROSS_VARCROSS_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define VC_API __attribute__((visibility("default")))
#else
#define VC_API
#endif

/* Status codes double as CLI exit codes. */
typedef enum vc_status {
  VC_OK             = 0,
  VC_FAIL           = 1,
  VC_INCONCLUSIVE   = 2,
  VC_INPUT_ERROR    = 3,
  VC_INTERNAL_ERROR = 4
} vc_status;

typedef struct vc_context vc_context;
typedef struct vc_report  vc_report;
typedef struct vc_monoid  vc_monoid;

VC_API const char* vc_version(void);

/* catalog_dir NULL selects the builtin catalog. */
VC_API vc_status   vc_context_create(const char* catalog_dir, vc_context** out);
VC_API void        vc_context_destroy(vc_context* ctx);
VC_API vc_status   vc_context_set_jobs(vc_context* ctx, unsigned jobs);
VC_API vc_status   vc_context_set_budget(vc_context* ctx, uint64_t budget);
VC_API vc_status   vc_context_set_timings(vc_context* ctx, int enabled);
/* Message of the last VC_INPUT_ERROR or VC_INTERNAL_ERROR; "" otherwise. */
VC_API const char* vc_context_last_error(const vc_context* ctx);

/* Every function producing a report returns the report status, or an
   error code with *out set to NULL. */
VC_API vc_status vc_selfcheck(vc_context* ctx, vc_report** out);
/* paths: count manifest files, all run in one worker pool. */
VC_API vc_status vc_run_manifests(vc_context* ctx, const char* const* paths, size_t count, vc_report** out);
VC_API vc_status vc_run_manifest_text(vc_context* ctx, const char* name, const char* text, vc_report** out);
VC_API vc_status vc_run_proof(vc_context* ctx, const char* path, int lax, vc_report** out);
VC_API vc_status vc_run_proof_text(vc_context* ctx, const char* text, int lax, vc_report** out);
VC_API vc_status vc_probe_isoterm(vc_context* ctx, const char* expr, const char* word, vc_report** out);
VC_API vc_status vc_probe_properties(vc_context* ctx, const char* expr, vc_report** out);
VC_API vc_status vc_probe_exclusion(vc_context* ctx, const char* expr, vc_report** out);
/* satisfy and fail hold one axiom per line: "label: u = v", "u = v" or a
   catalog label or basis name. The witness table is in the report text. */
VC_API vc_status vc_search(vc_context* ctx,
                           const char* satisfy,
                           const char* fail,
                           unsigned    max_order,
                           vc_report** out);

VC_API const char* vc_report_text(const vc_report* report);
/* Manifest record lines; "" for other reports. */
VC_API const char* vc_report_records(const vc_report* report);
VC_API vc_status   vc_report_status(const vc_report* report);
VC_API void        vc_report_destroy(vc_report* report);

VC_API vc_status vc_monoid_from_expr(vc_context* ctx, const char* expr, vc_monoid** out);
VC_API size_t    vc_monoid_order(const vc_monoid* m);
/* *satisfied is 1 or 0; VC_INCONCLUSIVE when the budget runs out. */
VC_API vc_status vc_monoid_satisfies(vc_context* ctx, const vc_monoid* m, const char* identity, int* satisfied);
VC_API int       vc_monoid_is_j_trivial(const vc_monoid* m);
/* Table text in the catalog format; owned by the monoid. */
VC_API const char* vc_monoid_table(const vc_monoid* m);
VC_API void        vc_monoid_destroy(vc_monoid* m);

#ifdef __cplusplus
}
#endif

#endif /* VARCROSS_VARCROSS_H_ */
