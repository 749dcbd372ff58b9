#ifndef COMMVAR_COMMVAR_H
#define COMMVAR_COMMVAR_H

/* C interface to the commvar verification checks. All strings returned by
   the library are owned by the library and stay valid until the owning
   object is destroyed (or, for commvar_last_error, until the next call on
   the same thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COMMVAR_BUILDING_LIBRARY)
#    define COMMVAR_API __declspec(dllexport)
#  else
#    define COMMVAR_API __declspec(dllimport)
#  endif
#else
#  define COMMVAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum commvar_status {
  COMMVAR_OK = 0,
  COMMVAR_CLAIM_FAILED = 1, /* report produced, at least one claim failed */
  COMMVAR_USAGE = 2,        /* unknown check or unusable parameter */
  COMMVAR_INTERNAL = 3      /* construction failure or allocation error */
} commvar_status;

typedef struct commvar_context commvar_context;
typedef struct commvar_report commvar_report;

COMMVAR_API const char* commvar_version(void);
COMMVAR_API const char* commvar_last_error(void);

COMMVAR_API commvar_context* commvar_context_create(void);
COMMVAR_API void commvar_context_destroy(commvar_context* ctx);
COMMVAR_API commvar_status commvar_context_set_int(commvar_context* ctx, const char* key, long value);
COMMVAR_API commvar_status commvar_context_set_string(commvar_context* ctx, const char* key, const char* value);
COMMVAR_API commvar_status commvar_context_set_flag(commvar_context* ctx, const char* key);
COMMVAR_API commvar_status commvar_context_set_seed(commvar_context* ctx, uint64_t seed);

/* Runs `module check` with the parameters in ctx. On COMMVAR_OK and
   COMMVAR_CLAIM_FAILED *out receives a report the caller must destroy;
   otherwise *out is set to NULL. */
COMMVAR_API commvar_status commvar_run(commvar_context* ctx, const char* module, const char* check,
                                       commvar_report** out);

COMMVAR_API const char* commvar_report_json(const commvar_report* report);
COMMVAR_API const char* commvar_report_text(const commvar_report* report);
COMMVAR_API size_t commvar_report_claim_count(const commvar_report* report);
COMMVAR_API size_t commvar_report_failed_count(const commvar_report* report);
COMMVAR_API size_t commvar_report_inconclusive_count(const commvar_report* report);
COMMVAR_API void commvar_report_destroy(commvar_report* report);

/* Number of registered checks, and the module/check names of entry i. */
COMMVAR_API size_t commvar_check_count(void);
COMMVAR_API commvar_status commvar_check_name(size_t i, const char** module, const char** check,
                                              const char** summary);

#ifdef __cplusplus
}
#endif

#endif /* COMMVAR_COMMVAR_H */
