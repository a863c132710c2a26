#ifndef COVMOD_H
#define COVMOD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define COVMOD_API __declspec(dllexport)
#else
#define COVMOD_API __attribute__((visibility("default")))
#endif

typedef enum covmod_status {
    COVMOD_OK = 0,
    COVMOD_INPUT_ERROR = 1,
    /* hypotheses contradict each other or the arithmetic */
    COVMOD_REFUTED = 2,
    COVMOD_INTERNAL_ERROR = 3,
    COVMOD_BAD_ARGUMENT = 4
} covmod_status;

typedef struct covmod_profile covmod_profile;
typedef struct covmod_result covmod_result;

COVMOD_API const char* covmod_version(void);
COVMOD_API const char* covmod_status_name(covmod_status status);

/* Message of the last failure on the calling thread, "" if none. */
COVMOD_API const char* covmod_last_error(void);

COVMOD_API covmod_status covmod_profile_parse(const char* json, covmod_profile** out);
COVMOD_API void covmod_profile_free(covmod_profile* profile);

/* command: analyze | walls | hilbert | albanese. query may be NULL for "{}".
 * A report with refuted hypotheses is returned together with COVMOD_REFUTED;
 * on every other failure *out is NULL. */
COVMOD_API covmod_status covmod_run(const covmod_profile* profile, const char* command, const char* query,
                                    uint64_t seed, covmod_result** out);

/* Owned by the result. */
COVMOD_API const char* covmod_result_json(const covmod_result* result);
COVMOD_API const char* covmod_result_text(const covmod_result* result);
COVMOD_API covmod_status covmod_result_status(const covmod_result* result);
COVMOD_API void covmod_result_free(covmod_result* result);

/* Direct numeric entry points; u is a JSON invariant {"r", "c", "chi"}. */
COVMOD_API covmod_status covmod_discriminant(const covmod_profile* profile, const char* u, int64_t* out);
COVMOD_API covmod_status covmod_euler_pairing(const covmod_profile* profile, const char* u, int64_t* out);

#ifdef __cplusplus
}
#endif

#endif
