#ifndef CY4_H
#define CY4_H
/* C interface to the cy4 engine. Strings returned by the library are owned by
   the caller and released with cy4_free. */

#include <stddef.h>

#if defined(CY4_BUILDING)
#define CY4_API __attribute__((visibility("default")))
#else
#define CY4_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    CY4_OK = 0,
    CY4_ERR_ARGUMENT = 1,
    CY4_ERR_UNKNOWN_MODEL = 2,
    CY4_ERR_MODEL_FILE = 3,
    CY4_ERR_COMPUTE = 4,
    CY4_ERR_NOT_RUN = 5,
    CY4_ERR_IO = 6,
    CY4_ERR_NO_REFERENCE = 7
} cy4_status;

typedef struct cy4_session cy4_session;

CY4_API const char* cy4_version(void);
/* message of the last failure on the calling thread */
CY4_API const char* cy4_last_error(void);
CY4_API void cy4_free(char* s);
/* n <= 0 restores the CY4_THREADS / hardware default */
CY4_API void cy4_set_threads(int n);

CY4_API size_t cy4_model_count(void);
CY4_API const char* cy4_model_name(size_t i);
CY4_API const char* cy4_model_description(size_t i);

/* name_or_path: a built-in model name or a path to a model file */
CY4_API cy4_status cy4_session_open(const char* name_or_path, cy4_session** out);
CY4_API void cy4_session_close(cy4_session* s);
/* max_degree <= 0 uses the model default */
CY4_API cy4_status cy4_session_run(cy4_session* s, int max_degree);
/* what: "all" (fmt json|csv|table) or gw|bps|meeting|f1 (fmt json|csv) */
CY4_API cy4_status cy4_session_render(cy4_session* s, const char* what, const char* fmt, char** out);
CY4_API cy4_status cy4_session_export(cy4_session* s, const char* what, const char* fmt, const char* path);
/* runs at the reference truncation and compares against the built-in tables */
CY4_API cy4_status cy4_session_check(cy4_session* s, char** report_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif
