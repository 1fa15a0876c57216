#ifndef VWEB_H
#define VWEB_H

/* C interface to the vweb library. Strings returned through `char** out`
   are owned by the caller and released with vweb_string_free. Diagrams are
   released with vweb_free. On failure vweb_last_error() describes the
   problem; the message stays valid until the next call on the same thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define VWEB_API __declspec(dllexport)
#else
#define VWEB_API __attribute__((visibility("default")))
#endif

typedef struct vweb_diagram vweb_diagram;

/* Also the exit codes of the command-line tool. */
typedef enum vweb_status {
  VWEB_OK = 0,
  VWEB_E_USAGE = 1,    /* bad parameter, unknown identifier, stale move site */
  VWEB_E_INPUT = 2,    /* syntax or validation error in a diagram */
  VWEB_E_MISMATCH = 3, /* verification found disagreeing values */
  VWEB_E_LIMIT = 4,    /* enumeration cap or cube size exceeded */
  VWEB_E_INTERNAL = 5
} vweb_status;

VWEB_API const char* vweb_last_error(void);
VWEB_API void vweb_string_free(char* s);
VWEB_API void vweb_free(vweb_diagram* d);

VWEB_API vweb_status vweb_parse(const char* text, vweb_diagram** out);
/* parameter < 0 means none */
VWEB_API vweb_status vweb_generate(const char* family, long parameter, vweb_diagram** out);
VWEB_API vweb_status vweb_random(uint64_t seed, size_t max_crossings, size_t max_vertices,
                                 vweb_diagram** out);

VWEB_API vweb_status vweb_serialize(const vweb_diagram* d, char** out);
VWEB_API size_t vweb_crossing_count(const vweb_diagram* d);
VWEB_API vweb_status vweb_info_json(const vweb_diagram* d, char** out);

VWEB_API vweb_status vweb_tait_count(const vweb_diagram* d, uint64_t* out);
VWEB_API vweb_status vweb_tait_list_json(const vweb_diagram* d, size_t cap, char** out);

/* method: "direct", "cube" or "skein". cap bounds direct enumeration,
   max_crossings bounds the cube. */
VWEB_API vweb_status vweb_penrose(const vweb_diagram* d, const char* method, size_t cap,
                                  size_t max_crossings, int64_t* value, uint64_t* terms,
                                  int64_t* elapsed_ns);
VWEB_API vweb_status vweb_cube_json(const vweb_diagram* d, size_t max_crossings, char** out);

/* bits: one '0'/'1' per crossing in identifier order */
VWEB_API vweb_status vweb_resolve(const vweb_diagram* d, const char* bits, vweb_diagram** out);

VWEB_API vweb_status vweb_moves_list_json(const vweb_diagram* d, const char* kind, char** out);
VWEB_API vweb_status vweb_moves_apply(const vweb_diagram* d, const char* kind, size_t index,
                                      vweb_diagram** out);

/* Returns VWEB_E_MISMATCH, with the report filled in, when methods disagree. */
VWEB_API vweb_status vweb_verify_json(const vweb_diagram* d, size_t cap, size_t max_crossings,
                                      char** out);
VWEB_API vweb_status vweb_export_dot(const vweb_diagram* d, char** out);

#ifdef __cplusplus
}
#endif

#endif
