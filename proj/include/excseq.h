/* excseq — exceptional sequences over path algebras of affine type A quivers.
 *
 * C interface to the shared library: opaque handles, integer error codes.
 * All heavyweight operations are also reachable through a single JSON
 * entry point (excseq_run_json), which the bundled CLI uses.
 */
#ifndef EXCSEQ_H
#define EXCSEQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef EXCSEQ_API
#define EXCSEQ_API __attribute__((visibility("default")))
#endif

typedef struct excseq_quiver excseq_quiver;
typedef struct excseq_module excseq_module;

typedef enum {
    EXCSEQ_OK = 0,
    EXCSEQ_ERR_INVALID = 1,   /* bad input / precondition violation */
    EXCSEQ_ERR_VIOLATION = 2, /* verification command found a violation */
    EXCSEQ_ERR_NOMEM = 3
} excseq_status;

/* String classes */
enum {
    EXCSEQ_PREPROJECTIVE = 0,
    EXCSEQ_PREINJECTIVE = 1,
    EXCSEQ_LEFT_REGULAR = 2,
    EXCSEQ_RIGHT_REGULAR = 3
};

/* Pair relations */
enum {
    EXCSEQ_REL_CROSS = 0,
    EXCSEQ_REL_CW = 1,
    EXCSEQ_REL_CCW = 2,
    EXCSEQ_REL_DISJOINT = 3,
    EXCSEQ_REL_TWO_CYCLE = 4
};

EXCSEQ_API const char* excseq_version(void);
/* Message for the most recent failure on this thread; empty if none. */
EXCSEQ_API const char* excseq_last_error(void);

/* ---- quivers ------------------------------------------------------- */

/* signs: string of n characters '+'/'-', one per arrow position. */
EXCSEQ_API excseq_status excseq_quiver_new(int n, const char* signs, excseq_quiver** out);
EXCSEQ_API void excseq_quiver_free(excseq_quiver* q);
EXCSEQ_API int excseq_quiver_order(const excseq_quiver* q);
EXCSEQ_API int excseq_quiver_inner_points(const excseq_quiver* q);
EXCSEQ_API int excseq_quiver_outer_points(const excseq_quiver* q);
/* Lifted sign at any integer position; returns '+' or '-'. */
EXCSEQ_API char excseq_quiver_lifted_sign(const excseq_quiver* q, long long k);
/* 0 = inner, 1 = outer, -1 on bad vertex. */
EXCSEQ_API int excseq_quiver_vertex_boundary(const excseq_quiver* q, int v);
EXCSEQ_API excseq_status excseq_quiver_opposite(const excseq_quiver* q, excseq_quiver** out);

/* ---- string modules ------------------------------------------------ */

EXCSEQ_API excseq_status excseq_module_new(const excseq_quiver* q, int i, int j, long long l,
                                           excseq_module** out);
EXCSEQ_API void excseq_module_free(excseq_module* m);
EXCSEQ_API void excseq_module_triple(const excseq_module* m, int* i, int* j, long long* l);
EXCSEQ_API void excseq_module_lift(const excseq_module* m, long long* lo, long long* hi);
EXCSEQ_API long long excseq_module_length(const excseq_module* m);
EXCSEQ_API int excseq_module_class(const excseq_module* m);
EXCSEQ_API int excseq_module_is_exceptional(const excseq_module* m);
EXCSEQ_API int excseq_module_is_projective(const excseq_module* m);
EXCSEQ_API int excseq_module_is_injective(const excseq_module* m);
/* out must hold n entries. */
EXCSEQ_API excseq_status excseq_module_dimension_vector(const excseq_module* m, long long* out);
/* Quasi-length of a regular module; -1 on non-regular input. */
EXCSEQ_API long long excseq_module_quasi_length(const excseq_module* m);
/* AR translate; *out is NULL when the module is annihilated. */
EXCSEQ_API excseq_status excseq_module_tau(const excseq_module* m, excseq_module** out);
EXCSEQ_API excseq_status excseq_module_tau_inv(const excseq_module* m, excseq_module** out);

EXCSEQ_API long long excseq_dim_hom(const excseq_module* m, const excseq_module* n);
EXCSEQ_API long long excseq_dim_ext(const excseq_module* m, const excseq_module* n);
EXCSEQ_API long long excseq_dim_hom_linear_algebra(const excseq_module* m,
                                                   const excseq_module* n);
EXCSEQ_API int excseq_is_exceptional_pair(const excseq_module* u, const excseq_module* v);
/* EXCSEQ_REL_*; -1 on invalid input. */
EXCSEQ_API int excseq_pair_relation(const excseq_module* u, const excseq_module* v);

/* Number of parametrized families of complete exceptional collections. */
EXCSEQ_API long long excseq_count_families(const excseq_quiver* q);

/* ---- JSON entry point ---------------------------------------------- */

/* request: {"command": "check|order|hom|ext|tau|twist|families|enumerate|render", ...}
 * On success *out receives the report text (JSON; SVG for render), to be
 * released with excseq_string_free. On failure *out is NULL and
 * excseq_last_error() describes the problem; for verification failures the
 * report is still produced. */
EXCSEQ_API excseq_status excseq_run_json(const char* request, char** out);
EXCSEQ_API void excseq_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* EXCSEQ_H */
