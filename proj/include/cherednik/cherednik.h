#ifndef CHEREDNIK_H
#define CHEREDNIK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CHD_API __declspec(dllexport)
#else
#define CHD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; they double as the CLI exit codes. */
enum {
  CHD_OK = 0,
  CHD_ERR_INVALID = 2,
  CHD_ERR_UNDECIDABLE = 3,
  CHD_ERR_INTERNAL = 4
};

typedef struct chd_group chd_group;
typedef struct chd_table chd_table;

CHD_API const char* chd_version(void);
/* Message of the last failed call on this thread ("" if none). */
CHD_API const char* chd_last_error(void);
/* Strings returned through char** out-parameters are owned by the caller. */
CHD_API void chd_string_free(char* s);

/* spec: "h3", "b2", "i2:5", "grpn:3,1,2", "cyclic:4", "coxeter:[[1,3],[3,1]]" or a JSON object. */
CHD_API int chd_group_new(const char* spec, chd_group** out);
CHD_API void chd_group_free(chd_group* g);
CHD_API int chd_group_order(const chd_group* g, size_t* out);

CHD_API int chd_table_load(const char* path, chd_table** out);
CHD_API int chd_table_parse(const char* text, chd_table** out);
CHD_API void chd_table_free(chd_table* t);
CHD_API int chd_table_serialize(const chd_table* t, char** out);

/* All remaining calls write a JSON document to *out. The table may be NULL. */

CHD_API int chd_describe(chd_group* g, char** out);

/* method: "auto", "poincare", "trace" or "table". */
CHD_API int chd_schur(chd_group* g, const chd_table* t, const char* method, int unity_bound, char** out);

/* stratum: an id ("S2"), a type name ("A1^2") or NULL for all strata. */
CHD_API int chd_qindex(chd_group* g, const chd_table* t, const char* stratum, int unity_bound, char** out);

/* params: {"c": "1/2"}, {"c": {"x.1": "1/2", ...}} or {"gr1n": {"c0": "1/3", "d": ["0", "0"]}}. */
CHD_API int chd_support(chd_group* g, const chd_table* t, const char* params, int unity_bound, char** out);
CHD_API int chd_support_exponential(chd_group* g, const char* params, int degree, uint64_t seed, char** out);
CHD_API int chd_finite_dim(chd_group* g, const chd_table* t, const char* params, int unity_bound, int* result,
                           char** out);

/* Closed G(r,1,n) criterion; params must use the "gr1n" form. */
CHD_API int chd_gr1n_criterion(int r, int n, const char* params, int* result);

/* W-exponential up to the given degree. lambda is a JSON array (NULL picks a
   generic covector from seed); params NULL gives the symbolic series. */
CHD_API int chd_wexp(chd_group* g, const char* lambda, const char* params, int degree, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif
