/* C interface to the q-log-convexity verifier.
 *
 * Every handle is opaque and owned by the caller once returned; release it
 * with the matching *_free function. Strings returned through char** are
 * heap-allocated and released with qlc_string_free. Strings returned as
 * const char* belong to the handle they came from.
 *
 * Functions returning qlc_status set a thread-local message readable through
 * qlc_last_error() whenever they return something other than QLC_OK.
 */
#ifndef QLC_QLC_H
#define QLC_QLC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QLC_BUILDING_LIBRARY)
#define QLC_API __declspec(dllexport)
#else
#define QLC_API __declspec(dllimport)
#endif
#else
#define QLC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qlc_status {
  QLC_OK = 0,
  QLC_ERR_ARGUMENT = 2, /* invalid argument or unknown name */
  QLC_ERR_IO = 3,       /* file could not be read or written */
  QLC_ERR_PARSE = 4,    /* malformed input document */
  QLC_ERR_INTERNAL = 5
} qlc_status;

QLC_API const char* qlc_version(void);
QLC_API const char* qlc_last_error(void);
QLC_API void qlc_string_free(char* s);

/* Family polynomials. family is one of 'D', 'W', 'V', 'F'. */
typedef struct qlc_poly qlc_poly;

QLC_API qlc_status qlc_family_poly(char family, long n, qlc_poly** out);
/* Same, served through the on-disk cache at cache_path (NULL: no cache). */
QLC_API qlc_status qlc_family_polys(char family, long n_from, long n_to, const char* cache_path, qlc_poly*** out,
                                    size_t* count);
QLC_API void qlc_poly_array_free(qlc_poly** polys, size_t count);
QLC_API long qlc_poly_degree(const qlc_poly* p);
/* Coefficient of q^k as a decimal string. */
QLC_API qlc_status qlc_poly_coeff(const qlc_poly* p, long k, char** out);
QLC_API void qlc_poly_free(qlc_poly* p);

/* Single checks. A report is produced whenever the arguments are valid,
 * whether or not the check passes. */
typedef struct qlc_report qlc_report;

/* Coefficientwise q-log-convexity of f_n for 1 <= n <= n_max. */
QLC_API qlc_status qlc_check_qlc(char family, long n_max, unsigned jobs, const char* cache_path, qlc_report** out);
/* Log-convexity of the values f_n(1) for 0 <= n <= n_max + 1. */
QLC_API qlc_status qlc_check_logconvex(char family, long n_max, qlc_report** out);
/* Criterion sweep: 'D' uses the Domb array with central binomial weights
 * (C1 and C2 for t <= n); 'W' the Narayana array with unit weights (L~ for
 * t <= 2n). */
QLC_API qlc_status qlc_check_crossing(char family, long n_max, unsigned jobs, qlc_report** out);

QLC_API int qlc_report_passed(const qlc_report* r);
QLC_API uint64_t qlc_report_checked(const qlc_report* r);
QLC_API const char* qlc_report_summary(const qlc_report* r);
/* First failing witness, empty when the check passed. */
QLC_API const char* qlc_report_witness(const qlc_report* r);
QLC_API void qlc_report_free(qlc_report* r);

/* Verification config. Keys: n_max_direct, n_max_factorization, n_max_sturm,
 * series_N, series_digits, n_max_monotonicity, n_max_root_ratio, jobs,
 * cache_path. */
typedef struct qlc_config qlc_config;

QLC_API qlc_config* qlc_config_new(void);
QLC_API qlc_status qlc_config_set(qlc_config* c, const char* key, const char* value);
/* Test fixture: perturb one coefficient of psi^(n,t). */
QLC_API qlc_status qlc_config_set_psi_fault(qlc_config* c, long n, long t, long coefficient, long delta);
QLC_API void qlc_config_free(qlc_config* c);

typedef struct qlc_certificate qlc_certificate;

/* Runs the full verification. Returns QLC_OK once a certificate exists,
 * even if its verdict is fail; returns QLC_ERR_IO (certificate still set)
 * if only the cache write failed. */
QLC_API qlc_status qlc_verify(const qlc_config* c, qlc_certificate** out);
QLC_API int qlc_certificate_passed(const qlc_certificate* cert);
QLC_API const char* qlc_certificate_timestamp(const qlc_certificate* cert);
QLC_API size_t qlc_certificate_claim_count(const qlc_certificate* cert);
QLC_API qlc_status qlc_certificate_claim(const qlc_certificate* cert, size_t i, const char** id, const char** family,
                                         int* passed);
QLC_API size_t qlc_certificate_family_count(const qlc_certificate* cert);
QLC_API qlc_status qlc_certificate_family(const qlc_certificate* cert, size_t i, const char** family, int* passed,
                                          size_t* claims);
/* format: "json", "csv" or "text". */
QLC_API qlc_status qlc_certificate_serialize(const qlc_certificate* cert, const char* format, char** out);
QLC_API qlc_status qlc_certificate_parse(const char* json, qlc_certificate** out);
QLC_API void qlc_certificate_free(qlc_certificate* cert);

/* Partial sum of the 1/pi series against 8/(sqrt(3) pi). Decimal strings
 * with `digits` fractional digits. */
QLC_API qlc_status qlc_series(long N, unsigned digits, char** partial_sum, char** reference, char** error_bound,
                              int* passed);

#ifdef __cplusplus
}
#endif

#endif /* QLC_QLC_H */
