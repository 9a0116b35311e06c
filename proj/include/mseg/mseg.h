#ifndef MSEG_MSEG_H
#define MSEG_MSEG_H

/* C interface to the multisegment library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every function returns an mseg_status; on
 * failure mseg_last_error() describes the problem (per thread).
 *
 * Report functions always hand back a report, even when the status is not
 * MSEG_OK, so that diagnostics can be shown. Reports carry a JSON document
 *   {"status": "...", "payload": {...}, "diagnostics": ["..."]}
 * and a plain-text rendering. */

#include <stddef.h>

#if defined(_WIN32)
#define MSEG_API __declspec(dllexport)
#else
#define MSEG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mseg_status {
    MSEG_OK = 0,
    MSEG_PARSE_ERROR = 1,
    MSEG_PRECONDITION_ERROR = 2,
    MSEG_CHECK_FAILURE = 3,
    MSEG_INTERNAL_ERROR = 4
} mseg_status;

typedef struct mseg_multisegment mseg_multisegment;
typedef struct mseg_report mseg_report;

MSEG_API const char* mseg_version(void);
MSEG_API const char* mseg_status_name(mseg_status status);

/* Message of the most recent failure on this thread; "" if none. */
MSEG_API const char* mseg_last_error(void);

/* Strings returned through char** are heap copies released with mseg_string_free. */
MSEG_API void mseg_string_free(char* s);

/* Multisegments: grammar "[b,e]+[b,e]+...", "0" for the empty multisegment. */
MSEG_API mseg_status mseg_multisegment_parse(const char* text, mseg_multisegment** out);
MSEG_API void mseg_multisegment_free(mseg_multisegment* m);
MSEG_API size_t mseg_multisegment_size(const mseg_multisegment* m);
MSEG_API mseg_status mseg_multisegment_text(const mseg_multisegment* m, char** out);
MSEG_API int mseg_multisegment_equal(const mseg_multisegment* a, const mseg_multisegment* b);
MSEG_API int mseg_multisegment_is_ladder(const mseg_multisegment* m);

MSEG_API mseg_status mseg_derive(const mseg_multisegment* m, mseg_multisegment** out);
MSEG_API mseg_status mseg_extend(const mseg_multisegment* m, mseg_multisegment** out);
MSEG_API mseg_status mseg_dagger(const mseg_multisegment* m, mseg_multisegment** out);
MSEG_API mseg_status mseg_bz_derivative(const mseg_multisegment* m, int radius, mseg_multisegment** out);
MSEG_API mseg_status mseg_single_derivative(const mseg_multisegment* m, int j, mseg_multisegment** out);
MSEG_API mseg_status mseg_width(const mseg_multisegment* m, size_t* out);

/* Reports. */
MSEG_API mseg_status mseg_report_status(const mseg_report* r);
MSEG_API const char* mseg_report_json(const mseg_report* r);
MSEG_API const char* mseg_report_text(const mseg_report* r);
MSEG_API void mseg_report_free(mseg_report* r);

#define MSEG_RSK_BITABLEAU 1u /* add P and Q to the text rendering */
#define MSEG_RSK_WIDTH 2u     /* add the width to the text rendering */

/* Payload {"ladders", "width", "P", "Q"}; the JSON always carries every field. */
MSEG_API mseg_status mseg_rsk_report(const char* multisegment, unsigned flags, mseg_report** out);

typedef enum mseg_derive_mode {
    MSEG_DERIVE_PLAIN = 0,  /* m' */
    MSEG_DERIVE_BZ = 1,     /* BZ-derivative with radius param */
    MSEG_DERIVE_SINGLE = 2  /* single derivative at index param */
} mseg_derive_mode;

/* Payload {"input", "result", "segments"}. */
MSEG_API mseg_status mseg_derive_report(const char* multisegment, mseg_derive_mode mode, int param,
                                        mseg_report** out);

/* Gamma (derived = 0) or Gamma' (derived != 0) descriptor:
 * payload {"ladders", "shape", "a", "c", "shift", "derived"}. */
MSEG_API mseg_status mseg_gamma_report(const char* multisegment, int derived, mseg_report** out);

/* C, C' and Phi of a tuple of multisegments. */
MSEG_API mseg_status mseg_phi_report(const char* const* multisegments, size_t count, mseg_report** out);

/* BZ-string of a multisegment over (T, ..., -T). */
MSEG_API mseg_status mseg_bz_string_report(const char* multisegment, int radius, mseg_report** out);

/* Transfer a multiplicity table (JSON text) along a tuple of multisegments. */
MSEG_API mseg_status mseg_transfer_report(const char* table_json, const char* const* multisegments,
                                          size_t count, mseg_report** out);

#define MSEG_SPECHT_PAD 1u
#define MSEG_SPECHT_VERIFY_RSK 2u
#define MSEG_SPECHT_DERIVE 4u

/* charge "2,1,-1", parts "4,2,2,2,1|3,3,2,2|3,2". */
MSEG_API mseg_status mseg_specht_report(const char* charge, const char* parts, unsigned flags,
                                        mseg_report** out);

/* Standard tableaux of a shape "2,1" with residue sequences for charge k. */
MSEG_API mseg_status mseg_tableaux_report(const char* shape, int k, mseg_report** out);

typedef struct mseg_check_options {
    int has_bounds;  /* nonzero: use the three fields below for every suite */
    int support_min;
    int support_max;
    int max_segments;
    unsigned long long seed;
    unsigned long long samples;
    unsigned long long transfer_instances;
    int max_size;
    int max_level;
    int mutate_ell_sign;
} mseg_check_options;

MSEG_API void mseg_check_options_init(mseg_check_options* opts);

/* suite: "combi", "rsk", "specht", "strings" or "all". */
MSEG_API mseg_status mseg_check_report(const char* suite, const mseg_check_options* opts, mseg_report** out);

#ifdef __cplusplus
}
#endif

#endif
