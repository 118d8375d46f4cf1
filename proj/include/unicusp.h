/* unicusp — exact classification engine for rational unicuspidal plane
 * curves with one Puiseux pair.
 *
 * C interface of the shared library. All heavy objects live behind the
 * opaque ucp_report handle; strings returned through char** are owned by
 * the caller and must be released with ucp_string_free. Every entry
 * point returns a status code; on failure, ucp_last_error() gives a
 * thread-local message.
 */
#ifndef UNICUSP_H
#define UNICUSP_H

#ifdef __cplusplus
extern "C" {
#endif

#define UCP_OK 0         /* success */
#define UCP_FAIL 1       /* a verification suite reported failures */
#define UCP_EUSAGE 2     /* invalid arguments */
#define UCP_EINTERNAL 3  /* internal error (invariant violation) */

typedef struct ucp_report ucp_report;

const char* ucp_version(void);

/* Message describing the most recent failure on this thread. */
const char* ucp_last_error(void);

/* Classifies every genus-valid triple with 3 <= d <= dmax.
 *   filters:  "full" (default when NULL/empty), "closed-forms", or a
 *             comma-separated list of filter names.
 *   cbar2:    optional range "min..max" with open ends ("..-2"); NULL or
 *             "" for unrestricted.
 *   jobs:     number of worker threads (>= 1); output is identical for
 *             any job count.
 */
int ucp_search(long long dmax, const char* filters, const char* cbar2,
               int jobs, ucp_report** out);

/* Single-triple report with a per-filter trace. Non-genus-valid input is
 * not an error: the row carries the verdict NOT_GENUS_VALID. */
int ucp_classify(long long d, long long a, long long b, ucp_report** out);

/* Members of the realizable families. kinds is a comma-separated subset
 * of "a,b,c,d,e,f" (NULL/empty for all). */
int ucp_families(const char* kinds, long long dmax, ucp_report** out);

/* Canonical solutions of x^2 - 5 y^2 = -4 with 0 < y <= ymax, with their
 * Fibonacci decomposition. */
int ucp_pell(long long ymax, ucp_report** out);

/* Case analysis of 9(-cbar2)(a-1) = x^2 + 7ax + a^2 + 9a for one excess
 * value 0 <= x <= 5. */
int ucp_diophantine(int x, ucp_report** out);

/* Kashiwara polynomial recursion up to index smax >= 1; emit_polys != 0
 * adds the canonical polynomial text to each row. */
int ucp_construct(int smax, int emit_polys, ucp_report** out);

/* Runs one verification suite ("all" for every suite). Returns UCP_OK on
 * full pass, UCP_FAIL when any check fails, UCP_EUSAGE on an unknown
 * name. The human-readable transcript is stored in *text_out. */
int ucp_verify(const char* suite, char** text_out);

/* Renders a report as "table", "json" or "csv". */
int ucp_report_render(const ucp_report* report, const char* format,
                      char** text_out);

void ucp_report_free(ucp_report* report);
void ucp_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* UNICUSP_H */
