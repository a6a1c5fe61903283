#ifndef LUCASKIT_H
#define LUCASKIT_H

/* C interface to lucaskit. All strings returned by the library are owned by
 * the caller and released with lk_string_free. Functions returning lk_status
 * record a message retrievable with lk_last_error on the same context. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lk_context lk_context;
typedef struct lk_report lk_report;

typedef enum lk_status {
  LK_OK = 0,
  LK_ERR_PARAMETER = 1,
  LK_ERR_DOMAIN = 2,
  LK_ERR_RANGE = 3,
  LK_ERR_INTEGRALITY = 4,
  LK_ERR_CERTIFICATION = 5,
  LK_ERR_PRECISION_EXHAUSTED = 6,
  LK_ERR_REDUCTION_FAILURE = 7,
  LK_ERR_FEASIBILITY = 8,
  LK_ERR_PARITY = 9,
  LK_ERR_USAGE = 10,
  LK_ERR_SCAN_LIMIT = 11,
  LK_ERR_INTERNAL = 99
} lk_status;

lk_context* lk_context_create(void);
void lk_context_destroy(lk_context* ctx);
/* Message of the last failed call on ctx; empty when none. Valid until the
 * next call on ctx. */
const char* lk_last_error(const lk_context* ctx);

const char* lk_version(void);
const char* lk_status_name(lk_status status);

/* Terms of the order-k sequences as decimal strings. n may be negative. */
lk_status lk_lucas_at(lk_context* ctx, int k, long n, char** out);
lk_status lk_fib_at(lk_context* ctx, int k, long n, char** out);
/* Q_n = L_{-n} and H_n = F_{-n}. */
lk_status lk_q_at(lk_context* ctx, int k, long n, char** out);
lk_status lk_h_at(lk_context* ctx, int k, long n, char** out);
void lk_string_free(char* s);

/* Runs one command described by a JSON config, e.g.
 *   {"command": "zeros", "k": "2..7", "limit": 200}
 * A report is produced even when the command itself fails; the return value
 * is LK_OK unless config_json or out is NULL or the run hit an internal
 * error. */
lk_status lk_run(lk_context* ctx, const char* config_json, lk_report** out);
/* 0 all checks passed, 1 a check failed, 2 usage or feasibility error. */
int lk_report_exit_code(const lk_report* report);
/* format: "json", "tsv" or "text". */
lk_status lk_report_render(lk_context* ctx, const lk_report* report, const char* format, char** out);
void lk_report_destroy(lk_report* report);

#ifdef __cplusplus
}
#endif

#endif
