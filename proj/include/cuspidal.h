/* C API for the cuspidal engine.
 *
 * The engine certifies whether a polynomial map restricted to a
 * 2-dimensional complete intersection has only folds and simple cusps as
 * singularities, classifies individual points, and counts cusps and their
 * signs exactly.
 *
 * All functions return a cuspidal_status; results come back through opaque
 * handles. Strings returned through char** out-parameters are owned by the
 * caller and must be released with cuspidal_string_free.
 */
#ifndef CUSPIDAL_H
#define CUSPIDAL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cuspidal_problem cuspidal_problem;
typedef struct cuspidal_report cuspidal_report;

typedef enum cuspidal_status {
  CUSPIDAL_OK = 0,
  CUSPIDAL_ERROR_PARSE = 1,
  CUSPIDAL_ERROR_INVALID_ARGUMENT = 2,
  CUSPIDAL_ERROR_NOT_CERTIFIED = 3,
  CUSPIDAL_ERROR_INFINITE_DIMENSIONAL = 4,
  CUSPIDAL_ERROR_STEP_LIMIT = 5,
  CUSPIDAL_ERROR_INTERNAL = 6
} cuspidal_status;

typedef enum cuspidal_command {
  CUSPIDAL_CMD_CHECK_MANIFOLD = 0,
  CUSPIDAL_CMD_CHECK_GENERIC = 1,
  CUSPIDAL_CMD_CHECK_STABLE = 2,
  CUSPIDAL_CMD_CLASSIFY = 3,
  CUSPIDAL_CMD_COUNT = 4,
  CUSPIDAL_CMD_DERIVE = 5
} cuspidal_command;

typedef enum cuspidal_order {
  CUSPIDAL_ORDER_DEFAULT = 0, /* document setting if present, else degrevlex */
  CUSPIDAL_ORDER_DEGREVLEX = 1,
  CUSPIDAL_ORDER_LEX = 2
} cuspidal_order;

typedef struct cuspidal_options {
  int order;                   /* cuspidal_order */
  int force;                   /* count despite a failed certificate */
  int verbose;                 /* include derived polynomials in reports */
  const char* point;           /* classify: "r1,r2,...", exact rationals */
  unsigned long gb_step_limit; /* 0 = unlimited */
} cuspidal_options;

/* Fills an options struct with defaults. */
void cuspidal_options_init(cuspidal_options* options);

/* Parses an input document:
 *   vars x y z
 *   h x^2+y^2+z^2-1
 *   f <expr>            (exactly twice)
 * On failure returns a status and, when error_message is non-NULL, a
 * human-readable message. */
cuspidal_status cuspidal_problem_parse(const char* text, cuspidal_problem** out,
                                       char** error_message);
void cuspidal_problem_free(cuspidal_problem* problem);

/* Runs one command against a parsed problem. options may be NULL. */
cuspidal_status cuspidal_run(const cuspidal_problem* problem, cuspidal_command command,
                             const cuspidal_options* options, cuspidal_report** out,
                             char** error_message);
void cuspidal_report_free(cuspidal_report* report);

/* Renderings. The caller owns the returned strings. */
char* cuspidal_report_text(const cuspidal_report* report);
char* cuspidal_report_json(const cuspidal_report* report);

/* Process exit code contract: 0 certified/success, 2 inconclusive. */
int cuspidal_report_exit_code(const cuspidal_report* report);

/* 1 certified, 0 inconclusive, -1 when the command produced no certificate. */
int cuspidal_report_certified(const cuspidal_report* report);

/* Cusp counts from a COUNT report; returns CUSPIDAL_ERROR_INVALID_ARGUMENT
 * on other reports. Any out-pointer may be NULL. */
cuspidal_status cuspidal_report_cusp_counts(const cuspidal_report* report, long* total,
                                            long* signed_sum, long* positive, long* negative,
                                            long* dim_a);

/* Point class name from a CLASSIFY report ("Fold", "Cusp", ...), or NULL.
 * The string lives as long as the report. Sign (+1/-1) is written to
 * cusp_sign when the class is Cusp and cusp_sign is non-NULL. */
const char* cuspidal_report_point_class(const cuspidal_report* report, int* cusp_sign);

void cuspidal_string_free(char* s);

const char* cuspidal_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CUSPIDAL_H */
