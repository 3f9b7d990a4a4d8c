#ifndef CCVMS_H
#define CCVMS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ccvms_status {
  CCVMS_OK = 0,
  CCVMS_ERR_PARSE = 1,
  CCVMS_ERR_CONTRACT = 2,
  CCVMS_ERR_CONSISTENCY = 3,
  CCVMS_ERR_IO = 4,
  CCVMS_ERR_INVALID_ARG = 5
} ccvms_status;

typedef struct ccvms_scenario ccvms_scenario;
typedef struct ccvms_report ccvms_report;

/* zeroed fields keep the scenario's own values */
typedef struct ccvms_run_options {
  double tolerance;  /* used when > 0 */
  uint64_t seed;     /* used when has_seed != 0 */
  int has_seed;
  int sample_size;   /* used when >= 1 */
  double grid_step;  /* used when > 0 */
} ccvms_run_options;

const char* ccvms_version(void);

/* message of the last failing call on this thread; empty when none */
const char* ccvms_last_error(void);

ccvms_status ccvms_scenario_parse_file(const char* path, ccvms_scenario** out);
ccvms_status ccvms_scenario_parse_text(const char* text, ccvms_scenario** out);
void ccvms_scenario_free(ccvms_scenario* sc);

/* opts may be NULL; every scenario value then stands */
ccvms_status ccvms_run_check(const ccvms_scenario* sc,
                             const ccvms_run_options* opts,
                             ccvms_report** out);
ccvms_status ccvms_solve_circle(const ccvms_scenario* sc,
                                const ccvms_run_options* opts,
                                ccvms_report** out);
ccvms_status ccvms_verify_axioms(const ccvms_scenario* sc,
                                 const ccvms_run_options* opts,
                                 ccvms_report** out);

/* random table mappings on the scenario circle keeping those where
 * hold_id is satisfied, fail_id is violated, and the circle is not fixed */
ccvms_status ccvms_search(const ccvms_scenario* sc, const char* hold_id,
                          const char* fail_id, int budget,
                          const ccvms_run_options* opts, ccvms_report** out);

/* 1 when every evaluated condition held and no axiom failed */
int ccvms_report_passed(const ccvms_report* rep);

/* format is "text" or "json"; *out is freed with ccvms_string_free */
ccvms_status ccvms_report_render(const ccvms_report* rep, const char* format,
                                 char** out);

void ccvms_report_free(ccvms_report* rep);
void ccvms_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
