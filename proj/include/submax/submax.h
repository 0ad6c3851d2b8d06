/* C interface to the streaming submodular maximization library.
 *
 * All functions return submax_status; every other output travels through
 * out-parameters or opaque handles. Handles are created and destroyed by
 * this library only. On any failure submax_last_error() describes what
 * went wrong for the calling thread.
 */
#ifndef SUBMAX_H
#define SUBMAX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum submax_status {
  SUBMAX_OK = 0,
  SUBMAX_ERR_USAGE = 1,  /* invalid arguments or parameter combination */
  SUBMAX_ERR_VERIFY = 2, /* verification suite reported violations */
  SUBMAX_ERR_IO = 3,     /* file access or parse failure */
  SUBMAX_ERR_INTERNAL = 4
} submax_status;

typedef struct submax_graph submax_graph;
typedef struct submax_oracle submax_oracle;
typedef struct submax_rows submax_rows;

const char* submax_last_error(void);

/* ---- graphs ---- */

submax_status submax_graph_load(const char* path, submax_graph** out);
void submax_graph_free(submax_graph* graph);
int submax_graph_nodes(const submax_graph* graph);
long long submax_graph_edges(const submax_graph* graph);

/* ---- oracles ---- */

submax_status submax_oracle_max_cover(const submax_graph* graph, submax_oracle** out);
submax_status submax_oracle_revenue(const submax_graph* graph, uint64_t seed, submax_oracle** out);
/* hidden = -1 selects the plain size-valued variant. */
submax_status submax_oracle_adversarial(int n, int c, int k, int hidden, submax_oracle** out);
void submax_oracle_free(submax_oracle* oracle);
int submax_oracle_ground_size(const submax_oracle* oracle);

/* ---- single runs ---- */

typedef struct submax_run_spec {
  const char* algorithm; /* qs, qs++, qs-br, qsingleton, qslargek, greedy, greedy-lazy, ltl */
  int k;
  int c;
  double eps;
  double delta;  /* <= 0 selects the per-algorithm default */
  uint64_t seed;
  int shuffle;   /* nonzero: permute the stream order by shuffle_seed */
  uint64_t shuffle_seed;
} submax_run_spec;

typedef struct submax_run_stats {
  double objective_value;
  uint64_t queries;
  uint64_t refresh_queries;
  uint64_t peak_stored;
  int passes;
  double wall_ms;
  int solution_size;
} submax_run_stats;

submax_status submax_run(const submax_oracle* oracle, const submax_run_spec* spec,
                         submax_run_stats* stats, int* solution, int solution_capacity);

/* ---- experiments ---- */

typedef struct submax_experiment_spec {
  const char* algorithm;
  const char* objective; /* maxcover, revmax, adversarial */
  const char* graph_path;
  int n; /* ground size for the adversarial objective */
  int k;
  int c;
  double eps;
  double delta; /* <= 0 selects the per-algorithm default */
  uint64_t seed;
  int trials; /* 0 selects the default (10 for randomized algorithms) */
  int shuffle;
  uint64_t shuffle_seed;
} submax_experiment_spec;

submax_status submax_experiment_run(const submax_experiment_spec* spec, submax_rows** out);
int submax_rows_count(const submax_rows* rows);
/* Mean and standard deviation of objective_value across the rows. */
submax_status submax_rows_value_stats(const submax_rows* rows, double* mean, double* stddev);
/* line -1 returns the header; 0..count-1 return data rows. */
submax_status submax_rows_line(const submax_rows* rows, int line, char* buffer, size_t capacity);
/* Appends to path, writing the header only when the file is new or empty. */
submax_status submax_rows_write_csv(const submax_rows* rows, const char* path);
void submax_rows_free(submax_rows* rows);

/* ---- hidden-element hardness experiment ---- */

typedef struct submax_adversarial_report {
  int trials;
  int distinguished;
  double rate;
  double bound;
  double sigma;
  uint64_t max_queries;
} submax_adversarial_report;

submax_status submax_adversarial_trials(const char* algorithm, int n, int c, int k, int trials,
                                        uint64_t seed, submax_adversarial_report* report,
                                        submax_rows** rows_out /* nullable */);

/* ---- verification ---- */

typedef void (*submax_log_fn)(const char* line, void* user);

/* Runs the full verification suite; returns SUBMAX_OK or
 * SUBMAX_ERR_VERIFY. Lines go to the callback, or stdout when null. */
submax_status submax_verify(submax_log_fn log, void* user);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUBMAX_H */
