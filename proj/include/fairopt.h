/* C interface to the fairopt solver library.
 *
 * All functions returning int use the FAIROPT_* status codes; on failure a
 * thread-local message is available via fairopt_last_error(). Handles are
 * opaque and must be released with the matching *_destroy function.
 */
#ifndef FAIROPT_H
#define FAIROPT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define FAIROPT_OK 0
#define FAIROPT_ERR_INVALID 1  /* bad argument or precondition violation */
#define FAIROPT_ERR_CAPACITY 2 /* instance too large for an exact subroutine */
#define FAIROPT_ERR_PARSE 3    /* malformed instance file */
#define FAIROPT_ERR_IO 4       /* file system failure */
#define FAIROPT_ERR_INTERNAL 5

#define FAIROPT_KIND_ASSIGNMENT 0
#define FAIROPT_KIND_MATCHING 1

#define FAIROPT_INIT_UNIFORM 0
#define FAIROPT_INIT_RANK_BASED 1

#define FAIROPT_SIGN_PAPER 0
#define FAIROPT_SIGN_DESCENT 1

typedef struct fairopt_weights fairopt_weights;
typedef struct fairopt_instance fairopt_instance;
typedef struct fairopt_report fairopt_report;

const char* fairopt_version(void);
const char* fairopt_last_error(void);

/* ---- fairness weights ---------------------------------------------- */

/* scheme: "inverse-square" or "classic-gini"; custom must be NULL then.
 * scheme "custom" takes n strictly decreasing positive values. */
int fairopt_weights_create(int n, const char* scheme, const double* custom,
                           fairopt_weights** out);
void fairopt_weights_destroy(fairopt_weights* w);
int fairopt_weights_size(const fairopt_weights* w);
/* w and deltas may each be NULL; otherwise they receive n values. */
int fairopt_weights_get(const fairopt_weights* wv, double* w, double* deltas);
/* Generalized Gini index of a length-n value vector. */
int fairopt_ggi(const fairopt_weights* w, const double* values, int n, double* out);

/* ---- instances ------------------------------------------------------ */

int fairopt_gen_assignment(int n, int d, uint64_t seed, fairopt_instance** out);
int fairopt_gen_matching(int n, int d, uint64_t seed, fairopt_instance** out);
int fairopt_instance_read(const char* path, fairopt_instance** out);
int fairopt_instance_write(const fairopt_instance* inst, const char* path);
void fairopt_instance_destroy(fairopt_instance* inst);
int fairopt_instance_kind(const fairopt_instance* inst); /* FAIROPT_KIND_* */
int fairopt_instance_n(const fairopt_instance* inst);
/* Returns 1 and fills d/seed when generation provenance is recorded,
 * 0 otherwise. d and seed may be NULL. */
int fairopt_instance_provenance(const fairopt_instance* inst, int* d, uint64_t* seed);

/* ---- solver --------------------------------------------------------- */

typedef struct {
    int max_iter;
    double rho0;
    int halving_patience;
    double y_change_tol;
    int init_strategy;    /* FAIROPT_INIT_* */
    int subgradient_sign; /* FAIROPT_SIGN_* */
} fairopt_solver_config;

void fairopt_solver_config_default(fairopt_solver_config* cfg);

int fairopt_solve(const fairopt_instance* inst, const fairopt_weights* w,
                  const fairopt_solver_config* cfg, fairopt_report** out);
void fairopt_report_destroy(fairopt_report* rep);
double fairopt_report_best_ggi(const fairopt_report* rep);
/* Best (smallest) Lagrangian upper bound seen across iterations. */
double fairopt_report_upper_bound(const fairopt_report* rep);
int fairopt_report_iterations(const fairopt_report* rep);
int fairopt_report_certificate(const fairopt_report* rep);
double fairopt_report_time_ms(const fairopt_report* rep);
/* ggi and ub may each be NULL; otherwise they receive one value per
 * iteration. */
int fairopt_report_iteration_values(const fairopt_report* rep, double* ggi, double* ub);
/* Best solution found. Assignment: sel[i] = 0-based column of component i
 * (len >= n). Matching: sel[v] = 0-based partner of vertex v (len >= 2n). */
int fairopt_report_solution(const fairopt_report* rep, int* sel, size_t len);

/* ---- exact oracle and LP export ------------------------------------- */

/* Exhaustive optimum; sel uses the fairopt_report_solution encoding and may
 * be NULL. Fails with FAIROPT_ERR_CAPACITY beyond the enumeration caps
 * (assignment n <= 8, matching 2n <= 10). */
int fairopt_exact(const fairopt_instance* inst, const fairopt_weights* w,
                  double* opt_value, int* sel, size_t sel_len);
int fairopt_export_lp(const fairopt_instance* inst, const fairopt_weights* w,
                      const char* path);
/* (opt - sol) * 100 / opt; requires opt > 0. */
int fairopt_gap(double opt, double sol, double* out);

#ifdef __cplusplus
}
#endif

#endif /* FAIROPT_H */
