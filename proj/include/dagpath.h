/*
 * dagpath -- path problems in weighted DAGs: null-weight, exact-weight,
 * exact-length and irreducible (induced) paths, plus the subset-sum and
 * CNF-SAT instance transformations that make the first, second and fourth
 * of them hard, exhaustive reference oracles, and a randomized round-trip
 * verification harness.
 *
 * C interface of the shared library. All functions return a dagpath_status;
 * outputs go through out-parameters. Objects are opaque handles released
 * with their matching _free function. On failure, dagpath_last_error()
 * returns a thread-local human-readable message.
 */

#ifndef DAGPATH_H
#define DAGPATH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dagpath_status {
    DAGPATH_OK = 0,
    DAGPATH_ERR_NULL_PTR,
    DAGPATH_ERR_SYNTAX,
    DAGPATH_ERR_COUNT_MISMATCH,
    DAGPATH_ERR_HEADER_MISMATCH,
    DAGPATH_ERR_DUPLICATE_VARIABLE,
    DAGPATH_ERR_CYCLIC_GRAPH,
    DAGPATH_ERR_DUPLICATE_ARC,
    DAGPATH_ERR_SELF_LOOP,
    DAGPATH_ERR_UNKNOWN_VERTEX,
    DAGPATH_ERR_NOT_A_PATH,
    DAGPATH_ERR_ENDPOINTS_EQUAL,
    DAGPATH_ERR_NEGATIVE_WEIGHT,
    DAGPATH_ERR_INPUT_TOO_LARGE,
    DAGPATH_ERR_RESOURCE_LIMIT,
    DAGPATH_ERR_EMPTY_FORMULA,
    DAGPATH_ERR_DIRECT_ARC_PATH,
    DAGPATH_ERR_INDEX_OUT_OF_RANGE,
    DAGPATH_ERR_CONTRADICTORY_LITERALS,
    DAGPATH_ERR_WRONG_LENGTH,
    DAGPATH_ERR_UNSATISFIED,
    DAGPATH_ERR_ORACLE_LIMIT,
    DAGPATH_ERR_INVALID_ARGUMENT,
    DAGPATH_ERR_BUFFER_TOO_SMALL,
    DAGPATH_ERR_INTERNAL
} dagpath_status;

const char* dagpath_status_name(dagpath_status status);

/* Thread-local message describing the most recent failure ("" when none). */
const char* dagpath_last_error(void);
void dagpath_clear_last_error(void);

/* Strings returned through char** out-parameters are released with this. */
void dagpath_string_free(char* text);

/* ------------------------------------------------------------------ */
/* weighted DAGs                                                       */

typedef struct dagpath_dag dagpath_dag;

dagpath_status dagpath_dag_create(int32_t num_vertices, const int32_t* tails,
                                  const int32_t* heads, const int64_t* weights,
                                  size_t num_arcs, int32_t source, int32_t target,
                                  dagpath_dag** out);
void dagpath_dag_free(dagpath_dag* dag);

int32_t dagpath_dag_num_vertices(const dagpath_dag* dag);
size_t dagpath_dag_num_arcs(const dagpath_dag* dag);
int32_t dagpath_dag_source(const dagpath_dag* dag);
int32_t dagpath_dag_target(const dagpath_dag* dag);
dagpath_status dagpath_dag_arc(const dagpath_dag* dag, size_t index, int32_t* tail,
                               int32_t* head, int64_t* weight);
int dagpath_dag_has_arc(const dagpath_dag* dag, int32_t tail, int32_t head);

/* "p dag <V> <A> <s> <t>" plus one "<tail> <head> <weight>" line per arc;
 * 'c' comment lines are skipped. The serializer emits arcs sorted by
 * (tail, head) and is byte-deterministic. */
dagpath_status dagpath_dag_parse(const char* text, dagpath_dag** out);
dagpath_status dagpath_dag_serialize(const dagpath_dag* dag, char** out_text);

/* out_order must hold num_vertices entries. */
dagpath_status dagpath_topological_order(const dagpath_dag* dag, int32_t* out_order);

/* *out_present is 1 iff the DAG is a linear order (complete transitive
 * tournament); the certificate permutation is copied when out_order is
 * non-NULL. */
dagpath_status dagpath_is_linear_order(const dagpath_dag* dag, int* out_present,
                                       int32_t* out_order);

/* weight_sum and length are meaningful only when *out_is_path is 1. */
dagpath_status dagpath_check_path(const dagpath_dag* dag, const int32_t* vertices,
                                  size_t num_vertices, int* out_is_path,
                                  int64_t* out_weight_sum, int32_t* out_length);

dagpath_status dagpath_is_irreducible(const dagpath_dag* dag, const int32_t* vertices,
                                      size_t num_vertices, int* out_flag);

/* ------------------------------------------------------------------ */
/* instances                                                           */

typedef struct dagpath_subsetsum dagpath_subsetsum;

dagpath_status dagpath_subsetsum_create(const int64_t* elements, size_t n,
                                        dagpath_subsetsum** out);
void dagpath_subsetsum_free(dagpath_subsetsum* instance);
size_t dagpath_subsetsum_size(const dagpath_subsetsum* instance);
dagpath_status dagpath_subsetsum_element(const dagpath_subsetsum* instance, size_t index_1based,
                                         int64_t* out);
/* "p ss <n>" followed by n signed integers. */
dagpath_status dagpath_subsetsum_parse(const char* text, dagpath_subsetsum** out);
dagpath_status dagpath_subsetsum_serialize(const dagpath_subsetsum* instance, char** out_text);

typedef struct dagpath_cnf dagpath_cnf;

dagpath_status dagpath_cnf_create(int32_t num_vars, dagpath_cnf** out);
/* DIMACS-style signed literals, no terminating zero. Clauses must not repeat
 * a variable. An empty clause (num_literals 0) is allowed. */
dagpath_status dagpath_cnf_add_clause(dagpath_cnf* formula, const int32_t* literals,
                                      size_t num_literals);
void dagpath_cnf_free(dagpath_cnf* formula);
int32_t dagpath_cnf_num_vars(const dagpath_cnf* formula);
size_t dagpath_cnf_num_clauses(const dagpath_cnf* formula);
size_t dagpath_cnf_clause_width(const dagpath_cnf* formula, size_t clause);
dagpath_status dagpath_cnf_literal(const dagpath_cnf* formula, size_t clause, size_t position,
                                   int32_t* out_literal);
/* Standard DIMACS CNF. */
dagpath_status dagpath_cnf_parse(const char* text, dagpath_cnf** out);
dagpath_status dagpath_cnf_serialize(const dagpath_cnf* formula, char** out_text);

/* ------------------------------------------------------------------ */
/* solvers                                                             */

typedef struct dagpath_limits {
    uint64_t state_budget; /* null-path (vertex, sum) states   */
    uint64_t table_budget; /* K-path (vertex, sum) table cells */
    uint64_t node_budget;  /* irreducible-path search nodes    */
} dagpath_limits;

void dagpath_limits_default(dagpath_limits* limits);

typedef struct dagpath_outcome dagpath_outcome;

/* limits may be NULL for defaults. */
dagpath_status dagpath_solve_null(const dagpath_dag* dag, const dagpath_limits* limits,
                                  dagpath_outcome** out);
dagpath_status dagpath_solve_ksum(const dagpath_dag* dag, int64_t k,
                                  const dagpath_limits* limits, dagpath_outcome** out);
dagpath_status dagpath_solve_length(const dagpath_dag* dag, int64_t k, dagpath_outcome** out);
dagpath_status dagpath_solve_irr(const dagpath_dag* dag, int64_t k,
                                 const dagpath_limits* limits, dagpath_outcome** out);

void dagpath_outcome_free(dagpath_outcome* outcome);
int dagpath_outcome_answer(const dagpath_outcome* outcome); /* 1 = yes */
size_t dagpath_outcome_witness_size(const dagpath_outcome* outcome); /* 0 when no */
dagpath_status dagpath_outcome_witness(const dagpath_outcome* outcome, int32_t* out_vertices,
                                       size_t capacity);
uint64_t dagpath_outcome_states_explored(const dagpath_outcome* outcome);
double dagpath_outcome_elapsed_ms(const dagpath_outcome* outcome);

typedef enum dagpath_criterion {
    DAGPATH_CRITERION_NULL_WEIGHT = 0,
    DAGPATH_CRITERION_WEIGHT_K,
    DAGPATH_CRITERION_LENGTH_K,
    DAGPATH_CRITERION_IRREDUCIBLE_K
} dagpath_criterion;

/* Polynomial witness check; invalid paths yield *out_flag = 0, not an error. */
dagpath_status dagpath_check_witness(const dagpath_dag* dag, const int32_t* vertices,
                                     size_t num_vertices, dagpath_criterion criterion,
                                     int64_t k, int* out_flag);

typedef struct dagpath_path_list dagpath_path_list;

/* All source-to-target paths in lexicographic order, truncated at cap. */
dagpath_status dagpath_enumerate_paths(const dagpath_dag* dag, size_t cap,
                                       dagpath_path_list** out);
void dagpath_path_list_free(dagpath_path_list* list);
size_t dagpath_path_list_size(const dagpath_path_list* list);
int dagpath_path_list_truncated(const dagpath_path_list* list);
size_t dagpath_path_list_path_size(const dagpath_path_list* list, size_t index);
dagpath_status dagpath_path_list_path(const dagpath_path_list* list, size_t index,
                                      int32_t* out_vertices, size_t capacity);

/* Exhaustive oracles. out_indices needs room for the instance size; the
 * assignment buffer needs one byte per variable. *out_found reports whether
 * a witness exists. */
dagpath_status dagpath_subsetsum_oracle(const dagpath_subsetsum* instance, int32_t bound,
                                        int* out_found, int32_t* out_indices,
                                        size_t capacity, size_t* out_size);
dagpath_status dagpath_sat_oracle(const dagpath_cnf* formula, int32_t bound, int* out_found,
                                  uint8_t* out_values, size_t capacity);

/* ------------------------------------------------------------------ */
/* reductions and witness maps                                         */

dagpath_status dagpath_reduce_ss_to_nullpath(const dagpath_subsetsum* instance,
                                             dagpath_dag** out);
/* out_k receives (n + 1) * P and out_p the translation P; either may be NULL. */
dagpath_status dagpath_reduce_ss_to_kpath(const dagpath_subsetsum* instance, dagpath_dag** out,
                                          int64_t* out_k, int64_t* out_p);

typedef struct dagpath_irr_instance dagpath_irr_instance;

dagpath_status dagpath_reduce_sat_to_irrpath(const dagpath_cnf* formula,
                                             dagpath_irr_instance** out);
void dagpath_irr_instance_free(dagpath_irr_instance* instance);
/* Borrowed pointer, valid while the instance lives. */
const dagpath_dag* dagpath_irr_instance_dag(const dagpath_irr_instance* instance);
int64_t dagpath_irr_instance_k(const dagpath_irr_instance* instance);
/* Maps a literal vertex back to its (0-based) clause and signed literal. */
dagpath_status dagpath_irr_instance_site(const dagpath_irr_instance* instance, int32_t vertex,
                                         int32_t* out_clause, int32_t* out_literal);

dagpath_status dagpath_extract_subset(const int32_t* path, size_t path_size,
                                      const dagpath_subsetsum* instance, int32_t* out_indices,
                                      size_t capacity, size_t* out_size);
dagpath_status dagpath_lift_subset(const int32_t* indices, size_t num_indices,
                                   const dagpath_subsetsum* instance, int32_t* out_path,
                                   size_t capacity, size_t* out_size);
dagpath_status dagpath_extract_assignment(const int32_t* path, size_t path_size,
                                          const dagpath_irr_instance* instance,
                                          const dagpath_cnf* formula, uint8_t* out_values,
                                          size_t capacity);
dagpath_status dagpath_lift_assignment(const uint8_t* values, size_t num_values,
                                       const dagpath_irr_instance* instance,
                                       const dagpath_cnf* formula, int32_t* out_path,
                                       size_t capacity, size_t* out_size);

/* ------------------------------------------------------------------ */
/* harness                                                             */

dagpath_status dagpath_gen_subsetsum(int32_t max_n, int64_t value_lo, int64_t value_hi,
                                     uint64_t seed, dagpath_subsetsum** out);
dagpath_status dagpath_gen_cnf(int32_t max_vars, int32_t max_clauses, int32_t max_width,
                               uint64_t seed, dagpath_cnf** out);
dagpath_status dagpath_gen_dag(int32_t num_vertices, double arc_probability, int64_t weight_lo,
                               int64_t weight_hi, uint64_t seed, dagpath_dag** out);

typedef enum dagpath_campaign_kind {
    DAGPATH_CAMPAIGN_NULLPATH = 0,
    DAGPATH_CAMPAIGN_KPATH,
    DAGPATH_CAMPAIGN_IRRPATH,
    DAGPATH_CAMPAIGN_SOLVER_EQUIVALENCE
} dagpath_campaign_kind;

typedef enum dagpath_mutation {
    DAGPATH_MUTATION_NONE = 0,
    /* Corrupts the reduction by dropping the +1 on the direct source-target
     * arc. A healthy campaign must then report disagreements. */
    DAGPATH_MUTATION_DROP_DIRECT_ARC_BONUS
} dagpath_mutation;

typedef struct dagpath_campaign_config {
    dagpath_campaign_kind kind;
    int32_t trials; /* random trials; pinned examples are prepended on top */
    uint64_t seed;
    int32_t max_n;
    int64_t value_lo;
    int64_t value_hi;
    int32_t max_vars;
    int32_t max_clauses;
    int32_t max_clause_width;
    int32_t dag_size;
    double arc_probability; /* 0 cycles 0.2 / 0.5 / 0.8 */
    dagpath_mutation mutation;
    dagpath_limits limits;
} dagpath_campaign_config;

void dagpath_campaign_config_default(dagpath_campaign_config* config,
                                     dagpath_campaign_kind kind);

typedef struct dagpath_report dagpath_report;

dagpath_status dagpath_run_campaign(const dagpath_campaign_config* config,
                                   dagpath_report** out);
void dagpath_report_free(dagpath_report* report);
size_t dagpath_report_trials(const dagpath_report* report);
size_t dagpath_report_agreements(const dagpath_report* report);
size_t dagpath_report_failures(const dagpath_report* report);
/* One JSON object per trial plus a summary object, newline separated. */
dagpath_status dagpath_report_to_jsonl(const dagpath_report* report, char** out_text);

/* ------------------------------------------------------------------ */
/* witness documents                                                   */

/* Single JSON object with fixed key order: problem, answer, k (when has_k),
 * witness, weight_sum, length, stats. */
dagpath_status dagpath_emit_witness(const dagpath_outcome* outcome, const char* problem_tag,
                                    int has_k, int64_t k, const dagpath_dag* dag,
                                    char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DAGPATH_H */
