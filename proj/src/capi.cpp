#include <dagpath.h>

#include <cstring>
#include <new>
#include <string>

#include "graph.hpp"
#include "harness.hpp"
#include "instances.hpp"
#include "io.hpp"
#include "reductions.hpp"
#include "solvers.hpp"

struct dagpath_dag {
    dagpath::WeightedDag value;
};
struct dagpath_subsetsum {
    dagpath::SubsetSumInstance value;
};
struct dagpath_cnf {
    dagpath::CnfFormula value;
};
struct dagpath_outcome {
    dagpath::SolveOutcome value;
};
struct dagpath_path_list {
    dagpath::PathEnumeration value;
};
struct dagpath_irr_instance {
    dagpath::IrrPathInstance value;
    dagpath_dag* view = nullptr; // owned copy handed out by _dag()
};
struct dagpath_report {
    dagpath::VerificationReport value;
};

namespace {

thread_local std::string tl_error;

dagpath_status status_of(dagpath::errc code) {
    using dagpath::errc;
    switch (code) {
        case errc::syntax_error: return DAGPATH_ERR_SYNTAX;
        case errc::count_mismatch: return DAGPATH_ERR_COUNT_MISMATCH;
        case errc::header_mismatch: return DAGPATH_ERR_HEADER_MISMATCH;
        case errc::duplicate_variable_in_clause: return DAGPATH_ERR_DUPLICATE_VARIABLE;
        case errc::cyclic_graph: return DAGPATH_ERR_CYCLIC_GRAPH;
        case errc::duplicate_arc: return DAGPATH_ERR_DUPLICATE_ARC;
        case errc::self_loop: return DAGPATH_ERR_SELF_LOOP;
        case errc::unknown_vertex: return DAGPATH_ERR_UNKNOWN_VERTEX;
        case errc::not_a_path: return DAGPATH_ERR_NOT_A_PATH;
        case errc::endpoints_equal: return DAGPATH_ERR_ENDPOINTS_EQUAL;
        case errc::negative_weight: return DAGPATH_ERR_NEGATIVE_WEIGHT;
        case errc::input_too_large: return DAGPATH_ERR_INPUT_TOO_LARGE;
        case errc::resource_limit: return DAGPATH_ERR_RESOURCE_LIMIT;
        case errc::empty_formula: return DAGPATH_ERR_EMPTY_FORMULA;
        case errc::direct_arc_path: return DAGPATH_ERR_DIRECT_ARC_PATH;
        case errc::index_out_of_range: return DAGPATH_ERR_INDEX_OUT_OF_RANGE;
        case errc::contradictory_literals: return DAGPATH_ERR_CONTRADICTORY_LITERALS;
        case errc::wrong_length: return DAGPATH_ERR_WRONG_LENGTH;
        case errc::unsatisfied: return DAGPATH_ERR_UNSATISFIED;
        case errc::oracle_limit: return DAGPATH_ERR_ORACLE_LIMIT;
        case errc::invalid_argument: return DAGPATH_ERR_INVALID_ARGUMENT;
        case errc::internal_error: return DAGPATH_ERR_INTERNAL;
    }
    return DAGPATH_ERR_INTERNAL;
}

template <typename Fn>
dagpath_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        tl_error.clear();
        return DAGPATH_OK;
    } catch (const dagpath::Error& e) {
        tl_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        tl_error = "out of memory";
        return DAGPATH_ERR_INTERNAL;
    } catch (const std::exception& e) {
        tl_error = e.what();
        return DAGPATH_ERR_INTERNAL;
    }
}

dagpath_status null_ptr(const char* name) {
    tl_error = std::string("null pointer: ") + name;
    return DAGPATH_ERR_NULL_PTR;
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

dagpath_status copy_vertices(const std::vector<int>& path, int32_t* out, size_t capacity,
                             size_t* out_size) {
    if (out_size) *out_size = path.size();
    if (path.size() > capacity || (!out && !path.empty())) {
        tl_error = "output buffer too small: need " + std::to_string(path.size());
        return DAGPATH_ERR_BUFFER_TOO_SMALL;
    }
    for (size_t i = 0; i < path.size(); ++i) out[i] = path[i];
    return DAGPATH_OK;
}

const dagpath::SolverLimits to_limits(const dagpath_limits* limits) {
    if (!limits) return {};
    return {limits->state_budget, limits->table_budget, limits->node_budget};
}

} // namespace

extern "C" {

const char* dagpath_status_name(dagpath_status status) {
    switch (status) {
        case DAGPATH_OK: return "OK";
        case DAGPATH_ERR_NULL_PTR: return "NullPointer";
        case DAGPATH_ERR_SYNTAX: return "SyntaxError";
        case DAGPATH_ERR_COUNT_MISMATCH: return "CountMismatch";
        case DAGPATH_ERR_HEADER_MISMATCH: return "HeaderMismatch";
        case DAGPATH_ERR_DUPLICATE_VARIABLE: return "DuplicateVariableInClause";
        case DAGPATH_ERR_CYCLIC_GRAPH: return "CyclicGraph";
        case DAGPATH_ERR_DUPLICATE_ARC: return "DuplicateArc";
        case DAGPATH_ERR_SELF_LOOP: return "SelfLoop";
        case DAGPATH_ERR_UNKNOWN_VERTEX: return "UnknownVertex";
        case DAGPATH_ERR_NOT_A_PATH: return "NotAPath";
        case DAGPATH_ERR_ENDPOINTS_EQUAL: return "EndpointsEqual";
        case DAGPATH_ERR_NEGATIVE_WEIGHT: return "NegativeWeight";
        case DAGPATH_ERR_INPUT_TOO_LARGE: return "InputTooLarge";
        case DAGPATH_ERR_RESOURCE_LIMIT: return "ResourceLimit";
        case DAGPATH_ERR_EMPTY_FORMULA: return "EmptyFormula";
        case DAGPATH_ERR_DIRECT_ARC_PATH: return "DirectArcPath";
        case DAGPATH_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
        case DAGPATH_ERR_CONTRADICTORY_LITERALS: return "ContradictoryLiterals";
        case DAGPATH_ERR_WRONG_LENGTH: return "WrongLength";
        case DAGPATH_ERR_UNSATISFIED: return "Unsatisfied";
        case DAGPATH_ERR_ORACLE_LIMIT: return "OracleLimit";
        case DAGPATH_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case DAGPATH_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
        case DAGPATH_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownError";
}

const char* dagpath_last_error(void) {
    return tl_error.c_str();
}

void dagpath_clear_last_error(void) {
    tl_error.clear();
}

void dagpath_string_free(char* text) {
    delete[] text;
}

/* ---- DAG ---- */

dagpath_status dagpath_dag_create(int32_t num_vertices, const int32_t* tails,
                                  const int32_t* heads, const int64_t* weights,
                                  size_t num_arcs, int32_t source, int32_t target,
                                  dagpath_dag** out) {
    if (!out) return null_ptr("out");
    if (num_arcs > 0 && (!tails || !heads || !weights)) return null_ptr("arc arrays");
    *out = nullptr;
    return guarded([&] {
        std::vector<dagpath::Arc> arcs(num_arcs);
        for (size_t i = 0; i < num_arcs; ++i) arcs[i] = {tails[i], heads[i], weights[i]};
        *out = new dagpath_dag{
            dagpath::WeightedDag(num_vertices, std::move(arcs), source, target)};
    });
}

void dagpath_dag_free(dagpath_dag* dag) {
    delete dag;
}

int32_t dagpath_dag_num_vertices(const dagpath_dag* dag) {
    return dag ? dag->value.num_vertices() : 0;
}

size_t dagpath_dag_num_arcs(const dagpath_dag* dag) {
    return dag ? dag->value.arcs().size() : 0;
}

int32_t dagpath_dag_source(const dagpath_dag* dag) {
    return dag ? dag->value.source() : -1;
}

int32_t dagpath_dag_target(const dagpath_dag* dag) {
    return dag ? dag->value.target() : -1;
}

dagpath_status dagpath_dag_arc(const dagpath_dag* dag, size_t index, int32_t* tail,
                               int32_t* head, int64_t* weight) {
    if (!dag) return null_ptr("dag");
    return guarded([&] {
        if (index >= dag->value.arcs().size())
            dagpath::fail(dagpath::errc::index_out_of_range, "arc index out of range");
        const dagpath::Arc& arc = dag->value.arcs()[index];
        if (tail) *tail = arc.tail;
        if (head) *head = arc.head;
        if (weight) *weight = arc.weight;
    });
}

int dagpath_dag_has_arc(const dagpath_dag* dag, int32_t tail, int32_t head) {
    return dag && dag->value.has_arc(tail, head) ? 1 : 0;
}

dagpath_status dagpath_dag_parse(const char* text, dagpath_dag** out) {
    if (!text) return null_ptr("text");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] { *out = new dagpath_dag{dagpath::parse_dag(text)}; });
}

dagpath_status dagpath_dag_serialize(const dagpath_dag* dag, char** out_text) {
    if (!dag) return null_ptr("dag");
    if (!out_text) return null_ptr("out_text");
    return guarded([&] { *out_text = copy_string(dagpath::serialize_dag(dag->value)); });
}

dagpath_status dagpath_topological_order(const dagpath_dag* dag, int32_t* out_order) {
    if (!dag) return null_ptr("dag");
    if (!out_order) return null_ptr("out_order");
    return guarded([&] {
        const std::vector<int> order = dagpath::topological_order(dag->value);
        for (size_t i = 0; i < order.size(); ++i) out_order[i] = order[i];
    });
}

dagpath_status dagpath_is_linear_order(const dagpath_dag* dag, int* out_present,
                                       int32_t* out_order) {
    if (!dag) return null_ptr("dag");
    if (!out_present) return null_ptr("out_present");
    return guarded([&] {
        const auto order = dagpath::is_linear_order(dag->value);
        *out_present = order.has_value() ? 1 : 0;
        if (order && out_order)
            for (size_t i = 0; i < order->size(); ++i) out_order[i] = (*order)[i];
    });
}

dagpath_status dagpath_check_path(const dagpath_dag* dag, const int32_t* vertices,
                                  size_t num_vertices, int* out_is_path,
                                  int64_t* out_weight_sum, int32_t* out_length) {
    if (!dag) return null_ptr("dag");
    if (num_vertices > 0 && !vertices) return null_ptr("vertices");
    return guarded([&] {
        const std::vector<int> path(vertices, vertices + num_vertices);
        const dagpath::PathCheck pc = dagpath::check_path(dag->value, path);
        if (out_is_path) *out_is_path = pc.is_path ? 1 : 0;
        if (out_weight_sum) *out_weight_sum = pc.weight_sum;
        if (out_length) *out_length = pc.length;
    });
}

dagpath_status dagpath_is_irreducible(const dagpath_dag* dag, const int32_t* vertices,
                                      size_t num_vertices, int* out_flag) {
    if (!dag) return null_ptr("dag");
    if (num_vertices > 0 && !vertices) return null_ptr("vertices");
    if (!out_flag) return null_ptr("out_flag");
    return guarded([&] {
        const std::vector<int> path(vertices, vertices + num_vertices);
        *out_flag = dagpath::is_irreducible(dag->value, path) ? 1 : 0;
    });
}

/* ---- instances ---- */

dagpath_status dagpath_subsetsum_create(const int64_t* elements, size_t n,
                                        dagpath_subsetsum** out) {
    if (!out) return null_ptr("out");
    if (n > 0 && !elements) return null_ptr("elements");
    *out = nullptr;
    return guarded([&] {
        dagpath::SubsetSumInstance instance;
        instance.elements.assign(elements, elements + n);
        *out = new dagpath_subsetsum{std::move(instance)};
    });
}

void dagpath_subsetsum_free(dagpath_subsetsum* instance) {
    delete instance;
}

size_t dagpath_subsetsum_size(const dagpath_subsetsum* instance) {
    return instance ? instance->value.elements.size() : 0;
}

dagpath_status dagpath_subsetsum_element(const dagpath_subsetsum* instance, size_t index_1based,
                                         int64_t* out) {
    if (!instance) return null_ptr("instance");
    if (!out) return null_ptr("out");
    return guarded([&] {
        if (index_1based < 1 || index_1based > instance->value.elements.size())
            dagpath::fail(dagpath::errc::index_out_of_range, "element index out of range");
        *out = instance->value.elements[index_1based - 1];
    });
}

dagpath_status dagpath_subsetsum_parse(const char* text, dagpath_subsetsum** out) {
    if (!text) return null_ptr("text");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] { *out = new dagpath_subsetsum{dagpath::parse_subsetsum(text)}; });
}

dagpath_status dagpath_subsetsum_serialize(const dagpath_subsetsum* instance, char** out_text) {
    if (!instance) return null_ptr("instance");
    if (!out_text) return null_ptr("out_text");
    return guarded(
        [&] { *out_text = copy_string(dagpath::serialize_subsetsum(instance->value)); });
}

dagpath_status dagpath_cnf_create(int32_t num_vars, dagpath_cnf** out) {
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        if (num_vars < 0)
            dagpath::fail(dagpath::errc::invalid_argument, "negative variable count");
        dagpath::CnfFormula formula;
        formula.num_vars = num_vars;
        *out = new dagpath_cnf{std::move(formula)};
    });
}

dagpath_status dagpath_cnf_add_clause(dagpath_cnf* formula, const int32_t* literals,
                                      size_t num_literals) {
    if (!formula) return null_ptr("formula");
    if (num_literals > 0 && !literals) return null_ptr("literals");
    return guarded([&] {
        dagpath::Clause clause;
        clause.reserve(num_literals);
        for (size_t i = 0; i < num_literals; ++i) {
            if (literals[i] == 0)
                dagpath::fail(dagpath::errc::invalid_argument, "literal 0 is reserved");
            clause.push_back({literals[i] < 0 ? -literals[i] : literals[i], literals[i] < 0});
        }
        dagpath::CnfFormula candidate = formula->value;
        candidate.clauses.push_back(std::move(clause));
        dagpath::validate_cnf(candidate);
        formula->value = std::move(candidate);
    });
}

void dagpath_cnf_free(dagpath_cnf* formula) {
    delete formula;
}

int32_t dagpath_cnf_num_vars(const dagpath_cnf* formula) {
    return formula ? formula->value.num_vars : 0;
}

size_t dagpath_cnf_num_clauses(const dagpath_cnf* formula) {
    return formula ? formula->value.clauses.size() : 0;
}

size_t dagpath_cnf_clause_width(const dagpath_cnf* formula, size_t clause) {
    if (!formula || clause >= formula->value.clauses.size()) return 0;
    return formula->value.clauses[clause].size();
}

dagpath_status dagpath_cnf_literal(const dagpath_cnf* formula, size_t clause, size_t position,
                                   int32_t* out_literal) {
    if (!formula) return null_ptr("formula");
    if (!out_literal) return null_ptr("out_literal");
    return guarded([&] {
        if (clause >= formula->value.clauses.size() ||
            position >= formula->value.clauses[clause].size())
            dagpath::fail(dagpath::errc::index_out_of_range, "clause or literal out of range");
        const dagpath::Literal& lit = formula->value.clauses[clause][position];
        *out_literal = lit.negated ? -lit.var : lit.var;
    });
}

dagpath_status dagpath_cnf_parse(const char* text, dagpath_cnf** out) {
    if (!text) return null_ptr("text");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] { *out = new dagpath_cnf{dagpath::parse_cnf(text)}; });
}

dagpath_status dagpath_cnf_serialize(const dagpath_cnf* formula, char** out_text) {
    if (!formula) return null_ptr("formula");
    if (!out_text) return null_ptr("out_text");
    return guarded([&] { *out_text = copy_string(dagpath::serialize_cnf(formula->value)); });
}

/* ---- solvers ---- */

void dagpath_limits_default(dagpath_limits* limits) {
    if (!limits) return;
    const dagpath::SolverLimits defaults;
    limits->state_budget = defaults.state_budget;
    limits->table_budget = defaults.table_budget;
    limits->node_budget = defaults.node_budget;
}

dagpath_status dagpath_solve_null(const dagpath_dag* dag, const dagpath_limits* limits,
                                  dagpath_outcome** out) {
    if (!dag) return null_ptr("dag");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        *out = new dagpath_outcome{
            dagpath::solve_null_weighted_path(dag->value, to_limits(limits))};
    });
}

dagpath_status dagpath_solve_ksum(const dagpath_dag* dag, int64_t k,
                                  const dagpath_limits* limits, dagpath_outcome** out) {
    if (!dag) return null_ptr("dag");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        *out = new dagpath_outcome{
            dagpath::solve_k_weighted_path(dag->value, k, to_limits(limits))};
    });
}

dagpath_status dagpath_solve_length(const dagpath_dag* dag, int64_t k, dagpath_outcome** out) {
    if (!dag) return null_ptr("dag");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded(
        [&] { *out = new dagpath_outcome{dagpath::solve_path_of_length_k(dag->value, k)}; });
}

dagpath_status dagpath_solve_irr(const dagpath_dag* dag, int64_t k,
                                 const dagpath_limits* limits, dagpath_outcome** out) {
    if (!dag) return null_ptr("dag");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        *out = new dagpath_outcome{
            dagpath::solve_irreducible_path(dag->value, k, to_limits(limits))};
    });
}

void dagpath_outcome_free(dagpath_outcome* outcome) {
    delete outcome;
}

int dagpath_outcome_answer(const dagpath_outcome* outcome) {
    return outcome && outcome->value.yes ? 1 : 0;
}

size_t dagpath_outcome_witness_size(const dagpath_outcome* outcome) {
    if (!outcome || !outcome->value.witness) return 0;
    return outcome->value.witness->size();
}

dagpath_status dagpath_outcome_witness(const dagpath_outcome* outcome, int32_t* out_vertices,
                                       size_t capacity) {
    if (!outcome) return null_ptr("outcome");
    if (!out_vertices) return null_ptr("out_vertices");
    if (!outcome->value.witness) {
        tl_error = "outcome has no witness";
        return DAGPATH_ERR_INVALID_ARGUMENT;
    }
    return copy_vertices(*outcome->value.witness, out_vertices, capacity, nullptr);
}

uint64_t dagpath_outcome_states_explored(const dagpath_outcome* outcome) {
    return outcome ? outcome->value.stats.states_explored : 0;
}

double dagpath_outcome_elapsed_ms(const dagpath_outcome* outcome) {
    return outcome ? outcome->value.stats.elapsed_seconds * 1000.0 : 0.0;
}

dagpath_status dagpath_check_witness(const dagpath_dag* dag, const int32_t* vertices,
                                     size_t num_vertices, dagpath_criterion criterion,
                                     int64_t k, int* out_flag) {
    if (!dag) return null_ptr("dag");
    if (num_vertices > 0 && !vertices) return null_ptr("vertices");
    if (!out_flag) return null_ptr("out_flag");
    return guarded([&] {
        const std::vector<int> path(vertices, vertices + num_vertices);
        dagpath::Criterion c = dagpath::Criterion::null_weight;
        switch (criterion) {
            case DAGPATH_CRITERION_NULL_WEIGHT: c = dagpath::Criterion::null_weight; break;
            case DAGPATH_CRITERION_WEIGHT_K: c = dagpath::Criterion::weight_k; break;
            case DAGPATH_CRITERION_LENGTH_K: c = dagpath::Criterion::length_k; break;
            case DAGPATH_CRITERION_IRREDUCIBLE_K: c = dagpath::Criterion::irreducible_k; break;
        }
        *out_flag = dagpath::check_witness(dag->value, path, c, k) ? 1 : 0;
    });
}

dagpath_status dagpath_enumerate_paths(const dagpath_dag* dag, size_t cap,
                                       dagpath_path_list** out) {
    if (!dag) return null_ptr("dag");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded(
        [&] { *out = new dagpath_path_list{dagpath::enumerate_paths(dag->value, cap)}; });
}

void dagpath_path_list_free(dagpath_path_list* list) {
    delete list;
}

size_t dagpath_path_list_size(const dagpath_path_list* list) {
    return list ? list->value.paths.size() : 0;
}

int dagpath_path_list_truncated(const dagpath_path_list* list) {
    return list && list->value.truncated ? 1 : 0;
}

size_t dagpath_path_list_path_size(const dagpath_path_list* list, size_t index) {
    if (!list || index >= list->value.paths.size()) return 0;
    return list->value.paths[index].size();
}

dagpath_status dagpath_path_list_path(const dagpath_path_list* list, size_t index,
                                      int32_t* out_vertices, size_t capacity) {
    if (!list) return null_ptr("list");
    if (!out_vertices) return null_ptr("out_vertices");
    if (index >= list->value.paths.size()) {
        tl_error = "path index out of range";
        return DAGPATH_ERR_INDEX_OUT_OF_RANGE;
    }
    return copy_vertices(list->value.paths[index], out_vertices, capacity, nullptr);
}

dagpath_status dagpath_subsetsum_oracle(const dagpath_subsetsum* instance, int32_t bound,
                                        int* out_found, int32_t* out_indices,
                                        size_t capacity, size_t* out_size) {
    if (!instance) return null_ptr("instance");
    if (!out_found) return null_ptr("out_found");
    std::optional<dagpath::SubsetWitness> witness;
    const dagpath_status rc =
        guarded([&] { witness = dagpath::subset_sum_oracle(instance->value, bound); });
    if (rc != DAGPATH_OK) return rc;
    *out_found = witness.has_value() ? 1 : 0;
    if (out_size) *out_size = witness ? witness->indices.size() : 0;
    if (witness && out_indices)
        return copy_vertices(witness->indices, out_indices, capacity, nullptr);
    return DAGPATH_OK;
}

dagpath_status dagpath_sat_oracle(const dagpath_cnf* formula, int32_t bound, int* out_found,
                                  uint8_t* out_values, size_t capacity) {
    if (!formula) return null_ptr("formula");
    if (!out_found) return null_ptr("out_found");
    return guarded([&] {
        const auto assignment = dagpath::sat_oracle(formula->value, bound);
        *out_found = assignment.has_value() ? 1 : 0;
        if (assignment && out_values) {
            if (capacity < assignment->values.size())
                dagpath::fail(dagpath::errc::invalid_argument, "assignment buffer too small");
            for (size_t i = 0; i < assignment->values.size(); ++i)
                out_values[i] = assignment->values[i] ? 1 : 0;
        }
    });
}

/* ---- reductions ---- */

dagpath_status dagpath_reduce_ss_to_nullpath(const dagpath_subsetsum* instance,
                                             dagpath_dag** out) {
    if (!instance) return null_ptr("instance");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded(
        [&] { *out = new dagpath_dag{dagpath::reduce_ss_to_nullpath(instance->value)}; });
}

dagpath_status dagpath_reduce_ss_to_kpath(const dagpath_subsetsum* instance, dagpath_dag** out,
                                          int64_t* out_k, int64_t* out_p) {
    if (!instance) return null_ptr("instance");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        dagpath::KPathInstance reduced = dagpath::reduce_ss_to_kpath(instance->value);
        if (out_k) *out_k = reduced.target_sum;
        if (out_p) *out_p = reduced.shift;
        *out = new dagpath_dag{std::move(reduced.dag)};
    });
}

dagpath_status dagpath_reduce_sat_to_irrpath(const dagpath_cnf* formula,
                                             dagpath_irr_instance** out) {
    if (!formula) return null_ptr("formula");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        auto* instance =
            new dagpath_irr_instance{dagpath::reduce_sat_to_irrpath(formula->value), nullptr};
        instance->view = new dagpath_dag{instance->value.dag};
        *out = instance;
    });
}

void dagpath_irr_instance_free(dagpath_irr_instance* instance) {
    if (!instance) return;
    delete instance->view;
    delete instance;
}

const dagpath_dag* dagpath_irr_instance_dag(const dagpath_irr_instance* instance) {
    return instance ? instance->view : nullptr;
}

int64_t dagpath_irr_instance_k(const dagpath_irr_instance* instance) {
    return instance ? instance->value.path_length : 0;
}

dagpath_status dagpath_irr_instance_site(const dagpath_irr_instance* instance, int32_t vertex,
                                         int32_t* out_clause, int32_t* out_literal) {
    if (!instance) return null_ptr("instance");
    return guarded([&] {
        if (vertex < 1 || vertex > static_cast<int32_t>(instance->value.sites.size()))
            dagpath::fail(dagpath::errc::index_out_of_range, "not a literal vertex");
        const dagpath::LiteralSite& site =
            instance->value.sites[static_cast<size_t>(vertex) - 1];
        if (out_clause) *out_clause = site.clause;
        if (out_literal) *out_literal = site.lit.negated ? -site.lit.var : site.lit.var;
    });
}

dagpath_status dagpath_extract_subset(const int32_t* path, size_t path_size,
                                      const dagpath_subsetsum* instance, int32_t* out_indices,
                                      size_t capacity, size_t* out_size) {
    if (!instance) return null_ptr("instance");
    if (path_size > 0 && !path) return null_ptr("path");
    dagpath::SubsetWitness witness;
    const dagpath_status rc = guarded([&] {
        const std::vector<int> vertices(path, path + path_size);
        witness = dagpath::extract_subset(vertices, instance->value);
    });
    if (rc != DAGPATH_OK) return rc;
    return copy_vertices(witness.indices, out_indices, capacity, out_size);
}

dagpath_status dagpath_lift_subset(const int32_t* indices, size_t num_indices,
                                   const dagpath_subsetsum* instance, int32_t* out_path,
                                   size_t capacity, size_t* out_size) {
    if (!instance) return null_ptr("instance");
    if (num_indices > 0 && !indices) return null_ptr("indices");
    std::vector<int> path;
    const dagpath_status rc = guarded([&] {
        dagpath::SubsetWitness witness;
        witness.indices.assign(indices, indices + num_indices);
        path = dagpath::lift_subset(witness, instance->value);
    });
    if (rc != DAGPATH_OK) return rc;
    return copy_vertices(path, out_path, capacity, out_size);
}

dagpath_status dagpath_extract_assignment(const int32_t* path, size_t path_size,
                                          const dagpath_irr_instance* instance,
                                          const dagpath_cnf* formula, uint8_t* out_values,
                                          size_t capacity) {
    if (!instance) return null_ptr("instance");
    if (!formula) return null_ptr("formula");
    if (path_size > 0 && !path) return null_ptr("path");
    if (!out_values) return null_ptr("out_values");
    return guarded([&] {
        const std::vector<int> vertices(path, path + path_size);
        const dagpath::Assignment assignment =
            dagpath::extract_assignment(vertices, instance->value, formula->value);
        if (capacity < assignment.values.size())
            dagpath::fail(dagpath::errc::invalid_argument, "assignment buffer too small");
        for (size_t i = 0; i < assignment.values.size(); ++i)
            out_values[i] = assignment.values[i] ? 1 : 0;
    });
}

dagpath_status dagpath_lift_assignment(const uint8_t* values, size_t num_values,
                                       const dagpath_irr_instance* instance,
                                       const dagpath_cnf* formula, int32_t* out_path,
                                       size_t capacity, size_t* out_size) {
    if (!instance) return null_ptr("instance");
    if (!formula) return null_ptr("formula");
    if (num_values > 0 && !values) return null_ptr("values");
    std::vector<int> path;
    const dagpath_status rc = guarded([&] {
        if (num_values != static_cast<size_t>(formula->value.num_vars))
            dagpath::fail(dagpath::errc::invalid_argument,
                          "assignment must cover every variable");
        dagpath::Assignment assignment;
        assignment.values.resize(num_values);
        for (size_t i = 0; i < num_values; ++i) assignment.values[i] = values[i] != 0;
        path = dagpath::lift_assignment(assignment, instance->value, formula->value);
    });
    if (rc != DAGPATH_OK) return rc;
    return copy_vertices(path, out_path, capacity, out_size);
}

/* ---- harness ---- */

dagpath_status dagpath_gen_subsetsum(int32_t max_n, int64_t value_lo, int64_t value_hi,
                                     uint64_t seed, dagpath_subsetsum** out) {
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        *out = new dagpath_subsetsum{dagpath::gen_subsetsum(max_n, value_lo, value_hi, seed)};
    });
}

dagpath_status dagpath_gen_cnf(int32_t max_vars, int32_t max_clauses, int32_t max_width,
                               uint64_t seed, dagpath_cnf** out) {
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        *out = new dagpath_cnf{dagpath::gen_cnf(max_vars, max_clauses, max_width, seed)};
    });
}

dagpath_status dagpath_gen_dag(int32_t num_vertices, double arc_probability, int64_t weight_lo,
                               int64_t weight_hi, uint64_t seed, dagpath_dag** out) {
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        *out = new dagpath_dag{
            dagpath::gen_dag(num_vertices, arc_probability, weight_lo, weight_hi, seed)};
    });
}

void dagpath_campaign_config_default(dagpath_campaign_config* config,
                                     dagpath_campaign_kind kind) {
    if (!config) return;
    const dagpath::CampaignConfig defaults;
    config->kind = kind;
    config->trials = defaults.trials;
    config->seed = defaults.seed;
    config->max_n = defaults.max_n;
    config->value_lo = defaults.value_lo;
    config->value_hi = defaults.value_hi;
    config->max_vars = defaults.max_vars;
    config->max_clauses = defaults.max_clauses;
    config->max_clause_width = defaults.max_clause_width;
    config->dag_size = defaults.dag_size;
    config->arc_probability = defaults.arc_probability;
    config->mutation = DAGPATH_MUTATION_NONE;
    dagpath_limits_default(&config->limits);
}

dagpath_status dagpath_run_campaign(const dagpath_campaign_config* config,
                                    dagpath_report** out) {
    if (!config) return null_ptr("config");
    if (!out) return null_ptr("out");
    *out = nullptr;
    return guarded([&] {
        dagpath::CampaignConfig cc;
        switch (config->kind) {
            case DAGPATH_CAMPAIGN_NULLPATH: cc.kind = dagpath::CampaignKind::nullpath; break;
            case DAGPATH_CAMPAIGN_KPATH: cc.kind = dagpath::CampaignKind::kpath; break;
            case DAGPATH_CAMPAIGN_IRRPATH: cc.kind = dagpath::CampaignKind::irrpath; break;
            case DAGPATH_CAMPAIGN_SOLVER_EQUIVALENCE:
                cc.kind = dagpath::CampaignKind::solver_equivalence;
                break;
        }
        cc.trials = config->trials;
        cc.seed = config->seed;
        cc.max_n = config->max_n;
        cc.value_lo = config->value_lo;
        cc.value_hi = config->value_hi;
        cc.max_vars = config->max_vars;
        cc.max_clauses = config->max_clauses;
        cc.max_clause_width = config->max_clause_width;
        cc.dag_size = config->dag_size;
        cc.arc_probability = config->arc_probability;
        cc.mutation = config->mutation == DAGPATH_MUTATION_DROP_DIRECT_ARC_BONUS
                          ? dagpath::Mutation::drop_direct_arc_bonus
                          : dagpath::Mutation::none;
        cc.limits = to_limits(&config->limits);
        *out = new dagpath_report{dagpath::run_campaign(cc)};
    });
}

void dagpath_report_free(dagpath_report* report) {
    delete report;
}

size_t dagpath_report_trials(const dagpath_report* report) {
    return report ? report->value.trials.size() : 0;
}

size_t dagpath_report_agreements(const dagpath_report* report) {
    return report ? static_cast<size_t>(report->value.agreements()) : 0;
}

size_t dagpath_report_failures(const dagpath_report* report) {
    return report ? report->value.failure_indices().size() : 0;
}

dagpath_status dagpath_report_to_jsonl(const dagpath_report* report, char** out_text) {
    if (!report) return null_ptr("report");
    if (!out_text) return null_ptr("out_text");
    return guarded([&] { *out_text = copy_string(dagpath::report_to_jsonl(report->value)); });
}

dagpath_status dagpath_emit_witness(const dagpath_outcome* outcome, const char* problem_tag,
                                    int has_k, int64_t k, const dagpath_dag* dag,
                                    char** out_text) {
    if (!outcome) return null_ptr("outcome");
    if (!problem_tag) return null_ptr("problem_tag");
    if (!dag) return null_ptr("dag");
    if (!out_text) return null_ptr("out_text");
    return guarded([&] {
        *out_text = copy_string(dagpath::emit_witness(
            outcome->value, problem_tag,
            has_k ? std::optional<long long>(k) : std::nullopt, dag->value));
    });
}

} /* extern "C" */
