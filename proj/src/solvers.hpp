#ifndef DAGPATH_SOLVERS_HPP
#define DAGPATH_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "instances.hpp"

namespace dagpath {

struct SolveStats {
    std::uint64_t states_explored = 0;
    double elapsed_seconds = 0.0;
};

struct SolveOutcome {
    bool yes = false;
    std::optional<std::vector<int>> witness; // present iff yes
    SolveStats stats;
};

struct SolverLimits {
    std::uint64_t state_budget = 1'000'000;  // null-path (vertex, sum) states
    std::uint64_t table_budget = 20'000'000; // k-path (vertex, sum) cells
    std::uint64_t node_budget = 10'000'000;  // irreducible-path search nodes
};

// Achievable-sum DP in topological order, one back-pointer per (vertex, sum)
// state. Exact; pseudo-polynomial in the weight range. When the state budget
// trips on a DAG with at most 20 vertices, falls back to path enumeration.
SolveOutcome solve_null_weighted_path(const WeightedDag& dag, const SolverLimits& limits = {});

// Boolean (vertex, sum 0..K) table in topological order, O(|E| * K).
// Weights must be non-negative.
SolveOutcome solve_k_weighted_path(const WeightedDag& dag, long long target_sum,
                                   const SolverLimits& limits = {});

// Layered reachability, level l holding the vertices reachable by exactly l
// arcs; the (source, target) entry of the boolean K-th power of the adjacency
// matrix. K >= |V| is answered no outright.
SolveOutcome solve_path_of_length_k(const WeightedDag& dag, long long path_length);

// Depth-first extension of chord-free partial paths, pruned by exact
// remaining-length reachability to the target.
SolveOutcome solve_irreducible_path(const WeightedDag& dag, long long path_length,
                                    const SolverLimits& limits = {});

enum class Criterion {
    null_weight,
    weight_k,
    length_k,
    irreducible_k,
};

// Polynomial witness check. Invalid paths return false, never throw.
bool check_witness(const WeightedDag& dag, const std::vector<int>& path, Criterion criterion,
                   long long k = 0);

struct PathEnumeration {
    std::vector<std::vector<int>> paths; // lexicographic vertex-sequence order
    bool truncated = false;
};

PathEnumeration enumerate_paths(const WeightedDag& dag, std::size_t cap);

// Exhaustive oracles, for certifying the reductions on small instances.
std::optional<SubsetWitness> subset_sum_oracle(const SubsetSumInstance& instance,
                                               int exhaustive_bound = 24);
std::optional<Assignment> sat_oracle(const CnfFormula& formula, int exhaustive_bound = 20);

} // namespace dagpath

#endif
