#ifndef DAGPATH_HARNESS_HPP
#define DAGPATH_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "instances.hpp"
#include "solvers.hpp"

namespace dagpath {

enum class CampaignKind {
    nullpath,          // subset sum vs null-weighted-path on the reduced DAG
    kpath,             // subset sum vs K-weighted-path on the translated DAG
    irrpath,           // CNF-SAT vs irreducible path of length k + 1
    solver_equivalence // all four solvers vs path enumeration on random DAGs
};

const char* campaign_kind_name(CampaignKind kind);

// Test-only corruption hooks; a healthy campaign must catch them.
enum class Mutation {
    none,
    drop_direct_arc_bonus // zero out the +1 on the direct source-target arc
};

struct CampaignConfig {
    CampaignKind kind = CampaignKind::nullpath;
    int trials = 200; // random trials; pinned examples are prepended on top
    std::uint64_t seed = 1;

    // subset-sum family bounds
    int max_n = 12;
    long long value_lo = -20;
    long long value_hi = 20;

    // CNF family bounds
    int max_vars = 6;
    int max_clauses = 5;
    int max_clause_width = 3;

    // solver-equivalence bounds; arc_probability 0 cycles {0.2, 0.5, 0.8}
    int dag_size = 10;
    double arc_probability = 0.0;

    Mutation mutation = Mutation::none;
    SolverLimits limits;
    int subset_oracle_bound = 24;
    int sat_oracle_bound = 20;
};

struct TrialRecord {
    int index = 0;
    std::string digest; // FNV-1a of the serialized instance(s)
    std::optional<bool> oracle_yes;
    std::optional<bool> solver_yes;
    bool agree = false;
    std::optional<bool> extracted_ok; // solver witness maps back to a native witness
    std::optional<bool> lifted_ok;    // oracle witness lifts to an accepted path
    std::string note;                 // failure detail, empty when clean
    double elapsed_seconds = 0.0;
};

struct VerificationReport {
    CampaignKind kind = CampaignKind::nullpath;
    std::vector<TrialRecord> trials;

    int agreements() const;
    std::vector<int> failure_indices() const; // trials that disagree or fail a witness check
    bool all_clean() const { return failure_indices().empty(); }
};

SubsetSumInstance gen_subsetsum(int max_n, long long value_lo, long long value_hi,
                                std::uint64_t seed);
CnfFormula gen_cnf(int max_vars, int max_clauses, int max_width, std::uint64_t seed);
WeightedDag gen_dag(int num_vertices, double arc_probability, long long weight_lo,
                    long long weight_hi, std::uint64_t seed);

// Runs the configured campaign: generate, consult the oracle, reduce, solve,
// compare, and cross-check witnesses in both directions. Trial failures are
// recorded in the report, never thrown.
VerificationReport run_campaign(const CampaignConfig& config);

} // namespace dagpath

#endif
