#ifndef DAGPATH_REDUCTIONS_HPP
#define DAGPATH_REDUCTIONS_HPP

#include <vector>

#include "graph.hpp"
#include "instances.hpp"

namespace dagpath {

// Output of the subset-sum to K-weighted-path transformation. The shift P and
// target weight K = (n + 1) * P are kept for auditing.
struct KPathInstance {
    WeightedDag dag;
    long long target_sum = 0; // K
    long long shift = 0;      // P
};

struct LiteralSite {
    int clause = 0; // 0-based clause index
    Literal lit;
};

// Output of the CNF-SAT to irreducible-path transformation. Vertex 0 is the
// source, vertex N + 1 the target; literal vertices are numbered clause by
// clause, literal order within each clause.
struct IrrPathInstance {
    WeightedDag dag;
    long long path_length = 0;           // K = number of clauses + 1
    std::vector<LiteralSite> sites;      // sites[v - 1] describes vertex v
    std::vector<int> clause_first_vertex; // id of each clause's first literal vertex

    int vertex_of(int clause, int index_in_clause) const {
        return clause_first_vertex[static_cast<std::size_t>(clause)] + index_in_clause;
    }
};

// Linear order on n + 2 vertices whose null-weight source-to-target paths
// correspond exactly to the non-empty zero-sum index subsets.
WeightedDag reduce_ss_to_nullpath(const SubsetSumInstance& instance);

// Same shape with every arc (i, j) translated by (j - i) * P, making all
// weights non-negative; zero-sum subsets become paths of weight exactly K.
KPathInstance reduce_ss_to_kpath(const SubsetSumInstance& instance);

// One vertex per literal occurrence plus source and target; irreducible paths
// of length k + 1 correspond exactly to satisfying assignments.
IrrPathInstance reduce_sat_to_irrpath(const CnfFormula& formula);

// Witness maps, both directions.
SubsetWitness extract_subset(const std::vector<int>& path, const SubsetSumInstance& instance);
std::vector<int> lift_subset(const SubsetWitness& witness, const SubsetSumInstance& instance);
Assignment extract_assignment(const std::vector<int>& path, const IrrPathInstance& instance,
                              const CnfFormula& formula);
std::vector<int> lift_assignment(const Assignment& assignment, const IrrPathInstance& instance,
                                 const CnfFormula& formula);

} // namespace dagpath

#endif
