#ifndef DAGPATH_GRAPH_HPP
#define DAGPATH_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace dagpath {

struct Arc {
    int tail = 0;
    int head = 0;
    long long weight = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// Largest |sum over any path| the library is willing to handle. Construction
// rejects instances whose worst-case path sum could exceed it.
inline constexpr long long kWeightSumBudget = 1LL << 62;

// Immutable weighted DAG with designated source and target. Arcs are kept
// sorted by (tail, head) and indexed for O(1) membership tests, which the
// irreducibility checks and the solvers both rely on.
class WeightedDag {
public:
    WeightedDag(int num_vertices, std::vector<Arc> arcs, int source, int target,
                bool allow_equal_endpoints = false);

    int num_vertices() const { return num_vertices_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    int source() const { return source_; }
    int target() const { return target_; }

    bool has_arc(int tail, int head) const;
    long long arc_weight(int tail, int head) const; // arc must exist

    // Neighbor lists in ascending vertex id order.
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    const std::vector<int>& topo_order() const { return topo_order_; }

    friend bool operator==(const WeightedDag& a, const WeightedDag& b) {
        return a.num_vertices_ == b.num_vertices_ && a.source_ == b.source_ &&
               a.target_ == b.target_ && a.arcs_ == b.arcs_;
    }

private:
    int num_vertices_;
    std::vector<Arc> arcs_;
    int source_;
    int target_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<int> topo_order_;
    std::unordered_map<std::uint64_t, long long> weight_by_pair_;
};

struct PathCheck {
    bool is_path = false;
    long long weight_sum = 0; // meaningful only when is_path
    int length = 0;           // number of arcs, ditto
};

// Deterministic topological order: smallest vertex id first among ready ones.
std::vector<int> topological_order(const WeightedDag& dag);

// Present iff the arc set is a complete transitive tournament; the certificate
// is its unique topological order.
std::optional<std::vector<int>> is_linear_order(const WeightedDag& dag);

PathCheck check_path(const WeightedDag& dag, const std::vector<int>& path);

// True iff (x_i, x_j) is an arc exactly when j = i + 1. Throws not_a_path if
// the sequence is not a valid source-to-target path.
bool is_irreducible(const WeightedDag& dag, const std::vector<int>& path);

} // namespace dagpath

#endif
