#include "graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace dagpath {

const char* errc_name(errc code) {
    switch (code) {
        case errc::syntax_error: return "SyntaxError";
        case errc::count_mismatch: return "CountMismatch";
        case errc::header_mismatch: return "HeaderMismatch";
        case errc::duplicate_variable_in_clause: return "DuplicateVariableInClause";
        case errc::cyclic_graph: return "CyclicGraph";
        case errc::duplicate_arc: return "DuplicateArc";
        case errc::self_loop: return "SelfLoop";
        case errc::unknown_vertex: return "UnknownVertex";
        case errc::not_a_path: return "NotAPath";
        case errc::endpoints_equal: return "EndpointsEqual";
        case errc::negative_weight: return "NegativeWeight";
        case errc::input_too_large: return "InputTooLarge";
        case errc::resource_limit: return "ResourceLimit";
        case errc::empty_formula: return "EmptyFormula";
        case errc::direct_arc_path: return "DirectArcPath";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::contradictory_literals: return "ContradictoryLiterals";
        case errc::wrong_length: return "WrongLength";
        case errc::unsatisfied: return "Unsatisfied";
        case errc::oracle_limit: return "OracleLimit";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

namespace {

std::uint64_t pair_key(int tail, int head) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(tail)) << 32) |
           static_cast<std::uint32_t>(head);
}

// Kahn's algorithm, min-id first. Throws on cycles.
std::vector<int> kahn_order(int num_vertices, const std::vector<std::vector<int>>& out) {
    std::vector<int> indegree(num_vertices, 0);
    for (const auto& succ : out)
        for (int v : succ) indegree[v]++;

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < num_vertices; ++v)
        if (indegree[v] == 0) ready.push(v);

    std::vector<int> order;
    order.reserve(num_vertices);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[v])
            if (--indegree[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != num_vertices)
        fail(errc::cyclic_graph, "arc relation has a cycle");
    return order;
}

} // namespace

WeightedDag::WeightedDag(int num_vertices, std::vector<Arc> arcs, int source, int target,
                         bool allow_equal_endpoints)
    : num_vertices_(num_vertices), arcs_(std::move(arcs)), source_(source), target_(target) {
    if (num_vertices_ < 1)
        fail(errc::invalid_argument, "a DAG needs at least one vertex");
    if (source_ < 0 || source_ >= num_vertices_ || target_ < 0 || target_ >= num_vertices_)
        fail(errc::unknown_vertex, "source or target out of range");
    if (source_ == target_ && !allow_equal_endpoints)
        fail(errc::endpoints_equal, "source and target coincide");

    long long max_abs_weight = 0;
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.tail >= num_vertices_ || a.head < 0 || a.head >= num_vertices_)
            fail(errc::unknown_vertex,
                 "arc (" + std::to_string(a.tail) + ", " + std::to_string(a.head) +
                     ") references an unknown vertex");
        if (a.tail == a.head)
            fail(errc::self_loop, "self-loop at vertex " + std::to_string(a.tail));
        long long w = a.weight < 0 ? -a.weight : a.weight;
        max_abs_weight = std::max(max_abs_weight, w);
    }

    // A path visits at most num_vertices arcs, so this bounds every path sum.
    if (static_cast<__int128>(num_vertices_) * max_abs_weight > kWeightSumBudget)
        fail(errc::input_too_large, "weights too large: a path sum could overflow");

    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) {
        return x.tail != y.tail ? x.tail < y.tail : x.head < y.head;
    });
    for (std::size_t i = 1; i < arcs_.size(); ++i)
        if (arcs_[i - 1].tail == arcs_[i].tail && arcs_[i - 1].head == arcs_[i].head)
            fail(errc::duplicate_arc, "duplicate arc (" + std::to_string(arcs_[i].tail) + ", " +
                                          std::to_string(arcs_[i].head) + ")");

    out_.assign(num_vertices_, {});
    in_.assign(num_vertices_, {});
    weight_by_pair_.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
        weight_by_pair_.emplace(pair_key(a.tail, a.head), a.weight);
    }
    for (auto& v : in_) std::sort(v.begin(), v.end());
    // out_ lists are already ascending because arcs_ is sorted.

    topo_order_ = kahn_order(num_vertices_, out_);
}

bool WeightedDag::has_arc(int tail, int head) const {
    return weight_by_pair_.count(pair_key(tail, head)) != 0;
}

long long WeightedDag::arc_weight(int tail, int head) const {
    auto it = weight_by_pair_.find(pair_key(tail, head));
    if (it == weight_by_pair_.end())
        fail(errc::unknown_vertex, "no arc (" + std::to_string(tail) + ", " +
                                       std::to_string(head) + ")");
    return it->second;
}

std::vector<int> topological_order(const WeightedDag& dag) {
    return dag.topo_order();
}

std::optional<std::vector<int>> is_linear_order(const WeightedDag& dag) {
    const long long n = dag.num_vertices();
    if (static_cast<long long>(dag.arcs().size()) != n * (n - 1) / 2)
        return std::nullopt;
    std::vector<int> order = dag.topo_order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!dag.has_arc(order[i], order[j])) return std::nullopt;
    return order;
}

PathCheck check_path(const WeightedDag& dag, const std::vector<int>& path) {
    for (int v : path)
        if (v < 0 || v >= dag.num_vertices())
            fail(errc::unknown_vertex, "path vertex " + std::to_string(v) + " out of range");
    if (path.empty()) return {};
    if (path.front() != dag.source() || path.back() != dag.target()) return {};

    long long sum = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!dag.has_arc(path[i], path[i + 1])) return {};
        sum += dag.arc_weight(path[i], path[i + 1]);
    }
    return {true, sum, static_cast<int>(path.size()) - 1};
}

bool is_irreducible(const WeightedDag& dag, const std::vector<int>& path) {
    if (!check_path(dag, path).is_path)
        fail(errc::not_a_path, "sequence is not a source-to-target path");
    // Consecutive arcs are known to exist; reject any chord. Backward pairs
    // cannot be arcs in a DAG, so only i < j needs checking.
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        for (std::size_t j = i + 2; j < path.size(); ++j)
            if (dag.has_arc(path[i], path[j])) return false;
    return true;
}

} // namespace dagpath
