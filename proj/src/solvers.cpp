#include "solvers.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_map>

namespace dagpath {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void require_distinct_endpoints(const WeightedDag& dag) {
    if (dag.source() == dag.target())
        fail(errc::endpoints_equal, "source equals target");
}

// Visits every source-to-target path in lexicographic vertex-sequence order.
// The visitor returns false to stop early. Returns false when stopped.
template <typename Visitor>
bool for_each_path(const WeightedDag& dag, Visitor&& visit) {
    std::vector<int> path{dag.source()};
    // frame i holds the index of the next out-neighbor of path[i] to try
    std::vector<std::size_t> next{0};
    if (dag.source() == dag.target()) {
        // nothing to enumerate; a single-vertex path is not a path here
        return true;
    }
    while (!path.empty()) {
        int v = path.back();
        if (v == dag.target()) {
            if (!visit(const_cast<const std::vector<int>&>(path))) return false;
            path.pop_back();
            next.pop_back();
            continue;
        }
        const auto& succ = dag.out_neighbors(v);
        if (next.back() < succ.size()) {
            int w = succ[next.back()++];
            path.push_back(w);
            next.push_back(0);
        } else {
            path.pop_back();
            next.pop_back();
        }
    }
    return true;
}

SolveOutcome enumerate_for_null(const WeightedDag& dag, Timer& timer) {
    SolveOutcome outcome;
    std::uint64_t seen = 0;
    for_each_path(dag, [&](const std::vector<int>& path) {
        ++seen;
        long long sum = 0;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            sum += dag.arc_weight(path[i], path[i + 1]);
        if (sum == 0) {
            outcome.yes = true;
            outcome.witness = path;
            return false;
        }
        return true;
    });
    outcome.stats.states_explored = seen;
    outcome.stats.elapsed_seconds = timer.seconds();
    return outcome;
}

} // namespace

SolveOutcome solve_null_weighted_path(const WeightedDag& dag, const SolverLimits& limits) {
    require_distinct_endpoints(dag);
    Timer timer;

    // sums[v] maps an achievable source->v weight sum to the predecessor that
    // first produced it. Predecessors are scanned in ascending id order, so
    // the recorded back-pointer is always the smallest candidate.
    std::vector<std::unordered_map<long long, int>> sums(dag.num_vertices());
    sums[dag.source()].emplace(0, -1);
    std::uint64_t states = 1;
    bool budget_hit = false;

    for (int v : dag.topo_order()) {
        if (budget_hit) break;
        if (v == dag.source()) continue;
        for (int u : dag.in_neighbors(v)) {
            if (sums[u].empty()) continue;
            long long w = dag.arc_weight(u, v);
            for (const auto& [sum, pred] : sums[u]) {
                (void)pred;
                if (sums[v].try_emplace(sum + w, u).second && ++states > limits.state_budget) {
                    budget_hit = true;
                    break;
                }
            }
            if (budget_hit) break;
        }
    }

    if (budget_hit) {
        if (dag.num_vertices() <= 20) return enumerate_for_null(dag, timer);
        fail(errc::resource_limit,
             "null-path state budget of " + std::to_string(limits.state_budget) + " exceeded");
    }

    SolveOutcome outcome;
    outcome.stats.states_explored = states;
    auto hit = sums[dag.target()].find(0);
    if (hit != sums[dag.target()].end()) {
        outcome.yes = true;
        std::vector<int> path;
        int v = dag.target();
        long long sum = 0;
        while (v != -1) {
            path.push_back(v);
            int pred = sums[v].at(sum);
            if (pred != -1) sum -= dag.arc_weight(pred, v);
            v = pred;
        }
        std::reverse(path.begin(), path.end());
        outcome.witness = std::move(path);
    }
    outcome.stats.elapsed_seconds = timer.seconds();
    return outcome;
}

SolveOutcome solve_k_weighted_path(const WeightedDag& dag, long long target_sum,
                                   const SolverLimits& limits) {
    require_distinct_endpoints(dag);
    if (target_sum < 0)
        fail(errc::invalid_argument, "target weight must be non-negative");
    for (const Arc& a : dag.arcs())
        if (a.weight < 0)
            fail(errc::negative_weight, "arc (" + std::to_string(a.tail) + ", " +
                                            std::to_string(a.head) + ") has negative weight");

    const long long width = target_sum + 1;
    if (static_cast<__int128>(width) * dag.num_vertices() >
        static_cast<__int128>(limits.table_budget))
        fail(errc::input_too_large, "K of " + std::to_string(target_sum) +
                                        " exceeds the (vertex, sum) table budget");

    Timer timer;
    const auto cell = [width](int v, long long s) {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(s);
    };
    std::vector<std::uint8_t> reach(cell(dag.num_vertices() - 1, width - 1) + 1, 0);
    std::vector<int> pred(reach.size(), -1);
    reach[cell(dag.source(), 0)] = 1;
    std::uint64_t states = 1;

    for (int v : dag.topo_order()) {
        if (v == dag.source()) continue;
        for (int u : dag.in_neighbors(v)) {
            long long w = dag.arc_weight(u, v);
            if (w > target_sum) continue;
            for (long long s = w; s <= target_sum; ++s) {
                if (reach[cell(u, s - w)] && !reach[cell(v, s)]) {
                    reach[cell(v, s)] = 1;
                    pred[cell(v, s)] = u;
                    ++states;
                }
            }
        }
    }

    SolveOutcome outcome;
    outcome.stats.states_explored = states;
    if (reach[cell(dag.target(), target_sum)]) {
        outcome.yes = true;
        std::vector<int> path;
        int v = dag.target();
        long long s = target_sum;
        while (v != dag.source()) {
            path.push_back(v);
            int u = pred[cell(v, s)];
            s -= dag.arc_weight(u, v);
            v = u;
        }
        path.push_back(dag.source());
        std::reverse(path.begin(), path.end());
        outcome.witness = std::move(path);
    }
    outcome.stats.elapsed_seconds = timer.seconds();
    return outcome;
}

SolveOutcome solve_path_of_length_k(const WeightedDag& dag, long long path_length) {
    require_distinct_endpoints(dag);
    if (path_length <= 0)
        fail(errc::invalid_argument, "path length must be positive");

    Timer timer;
    SolveOutcome outcome;
    if (path_length >= dag.num_vertices()) {
        // paths in a DAG are simple, so K < |V| always
        outcome.stats.elapsed_seconds = timer.seconds();
        return outcome;
    }

    const int levels = static_cast<int>(path_length) + 1;
    const int n = dag.num_vertices();
    std::vector<std::uint8_t> reach(static_cast<std::size_t>(levels) * n, 0);
    std::vector<int> pred(reach.size(), -1);
    const auto cell = [n](int level, int v) {
        return static_cast<std::size_t>(level) * n + static_cast<std::size_t>(v);
    };
    reach[cell(0, dag.source())] = 1;
    std::uint64_t states = 1;

    for (int level = 1; level < levels; ++level)
        for (int v = 0; v < n; ++v)
            for (int u : dag.in_neighbors(v))
                if (reach[cell(level - 1, u)]) {
                    reach[cell(level, v)] = 1;
                    pred[cell(level, v)] = u; // first hit = smallest id
                    ++states;
                    break;
                }

    outcome.stats.states_explored = states;
    if (reach[cell(levels - 1, dag.target())]) {
        outcome.yes = true;
        std::vector<int> path;
        int v = dag.target();
        for (int level = levels - 1; level > 0; --level) {
            path.push_back(v);
            v = pred[cell(level, v)];
        }
        path.push_back(dag.source());
        std::reverse(path.begin(), path.end());
        outcome.witness = std::move(path);
    }
    outcome.stats.elapsed_seconds = timer.seconds();
    return outcome;
}

SolveOutcome solve_irreducible_path(const WeightedDag& dag, long long path_length,
                                    const SolverLimits& limits) {
    require_distinct_endpoints(dag);
    if (path_length <= 0)
        fail(errc::invalid_argument, "path length must be positive");

    Timer timer;
    SolveOutcome outcome;
    const int n = dag.num_vertices();
    if (path_length >= n) {
        outcome.stats.elapsed_seconds = timer.seconds();
        return outcome;
    }
    const int k = static_cast<int>(path_length);

    // to_target[v][r]: a path with exactly r arcs from v to the target exists
    // (chords ignored, so this is a sound prune).
    std::vector<std::vector<std::uint8_t>> to_target(n, std::vector<std::uint8_t>(k + 1, 0));
    to_target[dag.target()][0] = 1;
    const auto& topo = dag.topo_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (int w : dag.out_neighbors(*it))
            for (int r = 1; r <= k; ++r)
                if (to_target[w][r - 1]) to_target[*it][r] = 1;

    std::uint64_t nodes = 0;
    std::vector<int> path{dag.source()};
    std::vector<std::size_t> next{0};

    const auto admissible = [&](int v) {
        // ascending-order DFS already guarantees the (last, v) arc; reject v
        // if any earlier path vertex has a chord into it
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (dag.has_arc(path[i], v)) return false;
        return true;
    };

    if (!to_target[dag.source()][k]) {
        outcome.stats.elapsed_seconds = timer.seconds();
        return outcome;
    }

    while (!path.empty()) {
        if (static_cast<int>(path.size()) == k + 1) {
            // complete; endpoints and lengths are enforced by construction
            if (!is_irreducible(dag, path))
                fail(errc::internal_error, "search produced a reducible path");
            outcome.yes = true;
            outcome.witness = path;
            break;
        }
        const auto& succ = dag.out_neighbors(path.back());
        const int remaining = k - static_cast<int>(path.size());
        bool extended = false;
        while (next.back() < succ.size()) {
            int v = succ[next.back()++];
            if (!to_target[v][remaining] || !admissible(v)) continue;
            if (++nodes > limits.node_budget)
                fail(errc::resource_limit, "irreducible-path search budget of " +
                                               std::to_string(limits.node_budget) + " exceeded");
            path.push_back(v);
            next.push_back(0);
            extended = true;
            break;
        }
        if (!extended) {
            path.pop_back();
            next.pop_back();
        }
    }

    outcome.stats.states_explored = nodes;
    outcome.stats.elapsed_seconds = timer.seconds();
    return outcome;
}

bool check_witness(const WeightedDag& dag, const std::vector<int>& path, Criterion criterion,
                   long long k) {
    try {
        PathCheck pc = check_path(dag, path);
        if (!pc.is_path || pc.length < 1) return false;
        switch (criterion) {
            case Criterion::null_weight: return pc.weight_sum == 0;
            case Criterion::weight_k: return pc.weight_sum == k;
            case Criterion::length_k: return pc.length == k;
            case Criterion::irreducible_k: return pc.length == k && is_irreducible(dag, path);
        }
        return false;
    } catch (const Error&) {
        return false;
    }
}

PathEnumeration enumerate_paths(const WeightedDag& dag, std::size_t cap) {
    require_distinct_endpoints(dag);
    PathEnumeration result;
    for_each_path(dag, [&](const std::vector<int>& path) {
        if (result.paths.size() == cap) {
            result.truncated = true;
            return false;
        }
        result.paths.push_back(path);
        return true;
    });
    return result;
}

namespace {

bool subset_dfs(const SubsetSumInstance& instance, int from, long long sum,
                std::vector<int>& chosen) {
    for (int i = from; i <= instance.n(); ++i) {
        chosen.push_back(i);
        long long next = sum + instance.elements[static_cast<std::size_t>(i) - 1];
        if (next == 0) return true;
        if (subset_dfs(instance, i + 1, next, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<SubsetWitness> subset_sum_oracle(const SubsetSumInstance& instance,
                                               int exhaustive_bound) {
    if (instance.n() > exhaustive_bound)
        fail(errc::input_too_large, "instance with n = " + std::to_string(instance.n()) +
                                        " exceeds the exhaustive bound of " +
                                        std::to_string(exhaustive_bound));
    long long magnitude = 0;
    for (long long a : instance.elements) {
        long long abs_a = a < 0 ? -a : a;
        if (magnitude > kWeightSumBudget - abs_a)
            fail(errc::input_too_large, "element magnitudes exceed the safe sum budget");
        magnitude += abs_a;
    }

    // Depth-first over increasing index sequences visits candidates in
    // lexicographic order, so the first hit is the smallest witness.
    std::vector<int> chosen;
    if (subset_dfs(instance, 1, 0, chosen)) return SubsetWitness{std::move(chosen)};
    return std::nullopt;
}

std::optional<Assignment> sat_oracle(const CnfFormula& formula, int exhaustive_bound) {
    validate_cnf(formula);
    if (formula.num_vars > exhaustive_bound || formula.num_vars > 62)
        fail(errc::input_too_large, "formula with " + std::to_string(formula.num_vars) +
                                        " variables exceeds the exhaustive bound of " +
                                        std::to_string(exhaustive_bound));

    const int n = formula.num_vars;
    Assignment assignment{std::vector<bool>(static_cast<std::size_t>(n), false)};
    // Lexicographic enumeration with false < true, variable 1 most significant.
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        for (int v = 1; v <= n; ++v)
            assignment.values[static_cast<std::size_t>(v) - 1] = (mask >> (n - v)) & 1;
        if (satisfies(formula, assignment)) return assignment;
    }
    return std::nullopt;
}

} // namespace dagpath
