#include "reductions.hpp"

#include <algorithm>
#include <string>

namespace dagpath {

namespace {

// Common linear-order skeleton of both subset-sum reductions: n + 2 vertices,
// all forward pairs, weight = shift * (j - i) + base(i, j) with
//   base = a_j           for j <= n
//   base = 0             for j = t, 1 <= i <= n
//   base = +1            for j = t, i = 0
std::vector<Arc> translated_arcs(const SubsetSumInstance& instance, long long shift) {
    const int n = instance.n();
    const int target = n + 1;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n + 2) * (n + 1) / 2);
    for (int i = 0; i <= target; ++i) {
        for (int j = i + 1; j <= target; ++j) {
            long long base;
            if (j <= n)
                base = instance.elements[static_cast<std::size_t>(j) - 1];
            else
                base = (i == 0) ? 1 : 0;
            arcs.push_back({i, j, shift * (j - i) + base});
        }
    }
    return arcs;
}

} // namespace

WeightedDag reduce_ss_to_nullpath(const SubsetSumInstance& instance) {
    const int n = instance.n();
    return WeightedDag(n + 2, translated_arcs(instance, 0), 0, n + 1);
}

KPathInstance reduce_ss_to_kpath(const SubsetSumInstance& instance) {
    const int n = instance.n();
    long long shift = 0;
    for (long long a : instance.elements) shift = std::max(shift, -a); // -min({0} u A)

    if (static_cast<__int128>(n + 1) * shift > kWeightSumBudget)
        fail(errc::input_too_large, "translated weights exceed the safe sum budget");
    const long long target_sum = (n + 1) * shift;

    return {WeightedDag(n + 2, translated_arcs(instance, shift), 0, n + 1), target_sum, shift};
}

IrrPathInstance reduce_sat_to_irrpath(const CnfFormula& formula) {
    validate_cnf(formula);
    const int k = formula.num_clauses();
    if (k == 0)
        fail(errc::empty_formula, "the reduction is undefined for a formula with no clauses");

    const int total = formula.total_literals();
    const int source = 0;
    const int target = total + 1;

    std::vector<LiteralSite> sites;
    sites.reserve(static_cast<std::size_t>(total));
    std::vector<int> first_vertex(static_cast<std::size_t>(k));
    int next_vertex = 1;
    for (int c = 0; c < k; ++c) {
        first_vertex[static_cast<std::size_t>(c)] = next_vertex;
        for (const Literal& lit : formula.clauses[static_cast<std::size_t>(c)]) {
            sites.push_back({c, lit});
            ++next_vertex;
        }
    }

    std::vector<Arc> arcs;
    for (std::size_t v = 0; v < sites.size(); ++v) {
        if (sites[v].clause == 0) arcs.push_back({source, static_cast<int>(v) + 1, 0});
        if (sites[v].clause == k - 1) arcs.push_back({static_cast<int>(v) + 1, target, 0});
    }
    for (std::size_t x = 0; x < sites.size(); ++x) {
        for (std::size_t y = x + 1; y < sites.size(); ++y) {
            const int ci = sites[x].clause;
            const int cj = sites[y].clause;
            if (cj <= ci) continue;
            const bool contradictory = sites[x].lit.var == sites[y].lit.var &&
                                       sites[x].lit.negated != sites[y].lit.negated;
            const bool wanted = (cj == ci + 1) ? !contradictory : contradictory;
            if (wanted) arcs.push_back({static_cast<int>(x) + 1, static_cast<int>(y) + 1, 0});
        }
    }

    return {WeightedDag(total + 2, std::move(arcs), source, target), k + 1, std::move(sites),
            std::move(first_vertex)};
}

SubsetWitness extract_subset(const std::vector<int>& path, const SubsetSumInstance& instance) {
    const int n = instance.n();
    const int target = n + 1;
    if (path.size() < 2 || path.front() != 0 || path.back() != target)
        fail(errc::not_a_path, "sequence does not run from the source to the target");
    for (std::size_t i = 1; i < path.size(); ++i)
        if (path[i] <= path[i - 1] || path[i] > target)
            fail(errc::not_a_path, "sequence is not a path of the reduced linear order");
    if (path.size() == 2)
        fail(errc::direct_arc_path, "the direct source-target arc encodes no subset");
    return SubsetWitness{std::vector<int>(path.begin() + 1, path.end() - 1)};
}

std::vector<int> lift_subset(const SubsetWitness& witness, const SubsetSumInstance& instance) {
    if (witness.indices.empty())
        fail(errc::invalid_argument, "witness subset is empty");
    const int n = instance.n();
    for (std::size_t i = 0; i < witness.indices.size(); ++i) {
        int index = witness.indices[i];
        if (index < 1 || index > n)
            fail(errc::index_out_of_range, "index " + std::to_string(index) + " outside 1.." +
                                               std::to_string(n));
        if (i > 0 && index <= witness.indices[i - 1])
            fail(errc::index_out_of_range, "indices must be strictly increasing");
    }
    std::vector<int> path;
    path.reserve(witness.indices.size() + 2);
    path.push_back(0);
    path.insert(path.end(), witness.indices.begin(), witness.indices.end());
    path.push_back(n + 1);
    return path;
}

Assignment extract_assignment(const std::vector<int>& path, const IrrPathInstance& instance,
                              const CnfFormula& formula) {
    const int k = formula.num_clauses();
    if (static_cast<int>(path.size()) != k + 2)
        fail(errc::wrong_length, "expected a path of length " + std::to_string(k + 1) +
                                     ", got " + std::to_string(path.size() - 1));
    if (path.front() != instance.dag.source() || path.back() != instance.dag.target())
        fail(errc::not_a_path, "sequence does not run from the source to the target");

    // -1 unset, otherwise the forced truth value
    std::vector<int> forced(static_cast<std::size_t>(formula.num_vars) + 1, -1);
    for (int pos = 1; pos <= k; ++pos) {
        const int v = path[static_cast<std::size_t>(pos)];
        if (v < 1 || v > static_cast<int>(instance.sites.size()))
            fail(errc::not_a_path, "vertex " + std::to_string(v) + " is not a literal vertex");
        const LiteralSite& site = instance.sites[static_cast<std::size_t>(v) - 1];
        if (site.clause != pos - 1)
            fail(errc::not_a_path, "vertex " + std::to_string(v) + " lies in the wrong clause layer");
        const int want = site.lit.negated ? 0 : 1;
        int& slot = forced[static_cast<std::size_t>(site.lit.var)];
        if (slot != -1 && slot != want)
            fail(errc::contradictory_literals,
                 "path assigns variable " + std::to_string(site.lit.var) + " both ways");
        slot = want;
    }

    Assignment assignment{std::vector<bool>(static_cast<std::size_t>(formula.num_vars), false)};
    for (int var = 1; var <= formula.num_vars; ++var)
        if (forced[static_cast<std::size_t>(var)] == 1)
            assignment.values[static_cast<std::size_t>(var) - 1] = true;
    return assignment;
}

std::vector<int> lift_assignment(const Assignment& assignment, const IrrPathInstance& instance,
                                 const CnfFormula& formula) {
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(formula.num_clauses()) + 2);
    path.push_back(instance.dag.source());
    for (int c = 0; c < formula.num_clauses(); ++c) {
        const Clause& clause = formula.clauses[static_cast<std::size_t>(c)];
        int chosen = -1;
        for (std::size_t i = 0; i < clause.size(); ++i)
            if (literal_true(clause[i], assignment)) {
                chosen = instance.vertex_of(c, static_cast<int>(i));
                break;
            }
        if (chosen == -1)
            fail(errc::unsatisfied, "clause " + std::to_string(c + 1) +
                                        " has no literal made true by the assignment");
        path.push_back(chosen);
    }
    path.push_back(instance.dag.target());
    return path;
}

} // namespace dagpath
