#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "harness.hpp"
#include "reductions.hpp"
#include "rng.hpp"
#include "solvers.hpp"

using namespace dagpath;

namespace {

const SubsetSumInstance kNoInstance{{4, 2, -5}};
const SubsetSumInstance kYesInstance{{4, 2, -6}};

// boolean adjacency-matrix power, the independent route for the length-K DP
bool matrix_power_reaches(const WeightedDag& dag, long long k) {
    const int n = dag.num_vertices();
    std::vector<std::vector<bool>> acc(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Arc& arc : dag.arcs()) adj[arc.tail][arc.head] = true;
    for (int i = 0; i < n; ++i) acc[i][i] = true; // M^0
    for (long long step = 0; step < k; ++step) {
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (acc[i][l])
                    for (int j = 0; j < n; ++j)
                        if (adj[l][j]) next[i][j] = true;
        acc = std::move(next);
    }
    return acc[dag.source()][dag.target()];
}

long long path_weight(const WeightedDag& dag, const std::vector<int>& path) {
    return check_path(dag, path).weight_sum;
}

} // namespace

TEST_CASE("null-weighted path on the worked no-instance") {
    const WeightedDag dag = reduce_ss_to_nullpath(kNoInstance);

    // brute route first: the 8 source-target paths carry these weights
    std::vector<long long> weights;
    for (const auto& path : enumerate_paths(dag, 100).paths)
        weights.push_back(path_weight(dag, path));
    std::sort(weights.begin(), weights.end());
    CHECK(weights == std::vector<long long>{-5, -3, -1, 1, 1, 2, 4, 6});

    const SolveOutcome outcome = solve_null_weighted_path(dag);
    CHECK_FALSE(outcome.yes);
    CHECK_FALSE(outcome.witness.has_value());
}

TEST_CASE("null-weighted path on the worked yes-instance") {
    const WeightedDag dag = reduce_ss_to_nullpath(kYesInstance);
    const SolveOutcome outcome = solve_null_weighted_path(dag);
    REQUIRE(outcome.yes);
    CHECK(*outcome.witness == std::vector<int>{0, 1, 2, 3, 4}); // 4 + 2 - 6 + 0
    CHECK(check_witness(dag, *outcome.witness, Criterion::null_weight));
}

TEST_CASE("null-weighted path accepts a single zero arc") {
    const WeightedDag dag(2, {{0, 1, 0}}, 0, 1);
    const SolveOutcome outcome = solve_null_weighted_path(dag);
    REQUIRE(outcome.yes);
    CHECK(*outcome.witness == std::vector<int>{0, 1});
}

TEST_CASE("equal endpoints are rejected at the problem level") {
    const WeightedDag dag(2, {{0, 1, 0}}, 0, 0, true);
    CHECK_THROWS_AS(solve_null_weighted_path(dag), Error);
    CHECK_THROWS_AS(solve_k_weighted_path(dag, 0), Error);
    CHECK_THROWS_AS(solve_path_of_length_k(dag, 1), Error);
    CHECK_THROWS_AS(solve_irreducible_path(dag, 1), Error);
    CHECK_THROWS_AS(enumerate_paths(dag, 10), Error);
}

TEST_CASE("null-path state budget falls back to enumeration on small DAGs") {
    const WeightedDag dag = reduce_ss_to_nullpath(kYesInstance);
    SolverLimits tight;
    tight.state_budget = 2;
    const SolveOutcome outcome = solve_null_weighted_path(dag, tight);
    REQUIRE(outcome.yes); // enumeration fallback, lexicographically first witness
    CHECK(check_witness(dag, *outcome.witness, Criterion::null_weight));
}

TEST_CASE("null-path state budget propagates on large DAGs") {
    std::vector<Arc> arcs;
    const int n = 24;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.push_back({i, j, (i * 7 + j * 13) % 19 - 9});
    const WeightedDag big(n, std::move(arcs), 0, n - 1);
    SolverLimits tight;
    tight.state_budget = 10;
    try {
        solve_null_weighted_path(big, tight);
        FAIL("expected ResourceLimit");
    } catch (const Error& e) {
        CHECK(e.code() == errc::resource_limit);
    }
}

TEST_CASE("K-weighted path on the translated worked example") {
    const KPathInstance no_instance = reduce_ss_to_kpath(kNoInstance);
    CHECK(no_instance.target_sum == 20);
    CHECK_FALSE(solve_k_weighted_path(no_instance.dag, no_instance.target_sum).yes);

    const KPathInstance yes_instance = reduce_ss_to_kpath(kYesInstance);
    CHECK(yes_instance.target_sum == 24);
    const SolveOutcome outcome = solve_k_weighted_path(yes_instance.dag, yes_instance.target_sum);
    REQUIRE(outcome.yes);
    CHECK(*outcome.witness == std::vector<int>{0, 1, 2, 3, 4}); // 10 + 8 + 0 + 6
}

TEST_CASE("K-weighted path accepts weight zero on a zero arc") {
    const WeightedDag dag(2, {{0, 1, 0}}, 0, 1);
    CHECK(solve_k_weighted_path(dag, 0).yes);
    CHECK_FALSE(solve_k_weighted_path(dag, 1).yes);
}

TEST_CASE("K-weighted path rejects negative weights and oversized K") {
    const WeightedDag dag(2, {{0, 1, -1}}, 0, 1);
    try {
        solve_k_weighted_path(dag, 3);
        FAIL("expected NegativeWeight");
    } catch (const Error& e) {
        CHECK(e.code() == errc::negative_weight);
    }

    const WeightedDag ok(2, {{0, 1, 1}}, 0, 1);
    try {
        solve_k_weighted_path(ok, 1LL << 40);
        FAIL("expected InputTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == errc::input_too_large);
    }
}

TEST_CASE("path of length K on a 5-vertex linear order") {
    const WeightedDag dag = reduce_ss_to_nullpath(kNoInstance); // linear order shape
    const SolveOutcome outcome = solve_path_of_length_k(dag, 3);
    REQUIRE(outcome.yes);
    CHECK(*outcome.witness == std::vector<int>{0, 1, 2, 4});
    CHECK(check_witness(dag, *outcome.witness, Criterion::length_k, 3));

    CHECK_FALSE(solve_path_of_length_k(dag, 5).yes); // K >= |V|
    CHECK(solve_path_of_length_k(WeightedDag(2, {{0, 1, 7}}, 0, 1), 1).yes);
    CHECK_THROWS_AS(solve_path_of_length_k(dag, 0), Error);
}

TEST_CASE("irreducible path of length K basics") {
    // diamond without chords
    const WeightedDag diamond(4, {{0, 1, 0}, {0, 2, 0}, {1, 3, 0}, {2, 3, 0}}, 0, 3);
    const SolveOutcome outcome = solve_irreducible_path(diamond, 2);
    REQUIRE(outcome.yes);
    CHECK(*outcome.witness == std::vector<int>{0, 1, 3});

    // the direct arc is a chord for every longer path
    const WeightedDag triangle(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}}, 0, 2);
    CHECK_FALSE(solve_irreducible_path(triangle, 2).yes);
    CHECK(solve_irreducible_path(triangle, 1).yes);

    CHECK_THROWS_AS(solve_irreducible_path(diamond, 0), Error);
}

TEST_CASE("irreducible search respects its node budget") {
    std::vector<Arc> arcs;
    const int n = 16;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((i + j) % 2 == 0 || j == i + 1) arcs.push_back({i, j, 0});
    const WeightedDag dag(n, std::move(arcs), 0, n - 1);
    SolverLimits tight;
    tight.node_budget = 1;
    try {
        solve_irreducible_path(dag, 5, tight);
        FAIL("expected ResourceLimit");
    } catch (const Error& e) {
        CHECK(e.code() == errc::resource_limit);
    }
}

TEST_CASE("check_witness covers all four criteria") {
    const WeightedDag yes_dag = reduce_ss_to_nullpath(kYesInstance);
    CHECK(check_witness(yes_dag, {0, 1, 2, 3, 4}, Criterion::null_weight));

    const WeightedDag no_dag = reduce_ss_to_nullpath(kNoInstance);
    CHECK_FALSE(check_witness(no_dag, {0, 4}, Criterion::null_weight)); // weight 1

    const WeightedDag triangle(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}}, 0, 2);
    CHECK_FALSE(check_witness(triangle, {0, 1, 2}, Criterion::irreducible_k, 2));
    CHECK(check_witness(triangle, {0, 2}, Criterion::irreducible_k, 1));
    CHECK(check_witness(triangle, {0, 1, 2}, Criterion::length_k, 2));
    CHECK_FALSE(check_witness(triangle, {0, 1, 2}, Criterion::length_k, 1));

    // invalid input never throws
    CHECK_FALSE(check_witness(triangle, {0, 99}, Criterion::null_weight));
    CHECK_FALSE(check_witness(triangle, {}, Criterion::null_weight));
    CHECK_FALSE(check_witness(triangle, {0}, Criterion::null_weight));
}

TEST_CASE("path enumeration is lexicographic and complete") {
    const WeightedDag dag = reduce_ss_to_nullpath(kNoInstance);
    const PathEnumeration all = enumerate_paths(dag, 100);
    CHECK_FALSE(all.truncated);
    const std::vector<std::vector<int>> expected = {
        {0, 1, 2, 3, 4}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 1, 4},
        {0, 2, 3, 4},    {0, 2, 4},    {0, 3, 4},    {0, 4},
    };
    CHECK(all.paths == expected); // one per subset of {1, 2, 3}

    const PathEnumeration capped = enumerate_paths(dag, 3);
    CHECK(capped.truncated);
    CHECK(capped.paths.size() == 3);

    const WeightedDag chain(3, {{0, 1, 0}, {1, 2, 0}}, 0, 2);
    CHECK(enumerate_paths(chain, 10).paths == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(enumerate_paths(WeightedDag(3, {}, 0, 2), 10).paths.empty());
}

TEST_CASE("subset-sum oracle") {
    CHECK_FALSE(subset_sum_oracle(kNoInstance).has_value());

    const auto witness = subset_sum_oracle(kYesInstance);
    REQUIRE(witness.has_value());
    CHECK(witness->indices == std::vector<int>{1, 2, 3});

    CHECK_FALSE(subset_sum_oracle(SubsetSumInstance{}).has_value());

    // lexicographically smallest: [1, 2] beats [3]
    const auto lex = subset_sum_oracle(SubsetSumInstance{{1, -1, 0}});
    REQUIRE(lex.has_value());
    CHECK(lex->indices == std::vector<int>{1, 2});

    SubsetSumInstance big;
    big.elements.assign(30, 1);
    CHECK_THROWS_AS(subset_sum_oracle(big), Error);
}

TEST_CASE("SAT oracle") {
    CnfFormula phi;
    phi.num_vars = 4;
    phi.clauses = {{{1, false}, {2, false}, {3, true}},
                   {{4, false}, {1, true}},
                   {{1, true}, {4, true}, {3, false}}};
    const auto model = sat_oracle(phi);
    REQUIRE(model.has_value());
    CHECK(satisfies(phi, *model));
    // all-false already satisfies the formula and is first in order
    CHECK(model->values == std::vector<bool>{false, false, false, false});

    CnfFormula contradiction;
    contradiction.num_vars = 1;
    contradiction.clauses = {{{1, false}}, {{1, true}}};
    CHECK_FALSE(sat_oracle(contradiction).has_value());

    CnfFormula empty;
    empty.num_vars = 2;
    const auto vacuous = sat_oracle(empty);
    REQUIRE(vacuous.has_value());
    CHECK(vacuous->values == std::vector<bool>{false, false});

    CnfFormula wide;
    wide.num_vars = 30;
    CHECK_THROWS_AS(sat_oracle(wide), Error);
}

TEST_CASE("solvers agree with enumeration on random DAGs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        SplitRng rng(seed, 31);
        const int n = static_cast<int>(rng.uniform(2, 9));
        const double prob = 0.2 + 0.3 * static_cast<double>(seed % 3);
        const WeightedDag dag = gen_dag(n, prob, -5, 5, derive_seed(seed, 1));
        const auto paths = enumerate_paths(dag, 1 << 16).paths;

        bool any_null = false;
        for (const auto& path : paths) any_null |= path_weight(dag, path) == 0;
        CHECK(solve_null_weighted_path(dag).yes == any_null);

        for (long long k = 1; k <= n; ++k) {
            bool any_len = false;
            bool any_irr = false;
            for (const auto& path : paths) {
                if (static_cast<long long>(path.size()) - 1 != k) continue;
                any_len = true;
                any_irr |= is_irreducible(dag, path);
            }
            CHECK(solve_path_of_length_k(dag, k).yes == any_len);
            CHECK(solve_irreducible_path(dag, k).yes == any_irr);
        }
    }
}

TEST_CASE("K-weighted solver matches enumeration on non-negative DAGs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const WeightedDag dag = gen_dag(7, 0.5, 0, 5, derive_seed(seed, 2));
        const auto paths = enumerate_paths(dag, 1 << 16).paths;
        long long max_sum = 0;
        for (const auto& path : paths) max_sum = std::max(max_sum, path_weight(dag, path));
        for (long long k = 0; k <= max_sum + 1; ++k) {
            bool expected = false;
            for (const auto& path : paths) expected |= path_weight(dag, path) == k;
            const SolveOutcome outcome = solve_k_weighted_path(dag, k);
            CHECK(outcome.yes == expected);
            if (outcome.yes) CHECK(check_witness(dag, *outcome.witness, Criterion::weight_k, k));
        }

        // weight-0 target coincides with the null-weight problem here
        CHECK(solve_k_weighted_path(dag, 0).yes == solve_null_weighted_path(dag).yes);
    }
}

TEST_CASE("layered DP equals the boolean matrix power") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        SplitRng rng(seed, 41);
        const int n = static_cast<int>(rng.uniform(2, 8));
        const WeightedDag dag = gen_dag(n, 0.5, 0, 1, derive_seed(seed, 3));
        for (long long k = 1; k < n; ++k)
            CHECK(solve_path_of_length_k(dag, k).yes == matrix_power_reaches(dag, k));
    }
}

TEST_CASE("linear orders trivialize the irreducible problem") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SplitRng rng(seed, 51);
        const int n = static_cast<int>(rng.uniform(2, 10));
        // random permutation as the underlying order, arbitrary endpoints
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.uniform(0, i))]);
        std::vector<Arc> arcs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                arcs.push_back({perm[static_cast<std::size_t>(i)],
                                perm[static_cast<std::size_t>(j)], 0});
        const int s = perm[0];
        const int t = perm[static_cast<std::size_t>(rng.uniform(1, n - 1))];
        const WeightedDag order(n, std::move(arcs), s, t);
        REQUIRE(is_linear_order(order).has_value());

        CHECK(solve_irreducible_path(order, 1).yes == order.has_arc(s, t));
        for (long long k = 2; k <= n; ++k) CHECK_FALSE(solve_irreducible_path(order, k).yes);
    }
}

TEST_CASE("identical inputs produce identical witnesses") {
    const WeightedDag dag = gen_dag(9, 0.5, -4, 4, 123456);
    const SolveOutcome a = solve_null_weighted_path(dag);
    const SolveOutcome b = solve_null_weighted_path(dag);
    CHECK(a.yes == b.yes);
    CHECK(a.witness == b.witness);

    const SolveOutcome c = solve_irreducible_path(dag, 3);
    const SolveOutcome d = solve_irreducible_path(dag, 3);
    CHECK(c.yes == d.yes);
    CHECK(c.witness == d.witness);
}
