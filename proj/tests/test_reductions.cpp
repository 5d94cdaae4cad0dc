#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "harness.hpp"
#include "reductions.hpp"
#include "rng.hpp"
#include "solvers.hpp"

using namespace dagpath;

namespace {

const SubsetSumInstance kNoInstance{{4, 2, -5}};
const SubsetSumInstance kYesInstance{{4, 2, -6}};

// (a v b v !c) & (d v !a) & (!a v !d v c); a=1 b=2 c=3 d=4
CnfFormula worked_formula() {
    CnfFormula formula;
    formula.num_vars = 4;
    formula.clauses = {{{1, false}, {2, false}, {3, true}},
                       {{4, false}, {1, true}},
                       {{1, true}, {4, true}, {3, false}}};
    return formula;
}

std::set<std::pair<int, int>> arc_pairs(const WeightedDag& dag) {
    std::set<std::pair<int, int>> pairs;
    for (const Arc& arc : dag.arcs()) pairs.insert({arc.tail, arc.head});
    return pairs;
}

} // namespace

TEST_CASE("null-path reduction reproduces the worked weight table") {
    const WeightedDag dag = reduce_ss_to_nullpath(kNoInstance);
    CHECK(dag.num_vertices() == 5);
    CHECK(dag.arcs().size() == 10);
    CHECK(dag.source() == 0);
    CHECK(dag.target() == 4);

    const std::vector<Arc> expected = {
        {0, 1, 4}, {0, 2, 2}, {0, 3, -5}, {0, 4, 1}, {1, 2, 2},
        {1, 3, -5}, {1, 4, 0}, {2, 3, -5}, {2, 4, 0}, {3, 4, 0},
    };
    CHECK(dag.arcs() == expected);
    CHECK(is_linear_order(dag).has_value());
}

TEST_CASE("null-path reduction of the empty instance") {
    const WeightedDag dag = reduce_ss_to_nullpath(SubsetSumInstance{});
    CHECK(dag.num_vertices() == 2);
    REQUIRE(dag.arcs().size() == 1);
    CHECK(dag.arcs()[0] == Arc{0, 1, 1});
    CHECK_FALSE(solve_null_weighted_path(dag).yes);
}

TEST_CASE("a zero element makes the reduced instance solvable") {
    const WeightedDag dag = reduce_ss_to_nullpath(SubsetSumInstance{{0}});
    CHECK(dag.num_vertices() == 3);
    const SolveOutcome outcome = solve_null_weighted_path(dag);
    REQUIRE(outcome.yes);
    CHECK(*outcome.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("K-path reduction translates the worked example") {
    const KPathInstance instance = reduce_ss_to_kpath(kNoInstance);
    CHECK(instance.shift == 5);       // -min({0, 4, 2, -5})
    CHECK(instance.target_sum == 20); // (n + 1) P
    CHECK(instance.dag.arc_weight(0, 1) == 9);
    CHECK(instance.dag.arc_weight(1, 2) == 7);
    CHECK(instance.dag.arc_weight(2, 3) == 0);
    CHECK(instance.dag.arc_weight(3, 4) == 5);
    CHECK(instance.dag.arc_weight(0, 4) == 21);
    for (const Arc& arc : instance.dag.arcs()) CHECK(arc.weight >= 0);
    CHECK(is_linear_order(instance.dag).has_value());
}

TEST_CASE("K-path reduction with non-negative input is the identity translation") {
    const KPathInstance instance = reduce_ss_to_kpath(SubsetSumInstance{{1, 2}});
    CHECK(instance.shift == 0);
    CHECK(instance.target_sum == 0);
    CHECK(instance.dag.arcs() == reduce_ss_to_nullpath(SubsetSumInstance{{1, 2}}).arcs());
    CHECK_FALSE(solve_k_weighted_path(instance.dag, instance.target_sum).yes);
}

TEST_CASE("K-path reduction of a single negative element") {
    const KPathInstance instance = reduce_ss_to_kpath(SubsetSumInstance{{-1}});
    CHECK(instance.shift == 1);
    CHECK(instance.target_sum == 2);
    CHECK(check_path(instance.dag, {0, 1, 2}).weight_sum == 1);
    CHECK(instance.dag.arc_weight(0, 2) == 3);
    CHECK_FALSE(solve_k_weighted_path(instance.dag, instance.target_sum).yes);
}

TEST_CASE("SAT reduction reproduces the worked DAG") {
    const IrrPathInstance instance = reduce_sat_to_irrpath(worked_formula());
    CHECK(instance.dag.num_vertices() == 10); // N + 2 with N = 8
    CHECK(instance.dag.arcs().size() == 18);
    CHECK(instance.path_length == 4); // k + 1

    // vertex ids: s=0, a=1 b=2 !c=3 | d=4 !a=5 | !a=6 !d=7 c=8, t=9
    const std::set<std::pair<int, int>> expected = {
        {0, 1}, {0, 2}, {0, 3},                         // source into clause 1
        {1, 4}, {2, 4}, {2, 5}, {3, 4}, {3, 5},          // clause 1 -> clause 2
        {4, 6}, {4, 8}, {5, 6}, {5, 7}, {5, 8},          // clause 2 -> clause 3
        {1, 6}, {3, 8},                                  // contradiction jumps
        {6, 9}, {7, 9}, {8, 9},                          // clause 3 into target
    };
    CHECK(arc_pairs(instance.dag) == expected);

    for (const Arc& arc : instance.dag.arcs()) CHECK(arc.weight == 0);

    // provenance map
    CHECK(instance.sites[0].clause == 0);
    CHECK(instance.sites[0].lit == Literal{1, false});
    CHECK(instance.sites[5].clause == 2);
    CHECK(instance.sites[5].lit == Literal{1, true});
    CHECK(instance.vertex_of(1, 1) == 5);
}

TEST_CASE("SAT reduction of a unit clause applies both endpoint rules") {
    CnfFormula unit;
    unit.num_vars = 1;
    unit.clauses = {{{1, false}}};
    const IrrPathInstance instance = reduce_sat_to_irrpath(unit);
    CHECK(instance.dag.num_vertices() == 3);
    CHECK(arc_pairs(instance.dag) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(instance.path_length == 2);
    CHECK(solve_irreducible_path(instance.dag, instance.path_length).yes);
}

TEST_CASE("an empty clause yields a vertex-less layer and a structural no") {
    CnfFormula formula;
    formula.num_vars = 1;
    formula.clauses = {{}, {{1, false}}};
    CHECK_FALSE(sat_oracle(formula).has_value());
    const IrrPathInstance instance = reduce_sat_to_irrpath(formula);
    CHECK(instance.dag.num_vertices() == 3); // s, x, t
    CHECK_FALSE(solve_irreducible_path(instance.dag, instance.path_length).yes);
}

TEST_CASE("the empty formula is rejected") {
    CnfFormula empty;
    empty.num_vars = 3;
    try {
        reduce_sat_to_irrpath(empty);
        FAIL("expected EmptyFormula");
    } catch (const Error& e) {
        CHECK(e.code() == errc::empty_formula);
    }
}

TEST_CASE("subset extraction and lifting") {
    CHECK(extract_subset({0, 1, 2, 3, 4}, kYesInstance).indices == std::vector<int>{1, 2, 3});
    CHECK(extract_subset({0, 3, 4}, kYesInstance).indices == std::vector<int>{3});
    try {
        extract_subset({0, 4}, kNoInstance);
        FAIL("expected DirectArcPath");
    } catch (const Error& e) {
        CHECK(e.code() == errc::direct_arc_path);
    }

    CHECK(lift_subset(SubsetWitness{{1, 2, 3}}, kYesInstance) ==
          std::vector<int>{0, 1, 2, 3, 4});
    CHECK(lift_subset(SubsetWitness{{2}}, SubsetSumInstance{{7, 8, 9}}) ==
          std::vector<int>{0, 2, 4});
    try {
        lift_subset(SubsetWitness{{3, 1}}, kNoInstance);
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == errc::index_out_of_range);
    }
}

TEST_CASE("assignment extraction and lifting on the worked formula") {
    const CnfFormula formula = worked_formula();
    const IrrPathInstance instance = reduce_sat_to_irrpath(formula);

    // [s, b, !a(C2), !a(C3), t]
    const std::vector<int> path = {0, 2, 5, 6, 9};
    REQUIRE(check_witness(instance.dag, path, Criterion::irreducible_k, instance.path_length));
    const Assignment extracted = extract_assignment(path, instance, formula);
    CHECK(extracted.values == std::vector<bool>{false, true, false, false});
    CHECK(satisfies(formula, extracted));

    // lifting the same assignment picks the first true literal per clause
    CHECK(lift_assignment(extracted, instance, formula) == path);

    try {
        extract_assignment({0, 1, 6, 9}, instance, formula); // skips a clause
        FAIL("expected WrongLength");
    } catch (const Error& e) {
        CHECK(e.code() == errc::wrong_length);
    }

    // a valid but reducible path carrying both a and !a
    const std::vector<int> contradictory = {0, 1, 4, 6, 9};
    REQUIRE(check_path(instance.dag, contradictory).is_path);
    try {
        extract_assignment(contradictory, instance, formula);
        FAIL("expected ContradictoryLiterals");
    } catch (const Error& e) {
        CHECK(e.code() == errc::contradictory_literals);
    }
}

TEST_CASE("assignment lifting on a unit clause") {
    CnfFormula unit;
    unit.num_vars = 1;
    unit.clauses = {{{1, false}}};
    const IrrPathInstance instance = reduce_sat_to_irrpath(unit);

    CHECK(lift_assignment(Assignment{{true}}, instance, unit) == std::vector<int>{0, 1, 2});
    CHECK(extract_assignment({0, 1, 2}, instance, unit).values == std::vector<bool>{true});
    try {
        lift_assignment(Assignment{{false}}, instance, unit);
        FAIL("expected Unsatisfied");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unsatisfied);
    }
}

TEST_CASE("both subset reductions produce full linear orders of the right size") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const SubsetSumInstance instance = gen_subsetsum(8, -9, 9, derive_seed(seed, 1));
        const long long n = instance.n();
        const WeightedDag null_dag = reduce_ss_to_nullpath(instance);
        const KPathInstance k_instance = reduce_ss_to_kpath(instance);
        for (const WeightedDag* dag : {&null_dag, &k_instance.dag}) {
            CHECK(dag->num_vertices() == n + 2);
            CHECK(static_cast<long long>(dag->arcs().size()) == (n + 2) * (n + 1) / 2);
            CHECK(is_linear_order(*dag).has_value());
        }
        for (const Arc& arc : k_instance.dag.arcs()) CHECK(arc.weight >= 0);
    }
}

TEST_CASE("every translated path weight telescopes to K plus its subset sum") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const SubsetSumInstance instance = gen_subsetsum(8, -9, 9, derive_seed(seed, 2));
        const KPathInstance k_instance = reduce_ss_to_kpath(instance);
        for (const auto& path : enumerate_paths(k_instance.dag, 1 << 12).paths) {
            const long long weight = check_path(k_instance.dag, path).weight_sum;
            if (path.size() == 2) {
                CHECK(weight == k_instance.target_sum + 1); // direct arc
                continue;
            }
            const SubsetWitness subset = extract_subset(path, instance);
            CHECK(weight == k_instance.target_sum + subset_sum(instance, subset));
        }
    }
}

TEST_CASE("subset witnesses round-trip through the reduced DAG") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const SubsetSumInstance instance = gen_subsetsum(10, -6, 6, derive_seed(seed, 3));
        const auto witness = subset_sum_oracle(instance);
        if (!witness) continue;
        const std::vector<int> path = lift_subset(*witness, instance);
        CHECK(check_witness(reduce_ss_to_nullpath(instance), path, Criterion::null_weight));
        CHECK(extract_subset(path, instance) == *witness);
    }
}

TEST_CASE("assignments round-trip through the reduced DAG") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const CnfFormula formula = gen_cnf(5, 4, 3, derive_seed(seed, 4));
        const auto model = sat_oracle(formula);
        if (!model) continue;
        const IrrPathInstance instance = reduce_sat_to_irrpath(formula);
        const std::vector<int> path = lift_assignment(*model, instance, formula);
        CHECK(check_witness(instance.dag, path, Criterion::irreducible_k,
                            instance.path_length));
        CHECK(satisfies(formula, extract_assignment(path, instance, formula)));
    }
}

TEST_CASE("length-(k+1) paths in reduced SAT DAGs never use jump arcs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const CnfFormula formula = gen_cnf(4, 4, 3, derive_seed(seed, 5));
        const IrrPathInstance instance = reduce_sat_to_irrpath(formula);
        for (const auto& path : enumerate_paths(instance.dag, 1 << 12).paths) {
            if (static_cast<long long>(path.size()) - 1 != instance.path_length) continue;
            for (std::size_t i = 1; i + 2 < path.size(); ++i) {
                const LiteralSite& from = instance.sites[static_cast<std::size_t>(path[i]) - 1];
                const LiteralSite& to =
                    instance.sites[static_cast<std::size_t>(path[i + 1]) - 1];
                CHECK(to.clause == from.clause + 1);
            }
        }
    }
}

TEST_CASE("reduction answers match the oracles on random instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const SubsetSumInstance instance = gen_subsetsum(9, -12, 12, derive_seed(seed, 6));
        const bool expected = subset_sum_oracle(instance).has_value();
        CHECK(solve_null_weighted_path(reduce_ss_to_nullpath(instance)).yes == expected);
        const KPathInstance k_instance = reduce_ss_to_kpath(instance);
        CHECK(solve_k_weighted_path(k_instance.dag, k_instance.target_sum).yes == expected);
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const CnfFormula formula = gen_cnf(5, 4, 3, derive_seed(seed, 7));
        const IrrPathInstance instance = reduce_sat_to_irrpath(formula);
        CHECK(solve_irreducible_path(instance.dag, instance.path_length).yes ==
              sat_oracle(formula).has_value());
    }
}
