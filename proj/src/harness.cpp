#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "io.hpp"
#include "reductions.hpp"
#include "rng.hpp"

namespace dagpath {

const char* campaign_kind_name(CampaignKind kind) {
    switch (kind) {
        case CampaignKind::nullpath: return "nullpath";
        case CampaignKind::kpath: return "kpath";
        case CampaignKind::irrpath: return "irrpath";
        case CampaignKind::solver_equivalence: return "solver-equivalence";
    }
    return "unknown";
}

int VerificationReport::agreements() const {
    int count = 0;
    for (const TrialRecord& trial : trials) count += trial.agree ? 1 : 0;
    return count;
}

std::vector<int> VerificationReport::failure_indices() const {
    std::vector<int> failures;
    for (const TrialRecord& trial : trials) {
        const bool witness_bad = (trial.extracted_ok && !*trial.extracted_ok) ||
                                 (trial.lifted_ok && !*trial.lifted_ok);
        if (!trial.agree || witness_bad) failures.push_back(trial.index);
    }
    return failures;
}

SubsetSumInstance gen_subsetsum(int max_n, long long value_lo, long long value_hi,
                                std::uint64_t seed) {
    if (max_n < 0 || value_lo > value_hi)
        fail(errc::invalid_argument, "bad subset-sum generator bounds");
    SplitRng rng(seed, 0x5353); // "SS"
    SubsetSumInstance instance;
    const long long n = rng.uniform(0, max_n);
    instance.elements.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        instance.elements.push_back(rng.uniform(value_lo, value_hi));
    return instance;
}

CnfFormula gen_cnf(int max_vars, int max_clauses, int max_width, std::uint64_t seed) {
    if (max_vars < 1 || max_clauses < 1 || max_width < 1 || max_width > max_vars)
        fail(errc::invalid_argument, "bad CNF generator bounds");
    SplitRng rng(seed, 0x434E46); // "CNF"
    CnfFormula formula;
    formula.num_vars = static_cast<int>(rng.uniform(1, max_vars));
    const long long num_clauses = rng.uniform(1, max_clauses);

    std::vector<int> vars(static_cast<std::size_t>(formula.num_vars));
    std::iota(vars.begin(), vars.end(), 1);
    for (long long c = 0; c < num_clauses; ++c) {
        const long long width = rng.uniform(1, std::min(max_width, formula.num_vars));
        // partial Fisher-Yates: distinct variables per clause
        Clause clause;
        for (long long i = 0; i < width; ++i) {
            const auto j = static_cast<std::size_t>(
                rng.uniform(static_cast<long long>(i), formula.num_vars - 1));
            std::swap(vars[static_cast<std::size_t>(i)], vars[j]);
            clause.push_back({vars[static_cast<std::size_t>(i)], rng.bernoulli(0.5)});
        }
        std::sort(clause.begin(), clause.end(),
                  [](const Literal& a, const Literal& b) { return a.var < b.var; });
        formula.clauses.push_back(std::move(clause));
    }
    return formula;
}

WeightedDag gen_dag(int num_vertices, double arc_probability, long long weight_lo,
                    long long weight_hi, std::uint64_t seed) {
    if (num_vertices < 2 || weight_lo > weight_hi)
        fail(errc::invalid_argument, "bad DAG generator bounds");
    SplitRng rng(seed, 0x444147); // "DAG"
    std::vector<Arc> arcs;
    for (int i = 0; i < num_vertices; ++i)
        for (int j = i + 1; j < num_vertices; ++j)
            if (rng.bernoulli(arc_probability))
                arcs.push_back({i, j, rng.uniform(weight_lo, weight_hi)});
    return WeightedDag(num_vertices, std::move(arcs), 0, num_vertices - 1);
}

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

std::string fnv_digest(std::string_view text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

WeightedDag apply_mutation(const WeightedDag& dag, Mutation mutation) {
    if (mutation == Mutation::none) return dag;
    std::vector<Arc> arcs = dag.arcs();
    for (Arc& arc : arcs)
        if (arc.tail == dag.source() && arc.head == dag.target()) arc.weight -= 1;
    return WeightedDag(dag.num_vertices(), std::move(arcs), dag.source(), dag.target());
}

void note_failure(TrialRecord& record, const std::string& note) {
    if (!record.note.empty()) record.note += "; ";
    record.note += note;
}

// One subset-sum round trip: oracle answer vs solver answer on the reduced
// DAG, with witness maps checked in both directions.
TrialRecord subset_trial(const CampaignConfig& config, int index,
                         const SubsetSumInstance& instance) {
    Timer timer;
    TrialRecord record;
    record.index = index;
    record.digest = fnv_digest(serialize_subsetsum(instance));

    const auto oracle = subset_sum_oracle(instance, config.subset_oracle_bound);
    record.oracle_yes = oracle.has_value();

    long long target_sum = 0;
    WeightedDag dag = [&] {
        if (config.kind == CampaignKind::nullpath)
            return apply_mutation(reduce_ss_to_nullpath(instance), config.mutation);
        KPathInstance reduced = reduce_ss_to_kpath(instance);
        target_sum = reduced.target_sum;
        long long expected_shift = 0;
        for (long long a : instance.elements) expected_shift = std::max(expected_shift, -a);
        if (reduced.shift != expected_shift ||
            reduced.target_sum != (instance.n() + 1) * expected_shift)
            note_failure(record, "translated instance violates the K = (n+1)P contract");
        for (const Arc& arc : reduced.dag.arcs())
            if (arc.weight < 0) note_failure(record, "translated weight below zero");
        return apply_mutation(std::move(reduced.dag), config.mutation);
    }();

    SolveOutcome outcome;
    try {
        outcome = config.kind == CampaignKind::nullpath
                      ? solve_null_weighted_path(dag, config.limits)
                      : solve_k_weighted_path(dag, target_sum, config.limits);
    } catch (const Error& e) {
        record.solver_yes = std::nullopt;
        record.agree = false;
        note_failure(record, std::string("solver error: ") + e.what());
        record.elapsed_seconds = timer.seconds();
        return record;
    }
    record.solver_yes = outcome.yes;
    record.agree = (oracle.has_value() == outcome.yes) && record.note.empty();
    if (!record.agree && record.note.empty())
        note_failure(record, "oracle and solver disagree");

    if (outcome.yes) {
        try {
            const SubsetWitness extracted = extract_subset(*outcome.witness, instance);
            record.extracted_ok =
                !extracted.indices.empty() && subset_sum(instance, extracted) == 0;
        } catch (const Error& e) {
            record.extracted_ok = false;
            note_failure(record, std::string("extract_subset: ") + e.what());
        }
        if (!*record.extracted_ok) note_failure(record, "extracted subset does not sum to zero");
    }
    if (oracle) {
        const std::vector<int> lifted = lift_subset(*oracle, instance);
        const Criterion criterion = config.kind == CampaignKind::nullpath
                                        ? Criterion::null_weight
                                        : Criterion::weight_k;
        record.lifted_ok = check_witness(dag, lifted, criterion, target_sum);
        if (!*record.lifted_ok) note_failure(record, "lifted path rejected by check_witness");
    }

    record.elapsed_seconds = timer.seconds();
    return record;
}

TrialRecord sat_trial(const CampaignConfig& config, int index, const CnfFormula& formula) {
    Timer timer;
    TrialRecord record;
    record.index = index;
    record.digest = fnv_digest(serialize_cnf(formula));

    const auto oracle = sat_oracle(formula, config.sat_oracle_bound);
    record.oracle_yes = oracle.has_value();

    const IrrPathInstance instance = reduce_sat_to_irrpath(formula);

    SolveOutcome outcome;
    try {
        outcome = solve_irreducible_path(instance.dag, instance.path_length, config.limits);
    } catch (const Error& e) {
        record.agree = false;
        note_failure(record, std::string("solver error: ") + e.what());
        record.elapsed_seconds = timer.seconds();
        return record;
    }
    record.solver_yes = outcome.yes;
    record.agree = oracle.has_value() == outcome.yes;
    if (!record.agree) note_failure(record, "oracle and solver disagree");

    if (outcome.yes) {
        try {
            const Assignment extracted = extract_assignment(*outcome.witness, instance, formula);
            record.extracted_ok = satisfies(formula, extracted);
        } catch (const Error& e) {
            record.extracted_ok = false;
            note_failure(record, std::string("extract_assignment: ") + e.what());
        }
        if (!*record.extracted_ok)
            note_failure(record, "extracted assignment does not satisfy the formula");
    }
    if (oracle) {
        const std::vector<int> lifted = lift_assignment(*oracle, instance, formula);
        record.lifted_ok =
            check_witness(instance.dag, lifted, Criterion::irreducible_k, instance.path_length);
        if (!*record.lifted_ok) note_failure(record, "lifted path rejected by check_witness");
    }

    record.elapsed_seconds = timer.seconds();
    return record;
}

// Every solver vs the enumeration oracle on one pair of random DAGs (signed
// weights for the null-path solver, non-negative for the K-weighted one).
TrialRecord equivalence_trial(const CampaignConfig& config, int index, const WeightedDag& signed_dag,
                              const WeightedDag& nonneg_dag) {
    Timer timer;
    TrialRecord record;
    record.index = index;
    record.digest = fnv_digest(serialize_dag(signed_dag) + serialize_dag(nonneg_dag));
    record.agree = true;
    bool witnesses_ok = true;

    const auto check = [&](bool expected, const SolveOutcome& outcome, const WeightedDag& dag,
                           Criterion criterion, long long k, const std::string& what) {
        if (outcome.yes != expected) {
            record.agree = false;
            note_failure(record, what + ": solver says " + (outcome.yes ? "yes" : "no") +
                                     ", enumeration says " + (expected ? "yes" : "no"));
        }
        if (outcome.yes && !check_witness(dag, *outcome.witness, criterion, k)) {
            witnesses_ok = false;
            note_failure(record, what + ": witness rejected");
        }
    };

    const auto signed_paths = enumerate_paths(signed_dag, 1 << 20).paths;
    const auto nonneg_paths = enumerate_paths(nonneg_dag, 1 << 20).paths;

    bool any_null = false;
    for (const auto& path : signed_paths)
        any_null |= check_path(signed_dag, path).weight_sum == 0;
    check(any_null, solve_null_weighted_path(signed_dag, config.limits), signed_dag,
          Criterion::null_weight, 0, "nullpath");

    long long max_sum = 0;
    for (const auto& path : nonneg_paths)
        max_sum = std::max(max_sum, check_path(nonneg_dag, path).weight_sum);
    for (long long k = 0; k <= max_sum + 1; ++k) {
        bool expected = false;
        for (const auto& path : nonneg_paths)
            expected |= check_path(nonneg_dag, path).weight_sum == k;
        check(expected, solve_k_weighted_path(nonneg_dag, k, config.limits), nonneg_dag,
              Criterion::weight_k, k, "kpath K=" + std::to_string(k));
    }

    for (long long k = 1; k <= signed_dag.num_vertices(); ++k) {
        bool expected_len = false;
        bool expected_irr = false;
        for (const auto& path : signed_paths) {
            if (static_cast<long long>(path.size()) - 1 != k) continue;
            expected_len = true;
            expected_irr |= is_irreducible(signed_dag, path);
        }
        check(expected_len, solve_path_of_length_k(signed_dag, k), signed_dag,
              Criterion::length_k, k, "length K=" + std::to_string(k));
        check(expected_irr, solve_irreducible_path(signed_dag, k, config.limits), signed_dag,
              Criterion::irreducible_k, k, "irr K=" + std::to_string(k));
    }

    record.extracted_ok = witnesses_ok;
    record.elapsed_seconds = timer.seconds();
    return record;
}

// A trial that blows up in an unexpected place still yields a (failed)
// record; campaigns never abort midway.
template <typename Fn>
TrialRecord guarded_trial(int index, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        TrialRecord record;
        record.index = index;
        record.agree = false;
        record.note = std::string("trial error: ") + e.what();
        return record;
    }
}

const SubsetSumInstance kPinnedNoInstance{{4, 2, -5}};
const SubsetSumInstance kPinnedYesInstance{{4, 2, -6}};

CnfFormula pinned_formula() {
    // (a v b v !c) & (d v !a) & (!a v !d v c) with a=1 b=2 c=3 d=4
    CnfFormula formula;
    formula.num_vars = 4;
    formula.clauses = {{{1, false}, {2, false}, {3, true}},
                       {{4, false}, {1, true}},
                       {{1, true}, {4, true}, {3, false}}};
    return formula;
}

CnfFormula pinned_unit_formula() {
    CnfFormula formula;
    formula.num_vars = 1;
    formula.clauses = {{{1, false}}};
    return formula;
}

} // namespace

VerificationReport run_campaign(const CampaignConfig& config) {
    if (config.trials < 1) fail(errc::invalid_argument, "campaign needs at least one trial");

    VerificationReport report;
    report.kind = config.kind;

    switch (config.kind) {
        case CampaignKind::nullpath:
        case CampaignKind::kpath: {
            if (config.max_n > config.subset_oracle_bound)
                fail(errc::oracle_limit, "max_n exceeds the subset-sum oracle bound");
            int index = 0;
            report.trials.push_back(guarded_trial(
                index, [&] { return subset_trial(config, index, kPinnedNoInstance); }));
            ++index;
            report.trials.push_back(guarded_trial(
                index, [&] { return subset_trial(config, index, kPinnedYesInstance); }));
            ++index;
            for (int t = 0; t < config.trials; ++t, ++index) {
                report.trials.push_back(guarded_trial(index, [&] {
                    const SubsetSumInstance instance =
                        gen_subsetsum(config.max_n, config.value_lo, config.value_hi,
                                      derive_seed(config.seed, static_cast<std::uint64_t>(t)));
                    return subset_trial(config, index, instance);
                }));
            }
            break;
        }
        case CampaignKind::irrpath: {
            if (config.max_vars > config.sat_oracle_bound)
                fail(errc::oracle_limit, "max_vars exceeds the SAT oracle bound");
            int index = 0;
            report.trials.push_back(
                guarded_trial(index, [&] { return sat_trial(config, index, pinned_formula()); }));
            ++index;
            report.trials.push_back(guarded_trial(
                index, [&] { return sat_trial(config, index, pinned_unit_formula()); }));
            ++index;
            for (int t = 0; t < config.trials; ++t, ++index) {
                report.trials.push_back(guarded_trial(index, [&] {
                    const CnfFormula formula =
                        gen_cnf(config.max_vars, config.max_clauses, config.max_clause_width,
                                derive_seed(config.seed, static_cast<std::uint64_t>(t)));
                    return sat_trial(config, index, formula);
                }));
            }
            break;
        }
        case CampaignKind::solver_equivalence: {
            static const double kProbs[] = {0.2, 0.5, 0.8};
            int index = 0;
            report.trials.push_back(guarded_trial(index, [&] {
                return equivalence_trial(config, index, reduce_ss_to_nullpath(kPinnedNoInstance),
                                         reduce_ss_to_kpath(kPinnedNoInstance).dag);
            }));
            ++index;
            report.trials.push_back(guarded_trial(index, [&] {
                const IrrPathInstance pinned_irr = reduce_sat_to_irrpath(pinned_formula());
                return equivalence_trial(config, index, pinned_irr.dag, pinned_irr.dag);
            }));
            ++index;
            for (int t = 0; t < config.trials; ++t, ++index) {
                report.trials.push_back(guarded_trial(index, [&] {
                    const std::uint64_t trial_seed =
                        derive_seed(config.seed, static_cast<std::uint64_t>(t));
                    SplitRng rng(trial_seed, 0x455156); // "EQV"
                    const int size =
                        static_cast<int>(rng.uniform(2, std::max(2, config.dag_size)));
                    const double prob =
                        config.arc_probability > 0.0 ? config.arc_probability : kProbs[t % 3];
                    const WeightedDag signed_dag =
                        gen_dag(size, prob, -5, 5, derive_seed(trial_seed, 1));
                    const WeightedDag nonneg_dag =
                        gen_dag(size, prob, 0, 5, derive_seed(trial_seed, 2));
                    return equivalence_trial(config, index, signed_dag, nonneg_dag);
                }));
            }
            break;
        }
    }
    return report;
}

} // namespace dagpath
