// Command-line front end. Talks to the library exclusively through the C API
// in dagpath.h. Data goes to the selected output ('-' = stdout), diagnostics
// and meta lines to stderr.
//
// Exit codes: solve/oracle 10 = yes, 20 = no; verify 0 = all trials agree,
// 3 = disagreement; 1 = usage or input error; 2 = resource limit.

#include <dagpath.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitYes = 10;
constexpr int kExitNo = 20;
constexpr int kExitError = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitDisagreement = 3;

int exit_code_for(dagpath_status status) {
    if (status == DAGPATH_ERR_RESOURCE_LIMIT || status == DAGPATH_ERR_ORACLE_LIMIT)
        return kExitResourceLimit;
    return kExitError;
}

[[noreturn]] void die(dagpath_status status) {
    std::cerr << "error: " << dagpath_status_name(status) << ": " << dagpath_last_error()
              << "\n";
    std::exit(exit_code_for(status));
}

[[noreturn]] void die_msg(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitError);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) die_msg("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) die_msg("cannot open output file '" + path + "'");
    file << data;
    if (!file) die_msg("write to '" + path + "' failed");
}

struct StringHolder {
    char* text = nullptr;
    ~StringHolder() { dagpath_string_free(text); }
    std::string str() const { return text ? text : ""; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;
    ~Handle() { Free(ptr); }
    T** out() { return &ptr; }
    T* get() const { return ptr; }
};

using DagHandle = Handle<dagpath_dag, dagpath_dag_free>;
using SubsetHandle = Handle<dagpath_subsetsum, dagpath_subsetsum_free>;
using CnfHandle = Handle<dagpath_cnf, dagpath_cnf_free>;
using OutcomeHandle = Handle<dagpath_outcome, dagpath_outcome_free>;
using IrrHandle = Handle<dagpath_irr_instance, dagpath_irr_instance_free>;
using ReportHandle = Handle<dagpath_report, dagpath_report_free>;

void check(dagpath_status status) {
    if (status != DAGPATH_OK) die(status);
}

// ---- reduce ----

int run_reduce(const std::string& flavor, const std::string& in_path,
               const std::string& out_path) {
    const std::string text = read_input(in_path);

    if (flavor == "sat2irr") {
        CnfHandle cnf;
        check(dagpath_cnf_parse(text.c_str(), cnf.out()));
        IrrHandle irr;
        check(dagpath_reduce_sat_to_irrpath(cnf.get(), irr.out()));
        StringHolder dag_text;
        check(dagpath_dag_serialize(dagpath_irr_instance_dag(irr.get()), &dag_text.text));
        const long long k = dagpath_irr_instance_k(irr.get());
        std::fprintf(stderr, "K = %lld\n", k);
        write_output(out_path, "c K " + std::to_string(k) + "\n" + dag_text.str());
        return 0;
    }

    SubsetHandle instance;
    check(dagpath_subsetsum_parse(text.c_str(), instance.out()));
    DagHandle dag;
    if (flavor == "ss2null") {
        check(dagpath_reduce_ss_to_nullpath(instance.get(), dag.out()));
        StringHolder dag_text;
        check(dagpath_dag_serialize(dag.get(), &dag_text.text));
        write_output(out_path, dag_text.str());
        return 0;
    }
    int64_t k = 0;
    int64_t p = 0;
    check(dagpath_reduce_ss_to_kpath(instance.get(), dag.out(), &k, &p));
    StringHolder dag_text;
    check(dagpath_dag_serialize(dag.get(), &dag_text.text));
    std::fprintf(stderr, "K = %lld\nP = %lld\n", static_cast<long long>(k),
                 static_cast<long long>(p));
    write_output(out_path, "c K " + std::to_string(k) + "\nc P " + std::to_string(p) + "\n" +
                               dag_text.str());
    return 0;
}

// ---- solve ----

int run_solve(const std::string& problem, const std::string& in_path,
              const std::string& out_path, long long k, const dagpath_limits& limits) {
    const std::string text = read_input(in_path);
    DagHandle dag;
    check(dagpath_dag_parse(text.c_str(), dag.out()));

    OutcomeHandle outcome;
    int has_k = 1;
    std::string tag;
    if (problem == "null") {
        has_k = 0;
        tag = "nullpath";
        check(dagpath_solve_null(dag.get(), &limits, outcome.out()));
    } else if (problem == "ksum") {
        tag = "kpath";
        check(dagpath_solve_ksum(dag.get(), k, &limits, outcome.out()));
    } else if (problem == "length") {
        tag = "lengthpath";
        check(dagpath_solve_length(dag.get(), k, outcome.out()));
    } else {
        tag = "irrpath";
        check(dagpath_solve_irr(dag.get(), k, &limits, outcome.out()));
    }

    StringHolder json;
    check(dagpath_emit_witness(outcome.get(), tag.c_str(), has_k, k, dag.get(), &json.text));
    write_output(out_path, json.str() + "\n");
    return dagpath_outcome_answer(outcome.get()) ? kExitYes : kExitNo;
}

// ---- oracle ----

int run_oracle(const std::string& problem, const std::string& in_path,
               const std::string& out_path, int bound) {
    const std::string text = read_input(in_path);
    if (problem == "subsetsum") {
        SubsetHandle instance;
        check(dagpath_subsetsum_parse(text.c_str(), instance.out()));
        const size_t n = dagpath_subsetsum_size(instance.get());
        std::vector<int32_t> indices(n);
        int found = 0;
        size_t size = 0;
        check(dagpath_subsetsum_oracle(instance.get(), bound, &found, indices.data(), n, &size));
        std::string json = "{\"problem\":\"subsetsum\",\"answer\":\"";
        json += found ? "yes" : "no";
        json += "\",\"witness\":";
        if (found) {
            json += "[";
            for (size_t i = 0; i < size; ++i)
                json += (i ? "," : "") + std::to_string(indices[i]);
            json += "]";
        } else {
            json += "null";
        }
        json += "}\n";
        write_output(out_path, json);
        return found ? kExitYes : kExitNo;
    }

    CnfHandle cnf;
    check(dagpath_cnf_parse(text.c_str(), cnf.out()));
    const auto num_vars = static_cast<size_t>(dagpath_cnf_num_vars(cnf.get()));
    std::vector<uint8_t> values(num_vars);
    int found = 0;
    check(dagpath_sat_oracle(cnf.get(), bound, &found, values.data(), num_vars));
    std::string json = "{\"problem\":\"sat\",\"answer\":\"";
    json += found ? "yes" : "no";
    json += "\",\"witness\":";
    if (found) {
        json += "[";
        for (size_t i = 0; i < num_vars; ++i)
            json += (i ? "," : "") + std::string(values[i] ? "true" : "false");
        json += "]";
    } else {
        json += "null";
    }
    json += "}\n";
    write_output(out_path, json);
    return found ? kExitYes : kExitNo;
}

// ---- verify ----

int run_verify(const dagpath_campaign_config& config, const std::string& out_path, bool quiet) {
    ReportHandle report;
    check(dagpath_run_campaign(&config, report.out()));
    StringHolder jsonl;
    check(dagpath_report_to_jsonl(report.get(), &jsonl.text));
    write_output(out_path, jsonl.str());
    const size_t trials = dagpath_report_trials(report.get());
    const size_t agreements = dagpath_report_agreements(report.get());
    const size_t failures = dagpath_report_failures(report.get());
    if (!quiet)
        std::fprintf(stderr, "trials %zu, agreements %zu, failures %zu\n", trials, agreements,
                     failures);
    return failures == 0 ? 0 : kExitDisagreement;
}

// ---- gen ----

int run_gen(const std::string& what, const std::string& out_path, int max_n, long long lo,
            long long hi, int max_vars, int max_clauses, int max_width, int vertices,
            double arc_prob, long long wlo, long long whi, uint64_t seed) {
    StringHolder text;
    if (what == "subsetsum") {
        SubsetHandle instance;
        check(dagpath_gen_subsetsum(max_n, lo, hi, seed, instance.out()));
        check(dagpath_subsetsum_serialize(instance.get(), &text.text));
    } else if (what == "cnf") {
        CnfHandle cnf;
        check(dagpath_gen_cnf(max_vars, max_clauses, max_width, seed, cnf.out()));
        check(dagpath_cnf_serialize(cnf.get(), &text.text));
    } else {
        DagHandle dag;
        check(dagpath_gen_dag(vertices, arc_prob, wlo, whi, seed, dag.out()));
        check(dagpath_dag_serialize(dag.get(), &text.text));
    }
    write_output(out_path, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"path problems in weighted DAGs: reductions, solvers, oracles, verification"};
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string out_path = "-";
    long long k = 0;
    bool quiet = false;

    dagpath_limits limits;
    dagpath_limits_default(&limits);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "transform an instance into a path problem");
    reduce->require_subcommand(1);
    std::vector<CLI::App*> reduce_subs;
    for (const char* flavor : {"ss2null", "ss2k", "sat2irr"}) {
        auto* sub = reduce->add_subcommand(flavor);
        sub->add_option("-i,--input", in_path, "input file, '-' for stdin");
        sub->add_option("-o,--output", out_path, "output file, '-' for stdout");
        reduce_subs.push_back(sub);
    }

    // solve
    auto* solve = app.add_subcommand("solve", "decide a path problem and emit a witness");
    solve->require_subcommand(1);
    std::vector<CLI::App*> solve_subs;
    for (const char* problem : {"null", "ksum", "length", "irr"}) {
        auto* sub = solve->add_subcommand(problem);
        sub->add_option("-i,--input", in_path, "DAG file, '-' for stdin");
        sub->add_option("-o,--output", out_path, "witness JSON output, '-' for stdout");
        if (std::string(problem) != "null")
            sub->add_option("--k", k, "problem parameter K")->required();
        sub->add_option("--state-budget", limits.state_budget, "null-path DP state budget");
        sub->add_option("--table-budget", limits.table_budget, "K-path table budget");
        sub->add_option("--node-budget", limits.node_budget, "irreducible search node budget");
        solve_subs.push_back(sub);
    }

    // oracle
    int oracle_subset_bound = 24;
    int oracle_sat_bound = 20;
    auto* oracle = app.add_subcommand("oracle", "exhaustive reference decision");
    oracle->require_subcommand(1);
    auto* oracle_ss = oracle->add_subcommand("subsetsum");
    oracle_ss->add_option("-i,--input", in_path, "instance file, '-' for stdin");
    oracle_ss->add_option("-o,--output", out_path, "output, '-' for stdout");
    oracle_ss->add_option("--bound", oracle_subset_bound, "exhaustive size bound");
    auto* oracle_sat = oracle->add_subcommand("sat");
    oracle_sat->add_option("-i,--input", in_path, "formula file, '-' for stdin");
    oracle_sat->add_option("-o,--output", out_path, "output, '-' for stdout");
    oracle_sat->add_option("--bound", oracle_sat_bound, "exhaustive variable bound");

    // verify
    dagpath_campaign_config config;
    dagpath_campaign_config_default(&config, DAGPATH_CAMPAIGN_NULLPATH);
    bool mutate_direct_arc = false;
    auto* verify = app.add_subcommand("verify", "randomized reduction/solver round trips");
    verify->require_subcommand(1);
    std::vector<std::pair<CLI::App*, dagpath_campaign_kind>> verify_subs = {
        {verify->add_subcommand("nullpath"), DAGPATH_CAMPAIGN_NULLPATH},
        {verify->add_subcommand("kpath"), DAGPATH_CAMPAIGN_KPATH},
        {verify->add_subcommand("irrpath"), DAGPATH_CAMPAIGN_IRRPATH},
        {verify->add_subcommand("solvers"), DAGPATH_CAMPAIGN_SOLVER_EQUIVALENCE},
    };
    for (auto& [sub, kind] : verify_subs) {
        (void)kind;
        sub->add_flag("--mutate-direct-arc", mutate_direct_arc,
                      "corrupt the direct-arc weight to prove the harness catches it");
        sub->add_option("--trials", config.trials, "number of random trials");
        sub->add_option("--seed", config.seed, "campaign seed");
        sub->add_option("--max-n", config.max_n, "subset-sum size bound");
        sub->add_option("--min-value", config.value_lo, "subset-sum value lower bound");
        sub->add_option("--max-value", config.value_hi, "subset-sum value upper bound");
        sub->add_option("--max-vars", config.max_vars, "CNF variable bound");
        sub->add_option("--max-clauses", config.max_clauses, "CNF clause bound");
        sub->add_option("--max-width", config.max_clause_width, "CNF clause width bound");
        sub->add_option("--dag-size", config.dag_size, "random DAG vertex bound");
        sub->add_option("--arc-prob", config.arc_probability,
                        "arc probability (0 cycles 0.2/0.5/0.8)");
        sub->add_option("-o,--output", out_path, "JSONL report output, '-' for stdout");
        sub->add_flag("--quiet", quiet, "suppress the summary line on stderr");
    }

    // gen
    int gen_max_n = 12;
    long long gen_lo = -20, gen_hi = 20;
    int gen_max_vars = 6, gen_max_clauses = 5, gen_max_width = 3;
    int gen_vertices = 10;
    double gen_arc_prob = 0.5;
    long long gen_wlo = -5, gen_whi = 5;
    uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "sample a random instance");
    gen->require_subcommand(1);
    auto* gen_ss = gen->add_subcommand("subsetsum");
    gen_ss->add_option("--max-n", gen_max_n, "size bound");
    gen_ss->add_option("--min-value", gen_lo, "value lower bound");
    gen_ss->add_option("--max-value", gen_hi, "value upper bound");
    auto* gen_cnf = gen->add_subcommand("cnf");
    gen_cnf->add_option("--max-vars", gen_max_vars, "variable bound");
    gen_cnf->add_option("--max-clauses", gen_max_clauses, "clause bound");
    gen_cnf->add_option("--max-width", gen_max_width, "clause width bound");
    auto* gen_dag = gen->add_subcommand("dag");
    gen_dag->add_option("--vertices", gen_vertices, "vertex count");
    gen_dag->add_option("--arc-prob", gen_arc_prob, "forward arc probability");
    gen_dag->add_option("--min-weight", gen_wlo, "weight lower bound");
    gen_dag->add_option("--max-weight", gen_whi, "weight upper bound");
    for (auto* sub : {gen_ss, gen_cnf, gen_dag}) {
        sub->add_option("--seed", gen_seed, "generator seed");
        sub->add_option("-o,--output", out_path, "output file, '-' for stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    for (size_t i = 0; i < reduce_subs.size(); ++i)
        if (reduce_subs[i]->parsed())
            return run_reduce(reduce_subs[i]->get_name(), in_path, out_path);
    for (auto* sub : solve_subs)
        if (sub->parsed()) return run_solve(sub->get_name(), in_path, out_path, k, limits);
    if (oracle_ss->parsed()) return run_oracle("subsetsum", in_path, out_path, oracle_subset_bound);
    if (oracle_sat->parsed()) return run_oracle("sat", in_path, out_path, oracle_sat_bound);
    for (auto& [sub, kind] : verify_subs)
        if (sub->parsed()) {
            config.kind = kind;
            config.limits = limits;
            if (mutate_direct_arc) config.mutation = DAGPATH_MUTATION_DROP_DIRECT_ARC_BONUS;
            return run_verify(config, out_path, quiet);
        }
    if (gen_ss->parsed())
        return run_gen("subsetsum", out_path, gen_max_n, gen_lo, gen_hi, 0, 0, 0, 0, 0, 0, 0,
                       gen_seed);
    if (gen_cnf->parsed())
        return run_gen("cnf", out_path, 0, 0, 0, gen_max_vars, gen_max_clauses, gen_max_width, 0,
                       0, 0, 0, gen_seed);
    if (gen_dag->parsed())
        return run_gen("dag", out_path, 0, 0, 0, 0, 0, 0, gen_vertices, gen_arc_prob, gen_wlo,
                       gen_whi, gen_seed);

    die_msg("no subcommand selected");
}
