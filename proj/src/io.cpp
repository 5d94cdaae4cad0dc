#include "io.hpp"

#include <charconv>
#include <unordered_set>

#include <json.hpp>

namespace dagpath {

namespace {

struct Token {
    std::string_view text;
    int line = 0;
    int col = 0;
};

// Whitespace-separated tokens with 1-based positions. A line whose first
// token starts with 'c' is a comment and is skipped entirely.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    std::optional<Token> next() {
        for (;;) {
            skip_spaces();
            if (pos_ >= text_.size()) return std::nullopt;
            if (line_start_ && text_[pos_] == 'c') {
                skip_line();
                continue;
            }
            break;
        }
        const int line = line_;
        const int col = col_;
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_])) advance();
        return Token{text_.substr(begin, pos_ - begin), line, col};
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
            line_start_ = true;
        } else {
            ++col_;
            if (!is_space(text_[pos_])) line_start_ = false;
        }
        ++pos_;
    }

    void skip_spaces() {
        while (pos_ < text_.size() && is_space(text_[pos_])) advance();
    }

    void skip_line() {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        if (pos_ < text_.size()) advance();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    bool line_start_ = true;
};

Token expect_token(Scanner& scanner, const char* what) {
    auto token = scanner.next();
    if (!token)
        fail_at(errc::syntax_error, std::string("expected ") + what + ", found end of input",
                scanner.line(), scanner.col());
    return *token;
}

void expect_word(Scanner& scanner, std::string_view word) {
    Token token = expect_token(scanner, ("'" + std::string(word) + "'").c_str());
    if (token.text != word)
        fail_at(errc::syntax_error,
                "expected '" + std::string(word) + "', found '" + std::string(token.text) + "'",
                token.line, token.col);
}

long long parse_int(const Token& token) {
    long long value = 0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range)
        fail_at(errc::syntax_error, "integer '" + std::string(token.text) +
                                        "' does not fit in 64 bits",
                token.line, token.col);
    if (ec != std::errc() || ptr != end)
        fail_at(errc::syntax_error, "expected integer, found '" + std::string(token.text) + "'",
                token.line, token.col);
    return value;
}

long long expect_int(Scanner& scanner, const char* what) {
    return parse_int(expect_token(scanner, what));
}

void expect_end(Scanner& scanner, errc code, const char* message) {
    if (auto extra = scanner.next())
        fail_at(code, std::string(message) + ": unexpected '" + std::string(extra->text) + "'",
                extra->line, extra->col);
}

} // namespace

SubsetSumInstance parse_subsetsum(std::string_view text) {
    Scanner scanner(text);
    expect_word(scanner, "p");
    expect_word(scanner, "ss");
    const long long n = expect_int(scanner, "element count");
    if (n < 0 || n > 1'000'000)
        fail_at(errc::syntax_error, "element count out of range", scanner.line(), scanner.col());

    SubsetSumInstance instance;
    instance.elements.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        auto token = scanner.next();
        if (!token)
            fail_at(errc::count_mismatch,
                    "header declares " + std::to_string(n) + " elements, found " +
                        std::to_string(i),
                    scanner.line(), scanner.col());
        instance.elements.push_back(parse_int(*token));
    }
    expect_end(scanner, errc::count_mismatch, "more elements than declared");
    return instance;
}

std::string serialize_subsetsum(const SubsetSumInstance& instance) {
    std::string out = "p ss " + std::to_string(instance.n()) + "\n";
    for (int i = 0; i < instance.n(); ++i) {
        out += std::to_string(instance.elements[static_cast<std::size_t>(i)]);
        out += (i + 1 == instance.n()) ? '\n' : ' ';
    }
    return out;
}

CnfFormula parse_cnf(std::string_view text) {
    Scanner scanner(text);
    expect_word(scanner, "p");
    expect_word(scanner, "cnf");
    const long long num_vars = expect_int(scanner, "variable count");
    const long long num_clauses = expect_int(scanner, "clause count");
    if (num_vars < 0 || num_vars > 1'000'000)
        fail_at(errc::syntax_error, "variable count out of range", scanner.line(), scanner.col());
    if (num_clauses < 0 || num_clauses > 10'000'000)
        fail_at(errc::syntax_error, "clause count out of range", scanner.line(), scanner.col());

    CnfFormula formula;
    formula.num_vars = static_cast<int>(num_vars);
    Clause clause;
    while (static_cast<long long>(formula.clauses.size()) < num_clauses) {
        auto token = scanner.next();
        if (!token)
            fail_at(errc::header_mismatch,
                    "header declares " + std::to_string(num_clauses) + " clauses, found " +
                        std::to_string(formula.clauses.size()) +
                        (clause.empty() ? "" : " and an unterminated clause"),
                    scanner.line(), scanner.col());
        const long long lit = parse_int(*token);
        if (lit == 0) {
            formula.clauses.push_back(std::move(clause));
            clause.clear();
            continue;
        }
        const long long var = lit < 0 ? -lit : lit;
        if (var > num_vars)
            fail_at(errc::header_mismatch,
                    "literal " + std::string(token->text) + " exceeds the declared " +
                        std::to_string(num_vars) + " variables",
                    token->line, token->col);
        for (const Literal& previous : clause)
            if (previous.var == static_cast<int>(var))
                fail_at(errc::duplicate_variable_in_clause,
                        "variable " + std::to_string(var) + " occurs twice in one clause",
                        token->line, token->col);
        clause.push_back({static_cast<int>(var), lit < 0});
    }
    expect_end(scanner, errc::header_mismatch, "more clauses than declared");
    return formula;
}

std::string serialize_cnf(const CnfFormula& formula) {
    std::string out = "p cnf " + std::to_string(formula.num_vars) + " " +
                      std::to_string(formula.num_clauses()) + "\n";
    for (const Clause& clause : formula.clauses) {
        for (const Literal& lit : clause) {
            out += std::to_string(lit.negated ? -lit.var : lit.var);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

WeightedDag parse_dag(std::string_view text) {
    Scanner scanner(text);
    expect_word(scanner, "p");
    expect_word(scanner, "dag");
    const long long num_vertices = expect_int(scanner, "vertex count");
    const long long num_arcs = expect_int(scanner, "arc count");
    const long long source = expect_int(scanner, "source");
    const long long target = expect_int(scanner, "target");
    if (num_vertices < 1 || num_vertices > 10'000'000)
        fail_at(errc::syntax_error, "vertex count out of range", scanner.line(), scanner.col());
    if (num_arcs < 0)
        fail_at(errc::syntax_error, "negative arc count", scanner.line(), scanner.col());

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(num_arcs));
    std::unordered_set<std::uint64_t> seen;
    for (long long i = 0; i < num_arcs; ++i) {
        auto first = scanner.next();
        if (!first)
            fail_at(errc::count_mismatch,
                    "header declares " + std::to_string(num_arcs) + " arcs, found " +
                        std::to_string(i),
                    scanner.line(), scanner.col());
        const long long tail = parse_int(*first);
        const long long head = expect_int(scanner, "arc head");
        const long long weight = expect_int(scanner, "arc weight");
        if (tail < 0 || tail >= num_vertices || head < 0 || head >= num_vertices)
            fail_at(errc::unknown_vertex, "arc endpoint out of range", first->line, first->col);
        if (tail == head)
            fail_at(errc::self_loop, "self-loop at vertex " + std::to_string(tail), first->line,
                    first->col);
        if (!seen.insert((static_cast<std::uint64_t>(tail) << 32) |
                         static_cast<std::uint64_t>(head))
                 .second)
            fail_at(errc::duplicate_arc,
                    "duplicate arc (" + std::to_string(tail) + ", " + std::to_string(head) + ")",
                    first->line, first->col);
        arcs.push_back({static_cast<int>(tail), static_cast<int>(head), weight});
    }
    expect_end(scanner, errc::count_mismatch, "more arcs than declared");

    // cycles, endpoint validity and the weight budget are checked here
    return WeightedDag(static_cast<int>(num_vertices), std::move(arcs),
                       static_cast<int>(source), static_cast<int>(target));
}

std::string serialize_dag(const WeightedDag& dag) {
    std::string out = "p dag " + std::to_string(dag.num_vertices()) + " " +
                      std::to_string(dag.arcs().size()) + " " + std::to_string(dag.source()) +
                      " " + std::to_string(dag.target()) + "\n";
    for (const Arc& arc : dag.arcs()) {
        out += std::to_string(arc.tail);
        out += ' ';
        out += std::to_string(arc.head);
        out += ' ';
        out += std::to_string(arc.weight);
        out += '\n';
    }
    return out;
}

std::string emit_witness(const SolveOutcome& outcome, std::string_view problem_tag,
                         std::optional<long long> k, const WeightedDag& dag) {
    nlohmann::ordered_json j;
    j["problem"] = problem_tag;
    j["answer"] = outcome.yes ? "yes" : "no";
    if (k) j["k"] = *k;
    if (outcome.witness) {
        const PathCheck pc = check_path(dag, *outcome.witness);
        j["witness"] = *outcome.witness;
        j["weight_sum"] = pc.weight_sum;
        j["length"] = pc.length;
    } else {
        j["witness"] = nullptr;
        j["weight_sum"] = nullptr;
        j["length"] = nullptr;
    }
    j["stats"] = {{"states_explored", outcome.stats.states_explored},
                  {"elapsed_ms", outcome.stats.elapsed_seconds * 1000.0}};
    return j.dump();
}

std::string report_to_jsonl(const VerificationReport& report) {
    std::string out;
    for (const TrialRecord& trial : report.trials) {
        nlohmann::ordered_json j;
        j["trial"] = trial.index;
        j["digest"] = trial.digest;
        if (trial.oracle_yes) j["oracle"] = *trial.oracle_yes ? "yes" : "no";
        if (trial.solver_yes) j["solver"] = *trial.solver_yes ? "yes" : "no";
        j["agree"] = trial.agree;
        if (trial.extracted_ok) j["extracted_ok"] = *trial.extracted_ok;
        if (trial.lifted_ok) j["lifted_ok"] = *trial.lifted_ok;
        if (!trial.note.empty()) j["note"] = trial.note;
        j["elapsed_ms"] = trial.elapsed_seconds * 1000.0;
        out += j.dump();
        out += '\n';
    }
    nlohmann::ordered_json summary;
    summary["kind"] = campaign_kind_name(report.kind);
    summary["trials"] = report.trials.size();
    summary["agreements"] = report.agreements();
    summary["failures"] = report.failure_indices();
    out += summary.dump();
    out += '\n';
    return out;
}

} // namespace dagpath
