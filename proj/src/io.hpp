#ifndef DAGPATH_IO_HPP
#define DAGPATH_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "graph.hpp"
#include "harness.hpp"
#include "instances.hpp"
#include "solvers.hpp"

namespace dagpath {

// All formats share DIMACS-style framing: 'c' comment lines, one 'p' header
// line, whitespace-separated decimal integers. Parse errors carry 1-based
// line and column positions.

// "p ss <n>" followed by n signed integers.
SubsetSumInstance parse_subsetsum(std::string_view text);
std::string serialize_subsetsum(const SubsetSumInstance& instance);

// Standard DIMACS CNF: "p cnf <vars> <clauses>", clauses are 0-terminated
// literal runs. Clauses with a repeated variable are rejected.
CnfFormula parse_cnf(std::string_view text);
std::string serialize_cnf(const CnfFormula& formula);

// "p dag <V> <A> <s> <t>" followed by A lines "<tail> <head> <weight>".
// The serializer emits arcs sorted by (tail, head).
WeightedDag parse_dag(std::string_view text);
std::string serialize_dag(const WeightedDag& dag);

// Single JSON object with fixed key order: problem, answer, k (only when
// given), witness, weight_sum, length, stats. Identical inputs produce
// identical bytes.
std::string emit_witness(const SolveOutcome& outcome, std::string_view problem_tag,
                         std::optional<long long> k, const WeightedDag& dag);

// One JSON object per trial, then one summary object, newline separated.
std::string report_to_jsonl(const VerificationReport& report);

} // namespace dagpath

#endif
