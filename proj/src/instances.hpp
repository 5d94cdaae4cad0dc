#ifndef DAGPATH_INSTANCES_HPP
#define DAGPATH_INSTANCES_HPP

#include <vector>

#include "errors.hpp"

namespace dagpath {

// Ordered sequence a_1..a_n; solutions are index subsets, so duplicate values
// are fine.
struct SubsetSumInstance {
    std::vector<long long> elements;

    int n() const { return static_cast<int>(elements.size()); }

    friend bool operator==(const SubsetSumInstance&, const SubsetSumInstance&) = default;
};

// Strictly increasing 1-based indices into the instance.
struct SubsetWitness {
    std::vector<int> indices;

    friend bool operator==(const SubsetWitness&, const SubsetWitness&) = default;
};

long long subset_sum(const SubsetSumInstance& instance, const SubsetWitness& witness);

struct Literal {
    int var = 0; // 1-based
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
    int total_literals() const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Enforces 1 <= var <= num_vars and pairwise distinct variables per clause.
void validate_cnf(const CnfFormula& formula);

// Total truth assignment; values[v - 1] is the value of variable v.
struct Assignment {
    std::vector<bool> values;

    bool value(int var) const { return values.at(static_cast<std::size_t>(var) - 1); }

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

bool literal_true(const Literal& lit, const Assignment& assignment);
bool satisfies(const CnfFormula& formula, const Assignment& assignment);

} // namespace dagpath

#endif
