#include "instances.hpp"

#include <string>

namespace dagpath {

long long subset_sum(const SubsetSumInstance& instance, const SubsetWitness& witness) {
    long long sum = 0;
    for (int index : witness.indices) {
        if (index < 1 || index > instance.n())
            fail(errc::index_out_of_range, "witness index " + std::to_string(index) +
                                               " outside 1.." + std::to_string(instance.n()));
        sum += instance.elements[static_cast<std::size_t>(index) - 1];
    }
    return sum;
}

int CnfFormula::total_literals() const {
    int total = 0;
    for (const Clause& clause : clauses) total += static_cast<int>(clause.size());
    return total;
}

void validate_cnf(const CnfFormula& formula) {
    if (formula.num_vars < 0)
        fail(errc::invalid_argument, "negative variable count");
    for (const Clause& clause : formula.clauses) {
        for (std::size_t i = 0; i < clause.size(); ++i) {
            const Literal& lit = clause[i];
            if (lit.var < 1 || lit.var > formula.num_vars)
                fail(errc::invalid_argument,
                     "variable " + std::to_string(lit.var) + " outside 1.." +
                         std::to_string(formula.num_vars));
            for (std::size_t j = 0; j < i; ++j)
                if (clause[j].var == lit.var)
                    fail(errc::duplicate_variable_in_clause,
                         "variable " + std::to_string(lit.var) + " occurs twice in a clause");
        }
    }
}

bool literal_true(const Literal& lit, const Assignment& assignment) {
    return assignment.value(lit.var) != lit.negated;
}

bool satisfies(const CnfFormula& formula, const Assignment& assignment) {
    for (const Clause& clause : formula.clauses) {
        bool clause_true = false;
        for (const Literal& lit : clause)
            if (literal_true(lit, assignment)) {
                clause_true = true;
                break;
            }
        if (!clause_true) return false;
    }
    return true;
}

} // namespace dagpath
