#ifndef DAGPATH_ERRORS_HPP
#define DAGPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dagpath {

enum class errc {
    syntax_error = 1,
    count_mismatch,
    header_mismatch,
    duplicate_variable_in_clause,
    cyclic_graph,
    duplicate_arc,
    self_loop,
    unknown_vertex,
    not_a_path,
    endpoints_equal,
    negative_weight,
    input_too_large,
    resource_limit,
    empty_formula,
    direct_arc_path,
    index_out_of_range,
    contradictory_literals,
    wrong_length,
    unsatisfied,
    oracle_limit,
    invalid_argument,
    internal_error,
};

const char* errc_name(errc code);

// Every failure in the core surfaces as one of these. Parse errors carry
// 1-based line/column; everything else leaves them at 0.
class Error : public std::runtime_error {
public:
    Error(errc code, std::string message, int line = 0, int column = 0)
        : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

    errc code() const { return code_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    errc code_;
    int line_;
    int column_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

[[noreturn]] inline void fail_at(errc code, const std::string& message, int line, int column) {
    throw Error(code, message + " (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ")",
                line, column);
}

} // namespace dagpath

#endif
