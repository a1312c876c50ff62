#pragma once

#include <stdexcept>
#include <string>

namespace chow {

struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(int line_, int column_, const std::string& what_)
        : std::runtime_error("parse error at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

// Reduction-step budget exhausted; callers must treat the computation as inconclusive.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generic scalar choices failed after the configured retry count; inconclusive, never a verdict.
struct genericity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal retry trigger: a generically zero-dimensional system came out positive-dimensional.
struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two redundant computations of the same quantity disagreed.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace chow
