#pragma once

#include <stdexcept>
#include <string>

namespace ahtk {

struct InvalidGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPath : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConcatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCone : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a bounded search exhausts its escalation schedule without
// reaching a decision it is contractually required to reach.
struct InternalLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text-format errors carry the 1-based line and column of the offending token.
struct ParseError : std::runtime_error {
    int line;
    int column;

    ParseError(const std::string& message, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + message),
          line(line_),
          column(column_)
    {
    }
};

} // namespace ahtk
