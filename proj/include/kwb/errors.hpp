#pragma once

#include <stdexcept>
#include <string>

namespace kwb {

// Base class for all workbench errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched variable counts, ranks, or sequence lengths.
struct DimensionError : Error {
    using Error::Error;
};

// Input outside an operation's mathematical domain (non-dominant weight,
// Laurent polynomial where ordinary is required, inhomogeneous input, ...).
struct DomainError : Error {
    using Error::Error;
};

// A stated precondition fails on otherwise well-formed data, e.g. the
// Keller condition det J(f) == 1.
struct PreconditionError : Error {
    using Error::Error;
};

// A guard rail was exceeded (N > 8, character degree > 40, pipeline
// degree > 64).  Deliberate refusal, never silent truncation.
struct ResourceError : Error {
    using Error::Error;
};

// Text input failed to parse; carries 1-based line/column.
struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& what, int line_, int col_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

}  // namespace kwb
