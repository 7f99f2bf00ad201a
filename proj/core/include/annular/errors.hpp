#pragma once

#include <stdexcept>
#include <string>

namespace annular {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input that cannot be read at all: bad syntax, bad slot index,
// an edge label that does not appear exactly twice.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Structurally readable input that violates a diagram invariant:
// non-planar rotation system, marker on the wrong piece, bad flags.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// A fixed-width coefficient operation would wrap. Callers can retry
// with big coefficients enabled.
struct CoefficientOverflow : Error {
    explicit CoefficientOverflow(const std::string& what) : Error(what) {}
};

// The state-sum enumeration would exceed the configured state cap.
struct StateLimitExceeded : Error {
    explicit StateLimitExceeded(const std::string& what) : Error(what) {}
};

// A rewrite was asked to do something the model cannot represent,
// e.g. twisting a dotted loop or removing a crossing that is not
// removable.
struct MoveError : Error {
    explicit MoveError(const std::string& what) : Error(what) {}
};

}  // namespace annular
