#ifndef ODOSPEC_ERRORS_HPP
#define ODOSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace odospec {

// Failure classes map 1:1 onto CLI exit codes (see tools/main.cpp and README).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: expression syntax, invalid flags, config violations.
struct ParseError : Error {
    ParseError(const std::string& msg, int line = 0, int col = 0)
        : Error(format(msg, line, col)), line(line), col(col) {}
    int line;
    int col;

  private:
    static std::string format(const std::string& msg, int line, int col) {
        if (line <= 0) return msg;
        return std::to_string(line) + ":" + std::to_string(col) + ": " + msg;
    }
};

// An operation that presumes [P,Q]=0 was fed a non-commuting pair.
struct NonCommutingError : Error {
    using Error::Error;
};

// Rank-1 gate: no coprime pair of orders.
struct NonCoprimeError : Error {
    using Error::Error;
};

// Numeric verification failed: residual above tolerance, root finder stuck.
struct ToleranceError : Error {
    using Error::Error;
};

// Everything else: zero division, base-point mismatch, exhausted validity, ...
struct DomainError : Error {
    using Error::Error;
};

} // namespace odospec

#endif
