#pragma once

#include <stdexcept>
#include <string>

namespace wg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files (mesh files, config files). Carries a line number
// when one is known.
struct ParseError : Error {
    ParseError(const std::string& what, long line = -1)
        : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what), line(line) {}
    long line;
};

// Structurally defective mesh: open loops, bad orientation, bad edge sharing.
struct ValidationError : Error {
    using Error::Error;
};

// Argument outside its admissible range.
struct DomainError : Error {
    using Error::Error;
};

// Iterative solver failed to reach its tolerance.
struct SolverError : Error {
    using Error::Error;
};

} // namespace wg
