#ifndef MATCHRED_ERRORS_HPP
#define MATCHRED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matchred {

// Malformed input file; line is 1-based.
struct parse_error : std::runtime_error {
    parse_error(std::size_t line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    std::size_t line;
};

// A supplied value violates a documented precondition or invariant.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Reference to a vertex that does not exist.
struct identifier_error : std::runtime_error {
    explicit identifier_error(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds the size guard of an exponential-time oracle.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Consistency check failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace matchred

#endif
