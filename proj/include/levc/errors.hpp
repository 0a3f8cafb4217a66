#pragma once

#include <stdexcept>
#include <string>

namespace levc {

// Malformed textual input (edge lists, "p/q" literals). Carries the
// 1-based line number when one is known, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

// A precondition violation: zero denominator, self-loop, isolated vertex,
// out-of-range id, parameter below a family's minimum, unknown check name.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A request that would exceed a configured resource limit (vertex budget).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace levc
