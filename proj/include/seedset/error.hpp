#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seedset {

/// Malformed textual input (edge lists, threshold files, scheme strings).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    /// 1-based line number, or 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A solver broke one of its proven runtime guarantees (iteration bound,
/// size bound, or target-set correctness). Never expected in practice.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace seedset
