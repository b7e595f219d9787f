#ifndef SUBPOW_ERROR_HPP
#define SUBPOW_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subpow {

/// A precondition on caller-supplied values was violated.
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by cycle decomposition when some vertex has in- or out-degree != 1.
class not_permutation_graph : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The exhaustive oracle refused an instance larger than its subset budget.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when no line applies.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace subpow

#endif // SUBPOW_ERROR_HPP
