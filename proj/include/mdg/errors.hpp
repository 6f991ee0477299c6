#ifndef MDG_ERRORS_HPP
#define MDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mdg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A digraph failed structural validation (range, self-loop, duplicate arc,
/// bad labels).
struct InvalidDigraphError : Error {
    using Error::Error;
};

/// An operation that requires strong connectivity was given a digraph with an
/// unreachable ordered pair. Carries one witness pair.
struct NotStronglyConnectedError : Error {
    int from;
    int to;
    NotStronglyConnectedError(int from_, int to_)
        : Error("digraph is not strongly connected: no directed path from " +
                std::to_string(from_) + " to " + std::to_string(to_)),
          from(from_), to(to_) {}
};

/// A construction would exceed the configured vertex budget.
struct BudgetError : Error {
    using Error::Error;
};

/// A factor-based shortcut was requested but its validity hypothesis fails.
struct ShortcutInvalidError : Error {
    using Error::Error;
};

/// A digraph file could not be read or parsed. Carries the 1-based line
/// number when one applies (0 for whole-file problems).
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
};

}  // namespace mdg

#endif
