#pragma once

#include <stdexcept>
#include <string>

namespace spanlf {

enum class ParseErrorKind {
    malformed_header,
    byte_out_of_range,
    truncated,
    trailing_garbage,
    too_many_vertices,
    malformed_json,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ParseErrorKind kind() const { return kind_; }

private:
    ParseErrorKind kind_;
};

/// Parameters outside an operation's domain (vertex index out of range,
/// n < 3 for Hamiltonian completion, bounds outside the range where they hold).
class DomainError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A node or wall-clock budget ran out before an exact answer was reached.
class BudgetExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation's precondition does not hold for the supplied instance.
class PreconditionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Something that must hold mathematically did not. Always a bug.
class InvariantViolation : public std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace spanlf
