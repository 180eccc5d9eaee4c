#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclemax {

/// Malformed graph6 or MULTI input. `position()` is a byte offset for graph6
/// and a 1-based line number for MULTI text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Argument outside the domain where a formula or construction is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input larger than a configured capacity (canonical form, search range).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A structural precondition on the input graph does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cyclemax
