#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace potstab {

/// Malformed sequence or graph text. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position))
        , position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A size limit (vertex cap, oracle cap) was exceeded. Never silently
/// truncated.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace potstab
