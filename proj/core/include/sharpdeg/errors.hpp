#ifndef SHARPDEG_ERRORS_HPP
#define SHARPDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sharpdeg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments, malformed input, violated operation preconditions.
struct PreconditionError : Error {
    using Error::Error;
};

// Exact division left a nonzero remainder.
struct NotDivisibleError : Error {
    using Error::Error;
};

// A search or enumeration would exceed its configured cap.
struct CapExceededError : Error {
    using Error::Error;
};

// A runtime check of a guaranteed inequality failed.  Seeing this means a
// bug, not a user error; callers should not catch it casually.
struct ContradictionError : Error {
    using Error::Error;
};

// Text input rejected by a parser; carries the byte offset of the problem.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : Error(what + " at offset " + std::to_string(off)), offset(off) {}
};

} // namespace sharpdeg

#endif
