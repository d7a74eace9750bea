#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esymm {

/// Incompatible shapes passed to a linear-algebra or polynomial operation.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Attempt to solve or invert a singular system; carries the exact rank found.
struct SingularMatrixError : std::runtime_error {
    std::size_t rank;
    SingularMatrixError(std::size_t r, const std::string& what)
        : std::runtime_error(what), rank(r) {}
};

/// A constructor-level invariant does not hold for the given data.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two algebraically equivalent computation routes disagreed.  This always
/// signals an implementation bug, never bad input.
struct InternalCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed JSON input; the message carries a field path.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace esymm
