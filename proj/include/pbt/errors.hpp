#pragma once

#include <stdexcept>
#include <string>

namespace pbt {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad argument: precondition violated by the caller.
struct argument_error : error {
    using error::error;
};

/// Malformed input document (class files, example lists).
struct parse_error : error {
    using error::error;
};

/// A decoder received a sample that does not match the protocol shape.
struct decode_error : error {
    using error::error;
};

/// A combinatorial search exceeded its configured budget.
struct resource_error : error {
    using error::error;
};

}  // namespace pbt
