#pragma once

#include <stdexcept>

namespace staircover {

// Base class for everything this library throws on bad input.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A tile, cell or width does not fit inside the rectangle it is used with.
struct dimension_error : error {
    using error::error;
};

// A quantity was requested outside the range where it is defined.
struct domain_error : error {
    using error::error;
};

// A documented precondition of an operation was violated.
struct precondition_error : error {
    using error::error;
};

// The line takes an integer value at an integer abscissa, so the set of
// cells it meets is not a valid staircase.
struct degenerate_line_error : error {
    using error::error;
};

// The requested covering provably does not exist.
struct infeasible_error : error {
    using error::error;
};

// Malformed or invalid serialized input.
struct parse_error : error {
    using error::error;
};

} // namespace staircover
