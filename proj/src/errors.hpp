#pragma once

#include <stdexcept>

namespace cableops {

// Operation called outside its contract (e.g. an inverse when the operator
// is singular). Maps to a clean caller-facing error, not a bug.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural identity the library relies on failed to hold. Always a bug
// (here or in the math); callers should treat it as fatal.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative routine hit its iteration cap before reaching tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cableops
