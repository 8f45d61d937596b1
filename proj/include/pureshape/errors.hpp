#ifndef PURESHAPE_ERRORS_HPP_
#define PURESHAPE_ERRORS_HPP_

#include <stdexcept>

namespace pureshape {

// Domain violations (bad mathematical input) use std::domain_error directly.

// Input shape is valid but the requested case is outside what this
// implementation handles (e.g. no linear key polynomial exists mod p).
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds a configured resource bound.
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pureshape

#endif  // PURESHAPE_ERRORS_HPP_
