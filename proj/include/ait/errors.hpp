#pragma once

#include <stdexcept>
#include <string>

namespace ait {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: invalid bit text, invalid distribution, membership violation,
// malformed code stream, malformed cache file.
struct domain_error : error {
    using error::error;
};

// The request is well-formed but exceeds a configured work budget or the
// exact-mode scale bound.
struct resource_error : error {
    using error::error;
};

} // namespace ait
