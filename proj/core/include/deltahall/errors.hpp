#pragma once

#include <stdexcept>
#include <string>

namespace deltahall {

// Bad user input: malformed quiver files, non-prime q, invalid flags.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed one of the configured caps. Never silently
// truncated; callers either raise the cap or shrink the problem.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A product needs basis classes beyond the catalog dimension bound.
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace deltahall
