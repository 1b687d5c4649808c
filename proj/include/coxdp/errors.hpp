#ifndef COXDP_ERRORS_HPP
#define COXDP_ERRORS_HPP

#include <stdexcept>

namespace coxdp {

// Malformed or out-of-contract input (bad rank, degenerate data, flag misuse).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured resource cap was exceeded (orbit size, rejection sampling).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical invariant the code relies on failed; signals a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace coxdp

#endif
