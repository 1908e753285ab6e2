#pragma once

#include <stdexcept>
#include <string>

namespace graphfiber {

// Bad user input: malformed documents, out-of-range parameters, size caps.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical identity that is supposed to hold unconditionally failed.
// This always indicates a bug, never bad input; the CLI maps it to a
// distinct exit code so CI can tell the two apart.
struct theorem_violation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace graphfiber
