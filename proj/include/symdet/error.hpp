#pragma once

#include <stdexcept>
#include <string>

namespace symdet {

// Error taxonomy shared with the CLI exit codes:
//   input_error -> 1, cutoff_error -> 2, internal_error -> 3.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size guard tripped (overridable with the force flag where documented).
struct cutoff_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An invariant the library is supposed to guarantee failed to hold.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace symdet
