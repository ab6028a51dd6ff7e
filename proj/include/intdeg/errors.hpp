#pragma once

#include <stdexcept>
#include <string>

namespace intdeg {

/* Error taxonomy matching the CLI exit-code contract:
 * schema_error -> exit 2 (malformed input documents),
 * math_error   -> exit 1 (mathematical precondition failures),
 * internal_error -> a bug (a proven bound or postcondition failed). */

struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace intdeg
