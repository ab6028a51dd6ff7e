#pragma once

/* Built-in example registry: each entry runs a full computation on a
 * bundled input and compares every key result against its frozen expected
 * value. The machine section is deterministic, so repeated runs are
 * byte-identical. */

#include <string>
#include <vector>

#include "intdeg/json_io.hpp"

namespace intdeg {

struct RegistryEntry {
    std::string id;
    std::string title;
};

const std::vector<RegistryEntry>& registry_entries();

/// Runs one example; the returned document carries "results", a "checks"
/// array (name/expected/got/pass) and an overall "pass" flag.
/// Unknown ids raise math_error.
ordered_json run_example(const std::string& id);

/// Runs every example in registry order.
ordered_json run_all_examples();

} // namespace intdeg
