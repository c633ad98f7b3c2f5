// Bundled theory scripts, embedded in the binary and also shipped as plain
// .pnd files. Loading a theory means checking its script into the context.

#pragma once

#include <string_view>
#include <vector>

#include "pnd/context.hpp"
#include "pnd/engine.hpp"

namespace pnd {

// Source text of a bundled theory: "base", "classical", "examples",
// "exercises". Throws std::out_of_range for other names.
std::string_view stdlib_source(std::string_view name);

std::vector<std::string_view> stdlib_names();

// Check the named bundled script into ctx. A failure here is a packaging
// defect, reported like any other check error.
CheckReport load_base(TheoryContext& ctx);
CheckReport load_classical(TheoryContext& ctx); // requires base
CheckReport load_examples(TheoryContext& ctx);  // requires base

// Fresh context with base loaded; the starting point for most callers.
TheoryContext base_context();

} // namespace pnd
