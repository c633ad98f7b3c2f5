#pragma once

#include <string>

#include "pnd/context.hpp"
#include "pnd/syntax.hpp"

namespace pnd {

// Renders with declared mixfix syntax and minimal parentheses; re-parsing a
// rendered term yields a structurally equal one. Schematics print like atoms.
std::string pretty(const Formula& f, const TheoryContext& ctx);
std::string pretty(const MetaProp& p, const TheoryContext& ctx);

} // namespace pnd
