#include "pnd/stdlib.hpp"

#include <stdexcept>

#include "stdlib_sources.hpp"

namespace pnd {

std::string_view stdlib_source(std::string_view name) {
  if (name == "base") return embedded::kBase;
  if (name == "classical") return embedded::kClassical;
  if (name == "examples") return embedded::kExamples;
  if (name == "exercises") return embedded::kExercises;
  throw std::out_of_range("no bundled theory named " + std::string(name));
}

std::vector<std::string_view> stdlib_names() {
  return {"base", "classical", "examples", "exercises"};
}

CheckReport load_base(TheoryContext& ctx) {
  return check_script(embedded::kBase, "base.pnd", ctx);
}

CheckReport load_classical(TheoryContext& ctx) {
  return check_script(embedded::kClassical, "classical.pnd", ctx);
}

CheckReport load_examples(TheoryContext& ctx) {
  return check_script(embedded::kExamples, "examples.pnd", ctx);
}

TheoryContext base_context() {
  TheoryContext ctx;
  load_base(ctx);
  return ctx;
}

} // namespace pnd
