#include "pnd/diagnostics.hpp"

#include <sstream>

namespace pnd {

std::string Diagnostic::format() const {
  std::ostringstream os;
  os << file << ':' << span.line << ':' << span.column << ": error: " << message;
  if (goal) {
    os << "\n  goal: " << *goal;
    os << "\n  chained: " << (chained && !chained->empty() ? *chained : "(none)");
  }
  return os.str();
}

} // namespace pnd
