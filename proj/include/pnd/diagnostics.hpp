#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pnd {

struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  int column = 1;
};

// Diagnostic in the normative error format:
//   FILE:LINE:COL: error: MESSAGE
//     goal: ...
//     chained: ...
// The two indented lines appear whenever a goal exists at the failure point.
struct Diagnostic {
  std::string file;
  Span span;
  std::string message;
  std::optional<std::string> goal;
  std::optional<std::string> chained;

  std::string format() const;
};

class Error : public std::runtime_error {
public:
  explicit Error(Diagnostic diag)
      : std::runtime_error(diag.format()), diag_(std::move(diag)) {}

  const Diagnostic& diagnostic() const { return diag_; }

private:
  Diagnostic diag_;
};

// Lexical or syntactic failure, including inner formula syntax.
class ParseError : public Error {
public:
  using Error::Error;
};

// Failure while checking items: kernel rejections, proof-step errors,
// registration conflicts.
class CheckError : public Error {
public:
  using Error::Error;
};

} // namespace pnd
