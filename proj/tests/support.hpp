// Shared helpers for the test suites: a CLI runner, file utilities, and an
// independent recursive-descent parser over the bundled operator table used
// as an oracle against the table-driven parser.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "pnd/stdlib.hpp"
#include "pnd/syntax.hpp"

namespace testutil {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(PND_SOURCE_DIR) + "/tests/fixtures/" + name;
}

inline std::string stdlib_path(const std::string& name) {
  return std::string(PND_SOURCE_DIR) + "/stdlib/" + name;
}

struct CliResult {
  int exit = -1;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::string& args, const std::string& input = "") {
  static int counter = 0;
  std::string base =
      "/tmp/pnd_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
  std::string in = base + ".in", out = base + ".out", err = base + ".err";
  {
    std::ofstream f(in);
    f << input;
  }
  std::string cmd =
      std::string(PND_BIN) + " " + args + " < " + in + " > " + out + " 2> " + err;
  int rc = std::system(cmd.c_str());
  CliResult result;
  result.exit = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  std::remove(in.c_str());
  std::remove(out.c_str());
  std::remove(err.c_str());
  return result;
}

// Reference parser for the fixed bundled table:
//   iff := imp ['<->' iff]      (infixr 2)
//   imp := dis ['-->' imp]      (infixr 3)
//   dis := con ['\/' dis]       (infixr 4)
//   con := neg ['/\' con]       (infixr 5)
//   neg := '~' neg | prim       (prefix 6)
//   prim := ident | 'F' | 'T' | '(' iff ')'
// Layered by construction, so it never consults a precedence table.
class ReferenceParser {
public:
  explicit ReferenceParser(std::string text) : text_(std::move(text)) {}

  pnd::Formula parse() {
    pnd::Formula f = iff();
    skip_ws();
    if (pos_ != text_.size()) throw std::runtime_error("reference parser: trailing input");
    return f;
  }

private:
  pnd::Formula iff() {
    pnd::Formula left = imp();
    if (eat("<->")) return pnd::Formula::app("Iff", {left, iff()});
    return left;
  }
  pnd::Formula imp() {
    pnd::Formula left = dis();
    if (eat("-->")) return pnd::Formula::app("Imp", {left, imp()});
    return left;
  }
  pnd::Formula dis() {
    pnd::Formula left = con();
    if (eat("\\/")) return pnd::Formula::app("Dis", {left, dis()});
    return left;
  }
  pnd::Formula con() {
    pnd::Formula left = neg();
    if (eat("/\\")) return pnd::Formula::app("Con", {left, con()});
    return left;
  }
  pnd::Formula neg() {
    if (eat("~")) return pnd::Formula::app("Neg", {neg()});
    return prim();
  }
  pnd::Formula prim() {
    skip_ws();
    if (eat("(")) {
      pnd::Formula f = iff();
      if (!eat(")")) throw std::runtime_error("reference parser: expected )");
      return f;
    }
    std::string word;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '\''))
      word += text_[pos_++];
    if (word.empty()) throw std::runtime_error("reference parser: expected a formula");
    if (word == "F") return pnd::Formula::app("Falsity", {});
    if (word == "T") return pnd::Formula::app("Truth", {});
    return pnd::Formula::atom(word);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    // The fixed table's tokens never prefix one another, so a plain
    // prefix check suffices.
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

inline pnd::Formula reference_parse(const std::string& text) {
  return ReferenceParser(text).parse();
}

} // namespace testutil
