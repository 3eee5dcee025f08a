#pragma once

// Internal whitespace tokenizer with line tracking for the plain-text input
// formats.  `#` starts a comment that runs to end of line.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qhhl/error.hpp"

namespace qhhl::detail {

struct Token {
  std::string text;
  int line;
};

class TokenStream {
public:
  explicit TokenStream(const std::string& path) : path_(path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens_.push_back({tok, lineno});
      last_line_ = lineno;
    }
  }

  const std::string& path() const { return path_; }
  bool done() const { return pos_ >= tokens_.size(); }
  int line() const {
    return done() ? last_line_ : tokens_[pos_].line;
  }

  /// Next token's text without consuming it ("" at end).
  std::string peek() const { return done() ? "" : tokens_[pos_].text; }

  std::string next(const char* what) {
    if (done())
      throw ParseError(path_, last_line_,
                       std::string("unexpected end of file, expected ") + what);
    return tokens_[pos_++].text;
  }

  void expect_keyword(const char* kw) {
    const int at = line();
    const std::string tok = next(kw);
    if (tok != kw)
      throw ParseError(path_, at, "expected keyword '" + std::string(kw) +
                                      "', found '" + tok + "'");
  }

  long long next_int(const char* what) {
    const int at = line();
    const std::string tok = next(what);
    try {
      size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError(path_, at, "expected integer " + std::string(what) +
                                      ", found '" + tok + "'");
    }
  }

  double next_real(const char* what) {
    const int at = line();
    const std::string tok = next(what);
    try {
      size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError(path_, at, "expected number " + std::string(what) +
                                      ", found '" + tok + "'");
    }
  }

  void expect_done() {
    if (!done())
      throw ParseError(path_, line(), "trailing content '" + peek() + "'");
  }

private:
  std::string path_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int last_line_ = 0;
};

} // namespace qhhl::detail
