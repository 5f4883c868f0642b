#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jacal/dsl/ast.hpp"

namespace jacal::dsl {

struct Token {
  enum class Kind { Name, Integer, Punct, End };
  Kind kind;
  std::string text;
  SourceSpan span;

  std::string describe() const;
};

/// A syntax or runtime error tied to a location in the script.
class Diagnostic : public std::runtime_error {
 public:
  Diagnostic(SourceSpan span, const std::string& message, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

std::vector<Token> tokenize(std::string_view text);

/// Parses a whole script; throws Diagnostic on the first syntax error.
Script parse(std::string_view text);

}  // namespace jacal::dsl
