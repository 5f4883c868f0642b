#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacal/dsl/ast.hpp"
#include "jacal/harness.hpp"
#include "jacal/monomial.hpp"

namespace jacal::dsl {

struct RunOptions {
  /// Used as the fixture part of assertion labels.
  std::string fixture = "script";
  int s_max = 10;
  /// Order for rings declared without `order=`.
  std::optional<MonomialOrder> order;
};

/// Outcome of one statement.
struct CommandResult {
  std::string cmd;  // canonical source of the statement
  SourceSpan span;
  std::string kind;  // value kind, "assertion" or "error"
  std::string value;  // canonical text of the result
  std::vector<std::string> notes;
  std::optional<CorpusLine> assertion;
};

struct RunReport {
  std::vector<CommandResult> commands;
  /// Set when parsing or a statement failed; execution stops there.
  std::optional<std::string> diagnostic;

  /// "ok", "fail" (some assertion failed) or "error" (diagnostic).
  std::string status() const;
  /// 0 ok, 1 failed assertion, 2 diagnostic.
  int exit_code() const;
  std::vector<CorpusLine> assertions() const;

  std::string text() const;
  /// {"commands":[{"cmd","span","result"}],"status",...} with stable key order.
  std::string json(int indent = 2) const;
};

RunReport execute(const Script& script, const RunOptions& options = {});
/// Parses then executes; a syntax error becomes the report's diagnostic.
RunReport run_script(std::string_view source, const RunOptions& options = {});

}  // namespace jacal::dsl
