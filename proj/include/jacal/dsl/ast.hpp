#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace jacal::dsl {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;

  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind {
    Integer,  // text
    Name,     // text
    Negate,   // args[0]
    Binary,   // text is the operator, args[0] op args[1]
    Call,     // text(args...)
    List,     // [args...]
    Tuple,    // (args...), at least two entries
    IdealLit, // (args[0]; args[1..])
    Keyword,  // text=args[0], only inside calls
  };

  Kind kind;
  std::string text;
  std::vector<ExprPtr> args;
  SourceSpan span;
};

struct Stmt {
  enum class Kind {
    Field,          // field NAME = value
    Ring,           // ring NAME = value
    Module,         // module NAME = value
    Ideal,          // ideal NAME = value
    Normalization,  // normalization NAME = value
    Primes,         // primes NAME = value
    Let,            // let NAME = value
    Assert,         // assert [label:] value
    AssertNot,      // assert_not [label:] value
    AssertEqual,    // assert_equal [label:] value, expected
    Command,        // value
  };

  Kind kind;
  std::string name;  // declared name or assertion label
  ExprPtr value;
  ExprPtr expected;
  SourceSpan span;
};

struct Script {
  std::vector<Stmt> statements;
};

/// Keyword introducing a statement kind, or "" for commands.
std::string keyword(Stmt::Kind kind);

/// Canonical source text; parsing it again yields the same structure.
std::string print(const Script& script);
std::string print(const Stmt& stmt);
std::string print(const Expr& expr);

/// Span-free structural dump, equal for structurally identical scripts.
std::string dump(const Script& script);

}  // namespace jacal::dsl
