#include <sstream>

#include "jacal/dsl/ast.hpp"

namespace jacal::dsl {

namespace {

int precedence(const Expr& e) {
  if (e.kind == Expr::Kind::Negate) return 3;
  if (e.kind != Expr::Kind::Binary) return 5;
  if (e.text == "+" || e.text == "-") return 1;
  if (e.text == "*" || e.text == "/") return 2;
  return 4;
}

std::string wrapped(const Expr& e, bool parens) { return parens ? "(" + print(e) + ")" : print(e); }

std::string print_items(const std::vector<ExprPtr>& items, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < items.size(); ++i) out += (i > from ? ", " : "") + print(*items[i]);
  return out;
}

void dump(const Expr& e, std::ostream& out) {
  static const char* names[] = {"int", "name", "neg", "bin", "call", "list", "tuple", "ideal", "kw"};
  out << "(" << names[static_cast<int>(e.kind)] << " " << e.text;
  for (const auto& a : e.args) {
    out << " ";
    dump(*a, out);
  }
  out << ")";
}

}  // namespace

std::string keyword(Stmt::Kind kind) {
  switch (kind) {
    case Stmt::Kind::Field: return "field";
    case Stmt::Kind::Ring: return "ring";
    case Stmt::Kind::Module: return "module";
    case Stmt::Kind::Ideal: return "ideal";
    case Stmt::Kind::Normalization: return "normalization";
    case Stmt::Kind::Primes: return "primes";
    case Stmt::Kind::Let: return "let";
    case Stmt::Kind::Assert: return "assert";
    case Stmt::Kind::AssertNot: return "assert_not";
    case Stmt::Kind::AssertEqual: return "assert_equal";
    case Stmt::Kind::Command: return "";
  }
  return "";
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Integer:
    case Expr::Kind::Name: return e.text;
    case Expr::Kind::Negate: return "-" + wrapped(*e.args[0], precedence(*e.args[0]) < 3);
    case Expr::Kind::Binary: {
      int p = precedence(e);
      const Expr& l = *e.args[0];
      const Expr& r = *e.args[1];
      if (p == 4) return wrapped(l, precedence(l) <= 4) + "^" + wrapped(r, precedence(r) < 4);
      std::string op = p == 1 ? " " + e.text + " " : e.text;
      return wrapped(l, precedence(l) < p) + op + wrapped(r, precedence(r) <= p);
    }
    case Expr::Kind::Call: return e.text + "(" + print_items(e.args) + ")";
    case Expr::Kind::List: return "[" + print_items(e.args) + "]";
    case Expr::Kind::Tuple: return "(" + print_items(e.args) + ")";
    case Expr::Kind::IdealLit: return "(" + print(*e.args[0]) + ";" + (e.args.size() > 1 ? " " : "") + print_items(e.args, 1) + ")";
    case Expr::Kind::Keyword: return e.text + "=" + print(*e.args[0]);
  }
  return "";
}

std::string print(const Stmt& s) {
  std::string out;
  switch (s.kind) {
    case Stmt::Kind::Command: return print(*s.value);
    case Stmt::Kind::Assert:
    case Stmt::Kind::AssertNot:
    case Stmt::Kind::AssertEqual:
      out = keyword(s.kind) + " " + (s.name.empty() ? "" : s.name + ": ") + print(*s.value);
      if (s.expected) out += ", " + print(*s.expected);
      return out;
    default: return keyword(s.kind) + " " + s.name + " = " + print(*s.value);
  }
}

std::string print(const Script& script) {
  std::string out;
  for (const auto& s : script.statements) out += print(s) + "\n";
  return out;
}

std::string dump(const Script& script) {
  std::ostringstream out;
  for (const auto& s : script.statements) {
    out << "[" << keyword(s.kind) << " " << s.name << " ";
    dump(*s.value, out);
    if (s.expected) {
      out << " ";
      dump(*s.expected, out);
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace jacal::dsl
