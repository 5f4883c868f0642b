#include "jacal/dsl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace jacal::dsl {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
  return out;
}

}  // namespace

std::string Token::describe() const {
  switch (kind) {
    case Kind::End: return "end of input";
    case Kind::Name: return "name '" + text + "'";
    case Kind::Integer: return "integer " + text;
    case Kind::Punct: return "'" + text + "'";
  }
  return text;
}

Diagnostic::Diagnostic(SourceSpan span, const std::string& message, std::vector<std::string> expected)
    : std::runtime_error(span.to_string() + ": " + message +
                         (expected.empty() ? "" : " (expected " + join_expected(expected) + ")")),
      span_(span), message_(message), expected_(std::move(expected)) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourceSpan span{line, col, i, 0};
    std::size_t j = i;
    Token::Kind kind;
    if (is_name_start(c)) {
      while (j < text.size() && is_name_char(text[j])) ++j;
      kind = Token::Kind::Name;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && is_name_start(text[j])) {
        span.length = j - i + 1;
        throw Diagnostic(span, "implicit multiplication is not allowed; write " + std::string(text.substr(i, j - i)) +
                                   "*" + text[j]);
      }
      kind = Token::Kind::Integer;
    } else if (std::string_view("()[],;=+-*/^:").find(c) != std::string_view::npos) {
      j = i + 1;
      kind = Token::Kind::Punct;
    } else {
      span.length = 1;
      throw Diagnostic(span, std::string("unexpected character '") + c + "'");
    }
    span.length = j - i;
    out.push_back({kind, std::string(text.substr(i, j - i)), span});
    advance(j - i);
  }
  out.push_back({Token::Kind::End, "", {line, col, text.size(), 0}});
  return out;
}

namespace {

const std::set<std::string> kDeclarations{"field", "ring", "module", "ideal", "normalization", "primes", "let"};

Stmt::Kind declaration_kind(const std::string& word) {
  if (word == "field") return Stmt::Kind::Field;
  if (word == "ring") return Stmt::Kind::Ring;
  if (word == "module") return Stmt::Kind::Module;
  if (word == "ideal") return Stmt::Kind::Ideal;
  if (word == "normalization") return Stmt::Kind::Normalization;
  if (word == "primes") return Stmt::Kind::Primes;
  return Stmt::Kind::Let;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Script script() {
    Script s;
    while (peek().kind != Token::Kind::End) s.statements.push_back(statement());
    return s;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at(const char* punct, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == punct;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw Diagnostic(peek().span, "unexpected " + peek().describe(), std::move(expected));
  }
  const Token& expect(const char* punct) {
    if (!at(punct)) fail({std::string("'") + punct + "'"});
    return next();
  }
  const Token& expect_name() {
    if (peek().kind != Token::Kind::Name) fail({"name"});
    return next();
  }

  static SourceSpan cover(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    s.length = b.offset + b.length - a.offset;
    return s;
  }
  SourceSpan from(const SourceSpan& start) const {
    const Token& prev = tokens_[pos_ == 0 ? 0 : pos_ - 1];
    return cover(start, prev.span);
  }

  Stmt statement() {
    const Token& first = peek();
    SourceSpan start = first.span;
    Stmt st;
    if (first.kind == Token::Kind::Name && kDeclarations.count(first.text) &&
        peek(1).kind == Token::Kind::Name && at("=", 2)) {
      st.kind = declaration_kind(next().text);
      st.name = next().text;
      next();
      st.value = expression();
    } else if (first.kind == Token::Kind::Name &&
               (first.text == "assert" || first.text == "assert_not" || first.text == "assert_equal")) {
      next();
      st.kind = first.text == "assert"       ? Stmt::Kind::Assert
                : first.text == "assert_not" ? Stmt::Kind::AssertNot
                                             : Stmt::Kind::AssertEqual;
      if (peek().kind == Token::Kind::Name && at(":", 1)) {
        st.name = next().text;
        next();
      }
      st.value = expression();
      if (st.kind == Stmt::Kind::AssertEqual) {
        expect(",");
        st.expected = expression();
      }
    } else {
      st.kind = Stmt::Kind::Command;
      st.value = expression();
    }
    st.span = from(start);
    return st;
  }

  ExprPtr make(Expr::Kind kind, std::string text, SourceSpan span) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->text = std::move(text);
    e->span = span;
    return e;
  }

  ExprPtr binary(std::string op, ExprPtr l, ExprPtr r) {
    auto e = make(Expr::Kind::Binary, std::move(op), cover(l->span, r->span));
    e->args.push_back(std::move(l));
    e->args.push_back(std::move(r));
    return e;
  }

  ExprPtr expression() {
    ExprPtr e = product();
    while (at("+") || at("-")) {
      std::string op = next().text;
      e = binary(op, std::move(e), product());
    }
    return e;
  }

  ExprPtr product() {
    ExprPtr e = unary();
    while (at("*") || at("/")) {
      std::string op = next().text;
      e = binary(op, std::move(e), unary());
    }
    return e;
  }

  ExprPtr unary() {
    if (at("-")) {
      SourceSpan start = next().span;
      ExprPtr operand = unary();
      auto e = make(Expr::Kind::Negate, "-", cover(start, operand->span));
      e->args.push_back(std::move(operand));
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (at("^")) {
      next();
      return binary("^", std::move(base), power());
    }
    return base;
  }

  // Comma-separated expressions up to `close`; `keywords` allows name=value.
  void items(std::vector<ExprPtr>& out, const char* close, bool keywords) {
    if (at(close)) return;
    while (true) {
      if (keywords && peek().kind == Token::Kind::Name && at("=", 1)) {
        const Token& name = next();
        next();
        ExprPtr value = expression();
        auto kw = make(Expr::Kind::Keyword, name.text, cover(name.span, value->span));
        kw->args.push_back(std::move(value));
        out.push_back(std::move(kw));
      } else {
        out.push_back(expression());
      }
      if (!at(",")) break;
      next();
    }
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Integer) return make(Expr::Kind::Integer, next().text, t.span);
    if (t.kind == Token::Kind::Name) {
      next();
      if (!at("(")) return make(Expr::Kind::Name, t.text, t.span);
      next();
      auto call = make(Expr::Kind::Call, t.text, t.span);
      items(call->args, ")", true);
      if (!at(")")) fail({"','", "')'"});
      next();
      call->span = from(t.span);
      return call;
    }
    if (at("[")) {
      next();
      auto list = make(Expr::Kind::List, "", t.span);
      items(list->args, "]", false);
      if (!at("]")) fail({"','", "']'"});
      next();
      list->span = from(t.span);
      return list;
    }
    if (at("(")) {
      next();
      ExprPtr first = expression();
      if (at(")")) {
        next();
        return first;
      }
      if (at(";")) {
        next();
        auto lit = make(Expr::Kind::IdealLit, "", t.span);
        lit->args.push_back(std::move(first));
        items(lit->args, ")", false);
        if (!at(")")) fail({"','", "')'"});
        next();
        lit->span = from(t.span);
        return lit;
      }
      if (!at(",")) fail({"','", "';'", "')'"});
      next();
      auto tuple = make(Expr::Kind::Tuple, "", t.span);
      tuple->args.push_back(std::move(first));
      items(tuple->args, ")", false);
      if (!at(")")) fail({"','", "')'"});
      next();
      tuple->span = from(t.span);
      return tuple;
    }
    fail({"integer", "name", "'('", "'['", "'-'"});
  }
};

}  // namespace

Script parse(std::string_view text) { return Parser(tokenize(text)).script(); }

}  // namespace jacal::dsl
