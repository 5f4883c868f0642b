#include "jacal/dsl/executor.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <variant>

#include "jacal/differents.hpp"
#include "jacal/dsl/parser.hpp"
#include "jacal/error.hpp"
#include "jacal/ext.hpp"
#include "jacal/koszul.hpp"
#include "jacal/normalization.hpp"
#include "jacal/resolution.hpp"

namespace jacal::dsl {

namespace {

struct Verdict {
  bool truth;
  std::string text;
};

struct Value;
struct List {
  std::vector<Value> items;
  bool tuple = false;
};

struct Value {
  std::variant<Field, QuotientRing, Polynomial, Ideal, FPModule, Subquotient, NormalizationData, mpz_class, bool,
               PolyMatrix, FreeResolution, HomComplex, Verdict, ExponentResult, HypothesisReport, DepthPd, List>
      v;
  std::vector<std::string> notes;
};

const char* kind_name(const Value& v) {
  static const char* names[] = {"field",       "ring",   "polynomial", "ideal",      "module", "subquotient",
                                "normalization", "integer", "boolean", "matrix", "resolution", "hom complex",
                                "verdict",     "exponent", "report",  "depth",  "list"};
  return names[v.v.index()];
}

std::string text_of(const Value& v);

std::string list_text(const List& l) {
  std::string out = l.tuple ? "(" : "[";
  for (std::size_t i = 0; i < l.items.size(); ++i) out += (i ? ", " : "") + text_of(l.items[i]);
  return out + (l.tuple ? ")" : "]");
}

std::string text_of(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpz_class>) return x.get_str();
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, Verdict>) return x.text;
        else if constexpr (std::is_same_v<T, DepthPd>)
          return "depth " + std::to_string(x.depth) + ", pd " + std::to_string(x.pd);
        else if constexpr (std::is_same_v<T, List>) return list_text(x);
        else if constexpr (std::is_same_v<T, Subquotient>) return x.is_zero() ? "0" : x.to_string();
        else if constexpr (std::is_same_v<T, FreeResolution>) {
          std::string s = "ranks";
          for (auto r : x.ranks) s += " " + std::to_string(r);
          return s + " (" + x.status() + ")\n" + x.to_string();
        } else return x.to_string();
      },
      v.v);
}

std::optional<QuotientRing> ring_of(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::optional<QuotientRing> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QuotientRing>) return x;
        else if constexpr (std::is_same_v<T, Ideal> || std::is_same_v<T, FPModule> || std::is_same_v<T, Subquotient>)
          return x.ring();
        else if constexpr (std::is_same_v<T, NormalizationData> || std::is_same_v<T, FreeResolution> ||
                           std::is_same_v<T, HomComplex>)
          return x.ring;
        else if constexpr (std::is_same_v<T, List>) {
          for (const auto& i : x.items)
            if (auto r = ring_of(i)) return r;
          return std::nullopt;
        } else return std::nullopt;
      },
      v.v);
}

// Raised while evaluating a name that can only be a ring variable when no
// ring is known yet; the caller retries once a ring is found.
struct NeedsRing {
  SourceSpan span;
  std::string name;
};

using Ctx = std::optional<QuotientRing>;

class Executor {
 public:
  explicit Executor(const RunOptions& options) : options_(options) {}

  RunReport run(const Script& script) {
    RunReport report;
    for (const auto& st : script.statements) {
      try {
        report.commands.push_back(statement(st));
      } catch (const Diagnostic& d) {
        report.diagnostic = d.what();
        report.commands.push_back({print(st), st.span, "error", d.message(), {}, std::nullopt});
        break;
      }
    }
    return report;
  }

 private:
  RunOptions options_;
  std::map<std::string, Value> symbols_;
  std::map<std::string, int> labels_;
  // Most recently declared ring: the fallback for bare variables.
  Ctx current_ring_;

  Value evaluate_top(const Expr& e) {
    try {
      return evaluate(e);
    } catch (const NeedsRing&) {
      if (!current_ring_) throw;
      return evaluate(e, current_ring_);
    }
  }

  [[noreturn]] static void fail(const SourceSpan& span, const std::string& message) { throw Diagnostic(span, message); }

  CommandResult statement(const Stmt& st) {
    CommandResult out{print(st), st.span, "", "", {}, std::nullopt};
    try {
      switch (st.kind) {
        case Stmt::Kind::Command: {
          Value v = evaluate_top(*st.value);
          out.kind = kind_name(v);
          out.value = text_of(v);
          out.notes = v.notes;
          return out;
        }
        case Stmt::Kind::Assert:
        case Stmt::Kind::AssertNot:
        case Stmt::Kind::AssertEqual: return assertion(st, out);
        default: return declaration(st, out);
      }
    } catch (const NeedsRing& n) {
      fail(n.span, "cannot tell which ring '" + n.name + "' belongs to");
    } catch (const AlgebraError& e) {
      fail(st.span, e.what());
    }
  }

  CommandResult declaration(const Stmt& st, CommandResult& out) {
    if (symbols_.count(st.name)) fail(st.span, "'" + st.name + "' is already declared");
    Value v = evaluate_top(*st.value);
    if (st.kind == Stmt::Kind::Normalization && st.value->kind == Expr::Kind::IdealLit) {
      const Ideal& theta = std::get<Ideal>(v.v);
      v = {normalization_check(theta.ring(), theta.generators()), {}};
    }
    auto require = [&](std::size_t index, const char* what) {
      if (v.v.index() != index) fail(st.value->span, std::string("expected ") + what + ", got " + kind_name(v));
    };
    switch (st.kind) {
      case Stmt::Kind::Field: require(0, "a field"); break;
      case Stmt::Kind::Ring:
        require(1, "a ring");
        for (const auto& n : std::get<QuotientRing>(v.v).characteristic_notes()) v.notes.push_back(n);
        current_ring_ = std::get<QuotientRing>(v.v);
        break;
      case Stmt::Kind::Module: require(4, "a module"); break;
      case Stmt::Kind::Ideal: require(3, "an ideal"); break;
      case Stmt::Kind::Normalization: require(6, "a normalization"); break;
      case Stmt::Kind::Primes: {
        require(16, "a list of ideals");
        for (const auto& item : std::get<List>(v.v).items)
          if (!std::holds_alternative<Ideal>(item.v)) fail(st.value->span, "every prime must be an ideal");
        break;
      }
      default: break;
    }
    out.kind = kind_name(v);
    out.value = st.name + " = " + text_of(v);
    out.notes = v.notes;
    symbols_.insert_or_assign(st.name, std::move(v));
    return out;
  }

  std::string next_label(const Stmt& st) {
    std::string base = st.name;
    if (base.empty()) base = st.value->kind == Expr::Kind::Call ? st.value->text : "assertion";
    int n = ++labels_[base];
    return n == 1 ? base : base + "_" + std::to_string(n);
  }

  static std::optional<bool> truth(const Value& v) {
    if (auto b = std::get_if<bool>(&v.v)) return *b;
    if (auto d = std::get_if<Verdict>(&v.v)) return d->truth;
    if (auto e = std::get_if<ExponentResult>(&v.v)) return e->s.has_value();
    if (auto h = std::get_if<HypothesisReport>(&v.v)) return h->passes();
    return std::nullopt;
  }

  CommandResult assertion(const Stmt& st, CommandResult& out) {
    Value got = evaluate_top(*st.value);
    CorpusLine line{false, options_.fixture, next_label(st), "", text_of(got)};
    if (st.kind == Stmt::Kind::AssertEqual) {
      Value expected = evaluate(*st.expected, ring_of(got));
      line.expected = text_of(expected);
      line.pass = equal(got, expected, st.span);
    } else {
      auto t = truth(got);
      if (!t) fail(st.value->span, std::string("expected a boolean, got ") + kind_name(got));
      bool want = st.kind == Stmt::Kind::Assert;
      line.expected = want ? "true" : "false";
      line.got = *t ? "true" : "false";
      line.pass = *t == want;
    }
    // One-line canonical forms in the assertion line.
    std::replace(line.expected.begin(), line.expected.end(), '\n', ' ');
    std::replace(line.got.begin(), line.got.end(), '\n', ' ');
    out.kind = "assertion";
    out.value = line.to_string();
    out.notes = got.notes;
    out.assertion = line;
    return out;
  }

  bool equal(const Value& a, const Value& b, const SourceSpan& span) {
    if (auto i = std::get_if<Ideal>(&a.v)) {
      if (auto j = std::get_if<Ideal>(&b.v)) return i->ring() == j->ring() && ideal_equal(*i, *j);
    }
    if (auto e = std::get_if<ExponentResult>(&a.v)) {
      if (auto n = std::get_if<mpz_class>(&b.v)) return e->s && *e->s == *n;
    }
    if (auto n = std::get_if<mpz_class>(&a.v)) {
      if (auto m = std::get_if<mpz_class>(&b.v)) return *n == *m;
    }
    if (auto p = std::get_if<Polynomial>(&a.v)) {
      if (auto q = std::get_if<Polynomial>(&b.v)) return *p == *q;
      if (auto n = std::get_if<mpz_class>(&b.v))
        return *p == Polynomial::constant(p->ring(), p->ring()->field().from_rational(mpq_class(*n)));
    }
    if (auto l = std::get_if<List>(&a.v)) {
      if (auto m = std::get_if<List>(&b.v)) {
        if (l->items.size() != m->items.size()) return false;
        for (std::size_t i = 0; i < l->items.size(); ++i)
          if (!equal(l->items[i], m->items[i], span)) return false;
        return true;
      }
    }
    auto ta = truth(a), tb = truth(b);
    if (ta && tb) return *ta == *tb;
    if (auto d = std::get_if<DepthPd>(&a.v)) {
      if (auto l = std::get_if<List>(&b.v); l && l->items.size() == 2)
        return text_of(b) == "(" + std::to_string(d->depth) + ", " + std::to_string(d->pd) + ")";
    }
    fail(span, std::string("cannot compare ") + kind_name(a) + " with " + kind_name(b));
  }

  // ---- evaluation ----

  Value evaluate(const Expr& e, const Ctx& ctx = std::nullopt) {
    switch (e.kind) {
      case Expr::Kind::Integer: return {mpz_class(e.text), {}};
      case Expr::Kind::Name: return name(e, ctx);
      case Expr::Kind::Negate: {
        Value v = evaluate(*e.args[0], ctx);
        if (auto n = std::get_if<mpz_class>(&v.v)) return {mpz_class(-*n), {}};
        return {-as_poly(v, e, ctx), {}};
      }
      case Expr::Kind::Binary: return binary(e, ctx);
      case Expr::Kind::Call: return call(e, ctx);
      case Expr::Kind::List:
      case Expr::Kind::Tuple: {
        List l;
        l.tuple = e.kind == Expr::Kind::Tuple;
        auto items = evaluate_all(e.args, ctx);
        l.items = std::move(items);
        return {std::move(l), {}};
      }
      case Expr::Kind::IdealLit: {
        Value r = evaluate(*e.args[0], ctx);
        QuotientRing ring = as_ring(r, *e.args[0]);
        std::vector<Polynomial> gens;
        for (std::size_t i = 1; i < e.args.size(); ++i) gens.push_back(as_poly(evaluate(*e.args[i], ring), *e.args[i], ring));
        return {Ideal(ring, std::move(gens)), {}};
      }
      case Expr::Kind::Keyword: fail(e.span, "keyword argument outside a call");
    }
    fail(e.span, "unsupported expression");
  }

  // Evaluates siblings, inferring a ring from those that carry one for the
  // bare variables among the rest.
  std::vector<Value> evaluate_all(const std::vector<ExprPtr>& args, Ctx ctx) {
    std::vector<std::optional<Value>> vals(args.size());
    std::vector<std::size_t> deferred;
    std::optional<NeedsRing> first_need;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i]->kind == Expr::Kind::Keyword) continue;
      try {
        vals[i] = evaluate(*args[i], ctx);
        if (!ctx) ctx = ring_of(*vals[i]);
      } catch (const NeedsRing& n) {
        if (!first_need) first_need = n;
        deferred.push_back(i);
      }
    }
    if (!deferred.empty() && !ctx) ctx = current_ring_;
    if (!deferred.empty() && !ctx) throw *first_need;
    for (std::size_t i : deferred) vals[i] = evaluate(*args[i], ctx);
    std::vector<Value> out;
    for (std::size_t i = 0; i < args.size(); ++i)
      if (args[i]->kind != Expr::Kind::Keyword) out.push_back(std::move(*vals[i]));
    return out;
  }

  Value name(const Expr& e, const Ctx& ctx) {
    if (auto it = symbols_.find(e.text); it != symbols_.end()) return {it->second.v, {}};
    if (e.text == "QQ") return {Field::rationals(), {}};
    if (!ctx) throw NeedsRing{e.span, e.text};
    int index = ctx->ambient()->index_of(e.text);
    if (index < 0) fail(e.span, "unknown name '" + e.text + "'");
    return {ctx->variable(static_cast<std::size_t>(index)), {}};
  }

  Value binary(const Expr& e, const Ctx& ctx) {
    Value l = evaluate(*e.args[0], ctx);
    if (e.text == "/" && std::holds_alternative<QuotientRing>(l.v)) {
      const QuotientRing& ring = std::get<QuotientRing>(l.v);
      Value r = evaluate(*e.args[1], ring);
      auto* ideal = std::get_if<Ideal>(&r.v);
      if (!ideal) fail(e.args[1]->span, "expected an ideal after '/'");
      std::vector<Polynomial> gens = ring.defining_generators();
      for (const auto& g : ideal->generators()) gens.push_back(g);
      return {QuotientRing(ring.ambient(), std::move(gens)), {}};
    }
    Ctx inner = ctx ? ctx : ring_of(l);
    Value r = evaluate(*e.args[1], inner);
    auto* ln = std::get_if<mpz_class>(&l.v);
    auto* rn = std::get_if<mpz_class>(&r.v);
    if (e.text == "^") {
      if (!rn || *rn < 0 || *rn > 1000000) fail(e.args[1]->span, "exponent must be a nonnegative integer");
      if (ln) {
        mpz_class out;
        mpz_pow_ui(out.get_mpz_t(), ln->get_mpz_t(), rn->get_ui());
        return {out, {}};
      }
      return {as_poly(l, *e.args[0], inner).pow(static_cast<unsigned>(rn->get_ui())), {}};
    }
    if (ln && rn && e.text != "/") {
      if (e.text == "+") return {mpz_class(*ln + *rn), {}};
      if (e.text == "-") return {mpz_class(*ln - *rn), {}};
      return {mpz_class(*ln * *rn), {}};
    }
    if (!inner) throw NeedsRing{e.span, print(e)};
    Polynomial a = as_poly(l, *e.args[0], inner);
    if (e.text == "/") {
      if (!rn || *rn == 0) fail(e.args[1]->span, "can only divide by a nonzero integer");
      Scalar d = inner->field().from_rational(mpq_class(*rn));
      if (d == inner->field().zero()) fail(e.args[1]->span, "divisor vanishes in the field");
      return {a.scaled(d.inverse()), {}};
    }
    Polynomial b = as_poly(r, *e.args[1], inner);
    if (e.text == "+") return {a + b, {}};
    if (e.text == "-") return {a - b, {}};
    return {a * b, {}};
  }

  // ---- conversions ----

  static QuotientRing as_ring(const Value& v, const Expr& e) {
    if (auto r = std::get_if<QuotientRing>(&v.v)) return *r;
    fail(e.span, std::string("expected a ring, got ") + kind_name(v));
  }

  static Polynomial as_poly(const Value& v, const Expr& e, const Ctx& ctx) {
    if (auto p = std::get_if<Polynomial>(&v.v)) {
      if (ctx && !same_ring(p->ring(), ctx->ambient())) fail(e.span, "polynomial from another ring");
      return *p;
    }
    if (auto n = std::get_if<mpz_class>(&v.v)) {
      if (!ctx) throw NeedsRing{e.span, print(e)};
      return Polynomial::constant(ctx->ambient(), ctx->field().from_rational(mpq_class(*n)));
    }
    fail(e.span, std::string("expected a polynomial, got ") + kind_name(v));
  }

  static long as_int(const Value& v, const Expr& e, long lo = 0) {
    auto n = std::get_if<mpz_class>(&v.v);
    if (!n || !n->fits_slong_p() || n->get_si() < lo) fail(e.span, "expected an integer >= " + std::to_string(lo));
    return n->get_si();
  }

  static const List& as_list(const Value& v, const Expr& e) {
    if (auto l = std::get_if<List>(&v.v)) return *l;
    fail(e.span, std::string("expected a list, got ") + kind_name(v));
  }

  static std::vector<Polynomial> as_polys(const Value& v, const Expr& e, const Ctx& ctx) {
    std::vector<Polynomial> out;
    for (const auto& item : as_list(v, e).items) out.push_back(as_poly(item, e, ctx));
    return out;
  }

  static PolyMatrix as_matrix(const Value& v, const Expr& e, const QuotientRing& ring) {
    if (auto m = std::get_if<PolyMatrix>(&v.v)) return *m;
    const List& rows = as_list(v, e);
    std::size_t cols = rows.items.empty() ? 0 : as_list(rows.items[0], e).items.size();
    PolyMatrix m(ring.ambient(), rows.items.size(), cols);
    for (std::size_t i = 0; i < rows.items.size(); ++i) {
      const List& row = as_list(rows.items[i], e);
      if (row.items.size() != cols) fail(e.span, "matrix rows have different lengths");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = as_poly(row.items[j], e, ring);
    }
    return m;
  }

  template <class T>
  static const T& as(const Value& v, const Expr& e, const char* what) {
    if (auto x = std::get_if<T>(&v.v)) return *x;
    fail(e.span, std::string("expected ") + what + ", got " + kind_name(v));
  }

  static Subquotient as_subquotient_value(const Value& v, const Expr& e) {
    if (auto s = std::get_if<Subquotient>(&v.v)) return *s;
    if (auto m = std::get_if<FPModule>(&v.v)) return as_subquotient(*m);
    fail(e.span, std::string("expected a module, got ") + kind_name(v));
  }

  // ---- calls ----

  struct Args {
    const Expr& call;
    std::vector<Value> values;
    std::map<std::string, const Expr*> keywords;
    Ctx ctx;

    const Expr& expr(std::size_t i) const {
      std::size_t seen = 0;
      for (const auto& a : call.args)
        if (a->kind != Expr::Kind::Keyword && seen++ == i) return *a;
      return call;
    }
  };

  void arity(const Args& a, std::size_t lo, std::size_t hi) {
    if (a.values.size() < lo || a.values.size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      fail(a.call.span, a.call.text + " takes " + want + " arguments, got " + std::to_string(a.values.size()));
    }
  }

  Value call(const Expr& e, const Ctx& ctx) {
    if (e.text == "GF") {
      if (e.args.size() != 1 || e.args[0]->kind != Expr::Kind::Integer) fail(e.span, "GF takes one integer");
      mpz_class p(e.args[0]->text);
      if (!p.fits_ulong_p() || p >= mpz_class(1u) << 31 || !is_prime(p.get_ui()))
        fail(e.args[0]->span, p.get_str() + " is not prime (or exceeds 2^31)");
      return {Field::prime(p.get_ui()), {}};
    }
    if (e.text == "poly") return poly_ring(e);
    if (e.text == "ideal") {
      if (!ctx) {
        for (const auto& a : e.args)
          if (a->kind == Expr::Kind::Name && !symbols_.count(a->text)) throw NeedsRing{a->span, a->text};
        throw NeedsRing{e.span, "ideal"};
      }
      std::vector<Polynomial> gens;
      for (const auto& a : e.args) gens.push_back(as_poly(evaluate(*a, ctx), *a, ctx));
      return {Ideal(*ctx, std::move(gens)), {}};
    }
    if (e.text == "partial_derivative") return derivative(e, ctx);
    Args a{e, evaluate_all(e.args, ctx), {}, ctx};
    for (const auto& arg : e.args)
      if (arg->kind == Expr::Kind::Keyword) a.keywords[arg->text] = arg->args[0].get();
    for (const auto& v : a.values)
      if (!a.ctx) a.ctx = ring_of(v);
    auto it = builtins().find(e.text);
    if (it == builtins().end()) fail(e.span, "unknown command '" + e.text + "'");
    return it->second(*this, a);
  }

  MonomialOrder order_named(const Expr& e) {
    if (e.kind == Expr::Kind::Name && e.text == "grevlex") return MonomialOrder::grevlex();
    if (e.kind == Expr::Kind::Name && e.text == "lex") return MonomialOrder::lex();
    throw Diagnostic(e.span, "unknown monomial order", {"grevlex", "lex"});
  }

  Value poly_ring(const Expr& e) {
    if (e.args.size() < 2 || e.args[1]->kind != Expr::Kind::List)
      fail(e.span, "poly takes a field and a variable list");
    Value f = evaluate(*e.args[0]);
    const Field& field = as<Field>(f, *e.args[0], "a field");
    std::vector<std::string> vars;
    for (const auto& v : e.args[1]->args) {
      bool ok = v->kind == Expr::Kind::Name && std::islower(static_cast<unsigned char>(v->text[0]));
      for (char c : v->text) ok = ok && (std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) fail(v->span, "variable names must match [a-z][a-z0-9_]*");
      if (std::find(vars.begin(), vars.end(), v->text) != vars.end()) fail(v->span, "repeated variable " + v->text);
      vars.push_back(v->text);
    }
    if (vars.empty() || vars.size() > kMaxVariables) fail(e.args[1]->span, "between 1 and " + std::to_string(kMaxVariables) + " variables");
    MonomialOrder order = options_.order.value_or(MonomialOrder::grevlex());
    for (std::size_t i = 2; i < e.args.size(); ++i) {
      const Expr& kw = *e.args[i];
      if (kw.kind != Expr::Kind::Keyword || kw.text != "order") throw Diagnostic(kw.span, "unexpected argument", {"order="});
      order = order_named(*kw.args[0]);
    }
    return {QuotientRing(make_ring(field, vars, order)), {}};
  }

  Value derivative(const Expr& e, const Ctx& ctx) {
    if (e.args.size() != 2) fail(e.span, "partial_derivative takes a polynomial and a variable");
    auto vals = evaluate_all(e.args, ctx);
    Ctx ring = ctx;
    if (!ring) throw NeedsRing{e.span, print(e)};
    Polynomial f = as_poly(vals[0], *e.args[0], ring);
    Polynomial x = as_poly(vals[1], *e.args[1], ring);
    if (x.size() != 1 || x.lead_monomial().degree() != 1 || !(x.lead_coefficient() == ring->field().one()))
      fail(e.args[1]->span, "expected a variable");
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (x.lead_monomial()[i] == 1) return {partial_derivative(f, i), {}};
    fail(e.args[1]->span, "expected a variable");
  }

  using Builtin = std::function<Value(Executor&, Args&)>;
  static const std::map<std::string, Builtin>& builtins();

  // Helpers shared by builtins.
  QuotientRing ring_arg(Args& a, std::size_t i) { return as_ring(a.values[i], a.expr(i)); }
  Ideal ideal_arg(Args& a, std::size_t i) {
    if (auto p = std::get_if<Polynomial>(&a.values[i].v)) return Ideal(*a.ctx, {*p});
    return as<Ideal>(a.values[i], a.expr(i), "an ideal");
  }
  Polynomial poly_arg(Args& a, std::size_t i) { return as_poly(a.values[i], a.expr(i), a.ctx); }
  const FPModule& module_arg(Args& a, std::size_t i) { return as<FPModule>(a.values[i], a.expr(i), "a module"); }
  const NormalizationData& normalization_arg(Args& a, std::size_t i) {
    return as<NormalizationData>(a.values[i], a.expr(i), "a normalization");
  }
  std::vector<Ideal> ideals_arg(Args& a, std::size_t i) {
    std::vector<Ideal> out;
    for (const auto& item : as_list(a.values[i], a.expr(i)).items)
      out.push_back(as<Ideal>(item, a.expr(i), "an ideal"));
    return out;
  }
};

Value with_notes(Value v, std::vector<std::string> notes) {
  for (auto& n : notes) v.notes.push_back(std::move(n));
  return v;
}

std::vector<std::string> status_notes(const QuotientRing& ring, const NormalizationData& a) {
  std::vector<std::string> notes = ring.characteristic_notes();
  notes.push_back(xi0_status(tor_vanishing_certifies_equality(ring, a)));
  return notes;
}

Value int_value(long n) { return {mpz_class(n), {}}; }

const std::map<std::string, Executor::Builtin>& Executor::builtins() {
  using E = Executor;
  static const std::map<std::string, Builtin> table = [] {
    std::map<std::string, Builtin> t;
    auto jacobian = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      QuotientRing r = x.ring_arg(a, 0);
      return with_notes({jacobian_ideal(r), {}}, r.characteristic_notes());
    };
    t["jacobian"] = jacobian;
    t["jacobian_ideal"] = jacobian;
    auto dim = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      auto d = krull_dimension(x.ring_arg(a, 0));
      if (!d) return {Verdict{false, "empty"}, {}};
      return int_value(*d);
    };
    t["krull_dimension"] = dim;
    t["dim"] = dim;
    auto dpd = [](E& x, Args& a) -> DepthPd {
      x.arity(a, 1, 1);
      if (auto r = std::get_if<QuotientRing>(&a.values[0].v)) return depth_and_pd(*r);
      return depth_and_pd(x.module_arg(a, 0));
    };
    t["depth_and_pd"] = [dpd](E& x, Args& a) -> Value { return {dpd(x, a), {}}; };
    t["depth"] = [dpd](E& x, Args& a) -> Value { return int_value(dpd(x, a).depth); };
    t["pd"] = [dpd](E& x, Args& a) -> Value { return int_value(dpd(x, a).pd); };
    t["free_resolution"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 2);
      std::optional<std::size_t> len;
      if (a.values.size() == 2) len = static_cast<std::size_t>(as_int(a.values[1], a.expr(1)));
      return {free_resolution(x.module_arg(a, 0), len), {"affine model"}};
    };
    t["ranks"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      List l;
      for (auto r : as<FreeResolution>(a.values[0], a.expr(0), "a resolution").ranks) l.items.push_back(int_value(static_cast<long>(r)));
      return {std::move(l), {}};
    };
    t["exact"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      const auto& f = as<FreeResolution>(a.values[0], a.expr(0), "a resolution");
      return {std::all_of(f.exact.begin(), f.exact.end(), [](bool b) { return b; }), {}};
    };
    t["differential"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      const auto& f = as<FreeResolution>(a.values[0], a.expr(0), "a resolution");
      long i = as_int(a.values[1], a.expr(1), 1);
      if (static_cast<std::size_t>(i) > f.maps.size()) fail(a.expr(1).span, "the resolution has no such map");
      return {f.maps[static_cast<std::size_t>(i - 1)], {}};
    };
    t["same_image"] = [](E& x, Args& a) -> Value {
      x.arity(a, 3, 3);
      QuotientRing r = x.ring_arg(a, 0);
      return {same_image(r, as_matrix(a.values[1], a.expr(1), r), as_matrix(a.values[2], a.expr(2), r)), {}};
    };
    t["same_image_up_to_basis"] = [](E& x, Args& a) -> Value {
      x.arity(a, 3, 3);
      QuotientRing r = x.ring_arg(a, 0);
      return {same_image_up_to_basis(r, as_matrix(a.values[1], a.expr(1), r), as_matrix(a.values[2], a.expr(2), r)), {}};
    };
    t["hom_complex"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {hom_complex(as<FreeResolution>(a.values[0], a.expr(0), "a resolution"), x.module_arg(a, 1)), {}};
    };
    auto ext = [](E& x, Args& a) -> Value {
      x.arity(a, 4, 4);
      return {ext_module(x.ring_arg(a, 0), static_cast<std::size_t>(as_int(a.values[1], a.expr(1))), x.module_arg(a, 2),
                         x.module_arg(a, 3)),
              {"affine model"}};
    };
    t["ext"] = ext;
    t["ext_module"] = ext;
    t["tor_over_normalization"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 3);
      const auto& n = x.normalization_arg(a, 0);
      if (a.values.size() == 3) require_same_ring(n.ring, x.ring_arg(a, 1));
      return {tor_over_normalization(n, static_cast<std::size_t>(as_int(a.values.back(), a.expr(a.values.size() - 1)))), {}};
    };
    t["koszul_homology"] = [](E& x, Args& a) -> Value {
      x.arity(a, 3, 3);
      QuotientRing r = x.ring_arg(a, 1);
      return {koszul_homology(as_polys(a.values[0], a.expr(0), r), r, static_cast<std::size_t>(as_int(a.values[2], a.expr(2)))), {}};
    };
    t["acts_zero"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      Subquotient s = as_subquotient_value(a.values[1], a.expr(1));
      return {s.acts_zero(as_poly(a.values[0], a.expr(0), s.ring())), {}};
    };
    t["is_zero"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      if (auto p = std::get_if<Polynomial>(&a.values[0].v)) return {a.ctx ? a.ctx->is_zero(*p) : p->is_zero(), {}};
      if (auto i = std::get_if<Ideal>(&a.values[0].v)) return {i->is_zero(), {}};
      return {as_subquotient_value(a.values[0], a.expr(0)).is_zero(), {}};
    };
    auto ann = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      return {as_subquotient_value(a.values[0], a.expr(0)).annihilator(), {}};
    };
    t["module_annihilator"] = ann;
    t["annihilator"] = ann;
    t["graded_dimension"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      auto s = as_subquotient_value(a.values[0], a.expr(0));
      return int_value(static_cast<long>(s.graded_dimension(static_cast<int>(as_int(a.values[1], a.expr(1), -1000000)))));
    };
    t["normalization_check"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      QuotientRing r = x.ring_arg(a, 0);
      return {normalization_check(r, as_polys(a.values[1], a.expr(1), r)), {}};
    };
    t["kaehler_presentation"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 2);
      QuotientRing r = x.ring_arg(a, 0);
      if (a.values.size() == 1) return {kaehler_presentation(r), r.characteristic_notes()};
      return {kaehler_presentation(r, x.normalization_arg(a, 1)), r.characteristic_notes()};
    };
    t["fitting_ideal"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {fitting_ideal(x.module_arg(a, 0), static_cast<std::size_t>(as_int(a.values[1], a.expr(1)))), {}};
    };
    t["kaehler_different"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      QuotientRing r = x.ring_arg(a, 0);
      const auto& n = x.normalization_arg(a, 1);
      return {kaehler_different(r, n), status_notes(r, n)};
    };
    t["noether_different"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      QuotientRing r = x.ring_arg(a, 0);
      const auto& n = x.normalization_arg(a, 1);
      return {noether_different(r, n), status_notes(r, n)};
    };
    t["enveloping"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      auto env = enveloping(x.ring_arg(a, 0), x.normalization_arg(a, 1));
      auto d = env.ring.dimension();
      std::string text = "enveloping ring in " + std::to_string(env.ring.nvars()) + " variables, dimension " +
                         (d ? std::to_string(*d) : "empty") + ", " + std::to_string(env.kernel_generators.size()) +
                         " kernel generators, multiplication " + (env.mu_well_defined ? "well defined" : "NOT well defined");
      return {Verdict{env.mu_well_defined, text}, {}};
    };
    t["ker_mu_count"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return int_value(static_cast<long>(enveloping(x.ring_arg(a, 0), x.normalization_arg(a, 1)).kernel_generators.size()));
    };
    t["tor_vanishing_certifies_equality"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      QuotientRing r = x.ring_arg(a, 0);
      bool c = tor_vanishing_certifies_equality(r, x.normalization_arg(a, 1));
      return {c, {xi0_status(c)}};
    };
    t["derived_different_refute"] = [](E& x, Args& a) -> Value {
      x.arity(a, 3, 3);
      QuotientRing r = x.ring_arg(a, 1);
      std::vector<Probe> probes;
      for (const auto& item : as_list(a.values[2], a.expr(2)).items) {
        const List& p = as_list(item, a.expr(2));
        if (p.items.size() != 3) fail(a.expr(2).span, "each probe is (n, M, N)");
        probes.push_back({static_cast<std::size_t>(as_int(p.items[0], a.expr(2))), as<FPModule>(p.items[1], a.expr(2), "a module"),
                          as<FPModule>(p.items[2], a.expr(2), "a module")});
      }
      auto res = derived_different_refute(as_poly(a.values[0], a.expr(0), r), r, probes);
      std::string text = res.to_string();
      if (res.witness) text += " (probe " + std::to_string(*res.witness + 1) + ")";
      return {Verdict{res.refuted, text}, {}};
    };
    t["radical_agreement"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {radical_agreement(x.ideal_arg(a, 0), x.ideal_arg(a, 1)), {}};
    };
    t["radical_member"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {radical_member(x.poly_arg(a, 0), x.ideal_arg(a, 1)), {}};
    };
    t["contains"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      Ideal j = x.ideal_arg(a, 0);
      if (auto k = std::get_if<Ideal>(&a.values[1].v)) return {j.contains(*k), {}};
      return {j.contains(x.poly_arg(a, 1)), {}};
    };
    t["smoothness_criterion"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      auto s = smoothness_criterion(x.ring_arg(a, 0));
      return {Verdict{s.smooth, s.smooth ? "smooth" : "singular, jacobian ideal " + s.witness.to_string()}, {}};
    };
    t["annihilation_exponent"] = [](E& x, Args& a) -> Value {
      x.arity(a, 3, 4);
      QuotientRing r = x.ring_arg(a, 0);
      std::vector<ProbePair> named;
      for (const auto& item : as_list(a.values[2], a.expr(2)).items) {
        const List& p = as_list(item, a.expr(2));
        if (p.items.size() != 2) fail(a.expr(2).span, "each probe is (M, N)");
        named.push_back({text_of(item), as<FPModule>(p.items[0], a.expr(2), "a module"),
                         as<FPModule>(p.items[1], a.expr(2), "a module")});
      }
      int s_max = a.values.size() == 4 ? static_cast<int>(as_int(a.values[3], a.expr(3), 1)) : x.options_.s_max;
      auto res = annihilation_exponent(r, x.ideal_arg(a, 1), ProbeCorpus(r, std::move(named)), s_max);
      return {res, {"sampled over a finite probe corpus: a necessary condition, not a proof"}};
    };
    t["decomposition_check"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {decomposition_check({x.ideal_arg(a, 0), x.ideals_arg(a, 1), false}), {"primality of components not checked"}};
    };
    t["theorem2_hypotheses"] = [](E& x, Args& a) -> Value {
      x.arity(a, 3, 4);
      QuotientRing r = x.ring_arg(a, 0);
      auto comps = x.ideals_arg(a, 2);
      auto primes = a.values.size() == 4 ? x.ideals_arg(a, 3) : comps;
      return {theorem2_hypotheses(r, {x.ideal_arg(a, 1), comps, false}, primes), {}};
    };
    auto report = [](E& x, Args& a) -> const HypothesisReport& {
      x.arity(a, 1, 1);
      return as<HypothesisReport>(a.values[0], a.expr(0), "a hypothesis report");
    };
    t["equidimensional"] = [report](E& x, Args& a) -> Value { return {report(x, a).equidimensional, {}}; };
    t["cohen_macaulay"] = [report](E& x, Args& a) -> Value { return {report(x, a).cohen_macaulay(), {}}; };
    t["prime_dimensions"] = [report](E& x, Args& a) -> Value {
      List l;
      l.tuple = true;
      for (int d : report(x, a).prime_dimensions) l.items.push_back(int_value(d));
      return {std::move(l), {}};
    };
    auto intersect = [](E& x, Args& a) -> Value {
      if (a.values.size() == 1) return {ideal_intersect(x.ideals_arg(a, 0)), {}};
      std::vector<Ideal> all;
      for (std::size_t i = 0; i < a.values.size(); ++i) all.push_back(x.ideal_arg(a, i));
      if (all.empty()) fail(a.call.span, "nothing to intersect");
      return {ideal_intersect(all), {}};
    };
    t["ideal_intersect"] = intersect;
    t["intersect"] = intersect;
    t["ideal_colon"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      if (auto p = std::get_if<Polynomial>(&a.values[1].v)) return {ideal_colon(x.ideal_arg(a, 0), *p), {}};
      return {ideal_colon(x.ideal_arg(a, 0), x.ideal_arg(a, 1)), {}};
    };
    t["ideal_sum"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {ideal_sum(x.ideal_arg(a, 0), x.ideal_arg(a, 1)), {}};
    };
    t["ideal_product"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {ideal_product(x.ideal_arg(a, 0), x.ideal_arg(a, 1)), {}};
    };
    t["ideal_power"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {ideal_power(x.ideal_arg(a, 0), static_cast<int>(as_int(a.values[1], a.expr(1)))), {}};
    };
    t["ideal_equal"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {ideal_equal(x.ideal_arg(a, 0), x.ideal_arg(a, 1)), {}};
    };
    t["eliminate"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      Ideal j = x.ideal_arg(a, 0);
      std::vector<std::size_t> keep;
      for (const auto& p : as_polys(a.values[1], a.expr(1), j.ring())) {
        int idx = -1;
        for (std::size_t i = 0; i < j.ring().nvars(); ++i)
          if (p == j.ring().variable(i)) idx = static_cast<int>(i);
        if (idx < 0) fail(a.expr(1).span, "expected variables");
        keep.push_back(static_cast<std::size_t>(idx));
      }
      return {eliminate(j, keep), {}};
    };
    t["normal_form"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      Ideal j = x.ideal_arg(a, 1);
      return {j.ring().reduce(normal_form(as_poly(a.values[0], a.expr(0), j.ring()), j)), {}};
    };
    t["groebner"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      List l;
      Ideal j = x.ideal_arg(a, 0);
      for (const auto& g : j.basis()) l.items.push_back({g, {}});
      return {std::move(l), {}};
    };
    t["buchberger"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      MonomialOrder order = a.keywords.count("order") ? x.order_named(*a.keywords["order"]) : MonomialOrder::grevlex();
      List l;
      Ideal gb = buchberger(x.ideal_arg(a, 0).lifted_generators(), order);
      for (const auto& g : gb.basis()) l.items.push_back({g, {}});
      return {std::move(l), {}};
    };
    t["syzygies"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      QuotientRing r = x.ring_arg(a, 0);
      return {syzygies(as_matrix(a.values[1], a.expr(1), r), r), {}};
    };
    t["matrix_minors"] = [](E& x, Args& a) -> Value {
      x.arity(a, 3, 3);
      QuotientRing r = x.ring_arg(a, 0);
      List l;
      for (auto& p : matrix_minors(as_matrix(a.values[1], a.expr(1), r), static_cast<std::size_t>(as_int(a.values[2], a.expr(2), 1))))
        l.items.push_back({r.reduce(p), {}});
      return {std::move(l), {}};
    };
    t["coker"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      QuotientRing r = x.ring_arg(a, 0);
      return {FPModule(r, as_matrix(a.values[1], a.expr(1), r)), {}};
    };
    t["cyclic"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      QuotientRing r = x.ring_arg(a, 0);
      if (auto j = std::get_if<Ideal>(&a.values[1].v)) return {FPModule::cyclic(r, j->generators()), {}};
      return {FPModule::cyclic(r, as_polys(a.values[1], a.expr(1), r)), {}};
    };
    t["ideal_module"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      Ideal j = x.ideal_arg(a, 0);
      return {FPModule::ideal(j.ring(), j.generators()), {}};
    };
    t["free"] = [](E& x, Args& a) -> Value {
      x.arity(a, 2, 2);
      return {FPModule::free(x.ring_arg(a, 0), static_cast<std::size_t>(as_int(a.values[1], a.expr(1)))), {}};
    };
    t["residue"] = [](E& x, Args& a) -> Value {
      x.arity(a, 1, 1);
      return {residue_module(x.ring_arg(a, 0)), {}};
    };
    return t;
  }();
  return table;
}

}  // namespace

std::string RunReport::status() const {
  if (diagnostic) return "error";
  for (const auto& c : commands)
    if (c.assertion && !c.assertion->pass) return "fail";
  return "ok";
}

int RunReport::exit_code() const {
  std::string s = status();
  return s == "ok" ? 0 : s == "fail" ? 1 : 2;
}

std::vector<CorpusLine> RunReport::assertions() const {
  std::vector<CorpusLine> out;
  for (const auto& c : commands)
    if (c.assertion) out.push_back(*c.assertion);
  return out;
}

std::string RunReport::text() const {
  std::ostringstream out;
  for (const auto& c : commands) {
    if (c.assertion) {
      out << c.value << "\n";
    } else if (c.kind == "error") {
      out << "> " << c.cmd << "\n";
    } else {
      out << "> " << c.cmd << "\n" << c.value;
      if (c.value.empty() || c.value.back() != '\n') out << "\n";
    }
    for (const auto& n : c.notes) out << "note: " << n << "\n";
  }
  if (diagnostic) out << "error: " << *diagnostic << "\n";
  out << "status: " << status() << "\n";
  return out.str();
}

std::string RunReport::json(int indent) const {
  using nlohmann::ordered_json;
  ordered_json root;
  root["commands"] = ordered_json::array();
  for (const auto& c : commands) {
    ordered_json entry;
    entry["cmd"] = c.cmd;
    entry["span"] = {{"line", c.span.line}, {"column", c.span.column}, {"offset", c.span.offset}, {"length", c.span.length}};
    ordered_json result;
    result["kind"] = c.kind;
    if (c.assertion) {
      result["pass"] = c.assertion->pass;
      result["label"] = c.assertion->fixture + "." + c.assertion->assertion;
      result["expected"] = c.assertion->expected;
      result["got"] = c.assertion->got;
    } else {
      result["value"] = c.value;
    }
    result["notes"] = c.notes;
    entry["result"] = std::move(result);
    root["commands"].push_back(std::move(entry));
  }
  root["status"] = status();
  if (diagnostic) root["diagnostic"] = *diagnostic;
  root["metadata"] = {{"model", "affine model"}};
  return root.dump(indent);
}

RunReport execute(const Script& script, const RunOptions& options) { return Executor(options).run(script); }

RunReport run_script(std::string_view source, const RunOptions& options) {
  try {
    return execute(parse(source), options);
  } catch (const Diagnostic& d) {
    RunReport r;
    r.diagnostic = d.what();
    return r;
  }
}

}  // namespace jacal::dsl
