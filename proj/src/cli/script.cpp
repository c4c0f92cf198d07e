#include "dkit/cli/script.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "dkit/properties.hpp"
#include "dkit/ring.hpp"

namespace dkit::script {

ParseError::ParseError(Position pos, const std::string& message)
    : Error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.col) + ": " + message),
      pos_(pos),
      detail_(message) {}

const Value* Command::option(std::string_view key) const {
  for (const auto& o : options)
    if (o.key == key) return &o.value;
  return nullptr;
}

std::size_t Script::bindings() const {
  return std::count_if(statements.begin(), statements.end(),
                       [](const Statement& s) { return std::holds_alternative<Binding>(s); });
}

std::size_t Script::commands() const { return statements.size() - bindings(); }

namespace {

// --- lexer -----------------------------------------------------------------

enum class Tok { Ident, Int, String, Sym, DotDot, End };

struct Token {
  Tok kind;
  std::string text;
  Position pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::Int: return "integer " + t.text;
    case Tok::String: return "string \"" + t.text + "\"";
    case Tok::Sym: return "'" + t.text + "'";
    case Tok::DotDot: return "'..'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Position pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      unsigned char c = static_cast<unsigned char>(src[i]);
      if (c == '\n') {
        ++pos.line;
        pos.col = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++pos.col;
      }
    }
  };
  auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (is_alpha(c)) {
      std::size_t j = i;
      while (j < src.size() && (is_alpha(src[j]) || is_digit(src[j]))) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
    } else if (is_digit(c)) {
      std::size_t j = i;
      while (j < src.size() && is_digit(src[j])) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
    } else if (c == '"') {
      Position start = pos;
      std::string text;
      advance(1);
      while (true) {
        if (i >= src.size() || src[i] == '\n') throw ParseError(start, "unterminated string");
        if (src[i] == '"') break;
        if (src[i] == '\\' && i + 1 < src.size()) advance(1);
        text += src[i];
        advance(1);
      }
      advance(1);
      out.push_back({Tok::String, text, start});
    } else if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
      out.push_back({Tok::DotDot, "..", pos});
      advance(2);
    } else if (std::string_view("(){},;=+*&:^").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), pos});
      advance(1);
    } else {
      std::size_t len = 1;
      unsigned char u = static_cast<unsigned char>(c);
      if (u >= 0xF0) len = 4;
      else if (u >= 0xE0) len = 3;
      else if (u >= 0xC0) len = 2;
      throw ParseError(pos, "unexpected character '" + std::string(src.substr(i, len)) + "'");
    }
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

// --- command table -----------------------------------------------------------

enum class Arg { Ideal, IdealOrMono, Mono, Var, Prime, Ints, Vars, Int };

struct Signature {
  std::vector<Arg> args;
  std::size_t outputs = 0;
  std::set<std::string> options;
};

const std::set<std::string> kSubVerbs{"check", "transform", "transport", "construct", "property"};

const std::map<std::string, Signature>& signatures() {
  static const std::map<std::string, Signature> t = [] {
    std::map<std::string, Signature> m;
    const std::set<std::string> ck{"rmax", "smax", "expect", "witness", "at", "tag"};
    m["check demotion"] = {{Arg::Ideal, Arg::Ideal}, 0, ck};
    m["check reduction"] = {{Arg::Ideal, Arg::Ideal}, 0, {"nmax", "expect", "n", "witness"}};
    m["check ntf"] = {{Arg::Ideal}, 0, {"kmax", "expect", "at", "witness", "prime", "method"}};
    m["check witness"] = {{Arg::Ideal, Arg::Ideal, Arg::Mono}, 0, {"at", "expect"}};
    m["ass"] = {{Arg::Ideal}, 0, {"expect"}};
    m["minprimes"] = {{Arg::Ideal}, 0, {"expect"}};
    m["decompose"] = {{Arg::Ideal}, 0, {"expect"}};
    m["height"] = {{Arg::Ideal}, 0, {"expect"}};
    m["contains"] = {{Arg::Ideal, Arg::IdealOrMono}, 0, {"expect"}};
    m["equal"] = {{Arg::Ideal, Arg::Ideal}, 0, {"expect"}};
    m["show"] = {{Arg::Ideal}, 0, {"expect", "size"}};
    const std::map<std::string, Arg> ops{{"localize", Arg::Prime}, {"contract", Arg::Var}, {"delete", Arg::Var},
                                         {"permute", Arg::Vars},   {"multiple", Arg::Mono}, {"expand", Arg::Ints},
                                         {"weight", Arg::Ints}};
    for (const auto& [op, kind] : ops) {
      m["transform " + op] = {{Arg::Ideal, kind}, 1, {"expect"}};
      m["transport " + op] = {{Arg::Ideal, Arg::Ideal, kind}, 2, ck};
    }
    m["transform sum"] = {{Arg::Ideal, Arg::Ideal}, 1, {"expect"}};
    m["transport sum"] = {{Arg::Ideal, Arg::Ideal, Arg::Ideal, Arg::Ideal}, 2, ck};
    const std::set<std::string> co{"kmax", "expect", "tag", "proper", "refusal"};
    m["construct prime_in_prime"] = {{Arg::Prime, Arg::Prime}, 2, co};
    m["construct frobenius"] = {{Arg::Int}, 2, co};
    m["construct principal"] = {{Arg::Mono, Arg::Ideal}, 1, co};
    m["construct prime_intersection"] = {{Arg::Ideal, Arg::Prime}, 1, co};
    m["construct edge_extension"] = {{Arg::Ideal, Arg::Var, Arg::Var}, 1, co};
    m["construct ntf_product"] = {{Arg::Ideal, Arg::Ideal, Arg::Int, Arg::Int}, 1, co};
    m["construct ntf_extension"] = {{Arg::Ideal, Arg::Var, Arg::Var, Arg::Int}, 1, co};
    m["construct family"] = {{Arg::Int, Arg::Int, Arg::Int}, 2, co};
    return m;
  }();
  return t;
}

const std::set<std::string> kIntegerOptions{"rmax", "smax", "nmax", "kmax", "cases", "n", "size"};

// --- parser ----------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script parse() {
    Script s;
    if (!(peek().kind == Tok::Ident && peek().text == "ring"))
      throw ParseError(peek().pos, "a script must start with a ring declaration, found " + describe(peek()));
    s.ring_pos = peek().pos;
    next();
    parse_ring(s);
    ring_.assign(s.ring.begin(), s.ring.end());
    while (peek().kind != Tok::End) {
      const auto& t = peek();
      if (t.kind == Tok::Ident && t.text == "ring") throw ParseError(t.pos, "only one ring declaration is allowed");
      if (t.kind == Tok::Ident && peek(1).kind == Tok::Sym && peek(1).text == "=") {
        s.statements.push_back(parse_binding());
      } else {
        s.statements.push_back(parse_command());
      }
    }
    return s;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }

  [[noreturn]] void unexpected(const std::string& wanted) const {
    throw ParseError(peek().pos, "expected " + wanted + ", found " + describe(peek()));
  }
  void expect_sym(std::string_view s) {
    if (!at_sym(s)) unexpected("'" + std::string(s) + "'");
    next();
  }
  const Token& expect_ident(const std::string& what) {
    if (peek().kind != Tok::Ident) unexpected(what);
    return next();
  }
  std::uint64_t expect_int(const std::string& what) {
    if (peek().kind != Tok::Int) unexpected(what);
    const auto& t = next();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) throw ParseError(t.pos, "integer out of range");
    return v;
  }

  void parse_ring(Script& s) {
    std::set<std::string> seen;
    auto add = [&](const std::string& name, Position p) {
      if (!seen.insert(name).second) throw ParseError(p, "variable '" + name + "' declared twice");
      s.ring.push_back(name);
    };
    while (true) {
      const auto& first = expect_ident("a variable name");
      if (peek().kind == Tok::DotDot) {
        next();
        const auto& last = expect_ident("the end of a variable range");
        auto split = [&](const Token& t) {
          auto k = t.text.find_last_not_of("0123456789");
          if (k == std::string::npos || k + 1 == t.text.size())
            throw ParseError(t.pos, "range endpoints need a numeric suffix");
          return std::make_pair(t.text.substr(0, k + 1), std::stoull(t.text.substr(k + 1)));
        };
        auto [pa, a] = split(first);
        auto [pb, b] = split(last);
        if (pa != pb) throw ParseError(last.pos, "range endpoints must share a prefix");
        if (b < a) throw ParseError(last.pos, "empty variable range");
        if (b - a > 4096) throw ParseError(last.pos, "variable range too large");
        for (auto k = a; k <= b; ++k) add(pa + std::to_string(k), first.pos);
      } else {
        add(first.text, first.pos);
      }
      if (at_sym(",")) {
        next();
        continue;
      }
      expect_sym(";");
      break;
    }
  }

  std::vector<Factor> parse_factors() {
    std::vector<Factor> fs;
    while (true) {
      const auto& v = expect_ident("a variable name");
      Factor f{v.text, 1};
      if (at_sym("^")) {
        next();
        f.exp = expect_int("an exponent");
      }
      fs.push_back(std::move(f));
      if (!at_sym("*")) break;
      next();
    }
    return fs;
  }

  Term parse_term() {
    Term t;
    if (peek().kind == Tok::Int) {
      t.is_integer = true;
      t.integer = expect_int("an integer");
      return t;
    }
    t.factors = parse_factors();
    return t;
  }

  std::vector<Term> parse_tuple() {
    expect_sym("(");
    std::vector<Term> terms;
    while (true) {
      terms.push_back(parse_term());
      if (at_sym(",")) {
        next();
        continue;
      }
      expect_sym(")");
      return terms;
    }
  }

  Value parse_value(bool allow_pair) {
    Value v;
    v.pos = peek().pos;
    if (peek().kind == Tok::Int) {
      v.kind = Value::Kind::Integer;
      v.integer = expect_int("an integer");
      if (allow_pair && at_sym(",") && peek(1).kind == Tok::Int) {
        next();
        v.kind = Value::Kind::Pair;
        v.second = expect_int("an integer");
      }
    } else if (peek().kind == Tok::String) {
      v.kind = Value::Kind::String;
      v.text = next().text;
    } else if (peek().kind == Tok::Ident) {
      v.factors = parse_factors();
      if (v.factors.size() == 1 && v.factors[0].exp == 1) {
        v.kind = Value::Kind::Word;
        v.text = v.factors[0].var;
      } else {
        v.kind = Value::Kind::Monomial;
      }
    } else if (at_sym("(")) {
      v.kind = Value::Kind::Tuple;
      v.tuple = parse_tuple();
    } else if (at_sym("{")) {
      v.kind = Value::Kind::Set;
      next();
      if (!at_sym("}")) {
        while (true) {
          v.set.push_back(parse_tuple());
          if (!at_sym(",")) break;
          next();
        }
      }
      expect_sym("}");
    } else {
      unexpected("a value");
    }
    return v;
  }

  void check_literal_vars(const std::vector<Term>& terms) {
    for (const auto& t : terms)
      for (const auto& f : t.factors)
        if (std::find(ring_.begin(), ring_.end(), f.var) == ring_.end())
          throw ParseError(pending_pos_, "unknown variable '" + f.var + "'");
  }

  void require_bound(const std::string& name, Position p) {
    if (!bound_.count(name)) throw ParseError(p, "unbound identifier '" + name + "'");
  }

  Binding parse_binding() {
    Binding b;
    const auto& name = next();
    b.name = name.text;
    b.pos = name.pos;
    if (std::find(ring_.begin(), ring_.end(), b.name) != ring_.end())
      throw ParseError(name.pos, "'" + b.name + "' is a ring variable");
    expect_sym("=");
    b.expr.pos = peek().pos;
    pending_pos_ = peek().pos;
    if (at_sym("(")) {
      b.expr.kind = Expr::Kind::Literal;
      b.expr.literal = parse_tuple();
      check_literal_vars(b.expr.literal);
      bool has_int = std::any_of(b.expr.literal.begin(), b.expr.literal.end(), [](const Term& t) { return t.is_integer; });
      if (has_int && (b.expr.literal.size() != 1 || b.expr.literal[0].integer > 1))
        throw ParseError(b.expr.pos, "an ideal literal holds monomials, or is (0) or (1)");
    } else {
      const auto& lhs = expect_ident("an ideal name or literal");
      if (at_sym("(") && (lhs.text == "radical" || lhs.text == "symbolic")) {
        b.expr.kind = Expr::Kind::Call;
        b.expr.func = lhs.text;
        next();
        while (true) {
          b.expr.args.push_back(parse_value(false));
          if (!at_sym(",")) break;
          next();
        }
        expect_sym(")");
        std::size_t want = b.expr.func == "radical" ? 1 : 2;
        if (b.expr.args.size() != want)
          throw ParseError(b.expr.pos, b.expr.func + " takes " + std::to_string(want) + " argument(s)");
        if (b.expr.args[0].kind != Value::Kind::Word) throw ParseError(b.expr.args[0].pos, "expected an ideal name");
        require_bound(b.expr.args[0].text, b.expr.args[0].pos);
        if (want == 2 && b.expr.args[1].kind != Value::Kind::Integer)
          throw ParseError(b.expr.args[1].pos, "expected an integer");
      } else {
        require_bound(lhs.text, lhs.pos);
        b.expr.lhs = lhs.text;
        b.expr.kind = Expr::Kind::Name;
        if (at_sym("+") || at_sym("*") || at_sym("&") || at_sym(":")) {
          b.expr.kind = Expr::Kind::Binary;
          b.expr.op = next().text[0];
          const auto& rhs = expect_ident("an ideal name");
          require_bound(rhs.text, rhs.pos);
          b.expr.rhs = rhs.text;
        } else if (at_sym("^")) {
          next();
          b.expr.kind = Expr::Kind::Power;
          b.expr.exponent = expect_int("an exponent");
        }
      }
    }
    expect_sym(";");
    bound_.insert(b.name);
    return b;
  }

  void check_arg(Arg kind, const Value& v) {
    auto bad = [&](const std::string& what) { throw ParseError(v.pos, "expected " + what); };
    auto single_vars = [&](const std::vector<Term>& terms) {
      return std::all_of(terms.begin(), terms.end(), [](const Term& t) {
        return !t.is_integer && t.factors.size() == 1 && t.factors[0].exp == 1;
      });
    };
    switch (kind) {
      case Arg::Ideal:
        if (v.kind != Value::Kind::Word) bad("an ideal name");
        require_bound(v.text, v.pos);
        break;
      case Arg::IdealOrMono:
        if (!v.is_monomial()) bad("an ideal name or a monomial");
        break;
      case Arg::Mono:
        if (!v.is_monomial() && !(v.kind == Value::Kind::Integer && v.integer == 1)) bad("a monomial");
        break;
      case Arg::Var:
        if (v.kind != Value::Kind::Word) bad("a variable name");
        break;
      case Arg::Prime:
      case Arg::Vars:
        if (v.kind != Value::Kind::Tuple || !single_vars(v.tuple)) bad("a parenthesized list of variables");
        break;
      case Arg::Ints:
        if (v.kind != Value::Kind::Tuple ||
            !std::all_of(v.tuple.begin(), v.tuple.end(), [](const Term& t) { return t.is_integer; }))
          bad("a parenthesized list of integers");
        break;
      case Arg::Int:
        if (v.kind != Value::Kind::Integer) bad("an integer");
        break;
    }
  }

  Command parse_command() {
    Command c;
    c.pos = peek().pos;
    c.verb = expect_ident("a command").text;
    if (kSubVerbs.count(c.verb)) c.sub = expect_ident("a '" + c.verb + "' subcommand").text;
    const bool is_property = c.verb == "property";
    const Signature* sig = nullptr;
    if (is_property) {
      const auto& laws = properties::laws();
      if (std::find(laws.begin(), laws.end(), c.sub) == laws.end())
        throw ParseError(c.pos, "unknown property law '" + c.sub + "'");
    } else {
      auto it = signatures().find(c.head());
      if (it == signatures().end()) throw ParseError(c.pos, "unknown command '" + c.head() + "'");
      sig = &it->second;
    }

    std::vector<Position> out_pos;
    while (!at_sym(";")) {
      if (peek().kind == Tok::End) unexpected("';'");
      if (peek().kind == Tok::Ident && peek().text == "as") {
        const Position as_pos = next().pos;
        if (!c.outputs.empty()) throw ParseError(as_pos, "'as' given twice");
        while (peek().kind == Tok::Ident && !(peek(1).kind == Tok::Sym && peek(1).text == "=")) {
          out_pos.push_back(peek().pos);
          c.outputs.push_back(next().text);
        }
        if (c.outputs.empty()) unexpected("an output name");
        continue;
      }
      if (peek().kind == Tok::Ident && peek(1).kind == Tok::Sym && peek(1).text == "=") {
        const auto& key = next();
        next();
        if (c.option(key.text)) throw ParseError(key.pos, "option '" + key.text + "' given twice");
        const bool allowed = is_property ? (key.text == "cases" || key.text == "expect") : sig->options.count(key.text);
        if (!allowed) throw ParseError(key.pos, "'" + c.head() + "' has no option '" + key.text + "'");
        Option o{key.text, parse_value(true)};
        if (kIntegerOptions.count(o.key) && o.value.kind != Value::Kind::Integer)
          throw ParseError(o.value.pos, "option '" + o.key + "' takes an integer");
        c.options.push_back(std::move(o));
        continue;
      }
      if (!c.options.empty()) throw ParseError(peek().pos, "positional argument after an option");
      if (!c.outputs.empty()) throw ParseError(peek().pos, "positional argument after 'as'");
      c.args.push_back(parse_value(false));
    }
    next();  // ';'

    const std::size_t want_args = sig ? sig->args.size() : 0;
    const std::size_t want_outs = sig ? sig->outputs : 0;
    if (c.args.size() != want_args)
      throw ParseError(c.pos, "'" + c.head() + "' takes " + std::to_string(want_args) + " argument(s), got " +
                                  std::to_string(c.args.size()));
    if (c.outputs.size() != want_outs)
      throw ParseError(c.pos, "'" + c.head() + "' binds " + std::to_string(want_outs) + " name(s) with 'as', got " +
                                  std::to_string(c.outputs.size()));
    for (std::size_t i = 0; i < want_args; ++i) check_arg(sig->args[i], c.args[i]);
    if (c.head() == "check witness" && !c.option("at")) throw ParseError(c.pos, "'check witness' needs at=r,s");
    for (std::size_t i = 0; i < c.outputs.size(); ++i) {
      if (std::find(ring_.begin(), ring_.end(), c.outputs[i]) != ring_.end())
        throw ParseError(out_pos[i], "'" + c.outputs[i] + "' is a ring variable");
      for (std::size_t j = 0; j < i; ++j)
        if (c.outputs[i] == c.outputs[j]) throw ParseError(out_pos[i], "output '" + c.outputs[i] + "' named twice");
    }
    for (const auto& o : c.outputs) bound_.insert(o);
    return c;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> ring_;
  std::set<std::string> bound_;
  Position pending_pos_;
};

// --- printer ---------------------------------------------------------------

std::string print_factors(const std::vector<Factor>& fs) {
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += "*";
    s += fs[i].var;
    if (fs[i].exp != 1) s += "^" + std::to_string(fs[i].exp);
  }
  return s;
}

std::string print_tuple(const std::vector<Term>& ts) {
  std::string s = "(";
  for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? ", " : "") + print_term(ts[i]);
  return s + ")";
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal: return print_tuple(e.literal);
    case Expr::Kind::Name: return e.lhs;
    case Expr::Kind::Binary: return e.lhs + " " + e.op + " " + e.rhs;
    case Expr::Kind::Power: return e.lhs + "^" + std::to_string(e.exponent);
    case Expr::Kind::Call: {
      std::string s = e.func + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print_value(e.args[i]);
      return s + ")";
    }
  }
  return {};
}

}  // namespace

std::string print_term(const Term& t) { return t.is_integer ? std::to_string(t.integer) : print_factors(t.factors); }

std::string print_value(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Integer: return std::to_string(v.integer);
    case Value::Kind::Pair: return std::to_string(v.integer) + "," + std::to_string(v.second);
    case Value::Kind::Word: return v.text;
    case Value::Kind::Monomial: return print_factors(v.factors);
    case Value::Kind::Tuple: return print_tuple(v.tuple);
    case Value::Kind::Set: {
      std::string s = "{";
      for (std::size_t i = 0; i < v.set.size(); ++i) s += (i ? ", " : "") + print_tuple(v.set[i]);
      return s + "}";
    }
    case Value::Kind::String: {
      std::string s = "\"";
      for (char c : v.text) {
        if (c == '"' || c == '\\') s += '\\';
        s += c;
      }
      return s + "\"";
    }
  }
  return {};
}

std::string print_statement(const Statement& st) {
  if (const auto* b = std::get_if<Binding>(&st)) return b->name + " = " + print_expr(b->expr) + ";";
  const auto& c = std::get<Command>(st);
  std::string s = c.head();
  for (const auto& a : c.args) s += " " + print_value(a);
  for (const auto& o : c.options) s += " " + o.key + "=" + print_value(o.value);
  if (!c.outputs.empty()) {
    s += " as";
    for (const auto& o : c.outputs) s += " " + o;
  }
  return s + ";";
}

std::string print_script(const Script& s) {
  std::string out = "ring ";
  for (std::size_t i = 0; i < s.ring.size(); ++i) out += (i ? ", " : "") + s.ring[i];
  out += ";\n";
  for (const auto& st : s.statements) out += print_statement(st) + "\n";
  return out;
}

Script parse_script(std::string_view text) {
  auto s = Parser(lex(text)).parse();
  try {
    RingContext check(s.ring);
  } catch (const Error& e) {
    throw ParseError(s.ring_pos, e.what());
  }
  return s;
}

std::vector<std::string> command_heads() {
  std::vector<std::string> out;
  for (const auto& [k, v] : signatures()) out.push_back(k);
  for (const auto& l : properties::laws()) out.push_back("property " + l);
  return out;
}

}  // namespace dkit::script
