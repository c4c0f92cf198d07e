#pragma once
// The .dk batch language.
//
//   ring x1..x8;                      # or: ring x, y, z;
//   I = (x3, x1*x2, x4*x5*x6);        # ideal literal; (0) and (1) allowed
//   J = I & Q;   K = I^2;   M = I;    # + * & (intersection) : (colon), power, copy
//   R = radical(I);  S = symbolic(I, 2);
//   check demotion I J rmax=2 smax=2 expect=REFUTED witness=x1*x2 at=1,1;
//   transform expand I (2,3,1,2) as IX;
//
// A statement is either a ring declaration, a binding or a command. Command
// arguments are words, integers, monomials, parenthesized tuples and braced
// sets of tuples; options are key=value; `as A B` names the outputs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dkit/error.hpp"

namespace dkit::script {

struct Position {
  std::size_t line = 1;
  std::size_t col = 1;
  friend bool operator==(const Position&, const Position&) = default;
};

class ParseError : public Error {
 public:
  ParseError(Position pos, const std::string& message);
  Position position() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  Position pos_;
  std::string detail_;
};

struct Factor {
  std::string var;
  std::uint64_t exp = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// An integer or a product of variable powers.
struct Term {
  bool is_integer = false;
  std::uint64_t integer = 0;
  std::vector<Factor> factors;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Value {
  enum class Kind { Integer, Pair, Word, Monomial, Tuple, Set, String };
  Kind kind = Kind::Word;
  Position pos;
  std::uint64_t integer = 0;
  std::uint64_t second = 0;            // Pair
  std::string text;                    // Word, String
  std::vector<Factor> factors;         // Word (one factor), Monomial
  std::vector<Term> tuple;             // Tuple
  std::vector<std::vector<Term>> set;  // Set

  /// Word or Monomial.
  bool is_monomial() const { return kind == Kind::Word || kind == Kind::Monomial; }

  friend bool operator==(const Value& a, const Value& b) {
    return a.kind == b.kind && a.integer == b.integer && a.second == b.second && a.text == b.text &&
           a.factors == b.factors && a.tuple == b.tuple && a.set == b.set;
  }
};

struct Expr {
  enum class Kind { Literal, Name, Binary, Power, Call };
  Kind kind = Kind::Literal;
  Position pos;
  std::vector<Term> literal;  // Literal
  std::string lhs;            // Name, Binary, Power
  char op = 0;                // Binary: + * & :
  std::string rhs;            // Binary
  std::uint64_t exponent = 0; // Power
  std::string func;           // Call
  std::vector<Value> args;    // Call

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.literal == b.literal && a.lhs == b.lhs && a.op == b.op && a.rhs == b.rhs &&
           a.exponent == b.exponent && a.func == b.func && a.args == b.args;
  }
};

struct Binding {
  std::string name;
  Expr expr;
  Position pos;
  friend bool operator==(const Binding& a, const Binding& b) { return a.name == b.name && a.expr == b.expr; }
};

struct Option {
  std::string key;
  Value value;
  friend bool operator==(const Option& a, const Option& b) { return a.key == b.key && a.value == b.value; }
};

struct Command {
  std::string verb;
  std::string sub;  // empty for verbs without subcommands
  std::vector<Value> args;
  std::vector<Option> options;
  std::vector<std::string> outputs;
  Position pos;

  const Value* option(std::string_view key) const;
  /// "check demotion" or "ass".
  std::string head() const { return sub.empty() ? verb : verb + " " + sub; }

  friend bool operator==(const Command& a, const Command& b) {
    return a.verb == b.verb && a.sub == b.sub && a.args == b.args && a.options == b.options &&
           a.outputs == b.outputs;
  }
};

using Statement = std::variant<Binding, Command>;

struct Script {
  std::vector<std::string> ring;
  Position ring_pos;
  std::vector<Statement> statements;

  std::size_t bindings() const;
  std::size_t commands() const;
  friend bool operator==(const Script& a, const Script& b) {
    return a.ring == b.ring && a.statements == b.statements;
  }
};

/// Parses and validates: one ring declared before anything else, every
/// identifier bound before use, literal variables in the ring, and each
/// command's argument count, argument kinds and options.
Script parse_script(std::string_view text);

/// Canonical text; parse_script(print_script(s)) == s.
std::string print_script(const Script& s);
std::string print_statement(const Statement& s);
std::string print_value(const Value& v);
std::string print_term(const Term& t);

/// Keys a command accepts, for help output.
std::vector<std::string> command_heads();

}  // namespace dkit::script
