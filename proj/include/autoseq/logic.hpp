#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "autoseq/automata.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/sequences.hpp"

namespace autoseq {

struct SourcePos {
  int line = 1;
  int col = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { variable, constant, add, subtract, scale };
  Kind kind;
  SourcePos pos;
  std::string name;        // variable
  std::int64_t value = 0;  // constant, or factor for scale
  TermPtr left, right;     // add / subtract; scale uses left
};

/// sum coeffs[v] * v + constant
struct LinearForm {
  std::map<std::string, std::int64_t> coeffs;
  std::int64_t constant = 0;

  bool is_constant() const { return coeffs.empty(); }
  /// Name of the variable when the form is exactly one variable.
  std::optional<std::string> plain_variable() const;
  LinearForm operator-(const LinearForm& other) const;
  std::string str() const;
};

LinearForm normalize(const Term& t);

enum class RelOp { eq, ne, lt, le, gt, ge };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { truth, compare, seq_const, seq_seq, negation, binary, exists, forall, call };
  Kind kind;
  SourcePos pos;
  bool value = false;              // truth
  RelOp rel = RelOp::eq;           // compare, seq_const, seq_seq (eq or ne only)
  TermPtr lhs, rhs;                // compare; lhs is the index of seq atoms, rhs the second index
  std::string symbol, symbol2;     // sequence symbols
  int letter = 0;                  // seq_const
  BoolOp op = BoolOp::conj;        // binary
  FormulaPtr left, right;          // negation uses left
  std::vector<std::string> vars;   // quantified variables
  std::string macro;               // call
  std::vector<TermPtr> args;       // call
};

struct MacroDef {
  std::string name;
  std::vector<std::string> params;
  FormulaPtr body;
  SourcePos pos;
};

class PredicateLibrary {
 public:
  /// Parses `def Name(p, ...) := formula;` entries; `#` starts a comment.
  /// Macros must be defined before use.
  static PredicateLibrary parse(std::string_view text);
  static const PredicateLibrary& standard();

  void add(MacroDef def);
  void merge(const PredicateLibrary& other);
  const MacroDef* find(std::string_view name) const;
  const std::vector<std::string>& names() const { return order_; }

 private:
  std::map<std::string, MacroDef, std::less<>> macros_;
  std::vector<std::string> order_;
};

/// Parses one formula. Calls are checked against `library` when given.
FormulaPtr parse_formula(std::string_view text, const PredicateLibrary* library = nullptr);

/// Free variables in sorted order.
std::vector<std::string> free_variables(const Formula& f);

std::string to_string(const Formula& f);

/// Text of the shipped predicate library.
std::string_view standard_library_text();

struct Binding {
  SequenceId fallback = SequenceId::thue_morse;  // for symbols not listed
  std::map<std::string, SequenceId> symbols;

  SequenceId resolve(const std::string& symbol) const;
};

/// Automaton over named tracks; vars sorted, track t reads vars[t].
struct Relation {
  std::vector<std::string> vars;
  Dfa dfa;
};

struct CompileStats {
  std::size_t operations = 0;
  State peak_states = 0;
};

class Compiler {
 public:
  Compiler(const PredicateLibrary& library, Binding binding, NumerationSystem system);

  /// Automaton over the free variables of f (sorted), validity enforced.
  Relation compile(const Formula& f);
  Relation compile(std::string_view text);

  /// Places `vars` (which must contain every free variable) on the tracks.
  Relation compile_over(const Formula& f, const std::vector<std::string>& vars);

  /// Macro automaton with track t reading parameter t.
  const Dfa& macro_automaton(const std::string& name);

  const NumerationSystem& system() const { return system_; }
  const PredicateLibrary& library() const { return library_; }
  const CompileStats& stats() const { return stats_; }

 private:
  Relation compile_node(const Formula& f);
  Relation conj(const Relation& a, const Relation& b, BoolOp op);
  Relation negate(const Relation& a);
  Relation exists(const Relation& a, const std::string& var);
  Relation forall(const Relation& a, const std::string& var);
  Relation apply(const Dfa& base, const std::vector<LinearForm>& args);
  Relation linear(const LinearForm& f, std::int64_t rhs);
  Relation comparison(const LinearForm& lhs, RelOp rel, const LinearForm& rhs);
  Relation truth(bool value) const;
  Relation placed(const Dfa& d, const std::vector<std::string>& names);
  Relation widen(const Relation& r, const std::vector<std::string>& vars);
  const Dfa& validity(int arity);
  const Dfao& generator(const std::string& symbol);
  std::string fresh();
  Relation note(Relation r);

  const PredicateLibrary& library_;
  Binding binding_;
  NumerationSystem system_;
  std::map<std::string, Dfa> macros_;
  std::map<int, Dfa> validity_;
  std::map<SequenceId, Dfao> generators_;
  std::size_t fresh_counter_ = 0;
  std::vector<std::string> expanding_;
  CompileStats stats_;
};

struct Decision {
  bool value = false;
  /// Witness of a leading existential block, or counterexample of a
  /// leading universal block; empty when not applicable.
  std::vector<std::string> vars;
  std::vector<std::uint64_t> values;
  std::string kind;  // "witness", "counterexample" or ""
};

/// Decides a sentence (no free variables).
Decision decide(Compiler& compiler, const Formula& sentence);
Decision decide(Compiler& compiler, std::string_view text);

/// System shared by the sequences bound to `symbols` (the fallback when
/// there are none), in the given order.
NumerationSystem system_for(const Binding& binding, const std::vector<std::string>& symbols, DigitOrder order);

/// Sequence symbols used by f and by every macro it reaches.
std::vector<std::string> sequence_symbols(const Formula& f, const PredicateLibrary& library);

}  // namespace autoseq
