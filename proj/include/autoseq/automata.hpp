#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoseq {

using State = std::uint32_t;
using Symbol = std::uint32_t;

enum class DigitOrder { msd_first, lsd_first };

enum class BoolOp { conj, disj, implies, iff, exclusive };

bool apply(BoolOp op, bool a, bool b);

/// Tuples of digits in [0, radix). Component 0 is the most significant
/// position of the symbol code, so numeric symbol order is lexicographic
/// tuple order.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(int arity, int radix);

  int arity() const { return arity_; }
  int radix() const { return radix_; }
  Symbol size() const { return size_; }

  int digit(Symbol s, int component) const;
  std::vector<int> decode(Symbol s) const;
  Symbol encode(std::span<const int> digits) const;

  bool operator==(const Alphabet&) const = default;

 private:
  int arity_ = 0;
  int radix_ = 2;
  Symbol size_ = 1;
  std::vector<Symbol> weights_;
};

/// Complete deterministic automaton with a dense transition table.
class Dfa {
 public:
  Dfa() = default;
  Dfa(Alphabet alphabet, State initial, std::vector<State> table,
      std::vector<std::uint8_t> accepting);

  static Dfa universal(const Alphabet& alphabet);
  static Dfa empty_language(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  int arity() const { return alphabet_.arity(); }
  State num_states() const { return static_cast<State>(accepting_.size()); }
  State initial() const { return initial_; }
  State next(State q, Symbol s) const { return table_[std::size_t{q} * alphabet_.size() + s]; }
  bool is_accepting(State q) const { return accepting_[q] != 0; }
  std::span<const State> table() const { return table_; }
  std::span<const std::uint8_t> accepting() const { return accepting_; }

  State run(std::span<const Symbol> word) const;
  bool accepts(std::span<const Symbol> word) const { return is_accepting(run(word)); }

  bool operator==(const Dfa&) const = default;

 private:
  Alphabet alphabet_;
  State initial_ = 0;
  std::vector<State> table_;
  std::vector<std::uint8_t> accepting_;
};

/// Nondeterministic automaton in compressed-row form: successors of (q, s)
/// are targets[offsets[q*|S|+s] .. offsets[q*|S|+s+1]).
class Nfa {
 public:
  Nfa(Alphabet alphabet, State num_states, std::vector<State> initial,
      std::vector<std::uint32_t> offsets, std::vector<State> targets,
      std::vector<std::uint8_t> accepting);

  const Alphabet& alphabet() const { return alphabet_; }
  State num_states() const { return static_cast<State>(accepting_.size()); }
  std::span<const State> initial() const { return initial_; }
  std::span<const State> successors(State q, Symbol s) const;
  bool is_accepting(State q) const { return accepting_[q] != 0; }

 private:
  Alphabet alphabet_;
  std::vector<State> initial_;
  std::vector<std::uint32_t> offsets_;
  std::vector<State> targets_;
  std::vector<std::uint8_t> accepting_;
};

/// Deterministic automaton with output: reads a representation of n and
/// emits x[n] from the state it ends in.
class Dfao {
 public:
  Dfao() = default;
  Dfao(Alphabet alphabet, State initial, std::vector<State> table, std::vector<int> outputs);

  const Alphabet& alphabet() const { return alphabet_; }
  State num_states() const { return static_cast<State>(outputs_.size()); }
  State initial() const { return initial_; }
  State next(State q, Symbol s) const { return table_[std::size_t{q} * alphabet_.size() + s]; }
  int output(State q) const { return outputs_[q]; }
  std::span<const State> table() const { return table_; }
  std::span<const int> outputs() const { return outputs_; }
  int eval(std::span<const Symbol> word) const;

  bool operator==(const Dfao&) const = default;

 private:
  Alphabet alphabet_;
  State initial_ = 0;
  std::vector<State> table_;
  std::vector<int> outputs_;
};

struct EmptinessResult {
  bool empty = true;
  std::vector<Symbol> witness;  // a shortest accepted word when !empty
};

/// Pointwise boolean combination over identical alphabets.
Dfa product(const Dfa& a, const Dfa& b, BoolOp op);

/// Product over a wider alphabet of `arity` tracks; track t of `a` reads
/// union track a_tracks[t] (likewise for `b`). Only reachable pairs are built.
Dfa product_aligned(const Dfa& a, std::span<const int> a_tracks, const Dfa& b,
                    std::span<const int> b_tracks, int arity, BoolOp op);

Dfa complement(const Dfa& a);

/// Re-index tracks: result has `arity` tracks and reads a's track t at
/// position tracks[t]. Tracks not listed are unconstrained.
Dfa cylindrify(const Dfa& a, int arity, std::span<const int> tracks);

/// Existentially erases one track. Witnesses may be longer than the kept
/// tracks, so extra all-zero steps of the kept tracks are absorbed at the
/// most significant end (initial closure for msd-first, accepting closure
/// for lsd-first). The result is minimized.
Dfa project(const Dfa& a, int track, DigitOrder order);

Dfa determinize(const Nfa& n);

/// Minimal complete automaton, states numbered by breadth-first discovery
/// from the initial state in increasing symbol order.
Dfa minimize(const Dfa& a);

/// Automaton for the reversed language, minimized.
Dfa reverse(const Dfa& a);

EmptinessResult is_empty(const Dfa& a);

bool equivalent(const Dfa& a, const Dfa& b);

/// States from which some accepting state is reachable.
std::vector<std::uint8_t> coaccessible(const Dfa& a);

/// State count with the dead state left out (at least 1).
State trimmed_size(const Dfa& a);

Dfao minimize(const Dfao& a);

/// Dfao reading the reversed representation; maps an lsd-first generator
/// to an msd-first one and back.
Dfao reverse(const Dfao& a);

/// Dfa accepting exactly the words on which `a` outputs `value`.
Dfa output_equals(const Dfao& a, int value);

/// Two-track Dfa accepting (u, v) iff a(u) == b(v) (or != when !equal).
Dfa outputs_compare(const Dfao& a, const Dfao& b, bool equal);

}  // namespace autoseq
