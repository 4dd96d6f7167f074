#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "autoseq/automata.hpp"
#include "autoseq/numeration.hpp"

namespace autoseq {

using Rational = mpq_class;
using Matrix = std::vector<std::vector<Rational>>;

/// f(n) = v * mu(d_1) * ... * mu(d_m) * w over the msd-first digits of n.
struct LinearRep {
  NumerationSystem system;
  std::vector<Rational> v;
  std::vector<Matrix> mu;  // one matrix per digit
  std::vector<Rational> w;

  std::size_t dimension() const { return v.size(); }
  Rational eval(std::uint64_t n) const;
  Rational eval_digits(const std::vector<int>& digits) const;
  /// v * mu(0) == v
  bool leading_zero_stable() const;
  bool operator==(const LinearRep&) const = default;
};

class InfiniteCountError : public std::runtime_error {
 public:
  InfiniteCountError(const std::string& message, std::vector<State> cycle)
      : std::runtime_error(message), cycle_(std::move(cycle)) {}
  const std::vector<State>& cycle() const { return cycle_; }

 private:
  std::vector<State> cycle_;
};

/// Representation of n -> #{i : (i, n) accepted}, where `count_track` is the
/// track of i in a two-track msd-first automaton. Throws InfiniteCountError
/// when some n has infinitely many i.
LinearRep rep_from_counting_dfa(const Dfa& a, int count_track, const NumerationSystem& system);

LinearRep minimize_rep(const LinearRep& rep);

/// Representation of x -> rep(x) when x is the canonical form of a number, 0 otherwise.
LinearRep canonical_only(const LinearRep& rep);

/// True iff both evaluate equally at every n (exact).
bool reps_equal(const LinearRep& a, const LinearRep& b);

/// Plain-text form: header, v, one matrix per digit, w; entries p/q.
std::string to_text(const LinearRep& rep);
LinearRep rep_from_text(std::string_view text);
std::string to_json(const LinearRep& rep);
LinearRep rep_from_json(std::string_view text);
LinearRep load_rep(const std::string& path);

/// name(a n + b) = sum c_t name(a_t n + b_t)
struct RecurrenceRelation {
  struct Index {
    std::uint64_t scale = 1;
    std::uint64_t offset = 0;
    std::uint64_t at(std::uint64_t n) const { return scale * n + offset; }
    bool operator==(const Index&) const = default;
  };
  struct Term {
    Rational coefficient;
    Index index;
  };
  std::string name;
  Index lhs;
  std::vector<Term> rhs;  // empty for "= 0"
  std::string text;

  static RecurrenceRelation parse(std::string_view text);
  std::string str() const;
};

/// One relation per non-comment line.
std::vector<RecurrenceRelation> parse_relations(std::string_view text);
std::vector<RecurrenceRelation> load_relations(const std::string& path);

struct RelationCheck {
  bool holds = true;
  std::optional<std::uint64_t> first_failure;  // least failing n
  Rational lhs, rhs;                           // values at the failure
};

RelationCheck verify_relation(const RecurrenceRelation& rel, const std::function<Rational(std::uint64_t)>& f,
                              std::uint64_t bound);
RelationCheck verify_relation(const RecurrenceRelation& rel, const LinearRep& rep, std::uint64_t bound);

/// Closed form for the number of closed factors of Thue-Morse, valid for
/// n >= 8; nullopt when n lies in no case window.
struct PiecewiseCase {
  int k;      // the case applies with 2^k scaling, k >= -1
  int piece;  // 0..6
  std::uint64_t value;
};
std::vector<PiecewiseCase> closed_count_cases(std::uint64_t n);

struct PiecewiseCheck {
  bool holds = true;
  std::vector<std::uint64_t> mismatches;  // value differs from the representation
  std::vector<std::uint64_t> uncovered;   // no window or several windows
};

PiecewiseCheck verify_piecewise_formula(const LinearRep& rep, std::uint64_t bound);

}  // namespace autoseq
