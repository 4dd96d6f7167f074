#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "autoseq/counting.hpp"
#include "autoseq/logic.hpp"
#include "autoseq/sequences.hpp"

namespace autoseq {

/// Compiler over one sequence, bound to every sequence symbol.
Compiler make_compiler(SequenceId id, DigitOrder order = DigitOrder::msd_first,
                       const PredicateLibrary& library = PredicateLibrary::standard());

enum class CountKind { closed, privileged, privileged_palindrome };

CountKind parse_count_kind(std::string_view name);
std::string count_kind_name(CountKind kind);

/// Formula in (i, n) accepting the first occurrence i of each counted factor of length n.
std::string counting_formula(CountKind kind);

/// Linear representation of n -> number of distinct counted factors of length n.
LinearRep count_rep(SequenceId id, CountKind kind);

/// A library predicate with a direct check on an explicit prefix.
struct WordCheck {
  std::string predicate;
  std::size_t arity;
  bool needs_context;  // depends on letters beyond the factor itself
  std::function<bool(std::string_view word, const std::vector<std::uint64_t>& args)> check;
};

/// Checks for Pal, Closed, UCF, Priv, Priv', Rich, Trap, Unbal, MaxPal,
/// FactorEq, Border and Occurs.
const std::vector<WordCheck>& word_checks();
const WordCheck& word_check(std::string_view predicate);

struct CrosscheckReport {
  std::string predicate;
  std::uint64_t bound = 0;
  std::uint64_t tuples = 0;
  std::vector<std::vector<std::uint64_t>> mismatches;  // first few
  std::uint64_t mismatch_count = 0;
  State states = 0;
};

/// Compares the compiled predicate with the direct check on every argument
/// tuple whose entries sum to at most `bound`.
CrosscheckReport crosscheck(SequenceId id, std::string_view predicate, std::uint64_t bound,
                            DigitOrder order = DigitOrder::msd_first);

}  // namespace autoseq
