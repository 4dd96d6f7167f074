#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "autoseq/automata.hpp"
#include "autoseq/numeration.hpp"

namespace autoseq {

enum class SequenceId { thue_morse, rudin_shapiro, paperfolding, period_doubling, fibonacci, seq_a, seq_b };

inline constexpr SequenceId all_sequences[] = {SequenceId::thue_morse,      SequenceId::rudin_shapiro,
                                               SequenceId::paperfolding,    SequenceId::period_doubling,
                                               SequenceId::fibonacci,       SequenceId::seq_a,
                                               SequenceId::seq_b};

// The five classical words, in the order used by reports.
inline constexpr SequenceId classical_sequences[] = {SequenceId::thue_morse, SequenceId::rudin_shapiro,
                                                     SequenceId::paperfolding, SequenceId::period_doubling,
                                                     SequenceId::fibonacci};

/// Full names ("thue-morse") and short aliases ("tm", "t", "rs", "pf", ...).
SequenceId parse_sequence(std::string_view name);
std::string sequence_name(SequenceId id);

/// Numeration system the sequence is automatic in (msd-first).
NumerationSystem sequence_system(SequenceId id);

/// Letters the sequence takes, ascending.
std::vector<int> output_alphabet(SequenceId id);

/// Minimal msd-first generator, built once and cached.
const Dfao& dfao(SequenceId id);

/// Generator for the requested digit order.
Dfao dfao(SequenceId id, DigitOrder order);

int eval(SequenceId id, std::uint64_t n);

/// Direct evaluation from the defining recurrences (t, r, p, d), the
/// Zeckendorf rule (f) or the interval rules (a, b). Independent of dfao().
int recurrence_value(SequenceId id, std::uint64_t n);

/// seq-a when strict is false, seq-b when strict is true.
int interval_rule(std::uint64_t i, bool strict);

struct Morphism {
  std::vector<std::string> images;  // images[letter]
  std::vector<int> coding;          // empty for the identity coding
  int start = 0;

  /// Prefix of the coded fixed point starting with `start`.
  std::string fixed_point_prefix(std::size_t length) const;
};

/// Generating morphism of a classical sequence; throws for seq-a/seq-b.
Morphism morphism(SequenceId id);

/// Prefix as a string of digit characters, produced without the Dfao
/// (morphism iteration or the interval rule).
std::string prefix(SequenceId id, std::size_t length);

/// Prefix computed by running the Dfao on every index.
std::string dfao_prefix(SequenceId id, std::size_t length);

/// Dfao built from a recurrence evaluator over base 2 by exploring the
/// kernel n -> x[2^a n + b]; two kernel elements are identified when their
/// first `probe` terms agree.
Dfao kernel_dfao(int (*value)(std::uint64_t), std::size_t probe = 512, std::size_t max_states = 4096);

}  // namespace autoseq
