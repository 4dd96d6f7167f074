#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autoseq/automata.hpp"

namespace autoseq {

enum class SystemKind { base_k, zeckendorf };

class NumerationSystem {
 public:
  NumerationSystem() = default;

  static NumerationSystem base(int k, DigitOrder order = DigitOrder::msd_first);
  static NumerationSystem zeckendorf(DigitOrder order = DigitOrder::msd_first);

  /// Accepts names like "msd_2", "lsd_4", "msd_fib", "fib", "2".
  static NumerationSystem parse(std::string_view name);

  SystemKind kind() const { return kind_; }
  bool is_zeckendorf() const { return kind_ == SystemKind::zeckendorf; }
  int radix() const { return radix_; }
  DigitOrder order() const { return order_; }
  bool lsd() const { return order_ == DigitOrder::lsd_first; }
  NumerationSystem with_order(DigitOrder order) const;
  std::string name() const;

  bool operator==(const NumerationSystem&) const = default;

 private:
  SystemKind kind_ = SystemKind::base_k;
  int radix_ = 2;
  DigitOrder order_ = DigitOrder::msd_first;
};

/// Digits stored in reading order, `arity` digits per position.
struct DigitString {
  NumerationSystem system;
  int arity = 1;
  std::vector<int> digits;

  std::size_t length() const { return arity == 0 ? 0 : digits.size() / static_cast<std::size_t>(arity); }
  std::vector<Symbol> symbols() const;
  /// "110" for arity 1, "[1,0][1,1][0,1]" otherwise.
  std::string str() const;
  bool operator==(const DigitString&) const = default;
};

DigitString to_canonical(std::uint64_t n, const NumerationSystem& system);

/// Value of a single-track digit string; padding zeros are allowed.
/// Throws std::invalid_argument on digits outside the system.
std::uint64_t from_digits(const DigitString& w);

DigitString encode_tuple(std::span<const std::uint64_t> values, const NumerationSystem& system);
std::vector<std::uint64_t> decode_tuple(const DigitString& w);

/// Fibonacci basis 1, 2, 3, 5, 8, ... (all terms below 2^64).
const std::vector<std::uint64_t>& fibonacci_basis();

Dfa validity_automaton(const NumerationSystem& system, int arity);

/// Tuples with sum_t coeffs[t] * x_t == rhs, intersected with validity.
Dfa linear_automaton(const NumerationSystem& system, std::span<const std::int64_t> coeffs, std::int64_t rhs);

/// Triples (x, y, z) with x + y == z.
Dfa addition_automaton(const NumerationSystem& system);

enum class Comparison { eq, lt, le };

/// Pairs (x, y) with x R y.
Dfa comparison_automaton(Comparison relation, const NumerationSystem& system);

/// Accepted tuples with every component <= bound, in lexicographic order.
std::vector<std::vector<std::uint64_t>> enumerate(const Dfa& a, const NumerationSystem& system,
                                                  std::uint64_t bound);

/// Every accepted tuple when the language names finitely many tuples,
/// sorted; nullopt when it names infinitely many or more than `limit`.
std::optional<std::vector<std::vector<std::uint64_t>>> enumerate_finite(const Dfa& a, const NumerationSystem& system,
                                                                        std::size_t limit = 1u << 20);

/// Single-track shortcut of enumerate.
std::vector<std::uint64_t> enumerate_values(const Dfa& a, const NumerationSystem& system, std::uint64_t bound);

}  // namespace autoseq
