#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "autoseq/sequences.hpp"

namespace autoseq::oracle {

// Words are plain strings; any byte is a letter.

/// Possibly overlapping occurrences of w in x.
std::size_t occurrences(std::string_view x, std::string_view w);

bool is_palindrome(std::string_view x);

/// Length <= 1, or a border occurring exactly twice.
bool is_closed(std::string_view x);

/// Length <= 1, or a privileged border occurring exactly twice.
bool is_privileged(std::string_view x);

/// For every 1 <= n <= |x| some border u with |u| <= n occurs once in the
/// first n letters and once in the last n letters.
bool has_property_p(std::string_view x);

/// Distinct palindromic factors, the empty word included.
std::size_t distinct_palindromes(std::string_view x);

bool is_rich(std::string_view x);
/// Every prefix has a palindromic suffix occurring once in it.
bool is_rich_by_suffixes(std::string_view x);

bool is_trapezoidal(std::string_view x);
/// |x| = R + K.
bool is_trapezoidal_by_rk(std::string_view x);

bool is_balanced(std::string_view x);
/// Binary words only: unbalanced iff 0v0 and 1v1 are factors for a palindrome v.
bool is_balanced_coven_hedlund(std::string_view x);

struct FactorStats {
  std::vector<std::size_t> factors;        // distinct factors per length 0..|x|
  std::vector<std::size_t> palindromes;    // distinct palindromic factors per length
  std::vector<std::size_t> right_special;  // right-special factors per length
  std::size_t shortest_unrepeated_suffix = 0;
  std::size_t least_without_right_special = 0;
};

FactorStats factor_stats(std::string_view x);

/// Palindromic factors of prefix[0, window) such that no axa is a factor of prefix.
std::vector<std::string> maximal_palindromes(std::string_view prefix, std::size_t window);

enum class Property { factor, palindrome, closed, privileged, rich, trapezoidal, balanced, unbalanced };

Property parse_property(std::string_view name);
std::string property_name(Property p);
bool holds(Property p, std::string_view x);

class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PropertyCounts {
  std::vector<std::size_t> per_length;  // lengths 0..max_len
  std::size_t total = 0;
  std::size_t longest = 0;  // 0 when only the empty factor qualifies
  std::size_t prefix_length = 0;
  std::vector<std::vector<std::string>> factors;  // filled on request
};

/// Distinct factors of `seq` with the property, by length, from a prefix
/// doubled until the per-length factor sets stop changing.
PropertyCounts distinct_property_factors(SequenceId seq, Property property, std::size_t max_len,
                                         bool keep_factors = false, std::size_t cap = std::size_t{1} << 20);

/// Distinct factors of each length 0..max_len from a stabilized prefix.
std::vector<std::vector<std::string>> stable_factors(SequenceId seq, std::size_t max_len,
                                                     std::size_t cap = std::size_t{1} << 20,
                                                     std::size_t* prefix_used = nullptr);

/// counts[m] = distinct palindromes (empty included) in x[0, m), m = 0..|x|.
std::vector<std::size_t> palindrome_counts(std::string_view x);

std::size_t count_palindromes_in_prefix(SequenceId seq, std::size_t n);

}  // namespace autoseq::oracle
