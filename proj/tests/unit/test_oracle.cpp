#include <algorithm>
#include <set>
#include <string>

#include "autoseq/oracle.hpp"
#include "autoseq/sequences.hpp"
#include "doctest.h"

using namespace autoseq;
using namespace autoseq::oracle;

namespace {

template <class F>
void each_binary_word(std::size_t max_len, F f) {
  for (std::size_t len = 0; len <= max_len; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string w(len, '0');
      for (std::size_t k = 0; k < len; ++k)
        if (bits >> k & 1) w[k] = '1';
      f(w);
    }
}

std::size_t naive_palindromes(const std::string& x) {
  std::set<std::string> s{""};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j <= x.size(); ++j)
      if (is_palindrome(x.substr(i, j - i))) s.insert(x.substr(i, j - i));
  return s.size();
}

}  // namespace

TEST_CASE("occurrences overlap and count the empty word at every position") {
  CHECK(occurrences("confrontation", "on") == 3);
  CHECK(occurrences("aaaa", "aa") == 3);
  CHECK(occurrences("abc", "") == 4);
  CHECK(occurrences("ab", "abc") == 0);
}

TEST_CASE("palindromes") {
  CHECK(is_palindrome("radar"));
  CHECK(is_palindrome(""));
  CHECK_FALSE(is_palindrome("drawer"));
  std::string r = "drawer";
  std::reverse(r.begin(), r.end());
  CHECK(r == "reward");
}

TEST_CASE("closed and privileged words") {
  CHECK(is_closed("abracadabra"));
  CHECK(is_closed("alfalfa"));
  CHECK_FALSE(is_closed("ab"));
  CHECK(is_closed("mama"));
  CHECK_FALSE(is_privileged("mama"));
  CHECK(is_privileged("a"));
  CHECK(is_privileged(""));
  CHECK(is_privileged("aa"));
  CHECK_FALSE(has_property_p("mama"));
  CHECK(has_property_p(""));
}

TEST_CASE("property P matches privileged, and privileged implies closed") {
  each_binary_word(14, [](const std::string& w) {
    bool p = is_privileged(w);
    CHECK_MESSAGE(has_property_p(w) == p, w);
    if (p) CHECK_MESSAGE(is_closed(w), w);
  });
}

TEST_CASE("rich words") {
  CHECK(is_rich("Mississippi"));
  CHECK(distinct_palindromes("Mississippi") == 12);
  CHECK(is_rich(""));
  CHECK_FALSE(is_rich("00101100"));
  each_binary_word(14, [](const std::string& w) {
    CHECK_MESSAGE(is_rich(w) == is_rich_by_suffixes(w), w);
    CHECK(distinct_palindromes(w) <= w.size() + 1);
  });
}

TEST_CASE("palindrome counting matches a naive count") {
  each_binary_word(10, [](const std::string& w) { CHECK_MESSAGE(distinct_palindromes(w) == naive_palindromes(w), w); });
  std::string x = "abacabadabacabaeab";
  auto counts = palindrome_counts(x);
  REQUIRE(counts.size() == x.size() + 1);
  for (std::size_t m = 0; m <= x.size(); ++m) CHECK(counts[m] == naive_palindromes(x.substr(0, m)));
  CHECK(count_palindromes_in_prefix(SequenceId::thue_morse, 8) == naive_palindromes(prefix(SequenceId::thue_morse, 8)));
}

TEST_CASE("trapezoidal words") {
  CHECK(is_trapezoidal("deeded"));
  CHECK_FALSE(is_trapezoidal("abc"));
  CHECK_FALSE(is_trapezoidal("aabcc"));
  each_binary_word(14, [](const std::string& w) { CHECK_MESSAGE(is_trapezoidal(w) == is_trapezoidal_by_rk(w), w); });
}

TEST_CASE("balanced words") {
  CHECK(is_balanced("banana"));
  CHECK_FALSE(is_balanced("0011"));
  CHECK_THROWS(is_balanced_coven_hedlund("abc"));
  each_binary_word(14, [](const std::string& w) { CHECK_MESSAGE(is_balanced(w) == is_balanced_coven_hedlund(w), w); });
}

TEST_CASE("factor statistics agree with direct enumeration") {
  std::string x = "0110100110010110";
  FactorStats st = factor_stats(x);
  for (std::size_t n = 0; n <= x.size(); ++n) {
    std::set<std::string> f;
    for (std::size_t i = 0; i + n <= x.size(); ++i) f.insert(x.substr(i, n));
    CHECK(st.factors[n] == f.size());
  }
}

TEST_CASE("maximal palindromes") {
  auto contains = [](const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  CHECK(contains(maximal_palindromes(prefix(SequenceId::rudin_shapiro, 1 << 14), 1024), "0100010"));
  CHECK(contains(maximal_palindromes(prefix(SequenceId::paperfolding, 1 << 14), 1024), "001100"));
  CHECK(maximal_palindromes(prefix(SequenceId::fibonacci, 1 << 14), 1024).empty());
}

TEST_CASE("property factor totals") {
  auto rich = distinct_property_factors(SequenceId::thue_morse, Property::rich, 20);
  CHECK(rich.total == 161);
  CHECK(rich.longest == 16);
  auto trap = distinct_property_factors(SequenceId::thue_morse, Property::trapezoidal, 12);
  CHECK(trap.total == 43);
  CHECK(trap.longest == 8);
  auto bal = distinct_property_factors(SequenceId::rudin_shapiro, Property::balanced, 16);
  CHECK(bal.total == 157);
  CHECK(bal.longest == 12);
  CHECK(parse_property(property_name(Property::unbalanced)) == Property::unbalanced);
  CHECK_THROWS(parse_property("sturmian"));
}
