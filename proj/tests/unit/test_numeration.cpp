#include <map>
#include <random>

#include "autoseq/numeration.hpp"
#include "doctest.h"

using namespace autoseq;

namespace {

const NumerationSystem msd2 = NumerationSystem::base(2);
const NumerationSystem lsd2 = NumerationSystem::base(2, DigitOrder::lsd_first);
const NumerationSystem fib = NumerationSystem::zeckendorf();

// Zeckendorf forms by exhaustive search over strings without "11".
std::map<std::uint64_t, std::string> brute_zeckendorf(int max_len) {
  std::vector<std::uint64_t> weights{1, 2};
  while (static_cast<int>(weights.size()) < max_len) weights.push_back(weights.back() + weights[weights.size() - 2]);
  std::map<std::uint64_t, std::string> out{{0, ""}};
  for (int len = 1; len <= max_len; ++len)
    for (std::uint64_t bits = 1u << (len - 1); bits < (1u << len); ++bits) {
      if (bits & (bits >> 1)) continue;
      std::string s;
      std::uint64_t v = 0;
      for (int i = len - 1; i >= 0; --i) {
        s.push_back((bits >> i) & 1 ? '1' : '0');
        if ((bits >> i) & 1) v += weights[static_cast<std::size_t>(i)];
      }
      CHECK(out.emplace(v, s).second);
    }
  return out;
}

}  // namespace

TEST_CASE("canonical representations") {
  CHECK(to_canonical(0, msd2).str().empty());
  CHECK(to_canonical(6, msd2).str() == "110");
  CHECK(to_canonical(6, lsd2).str() == "011");
  CHECK(to_canonical(11, fib).str() == "10100");
  CHECK(to_canonical(16, NumerationSystem::base(4)).str() == "100");
}

TEST_CASE("Zeckendorf greedy form matches exhaustive search") {
  auto brute = brute_zeckendorf(16);
  for (std::uint64_t n = 0; n < 1500; ++n) {
    REQUIRE(brute.count(n) == 1);
    CHECK(to_canonical(n, fib).str() == brute[n]);
  }
}

TEST_CASE("from_digits") {
  CHECK(from_digits({msd2, 1, {0, 1, 1, 0}}) == 6);
  CHECK(from_digits({msd2, 1, {}}) == 0);
  CHECK(from_digits({fib, 1, {1, 0, 1, 0, 0}}) == 11);
  CHECK(from_digits({fib, 1, {0, 0, 1, 0, 1, 0, 0}}) == 11);
  CHECK_THROWS_AS(from_digits({msd2, 1, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(from_digits({fib, 1, {0, 1, 1}}), std::invalid_argument);
}

TEST_CASE("tuple encoding") {
  const std::uint64_t t63[] = {6, 3};
  CHECK(encode_tuple(t63, msd2).str() == "[1,0][1,1][0,1]");
  const std::uint64_t t00[] = {0, 0};
  CHECK(encode_tuple(t00, msd2).length() == 0);
  const std::uint64_t t36[] = {3, 6};
  // lsd: digits reversed, padding on the right
  CHECK(encode_tuple(t36, lsd2).str() == "[1,0][1,1][0,1]");
  CHECK(decode_tuple(encode_tuple(t36, lsd2)) == std::vector<std::uint64_t>{3, 6});
}

TEST_CASE("round trip and padding soundness") {
  for (const auto& sys : {msd2, lsd2, fib, fib.with_order(DigitOrder::lsd_first), NumerationSystem::base(3)}) {
    for (std::uint64_t n = 0; n <= 20000; ++n) REQUIRE(from_digits(to_canonical(n, sys)) == n);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<std::uint64_t> t(1 + rng() % 3);
      for (auto& v : t) v = rng() % 1001;
      DigitString w = encode_tuple(t, sys);
      REQUIRE(decode_tuple(w) == t);
      for (std::size_t c = 0; c < t.size(); ++c) {
        std::vector<int> track;
        for (std::size_t i = 0; i < w.length(); ++i) track.push_back(w.digits[i * t.size() + c]);
        // strip padding
        auto canon = to_canonical(t[c], sys).digits;
        std::size_t pad = track.size() - canon.size();
        std::vector<int> stripped = sys.lsd() ? std::vector<int>(track.begin(), track.end() - static_cast<long>(pad))
                                              : std::vector<int>(track.begin() + static_cast<long>(pad), track.end());
        CHECK(stripped == canon);
      }
    }
  }
}

TEST_CASE("validity automata") {
  Dfa v2 = validity_automaton(msd2, 1);
  CHECK(v2.num_states() == 1);
  Dfa vf = validity_automaton(fib, 1);
  CHECK_FALSE(vf.accepts(std::vector<Symbol>{0, 1, 1}));
  CHECK(vf.accepts(std::vector<Symbol>{0, 1, 0, 1}));
  int count = 0;
  for (unsigned bits = 0; bits < 16; ++bits) {
    std::vector<Symbol> w;
    for (int i = 3; i >= 0; --i) w.push_back((bits >> i) & 1);
    bool brute = (bits & (bits >> 1)) == 0;
    CHECK(vf.accepts(w) == brute);
    count += brute;
  }
  CHECK(count == 8);
}

TEST_CASE("base-2 addition and comparison") {
  Dfa add = addition_automaton(msd2);
  const std::uint64_t good[] = {2, 3, 5};
  const std::uint64_t bad[] = {2, 3, 6};
  CHECK(add.accepts(encode_tuple(good, msd2).symbols()));
  CHECK_FALSE(add.accepts(encode_tuple(bad, msd2).symbols()));
  for (std::uint64_t n = 0; n <= 100; ++n) {
    const std::uint64_t t[] = {0, n, n};
    CHECK(add.accepts(encode_tuple(t, msd2).symbols()));
  }
  Dfa eq = comparison_automaton(Comparison::eq, msd2);
  Dfa lt = comparison_automaton(Comparison::lt, msd2);
  for (std::uint64_t n = 0; n <= 100; ++n) {
    const std::uint64_t t[] = {n, n};
    CHECK(eq.accepts(encode_tuple(t, msd2).symbols()));
  }
  const std::uint64_t t63[] = {6, 3};
  const std::uint64_t t36[] = {3, 6};
  CHECK_FALSE(lt.accepts(encode_tuple(t63, msd2).symbols()));
  CHECK(lt.accepts(encode_tuple(t36, msd2).symbols()));
}

TEST_CASE("Zeckendorf comparison agrees with integer order") {
  Dfa lt = comparison_automaton(Comparison::lt, fib);
  Dfa le = comparison_automaton(Comparison::le, fib);
  Dfa eq = comparison_automaton(Comparison::eq, fib);
  for (std::uint64_t x = 0; x <= 200; ++x)
    for (std::uint64_t y = 0; y <= 200; ++y) {
      const std::uint64_t t[] = {x, y};
      auto w = encode_tuple(t, fib).symbols();
      REQUIRE(lt.accepts(w) == (x < y));
      REQUIRE(le.accepts(w) == (x <= y));
      REQUIRE(eq.accepts(w) == (x == y));
    }
}

TEST_CASE("Zeckendorf addition agrees with integer addition") {
  Dfa add = addition_automaton(fib);
  for (std::uint64_t x = 0; x <= 120; ++x)
    for (std::uint64_t y = 0; y <= 120; ++y) {
      const std::uint64_t ok[] = {x, y, x + y};
      const std::uint64_t off[] = {x, y, x + y + 1};
      REQUIRE(add.accepts(encode_tuple(ok, fib).symbols()));
      REQUIRE_FALSE(add.accepts(encode_tuple(off, fib).symbols()));
    }
  CHECK(equivalent(reverse(add), addition_automaton(fib.with_order(DigitOrder::lsd_first))));
}

TEST_CASE("general linear relations") {
  const std::int64_t c[] = {3, -2, 1};
  for (const auto& sys : {msd2, fib, NumerationSystem::base(3)}) {
    Dfa a = linear_automaton(sys, c, 4);
    for (std::uint64_t x = 0; x <= 12; ++x)
      for (std::uint64_t y = 0; y <= 12; ++y)
        for (std::uint64_t z = 0; z <= 12; ++z) {
          const std::uint64_t t[] = {x, y, z};
          bool truth = 3 * static_cast<std::int64_t>(x) - 2 * static_cast<std::int64_t>(y) +
                           static_cast<std::int64_t>(z) == 4;
          REQUIRE(a.accepts(encode_tuple(t, sys).symbols()) == truth);
        }
  }
}

TEST_CASE("enumerate decodes accepted tuples") {
  Dfa lt = comparison_automaton(Comparison::lt, msd2);
  auto pairs = enumerate(lt, msd2, 3);
  CHECK(pairs.size() == 6);
  CHECK(pairs.front() == std::vector<std::uint64_t>{0, 1});
  CHECK(enumerate_values(Dfa::universal(Alphabet(1, 2)), msd2, 5) == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5});
}
