#include <random>

#include "autoseq/automata.hpp"
#include "autoseq/numeration.hpp"
#include "doctest.h"

using namespace autoseq;

namespace {

// msd base-2 automaton for n mod m == r
Dfa residue(unsigned m, unsigned r) {
  Alphabet a(1, 2);
  std::vector<State> table;
  std::vector<std::uint8_t> acc;
  for (State q = 0; q < m; ++q) {
    table.push_back((2 * q) % m);
    table.push_back((2 * q + 1) % m);
    acc.push_back(q == r ? 1 : 0);
  }
  return Dfa(a, 0, table, acc);
}

Dfa random_dfa(std::mt19937& rng, int arity, State n, bool zero_loop) {
  Alphabet a(arity, 2);
  std::uniform_int_distribution<State> pick(0, n - 1);
  std::vector<State> table(std::size_t{n} * a.size());
  for (auto& t : table) t = pick(rng);
  if (zero_loop) table[0] = 0;
  std::vector<std::uint8_t> acc(n);
  for (auto& x : acc) x = static_cast<std::uint8_t>(rng() % 3 == 0);
  return Dfa(a, 0, table, acc);
}

const NumerationSystem msd2 = NumerationSystem::base(2);

}  // namespace

TEST_CASE("product with complement is empty, with self is idempotent") {
  Dfa a = residue(5, 2);
  CHECK(is_empty(product(a, complement(a), BoolOp::conj)).empty);
  CHECK(equivalent(product(a, a, BoolOp::disj), a));
  CHECK(equivalent(complement(complement(a)), a));
  CHECK_FALSE(equivalent(a, complement(a)));
}

TEST_CASE("even and divisible by three gives multiples of six") {
  Dfa six = product(residue(2, 0), residue(3, 0), BoolOp::conj);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 0; n <= 1000; n += 6) expected.push_back(n);
  CHECK(enumerate_values(six, msd2, 1000) == expected);
  CHECK(minimize(six).num_states() == 4);
}

TEST_CASE("complement of empty language is universal") {
  Alphabet a(2, 3);
  Dfa full = complement(Dfa::empty_language(a));
  CHECK(equivalent(full, Dfa::universal(a)));
  auto r = is_empty(full);
  CHECK_FALSE(r.empty);
  CHECK(r.witness.empty());
}

TEST_CASE("complement of n < 5 accepts exactly n >= 5") {
  // n < 5 as a projection of x + d + 1 = 5
  const std::int64_t c[] = {1, 1};
  Dfa lt5 = project(linear_automaton(msd2, c, 4), 1, DigitOrder::msd_first);
  Dfa ge5 = product(complement(lt5), validity_automaton(msd2, 1), BoolOp::conj);
  auto got = enumerate_values(ge5, msd2, 100);
  REQUIRE(got.size() == 96);
  CHECK(got.front() == 5);
  CHECK(got.back() == 100);
}

TEST_CASE("shortest witness") {
  Dfa a = residue(7, 5);
  auto r = is_empty(a);
  REQUIRE_FALSE(r.empty);
  CHECK(r.witness == std::vector<Symbol>{1, 0, 1});
}

TEST_CASE("projections of addition and doubling") {
  Dfa add = addition_automaton(msd2);
  CHECK(equivalent(project(add, 2, DigitOrder::msd_first), Dfa::universal(Alphabet(2, 2))));
  const std::int64_t c[] = {1, -2};
  Dfa dbl = linear_automaton(msd2, c, 0);
  CHECK(equivalent(project(dbl, 0, DigitOrder::msd_first), Dfa::universal(Alphabet(1, 2))));
  Dfa halves = project(dbl, 1, DigitOrder::msd_first);
  CHECK(equivalent(halves, residue(2, 0)));
}

TEST_CASE("projection needs long witnesses: exists y with y = x + 1000") {
  const std::int64_t c[] = {1, -1};
  Dfa a = linear_automaton(msd2, c, -1000);
  Dfa p = project(a, 1, DigitOrder::msd_first);
  CHECK(enumerate_values(p, msd2, 50).size() == 51);
  Dfa q = project(a, 0, DigitOrder::msd_first);
  auto ys = enumerate_values(q, msd2, 1100);
  CHECK(ys.size() == 101);
  CHECK(ys.front() == 1000);
}

TEST_CASE("projection agrees with brute-force witness search") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Dfa a = random_dfa(rng, 2, 4, true);
    Dfa p = project(a, 1, DigitOrder::msd_first);
    for (std::uint64_t x = 0; x <= 100; ++x) {
      bool brute = false;
      for (std::uint64_t y = 0; y < (1u << 12) && !brute; ++y) {
        const std::uint64_t t[] = {x, y};
        brute = a.accepts(encode_tuple(t, msd2).symbols());
      }
      INFO("trial " << trial << " x " << x);
      CHECK(p.accepts(to_canonical(x, msd2).symbols()) == brute);
    }
  }
}

TEST_CASE("lsd projection uses the accepting closure") {
  NumerationSystem lsd2 = NumerationSystem::base(2, DigitOrder::lsd_first);
  const std::int64_t c[] = {1, -1};
  Dfa a = linear_automaton(lsd2, c, -37);
  Dfa p = project(a, 1, DigitOrder::lsd_first);
  CHECK(enumerate_values(p, lsd2, 64).size() == 65);
}

TEST_CASE("De Morgan and minimization invariants on random automata") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Dfa a = random_dfa(rng, 2, 6, false);
    Dfa b = random_dfa(rng, 2, 5, false);
    Dfa lhs = complement(product(a, b, BoolOp::conj));
    Dfa rhs = product(complement(a), complement(b), BoolOp::disj);
    CHECK(equivalent(lhs, rhs));
    Dfa m = minimize(a);
    CHECK(m.num_states() <= a.num_states());
    CHECK(equivalent(m, a));
    CHECK(minimize(m) == m);
  }
}

TEST_CASE("two constructions of evenness minimize to the same machine") {
  Dfa even1 = residue(2, 0);
  Dfa even2 = product(residue(4, 0), residue(4, 2), BoolOp::disj);
  CHECK(minimize(even1) == minimize(even2));
  CHECK(minimize(even2).num_states() == 2);
}

TEST_CASE("reversal of base-2 automata matches the lsd constructions") {
  NumerationSystem lsd2 = NumerationSystem::base(2, DigitOrder::lsd_first);
  CHECK(equivalent(reverse(addition_automaton(msd2)), addition_automaton(lsd2)));
  CHECK(equivalent(reverse(comparison_automaton(Comparison::lt, msd2)), comparison_automaton(Comparison::lt, lsd2)));
  CHECK(equivalent(reverse(reverse(residue(5, 3))), residue(5, 3)));
}

TEST_CASE("cylindrify and aligned products") {
  // x = 2y on tracks (0, 2) of a triple, y + 1 = z on tracks (2, 1)
  const std::int64_t c1[] = {1, -2};
  const std::int64_t c2[] = {1, -1};
  Dfa a = linear_automaton(msd2, c1, 0);
  Dfa b = linear_automaton(msd2, c2, -1);
  const int ta[] = {0, 2};
  const int tb[] = {2, 1};
  Dfa p = product_aligned(a, ta, b, tb, 3, BoolOp::conj);
  Dfa q = product(cylindrify(a, 3, ta), cylindrify(b, 3, tb), BoolOp::conj);
  CHECK(equivalent(p, q));
  const std::uint64_t good[] = {8, 5, 4};
  const std::uint64_t bad[] = {8, 4, 4};
  CHECK(p.accepts(encode_tuple(good, msd2).symbols()));
  CHECK_FALSE(p.accepts(encode_tuple(bad, msd2).symbols()));
}

TEST_CASE("dfao reversal round trip and output automata") {
  Alphabet a(1, 2);
  Dfao parity(a, 0, {0, 1, 1, 0}, {0, 1});
  Dfao rev = reverse(parity);
  for (std::uint64_t n = 0; n < 64; ++n) {
    auto w = to_canonical(n, msd2).symbols();
    std::vector<Symbol> r(w.rbegin(), w.rend());
    CHECK(rev.eval(r) == parity.eval(w));
  }
  CHECK(equivalent(output_equals(parity, 1), complement(output_equals(parity, 0))));
  Dfa same = outputs_compare(parity, parity, true);
  const std::uint64_t t1[] = {3, 5};
  const std::uint64_t t2[] = {3, 4};
  CHECK(same.accepts(encode_tuple(t1, msd2).symbols()));
  CHECK_FALSE(same.accepts(encode_tuple(t2, msd2).symbols()));
}
