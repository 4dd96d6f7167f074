#include "autoseq/sequences.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace autoseq {

namespace {

int thue_morse_value(std::uint64_t n) {
  if (n == 0) return 0;
  return n % 2 == 0 ? thue_morse_value(n / 2) : 1 - thue_morse_value(n / 2);
}

int rudin_shapiro_value(std::uint64_t n) {
  if (n == 0) return 0;
  if (n == 3) return 1;
  if (n % 2 == 0) return rudin_shapiro_value(n / 2);
  if (n % 4 == 1) return rudin_shapiro_value(n / 4);
  if (n % 8 == 7) return rudin_shapiro_value(2 * (n / 8) + 1);
  if (n % 16 == 3) return rudin_shapiro_value(8 * (n / 16) + 3);
  return rudin_shapiro_value(4 * (n / 16) + 3);  // n % 16 == 11
}

int paperfolding_value(std::uint64_t n) {
  if (n == 0) return 0;
  if (n % 2 == 1) return paperfolding_value(n / 2);
  return n % 4 == 0 ? 0 : 1;
}

int period_doubling_value(std::uint64_t n) {
  if (n % 2 == 0) return 1;
  if (n % 4 == 1) return 0;
  return period_doubling_value(n / 4);
}

int fibonacci_value(std::uint64_t n) {
  const auto& fib = fibonacci_basis();
  int last = 0;
  for (std::size_t i = fib.size(); i-- > 0;) {
    if (fib[i] <= n) {
      n -= fib[i];
      last = i == 0 ? 1 : 0;
    }
  }
  return last;
}

Dfao fibonacci_dfao() {
  // state = last digit read
  Alphabet alpha(1, 2);
  return Dfao(alpha, 0, {0, 1, 0, 1}, {0, 1});
}

Dfao interval_dfao(bool strict) {
  enum : State { S, O, B0, B1, C0, C1, T0, T1, Z0, Z1, Z };
  Alphabet alpha(1, 4);
  std::vector<State> table(11 * 4, Z);
  auto set = [&](State q, int d, State t) { table[q * 4 + static_cast<State>(d)] = t; };
  set(S, 0, S);
  set(S, 1, O);
  set(S, 3, strict ? Z0 : T0);
  set(O, 0, B0);
  set(O, 1, C0);
  for (int d = 0; d < 4; ++d) {
    set(B0, d, B1);
    set(B1, d, B0);
    set(T0, d, T1);
    set(T1, d, T0);
    set(Z0, d, d == 0 ? Z1 : T1);
    set(Z1, d, d == 0 ? Z0 : T0);
  }
  set(C0, 0, C1);
  set(C1, 0, C0);
  // "3 0*" and "11 0*" are the interval endpoints.
  int c0 = strict ? 0 : 1, c1 = strict ? 0 : 2;
  std::vector<int> out{0, 0, 1, 2, c0, c1, 1, 2, 0, 0, 0};
  return minimize(Dfao(alpha, S, std::move(table), std::move(out)));
}

Dfao build(SequenceId id) {
  switch (id) {
    case SequenceId::thue_morse: return reverse(kernel_dfao(thue_morse_value));
    case SequenceId::rudin_shapiro: return reverse(kernel_dfao(rudin_shapiro_value));
    case SequenceId::paperfolding: return reverse(kernel_dfao(paperfolding_value));
    case SequenceId::period_doubling: return reverse(kernel_dfao(period_doubling_value));
    case SequenceId::fibonacci: return minimize(fibonacci_dfao());
    case SequenceId::seq_a: return interval_dfao(false);
    case SequenceId::seq_b: return interval_dfao(true);
  }
  throw std::invalid_argument("unknown sequence");
}

}  // namespace

SequenceId parse_sequence(std::string_view name) {
  static const std::map<std::string_view, SequenceId> names{
      {"thue-morse", SequenceId::thue_morse},
      {"thue_morse", SequenceId::thue_morse},
      {"tm", SequenceId::thue_morse},
      {"t", SequenceId::thue_morse},
      {"rudin-shapiro", SequenceId::rudin_shapiro},
      {"rudin_shapiro", SequenceId::rudin_shapiro},
      {"rs", SequenceId::rudin_shapiro},
      {"r", SequenceId::rudin_shapiro},
      {"paperfolding", SequenceId::paperfolding},
      {"pf", SequenceId::paperfolding},
      {"p", SequenceId::paperfolding},
      {"period-doubling", SequenceId::period_doubling},
      {"period_doubling", SequenceId::period_doubling},
      {"pd", SequenceId::period_doubling},
      {"d", SequenceId::period_doubling},
      {"fibonacci", SequenceId::fibonacci},
      {"fib", SequenceId::fibonacci},
      {"f", SequenceId::fibonacci},
      {"seq-a", SequenceId::seq_a},
      {"seq_a", SequenceId::seq_a},
      {"a", SequenceId::seq_a},
      {"seq-b", SequenceId::seq_b},
      {"seq_b", SequenceId::seq_b},
      {"b", SequenceId::seq_b},
  };
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
  return it->second;
}

std::string sequence_name(SequenceId id) {
  switch (id) {
    case SequenceId::thue_morse: return "thue-morse";
    case SequenceId::rudin_shapiro: return "rudin-shapiro";
    case SequenceId::paperfolding: return "paperfolding";
    case SequenceId::period_doubling: return "period-doubling";
    case SequenceId::fibonacci: return "fibonacci";
    case SequenceId::seq_a: return "seq-a";
    case SequenceId::seq_b: return "seq-b";
  }
  return "?";
}

NumerationSystem sequence_system(SequenceId id) {
  switch (id) {
    case SequenceId::fibonacci: return NumerationSystem::zeckendorf();
    case SequenceId::seq_a:
    case SequenceId::seq_b: return NumerationSystem::base(4);
    default: return NumerationSystem::base(2);
  }
}

std::vector<int> output_alphabet(SequenceId id) {
  if (id == SequenceId::seq_a || id == SequenceId::seq_b) return {0, 1, 2};
  return {0, 1};
}

const Dfao& dfao(SequenceId id) {
  static std::mutex lock;
  static std::map<SequenceId, Dfao> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, build(id)).first;
  return it->second;
}

Dfao dfao(SequenceId id, DigitOrder order) {
  return order == DigitOrder::msd_first ? dfao(id) : reverse(dfao(id));
}

int eval(SequenceId id, std::uint64_t n) {
  return dfao(id).eval(to_canonical(n, sequence_system(id)).symbols());
}

int interval_rule(std::uint64_t i, bool strict) {
  // intervals around 4^(k+1) of radius 4^k, k >= 0
  for (std::uint64_t k = 0, p = 1; p <= i; ++k, p *= 4) {
    std::uint64_t lo = 3 * p, hi = 5 * p;
    bool inside = strict ? (lo < i && i < hi) : (lo <= i && i <= hi);
    if (inside) return static_cast<int>(k % 2) + 1;
  }
  return 0;
}

int recurrence_value(SequenceId id, std::uint64_t n) {
  switch (id) {
    case SequenceId::thue_morse: return thue_morse_value(n);
    case SequenceId::rudin_shapiro: return rudin_shapiro_value(n);
    case SequenceId::paperfolding: return paperfolding_value(n);
    case SequenceId::period_doubling: return period_doubling_value(n);
    case SequenceId::fibonacci: return fibonacci_value(n);
    case SequenceId::seq_a: return interval_rule(n, false);
    case SequenceId::seq_b: return interval_rule(n, true);
  }
  throw std::invalid_argument("unknown sequence");
}

std::string Morphism::fixed_point_prefix(std::size_t length) const {
  std::string word(1, static_cast<char>('0' + start));
  while (word.size() < length) {
    std::string next;
    for (char c : word) next += images.at(static_cast<std::size_t>(c - '0'));
    if (next.size() <= word.size()) throw std::logic_error("morphism is not growing");
    word = std::move(next);
  }
  word.resize(length);
  if (!coding.empty())
    for (char& c : word) c = static_cast<char>('0' + coding[static_cast<std::size_t>(c - '0')]);
  return word;
}

Morphism morphism(SequenceId id) {
  switch (id) {
    case SequenceId::thue_morse: return {{"01", "10"}, {}, 0};
    case SequenceId::rudin_shapiro: return {{"01", "02", "31", "32"}, {0, 0, 1, 1}, 0};
    case SequenceId::paperfolding: return {{"01", "21", "03", "23"}, {0, 0, 1, 1}, 0};
    case SequenceId::period_doubling: return {{"11", "10"}, {}, 1};
    case SequenceId::fibonacci: return {{"01", "0"}, {}, 0};
    default: throw std::invalid_argument(sequence_name(id) + " has no generating morphism here");
  }
}

std::string prefix(SequenceId id, std::size_t length) {
  if (id == SequenceId::seq_a || id == SequenceId::seq_b) {
    std::string out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
      out.push_back(static_cast<char>('0' + interval_rule(i, id == SequenceId::seq_b)));
    return out;
  }
  return morphism(id).fixed_point_prefix(length);
}

std::string dfao_prefix(SequenceId id, std::size_t length) {
  std::string out;
  out.reserve(length);
  for (std::size_t n = 0; n < length; ++n) out.push_back(static_cast<char>('0' + eval(id, n)));
  return out;
}

Dfao kernel_dfao(int (*value)(std::uint64_t), std::size_t probe, std::size_t max_states) {
  struct Element {
    unsigned a;
    std::uint64_t b;
  };
  std::map<std::vector<int>, State> index;
  std::vector<Element> elements;
  std::vector<State> table;
  std::vector<int> outputs;
  auto intern = [&](Element e) {
    std::vector<int> sig(probe);
    for (std::size_t n = 0; n < probe; ++n) sig[n] = value((std::uint64_t{n} << e.a) + e.b);
    auto [it, inserted] = index.try_emplace(std::move(sig), static_cast<State>(elements.size()));
    if (inserted) {
      if (elements.size() >= max_states) throw std::runtime_error("kernel exploration did not close");
      elements.push_back(e);
    }
    return it->second;
  };
  intern({0, 0});
  for (std::size_t head = 0; head < elements.size(); ++head) {
    Element e = elements[head];
    outputs.push_back(value(e.b));
    for (std::uint64_t d = 0; d < 2; ++d) table.push_back(intern({e.a + 1, e.b + (d << e.a)}));
  }
  return minimize(Dfao(Alphabet(1, 2), 0, std::move(table), std::move(outputs)));
}

}  // namespace autoseq
