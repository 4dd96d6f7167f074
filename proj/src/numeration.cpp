#include "autoseq/numeration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace autoseq {

NumerationSystem NumerationSystem::base(int k, DigitOrder order) {
  if (k < 2 || k > 16) throw std::invalid_argument("base must lie in [2, 16]");
  NumerationSystem s;
  s.kind_ = SystemKind::base_k;
  s.radix_ = k;
  s.order_ = order;
  return s;
}

NumerationSystem NumerationSystem::zeckendorf(DigitOrder order) {
  NumerationSystem s;
  s.kind_ = SystemKind::zeckendorf;
  s.radix_ = 2;
  s.order_ = order;
  return s;
}

NumerationSystem NumerationSystem::parse(std::string_view name) {
  DigitOrder order = DigitOrder::msd_first;
  if (name.starts_with("msd_")) {
    name.remove_prefix(4);
  } else if (name.starts_with("lsd_")) {
    order = DigitOrder::lsd_first;
    name.remove_prefix(4);
  }
  if (name == "fib" || name == "zeckendorf") return zeckendorf(order);
  int k = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), k);
  if (ec != std::errc() || ptr != name.data() + name.size())
    throw std::invalid_argument("unknown numeration system '" + std::string(name) + "'");
  return base(k, order);
}

NumerationSystem NumerationSystem::with_order(DigitOrder order) const {
  NumerationSystem s = *this;
  s.order_ = order;
  return s;
}

std::string NumerationSystem::name() const {
  std::string prefix = lsd() ? "lsd_" : "msd_";
  return prefix + (is_zeckendorf() ? std::string("fib") : std::to_string(radix_));
}

std::vector<Symbol> DigitString::symbols() const {
  Alphabet alpha(arity, system.radix());
  std::vector<Symbol> out;
  out.reserve(length());
  for (std::size_t i = 0; i < length(); ++i)
    out.push_back(alpha.encode(std::span<const int>(digits).subspan(i * static_cast<std::size_t>(arity),
                                                                   static_cast<std::size_t>(arity))));
  return out;
}

std::string DigitString::str() const {
  std::string out;
  auto digit_char = [](int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10); };
  if (arity == 1) {
    for (int d : digits) out.push_back(digit_char(d));
    return out;
  }
  for (std::size_t i = 0; i < length(); ++i) {
    out.push_back('[');
    for (int c = 0; c < arity; ++c) {
      if (c) out.push_back(',');
      out.push_back(digit_char(digits[i * static_cast<std::size_t>(arity) + static_cast<std::size_t>(c)]));
    }
    out.push_back(']');
  }
  return out;
}

const std::vector<std::uint64_t>& fibonacci_basis() {
  static const std::vector<std::uint64_t> basis = [] {
    std::vector<std::uint64_t> f{1, 2};
    while (f.back() <= UINT64_MAX - f[f.size() - 2]) f.push_back(f.back() + f[f.size() - 2]);
    return f;
  }();
  return basis;
}

namespace {

// Canonical digits, most significant first.
std::vector<int> msd_digits(std::uint64_t n, const NumerationSystem& system) {
  std::vector<int> out;
  if (system.is_zeckendorf()) {
    const auto& fib = fibonacci_basis();
    std::size_t top = 0;
    while (top < fib.size() && fib[top] <= n) ++top;
    for (std::size_t i = top; i-- > 0;) {
      if (fib[i] <= n) {
        n -= fib[i];
        out.push_back(1);
      } else {
        out.push_back(0);
      }
    }
    return out;
  }
  auto k = static_cast<std::uint64_t>(system.radix());
  while (n > 0) {
    out.push_back(static_cast<int>(n % k));
    n /= k;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

DigitString to_canonical(std::uint64_t n, const NumerationSystem& system) {
  DigitString w{system, 1, msd_digits(n, system)};
  if (system.lsd()) std::reverse(w.digits.begin(), w.digits.end());
  return w;
}

std::uint64_t from_digits(const DigitString& w) {
  if (w.arity != 1) throw std::invalid_argument("from_digits expects a single track");
  std::vector<int> msd(w.digits);
  if (w.system.lsd()) std::reverse(msd.begin(), msd.end());
  for (int d : msd)
    if (d < 0 || d >= w.system.radix()) throw std::invalid_argument("digit out of range for " + w.system.name());
  if (w.system.is_zeckendorf()) {
    const auto& fib = fibonacci_basis();
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < msd.size(); ++i) {
      if (msd[i] == 0) continue;
      if (i > 0 && msd[i - 1] == 1) throw std::invalid_argument("adjacent 1s in Zeckendorf representation");
      std::size_t weight = msd.size() - 1 - i;
      if (weight >= fib.size()) throw std::overflow_error("representation exceeds 64 bits");
      value += fib[weight];
    }
    return value;
  }
  std::uint64_t value = 0;
  for (int d : msd) value = value * static_cast<std::uint64_t>(w.system.radix()) + static_cast<std::uint64_t>(d);
  return value;
}

DigitString encode_tuple(std::span<const std::uint64_t> values, const NumerationSystem& system) {
  std::vector<std::vector<int>> parts;
  std::size_t len = 0;
  for (std::uint64_t v : values) {
    parts.push_back(msd_digits(v, system));
    len = std::max(len, parts.back().size());
  }
  DigitString w{system, static_cast<int>(values.size()), {}};
  w.digits.resize(len * values.size(), 0);
  for (std::size_t c = 0; c < parts.size(); ++c) {
    std::size_t pad = len - parts[c].size();
    for (std::size_t i = 0; i < parts[c].size(); ++i) {
      std::size_t pos = pad + i;
      if (system.lsd()) pos = len - 1 - pos;
      w.digits[pos * values.size() + c] = parts[c][i];
    }
  }
  return w;
}

std::vector<std::uint64_t> decode_tuple(const DigitString& w) {
  std::vector<std::uint64_t> out;
  for (int c = 0; c < w.arity; ++c) {
    DigitString track{w.system, 1, {}};
    for (std::size_t i = 0; i < w.length(); ++i)
      track.digits.push_back(w.digits[i * static_cast<std::size_t>(w.arity) + static_cast<std::size_t>(c)]);
    out.push_back(from_digits(track));
  }
  return out;
}

namespace {

Dfa orient(const Dfa& msd, const NumerationSystem& system) {
  return system.lsd() ? reverse(msd) : minimize(msd);
}

Dfa zeckendorf_validity_msd(int arity) {
  Alphabet alpha(arity, 2);
  const Symbol k = alpha.size();
  // state = mask of tracks whose previous digit was 1; one extra sink
  const State masks = 1u << arity;
  const State sink = masks;
  std::vector<State> table((masks + 1) * k);
  std::vector<std::uint8_t> acc(masks + 1, 1);
  acc[sink] = 0;
  for (State m = 0; m <= masks; ++m)
    for (Symbol s = 0; s < k; ++s) {
      State next = sink;
      if (m != sink) {
        State bits = 0;
        for (int c = 0; c < arity; ++c)
          if (alpha.digit(s, c)) bits |= 1u << c;
        next = (bits & m) ? sink : bits;
      }
      table[std::size_t{m} * k + s] = next;
    }
  return Dfa(alpha, 0, std::move(table), std::move(acc));
}

// Explores states reachable from `start` through `step`; steps returning
// nullopt go to a rejecting sink (state 0).
template <class Key, class Step, class Accept>
Dfa explore(const Alphabet& alpha, Key start, Step step, Accept accept) {
  std::map<Key, State> index;
  std::vector<Key> keys;
  std::vector<State> table;
  std::vector<std::uint8_t> acc;
  const State sink = 0;
  acc.push_back(0);
  table.assign(alpha.size(), sink);
  keys.push_back(start);  // placeholder for the sink
  auto intern = [&](const Key& key) {
    auto [it, inserted] = index.try_emplace(key, static_cast<State>(keys.size()));
    if (inserted) keys.push_back(key);
    return it->second;
  };
  State initial = intern(start);
  for (std::size_t head = 1; head < keys.size(); ++head) {
    Key key = keys[head];
    acc.push_back(accept(key) ? 1 : 0);
    for (Symbol s = 0; s < alpha.size(); ++s) {
      auto next = step(key, s);
      table.push_back(next ? intern(*next) : sink);
    }
  }
  return Dfa(alpha, initial, std::move(table), std::move(acc));
}

}  // namespace

Dfa validity_automaton(const NumerationSystem& system, int arity) {
  Alphabet alpha(arity, system.radix());
  if (!system.is_zeckendorf() || arity == 0) return Dfa::universal(alpha);
  return orient(zeckendorf_validity_msd(arity), system);
}

Dfa linear_automaton(const NumerationSystem& system, std::span<const std::int64_t> coeffs, std::int64_t rhs) {
  const int arity = static_cast<int>(coeffs.size());
  Alphabet alpha(arity, system.radix());
  std::vector<std::int64_t> delta(alpha.size(), 0);
  std::int64_t spread = 0;
  for (std::int64_t c : coeffs) spread += c < 0 ? -c : c;
  for (Symbol s = 0; s < alpha.size(); ++s)
    for (int t = 0; t < arity; ++t) delta[s] += coeffs[static_cast<std::size_t>(t)] * alpha.digit(s, t);

  Dfa msd;
  if (!system.is_zeckendorf()) {
    const std::int64_t k = system.radix();
    const std::int64_t limit = std::max(rhs < 0 ? -rhs : rhs, spread);
    msd = explore<std::int64_t>(
        alpha, 0,
        [&](std::int64_t a, Symbol s) -> std::optional<std::int64_t> {
          std::int64_t next = k * a + delta[s];
          if (next > limit || next < -limit) return std::nullopt;
          return next;
        },
        [&](std::int64_t a) { return a == rhs; });
  } else {
    // (a, b) holds the values of the prefix read at the two lowest weights.
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    const long double abs_rhs = static_cast<long double>(rhs < 0 ? -rhs : rhs);
    const long double limit =
        std::max(phi * phi * phi * spread, 2.24L * abs_rhs + phi * phi * spread) + 2.0L;
    using Pair = std::pair<std::int64_t, std::int64_t>;
    msd = explore<Pair>(
        alpha, Pair{0, 0},
        [&](const Pair& st, Symbol s) -> std::optional<Pair> {
          Pair next{st.first + st.second + delta[s], st.first + delta[s]};
          long double e = phi * static_cast<long double>(next.first) + static_cast<long double>(next.second);
          if (e > limit || e < -limit) return std::nullopt;
          return next;
        },
        [&](const Pair& st) { return st.first == rhs; });
  }
  Dfa valid = system.is_zeckendorf() ? zeckendorf_validity_msd(arity) : Dfa::universal(alpha);
  return orient(product(msd, valid, BoolOp::conj), system);
}

Dfa addition_automaton(const NumerationSystem& system) {
  const std::int64_t coeffs[] = {1, 1, -1};
  return linear_automaton(system, coeffs, 0);
}

Dfa comparison_automaton(Comparison relation, const NumerationSystem& system) {
  if (relation == Comparison::eq) {
    const std::int64_t coeffs[] = {1, -1};
    return linear_automaton(system, coeffs, 0);
  }
  Alphabet alpha(2, system.radix());
  // 0: equal so far, 1: less, 2: greater
  std::vector<State> table;
  for (State q = 0; q < 3; ++q)
    for (Symbol s = 0; s < alpha.size(); ++s) {
      int x = alpha.digit(s, 0), y = alpha.digit(s, 1);
      table.push_back(q != 0 ? q : (x < y ? 1 : x > y ? 2 : 0));
    }
  std::vector<std::uint8_t> acc{static_cast<std::uint8_t>(relation == Comparison::le ? 1 : 0), 1, 0};
  Dfa msd(alpha, 0, std::move(table), std::move(acc));
  Dfa valid = system.is_zeckendorf() ? zeckendorf_validity_msd(2) : Dfa::universal(alpha);
  return orient(product(msd, valid, BoolOp::conj), system);
}

std::vector<std::vector<std::uint64_t>> enumerate(const Dfa& a, const NumerationSystem& system,
                                                  std::uint64_t bound) {
  const int arity = a.arity();
  if (a.alphabet().radix() != system.radix()) throw std::invalid_argument("enumerate: radix mismatch");
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> tuple(static_cast<std::size_t>(arity), 0);
  if (arity == 0) {
    if (a.is_accepting(a.initial())) out.emplace_back();
    return out;
  }
  while (true) {
    if (a.accepts(encode_tuple(tuple, system).symbols())) out.push_back(tuple);
    int c = arity - 1;
    while (c >= 0 && tuple[static_cast<std::size_t>(c)] == bound) tuple[static_cast<std::size_t>(c--)] = 0;
    if (c < 0) break;
    ++tuple[static_cast<std::size_t>(c)];
  }
  return out;
}

std::vector<std::uint64_t> enumerate_values(const Dfa& a, const NumerationSystem& system, std::uint64_t bound) {
  if (a.arity() != 1) throw std::invalid_argument("enumerate_values expects a single track");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n <= bound; ++n)
    if (a.accepts(to_canonical(n, system).symbols())) out.push_back(n);
  return out;
}

std::optional<std::vector<std::vector<std::uint64_t>>> enumerate_finite(const Dfa& a, const NumerationSystem& system,
                                                                        std::size_t limit) {
  if (a.alphabet().radix() != system.radix()) throw std::invalid_argument("enumerate_finite: radix mismatch");
  const Dfa m = system.lsd() ? reverse(a) : a;
  const NumerationSystem msd = system.with_order(DigitOrder::msd_first);
  const auto live = coaccessible(m);
  const int arity = m.arity();
  std::vector<std::vector<std::uint64_t>> out;
  if (m.is_accepting(m.initial())) out.emplace_back(static_cast<std::size_t>(arity), 0);
  std::vector<std::uint8_t> on_path(m.num_states(), 0);
  std::vector<Symbol> word;
  bool infinite = false;
  // canonical words only: the first symbol is not all zeros
  std::function<void(State)> walk = [&](State q) {
    if (infinite) return;
    if (on_path[q]) {
      infinite = true;
      return;
    }
    on_path[q] = 1;
    if (m.is_accepting(q) && !word.empty()) {
      DigitString w{msd, arity, {}};
      for (Symbol s : word)
        for (int c = 0; c < arity; ++c) w.digits.push_back(m.alphabet().digit(s, c));
      out.push_back(decode_tuple(w));
      if (out.size() > limit) infinite = true;
    }
    for (Symbol s = 0; s < m.alphabet().size() && !infinite; ++s) {
      if (word.empty() && s == 0) continue;
      State t = m.next(q, s);
      if (!live[t]) continue;
      word.push_back(s);
      walk(t);
      word.pop_back();
    }
    on_path[q] = 0;
  };
  walk(m.initial());
  if (infinite) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace autoseq
