#include "autoseq/automata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace autoseq {

bool apply(BoolOp op, bool a, bool b) {
  switch (op) {
    case BoolOp::conj: return a && b;
    case BoolOp::disj: return a || b;
    case BoolOp::implies: return !a || b;
    case BoolOp::iff: return a == b;
    case BoolOp::exclusive: return a != b;
  }
  return false;
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(int arity, int radix) : arity_(arity), radix_(radix) {
  if (arity < 0 || radix < 2) throw std::invalid_argument("alphabet needs arity >= 0 and radix >= 2");
  weights_.assign(static_cast<std::size_t>(arity), 1);
  Symbol w = 1;
  for (int c = arity - 1; c >= 0; --c) {
    weights_[static_cast<std::size_t>(c)] = w;
    if (w > (1u << 24) / static_cast<Symbol>(radix)) throw std::invalid_argument("alphabet too large");
    w *= static_cast<Symbol>(radix);
  }
  size_ = w;
}

int Alphabet::digit(Symbol s, int component) const {
  return static_cast<int>((s / weights_[static_cast<std::size_t>(component)]) % static_cast<Symbol>(radix_));
}

std::vector<int> Alphabet::decode(Symbol s) const {
  std::vector<int> out(static_cast<std::size_t>(arity_));
  for (int c = 0; c < arity_; ++c) out[static_cast<std::size_t>(c)] = digit(s, c);
  return out;
}

Symbol Alphabet::encode(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != arity_) throw std::invalid_argument("digit tuple has wrong arity");
  Symbol s = 0;
  for (int c = 0; c < arity_; ++c) {
    int d = digits[static_cast<std::size_t>(c)];
    if (d < 0 || d >= radix_) throw std::invalid_argument("digit out of range");
    s += static_cast<Symbol>(d) * weights_[static_cast<std::size_t>(c)];
  }
  return s;
}

// -------------------------------------------------------------------- Dfa

Dfa::Dfa(Alphabet alphabet, State initial, std::vector<State> table, std::vector<std::uint8_t> accepting)
    : alphabet_(std::move(alphabet)), initial_(initial), table_(std::move(table)), accepting_(std::move(accepting)) {
  if (accepting_.empty()) throw std::invalid_argument("automaton needs at least one state");
  if (table_.size() != accepting_.size() * alphabet_.size())
    throw std::invalid_argument("transition table is not total");
  if (initial_ >= accepting_.size()) throw std::invalid_argument("initial state out of range");
  for (State t : table_)
    if (t >= accepting_.size()) throw std::invalid_argument("transition target out of range");
}

Dfa Dfa::universal(const Alphabet& alphabet) {
  return Dfa(alphabet, 0, std::vector<State>(alphabet.size(), 0), {1});
}

Dfa Dfa::empty_language(const Alphabet& alphabet) {
  return Dfa(alphabet, 0, std::vector<State>(alphabet.size(), 0), {0});
}

State Dfa::run(std::span<const Symbol> word) const {
  State q = initial_;
  for (Symbol s : word) {
    if (s >= alphabet_.size()) throw std::invalid_argument("symbol out of range");
    q = next(q, s);
  }
  return q;
}

// -------------------------------------------------------------------- Nfa

Nfa::Nfa(Alphabet alphabet, State num_states, std::vector<State> initial, std::vector<std::uint32_t> offsets,
         std::vector<State> targets, std::vector<std::uint8_t> accepting)
    : alphabet_(std::move(alphabet)),
      initial_(std::move(initial)),
      offsets_(std::move(offsets)),
      targets_(std::move(targets)),
      accepting_(std::move(accepting)) {
  if (accepting_.size() != num_states || offsets_.size() != std::size_t{num_states} * alphabet_.size() + 1)
    throw std::invalid_argument("malformed nfa");
}

std::span<const State> Nfa::successors(State q, Symbol s) const {
  std::size_t idx = std::size_t{q} * alphabet_.size() + s;
  return std::span<const State>(targets_).subspan(offsets_[idx], offsets_[idx + 1] - offsets_[idx]);
}

// ------------------------------------------------------------------- Dfao

Dfao::Dfao(Alphabet alphabet, State initial, std::vector<State> table, std::vector<int> outputs)
    : alphabet_(std::move(alphabet)), initial_(initial), table_(std::move(table)), outputs_(std::move(outputs)) {
  if (outputs_.empty() || table_.size() != outputs_.size() * alphabet_.size() || initial_ >= outputs_.size())
    throw std::invalid_argument("malformed dfao");
  for (State t : table_)
    if (t >= outputs_.size()) throw std::invalid_argument("transition target out of range");
}

int Dfao::eval(std::span<const Symbol> word) const {
  State q = initial_;
  for (Symbol s : word) q = next(q, s);
  return outputs_[q];
}

// ------------------------------------------------------------ internals

namespace {

// Symbol of the narrow alphabet read by tracks `tracks` of each wide symbol.
std::vector<Symbol> restriction_map(const Alphabet& wide, const Alphabet& narrow, std::span<const int> tracks) {
  if (static_cast<int>(tracks.size()) != narrow.arity()) throw std::invalid_argument("track map has wrong size");
  std::vector<Symbol> map(wide.size());
  std::vector<int> digits(tracks.size());
  for (Symbol s = 0; s < wide.size(); ++s) {
    for (std::size_t t = 0; t < tracks.size(); ++t) digits[t] = wide.digit(s, tracks[t]);
    map[s] = narrow.encode(digits);
  }
  return map;
}

std::vector<State> reachable_order(State n, Symbol k, std::span<const State> table, State initial) {
  std::vector<State> index(n, State(-1));
  std::vector<State> order;
  order.reserve(n);
  index[initial] = 0;
  order.push_back(initial);
  for (std::size_t head = 0; head < order.size(); ++head) {
    State q = order[head];
    for (Symbol s = 0; s < k; ++s) {
      State t = table[std::size_t{q} * k + s];
      if (index[t] == State(-1)) {
        index[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  return order;
}

// Hopcroft partition refinement with a block worklist. Returns the block
// of every state; states in one block are equivalent.
std::vector<State> refine(State n, Symbol k, std::span<const State> table, std::span<const std::uint32_t> cls) {
  // predecessor lists per symbol
  std::vector<std::uint32_t> off(std::size_t{k} * (n + 1) + 1, 0);
  for (State q = 0; q < n; ++q)
    for (Symbol s = 0; s < k; ++s) ++off[std::size_t{s} * (n + 1) + table[std::size_t{q} * k + s] + 1];
  for (std::size_t i = 1; i < off.size(); ++i) off[i] += off[i - 1];
  std::vector<State> preds(std::size_t{n} * k);
  {
    std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
    for (State q = 0; q < n; ++q)
      for (Symbol s = 0; s < k; ++s) preds[fill[std::size_t{s} * (n + 1) + table[std::size_t{q} * k + s]]++] = q;
  }

  std::vector<State> elems(n), pos(n), block(n);
  std::vector<std::uint32_t> start, end, marked;
  std::uint32_t num_classes = 0;
  for (State q = 0; q < n; ++q) num_classes = std::max(num_classes, cls[q] + 1);
  {
    std::vector<std::uint32_t> count(num_classes + 1, 0);
    for (State q = 0; q < n; ++q) ++count[cls[q] + 1];
    for (std::uint32_t c = 1; c <= num_classes; ++c) count[c] += count[c - 1];
    std::vector<std::uint32_t> cur(count.begin(), count.end() - 1);
    for (State q = 0; q < n; ++q) {
      pos[q] = cur[cls[q]]++;
      elems[pos[q]] = q;
    }
    std::vector<std::uint32_t> block_of_class(num_classes, std::uint32_t(-1));
    for (std::uint32_t c = 0; c < num_classes; ++c) {
      if (count[c] == count[c + 1]) continue;
      block_of_class[c] = static_cast<std::uint32_t>(start.size());
      start.push_back(count[c]);
      end.push_back(count[c + 1]);
      marked.push_back(0);
    }
    for (State q = 0; q < n; ++q) block[q] = block_of_class[cls[q]];
  }

  std::vector<std::uint32_t> work;
  std::vector<std::uint8_t> in_work(start.size(), 1);
  for (std::uint32_t b = 0; b < start.size(); ++b) work.push_back(b);

  std::vector<State> splitter;
  std::vector<std::uint32_t> touched;
  while (!work.empty()) {
    std::uint32_t b = work.back();
    work.pop_back();
    in_work[b] = 0;
    splitter.assign(elems.begin() + start[b], elems.begin() + end[b]);
    for (Symbol s = 0; s < k; ++s) {
      touched.clear();
      std::size_t base = std::size_t{s} * (n + 1);
      for (State q : splitter) {
        for (std::uint32_t i = off[base + q]; i < off[base + q + 1]; ++i) {
          State p = preds[i];
          std::uint32_t c = block[p];
          if (marked[c] == 0) touched.push_back(c);
          std::uint32_t target = start[c] + marked[c];
          State other = elems[target];
          std::uint32_t from = pos[p];
          elems[target] = p;
          pos[p] = target;
          elems[from] = other;
          pos[other] = from;
          ++marked[c];
        }
      }
      for (std::uint32_t c : touched) {
        std::uint32_t m = marked[c];
        marked[c] = 0;
        if (m == end[c] - start[c]) continue;
        auto nb = static_cast<std::uint32_t>(start.size());
        start.push_back(start[c]);
        end.push_back(start[c] + m);
        marked.push_back(0);
        start[c] += m;
        for (std::uint32_t i = start[nb]; i < end[nb]; ++i) block[elems[i]] = nb;
        if (in_work[c]) {
          in_work.push_back(1);
          work.push_back(nb);
        } else {
          bool new_smaller = (end[nb] - start[nb]) <= (end[c] - start[c]);
          in_work.push_back(new_smaller ? 1 : 0);
          if (new_smaller) {
            work.push_back(nb);
          } else {
            in_work[c] = 1;
            work.push_back(c);
          }
        }
      }
    }
  }
  return block;
}

// Quotient of a reachable automaton by `block`, renumbered canonically.
struct Quotient {
  State initial;
  std::vector<State> table;
  std::vector<State> representative;  // old state for every new state
};

Quotient canonical_quotient(State n, Symbol k, std::span<const State> table, State initial,
                            std::span<const State> block) {
  std::uint32_t nb = 0;
  for (State q = 0; q < n; ++q) nb = std::max(nb, block[q] + 1);
  std::vector<State> rep(nb, State(-1));
  for (State q = 0; q < n; ++q)
    if (rep[block[q]] == State(-1)) rep[block[q]] = q;
  std::vector<State> index(nb, State(-1));
  Quotient out;
  out.initial = 0;
  index[block[initial]] = 0;
  out.representative.push_back(rep[block[initial]]);
  for (std::size_t head = 0; head < out.representative.size(); ++head) {
    State q = out.representative[head];
    for (Symbol s = 0; s < k; ++s) {
      State t = block[table[std::size_t{q} * k + s]];
      if (index[t] == State(-1)) {
        index[t] = static_cast<State>(out.representative.size());
        out.representative.push_back(rep[t]);
      }
      out.table.push_back(index[t]);
    }
  }
  return out;
}

struct VectorHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (State x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

// -------------------------------------------------------------- operations

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
  if (!(a.alphabet() == b.alphabet())) throw std::invalid_argument("product: alphabet mismatch");
  std::vector<int> tracks(static_cast<std::size_t>(a.arity()));
  std::iota(tracks.begin(), tracks.end(), 0);
  return product_aligned(a, tracks, b, tracks, a.arity(), op);
}

Dfa product_aligned(const Dfa& a, std::span<const int> a_tracks, const Dfa& b, std::span<const int> b_tracks,
                    int arity, BoolOp op) {
  if (a.alphabet().radix() != b.alphabet().radix()) throw std::invalid_argument("product: radix mismatch");
  Alphabet wide(arity, a.alphabet().radix());
  const Symbol k = wide.size();
  std::vector<Symbol> map_a = restriction_map(wide, a.alphabet(), a_tracks);
  std::vector<Symbol> map_b = restriction_map(wide, b.alphabet(), b_tracks);

  const std::uint64_t na = a.num_states(), nb = b.num_states();
  const bool dense = na * nb <= (std::uint64_t{1} << 24);
  std::vector<State> dense_index;
  std::unordered_map<std::uint64_t, State> sparse_index;
  if (dense) dense_index.assign(na * nb, State(-1));

  std::vector<std::uint64_t> pairs;
  auto lookup = [&](std::uint64_t key) -> State {
    if (dense) {
      State& slot = dense_index[key];
      if (slot == State(-1)) {
        slot = static_cast<State>(pairs.size());
        pairs.push_back(key);
      }
      return slot;
    }
    auto [it, inserted] = sparse_index.try_emplace(key, static_cast<State>(pairs.size()));
    if (inserted) pairs.push_back(key);
    return it->second;
  };

  lookup(std::uint64_t{a.initial()} * nb + b.initial());
  std::vector<State> table;
  std::vector<std::uint8_t> accepting;
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    State qa = static_cast<State>(pairs[head] / nb);
    State qb = static_cast<State>(pairs[head] % nb);
    accepting.push_back(apply(op, a.is_accepting(qa), b.is_accepting(qb)) ? 1 : 0);
    for (Symbol s = 0; s < k; ++s) {
      std::uint64_t key = std::uint64_t{a.next(qa, map_a[s])} * nb + b.next(qb, map_b[s]);
      table.push_back(lookup(key));
    }
  }
  return minimize(Dfa(wide, 0, std::move(table), std::move(accepting)));
}

Dfa complement(const Dfa& a) {
  std::vector<std::uint8_t> acc(a.accepting().begin(), a.accepting().end());
  for (auto& x : acc) x = x ? 0 : 1;
  return Dfa(a.alphabet(), a.initial(), std::vector<State>(a.table().begin(), a.table().end()), std::move(acc));
}

Dfa cylindrify(const Dfa& a, int arity, std::span<const int> tracks) {
  Alphabet wide(arity, a.alphabet().radix());
  std::vector<Symbol> map = restriction_map(wide, a.alphabet(), tracks);
  std::vector<State> table;
  table.reserve(std::size_t{a.num_states()} * wide.size());
  for (State q = 0; q < a.num_states(); ++q)
    for (Symbol s = 0; s < wide.size(); ++s) table.push_back(a.next(q, map[s]));
  return Dfa(wide, a.initial(), std::move(table), std::vector<std::uint8_t>(a.accepting().begin(), a.accepting().end()));
}

Dfa project(const Dfa& a, int track, DigitOrder order) {
  const Alphabet& in = a.alphabet();
  if (track < 0 || track >= in.arity()) throw std::invalid_argument("project: track out of range");
  Alphabet out(in.arity() - 1, in.radix());
  const Symbol k = out.size();
  const int radix = in.radix();

  // wide symbol for (narrow symbol, erased digit)
  std::vector<Symbol> widen(std::size_t{k} * radix);
  {
    std::vector<int> digits(static_cast<std::size_t>(in.arity()));
    for (Symbol s = 0; s < k; ++s) {
      for (int e = 0; e < radix; ++e) {
        for (int c = 0, j = 0; c < in.arity(); ++c) digits[static_cast<std::size_t>(c)] = c == track ? e : out.digit(s, j++);
        widen[std::size_t{s} * radix + e] = in.encode(digits);
      }
    }
  }

  const State n = a.num_states();
  std::vector<std::uint32_t> offsets(std::size_t{n} * k + 1, 0);
  std::vector<State> targets;
  targets.reserve(std::size_t{n} * k * 2);
  std::vector<State> buf;
  for (State q = 0; q < n; ++q) {
    for (Symbol s = 0; s < k; ++s) {
      buf.clear();
      for (int e = 0; e < radix; ++e) buf.push_back(a.next(q, widen[std::size_t{s} * radix + e]));
      std::sort(buf.begin(), buf.end());
      buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
      targets.insert(targets.end(), buf.begin(), buf.end());
      offsets[std::size_t{q} * k + s + 1] = static_cast<std::uint32_t>(targets.size());
    }
  }

  std::vector<std::uint8_t> accepting(a.accepting().begin(), a.accepting().end());
  std::vector<State> initial;
  // Symbol 0 of the narrow alphabet is "all kept tracks read 0".
  auto zero_succ = [&](State q) {
    return std::span<const State>(targets).subspan(offsets[std::size_t{q} * k], offsets[std::size_t{q} * k + 1] - offsets[std::size_t{q} * k]);
  };
  if (order == DigitOrder::msd_first) {
    std::vector<std::uint8_t> seen(n, 0);
    initial.push_back(a.initial());
    seen[a.initial()] = 1;
    for (std::size_t head = 0; head < initial.size(); ++head)
      for (State t : zero_succ(initial[head]))
        if (!seen[t]) {
          seen[t] = 1;
          initial.push_back(t);
        }
    std::sort(initial.begin(), initial.end());
  } else {
    initial.push_back(a.initial());
    // backward closure of accepting states along zero steps
    std::vector<std::vector<State>> back(n);
    for (State q = 0; q < n; ++q)
      for (State t : zero_succ(q)) back[t].push_back(q);
    std::vector<State> stack;
    for (State q = 0; q < n; ++q)
      if (accepting[q]) stack.push_back(q);
    while (!stack.empty()) {
      State t = stack.back();
      stack.pop_back();
      for (State q : back[t])
        if (!accepting[q]) {
          accepting[q] = 1;
          stack.push_back(q);
        }
    }
  }
  Nfa nfa(out, n, std::move(initial), std::move(offsets), std::move(targets), std::move(accepting));
  return minimize(determinize(nfa));
}

Dfa determinize(const Nfa& n) {
  const Symbol k = n.alphabet().size();
  std::unordered_map<std::vector<State>, State, VectorHash> index;
  std::vector<std::vector<State>> subsets;
  std::vector<State> table;
  std::vector<std::uint8_t> accepting;

  auto intern = [&](std::vector<State>&& set) -> State {
    auto it = index.find(set);
    if (it != index.end()) return it->second;
    auto id = static_cast<State>(subsets.size());
    index.emplace(set, id);
    subsets.push_back(std::move(set));
    return id;
  };

  std::vector<State> init(n.initial().begin(), n.initial().end());
  std::sort(init.begin(), init.end());
  init.erase(std::unique(init.begin(), init.end()), init.end());
  intern(std::move(init));

  std::vector<std::uint32_t> stamp(n.num_states(), 0);
  std::uint32_t generation = 0;
  std::vector<State> next;
  for (std::size_t head = 0; head < subsets.size(); ++head) {
    bool acc = false;
    for (State q : subsets[head]) acc = acc || n.is_accepting(q);
    accepting.push_back(acc ? 1 : 0);
    for (Symbol s = 0; s < k; ++s) {
      ++generation;
      next.clear();
      for (State q : subsets[head]) {
        for (State t : n.successors(q, s)) {
          if (stamp[t] != generation) {
            stamp[t] = generation;
            next.push_back(t);
          }
        }
      }
      std::sort(next.begin(), next.end());
      table.push_back(intern(std::vector<State>(next)));
    }
  }
  return Dfa(n.alphabet(), 0, std::move(table), std::move(accepting));
}

Dfa minimize(const Dfa& a) {
  const Symbol k = a.alphabet().size();
  std::vector<State> order = reachable_order(a.num_states(), k, a.table(), a.initial());
  const auto n = static_cast<State>(order.size());
  std::vector<State> index(a.num_states(), State(-1));
  for (State i = 0; i < n; ++i) index[order[i]] = i;
  std::vector<State> table(std::size_t{n} * k);
  std::vector<std::uint32_t> cls(n);
  for (State i = 0; i < n; ++i) {
    for (Symbol s = 0; s < k; ++s) table[std::size_t{i} * k + s] = index[a.next(order[i], s)];
    cls[i] = a.is_accepting(order[i]) ? 1 : 0;
  }
  std::vector<State> block = refine(n, k, table, cls);
  Quotient qt = canonical_quotient(n, k, table, 0, block);
  std::vector<std::uint8_t> accepting;
  accepting.reserve(qt.representative.size());
  for (State r : qt.representative) accepting.push_back(static_cast<std::uint8_t>(cls[r]));
  return Dfa(a.alphabet(), 0, std::move(qt.table), std::move(accepting));
}

Dfa reverse(const Dfa& a) {
  const Symbol k = a.alphabet().size();
  const State n = a.num_states();
  std::vector<std::uint32_t> offsets(std::size_t{n} * k + 1, 0);
  for (State q = 0; q < n; ++q)
    for (Symbol s = 0; s < k; ++s) ++offsets[std::size_t{a.next(q, s)} * k + s + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  std::vector<State> targets(std::size_t{n} * k);
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (State q = 0; q < n; ++q)
    for (Symbol s = 0; s < k; ++s) targets[fill[std::size_t{a.next(q, s)} * k + s]++] = q;
  std::vector<State> initial;
  for (State q = 0; q < n; ++q)
    if (a.is_accepting(q)) initial.push_back(q);
  std::vector<std::uint8_t> accepting(n, 0);
  accepting[a.initial()] = 1;
  Nfa nfa(a.alphabet(), n, std::move(initial), std::move(offsets), std::move(targets), std::move(accepting));
  return minimize(determinize(nfa));
}

EmptinessResult is_empty(const Dfa& a) {
  const Symbol k = a.alphabet().size();
  std::vector<State> parent(a.num_states(), State(-1));
  std::vector<Symbol> via(a.num_states(), 0);
  std::deque<State> queue{a.initial()};
  parent[a.initial()] = a.initial();
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (a.is_accepting(q)) {
      EmptinessResult r;
      r.empty = false;
      for (State p = q; p != a.initial(); p = parent[p]) r.witness.push_back(via[p]);
      std::reverse(r.witness.begin(), r.witness.end());
      return r;
    }
    for (Symbol s = 0; s < k; ++s) {
      State t = a.next(q, s);
      if (parent[t] == State(-1)) {
        parent[t] = q;
        via[t] = s;
        queue.push_back(t);
      }
    }
  }
  return {};
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) throw std::invalid_argument("equivalent: alphabet mismatch");
  return is_empty(product(a, b, BoolOp::exclusive)).empty;
}

std::vector<std::uint8_t> coaccessible(const Dfa& a) {
  const Symbol k = a.alphabet().size();
  const State n = a.num_states();
  std::vector<std::vector<State>> back(n);
  for (State q = 0; q < n; ++q)
    for (Symbol s = 0; s < k; ++s) back[a.next(q, s)].push_back(q);
  std::vector<std::uint8_t> live(n, 0);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q)
    if (a.is_accepting(q)) {
      live[q] = 1;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    State t = stack.back();
    stack.pop_back();
    for (State q : back[t])
      if (!live[q]) {
        live[q] = 1;
        stack.push_back(q);
      }
  }
  return live;
}

State trimmed_size(const Dfa& a) {
  auto live = coaccessible(a);
  return std::max<State>(1, static_cast<State>(std::count(live.begin(), live.end(), 1)));
}

Dfao minimize(const Dfao& a) {
  const Symbol k = a.alphabet().size();
  std::vector<State> order = reachable_order(a.num_states(), k, a.table(), a.initial());
  const auto n = static_cast<State>(order.size());
  std::vector<State> index(a.num_states(), State(-1));
  for (State i = 0; i < n; ++i) index[order[i]] = i;
  std::vector<State> table(std::size_t{n} * k);
  std::vector<int> distinct;
  for (State i = 0; i < n; ++i) distinct.push_back(a.output(order[i]));
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> cls(n);
  for (State i = 0; i < n; ++i) {
    for (Symbol s = 0; s < k; ++s) table[std::size_t{i} * k + s] = index[a.next(order[i], s)];
    cls[i] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), a.output(order[i])) - distinct.begin());
  }
  std::vector<State> block = refine(n, k, table, cls);
  Quotient qt = canonical_quotient(n, k, table, 0, block);
  std::vector<int> outputs;
  for (State r : qt.representative) outputs.push_back(a.output(order[r]));
  return Dfao(a.alphabet(), 0, std::move(qt.table), std::move(outputs));
}

Dfao reverse(const Dfao& a) {
  // State of the reversed machine after reading u: the map q -> output(q.u^R).
  const Symbol k = a.alphabet().size();
  const State n = a.num_states();
  std::unordered_map<std::vector<State>, State, VectorHash> index;
  std::vector<std::vector<State>> states;
  std::vector<int> values(a.outputs().begin(), a.outputs().end());
  std::vector<State> init(values.begin(), values.end());
  index.emplace(init, 0);
  states.push_back(std::move(init));
  std::vector<State> table;
  std::vector<int> outputs;
  for (std::size_t head = 0; head < states.size(); ++head) {
    outputs.push_back(static_cast<int>(states[head][a.initial()]));
    for (Symbol s = 0; s < k; ++s) {
      std::vector<State> h(n);
      for (State q = 0; q < n; ++q) h[q] = states[head][a.next(q, s)];
      auto [it, inserted] = index.try_emplace(h, static_cast<State>(states.size()));
      if (inserted) states.push_back(std::move(h));
      table.push_back(it->second);
    }
  }
  return minimize(Dfao(a.alphabet(), 0, std::move(table), std::move(outputs)));
}

Dfa output_equals(const Dfao& a, int value) {
  std::vector<std::uint8_t> acc;
  for (State q = 0; q < a.num_states(); ++q) acc.push_back(a.output(q) == value ? 1 : 0);
  return minimize(Dfa(a.alphabet(), a.initial(), std::vector<State>(a.table().begin(), a.table().end()), std::move(acc)));
}

Dfa outputs_compare(const Dfao& a, const Dfao& b, bool equal) {
  if (a.alphabet().arity() != 1 || b.alphabet().arity() != 1 || a.alphabet().radix() != b.alphabet().radix())
    throw std::invalid_argument("outputs_compare: single-track automata of one radix required");
  Alphabet wide(2, a.alphabet().radix());
  const State nb = b.num_states();
  std::vector<State> table;
  std::vector<std::uint8_t> acc;
  for (State p = 0; p < a.num_states(); ++p)
    for (State q = 0; q < nb; ++q) {
      acc.push_back((a.output(p) == b.output(q)) == equal ? 1 : 0);
      for (Symbol s = 0; s < wide.size(); ++s)
        table.push_back(a.next(p, static_cast<Symbol>(wide.digit(s, 0))) * nb + b.next(q, static_cast<Symbol>(wide.digit(s, 1))));
    }
  return minimize(Dfa(wide, a.initial() * nb + b.initial(), std::move(table), std::move(acc)));
}

}  // namespace autoseq
