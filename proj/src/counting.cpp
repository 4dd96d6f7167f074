#include "autoseq/counting.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace autoseq {

namespace {

using Vector = std::vector<Rational>;

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }
Matrix zero_matrix(std::size_t n) { return Matrix(n, zeros(n)); }

bool is_zero(const Vector& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r == 0; });
}

Vector row_times(const Vector& x, const Matrix& m) {
  Vector out = zeros(m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (m[i][j] != 0) out[j] += x[i] * m[i][j];
  }
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Row space in reduced echelon form; rows keep insertion order.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  Vector reduce(Vector y) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational c = y[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (rows_[r][j] != 0) y[j] -= c * rows_[r][j];
    }
    return y;
  }

  /// Adds y when independent; returns the residual that was added.
  std::optional<Vector> insert(const Vector& y) {
    Vector res = reduce(y);
    auto it = std::find_if(res.begin(), res.end(), [](const Rational& r) { return r != 0; });
    if (it == res.end()) return std::nullopt;
    std::size_t p = static_cast<std::size_t>(it - res.begin());
    Rational lead = res[p];
    for (auto& x : res) x /= lead;
    for (auto& row : rows_) {
      Rational c = row[p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (res[j] != 0) row[j] -= c * res[j];
    }
    rows_.push_back(res);
    pivots_.push_back(p);
    return res;
  }

  /// Coordinates of y, which must lie in the span.
  Vector coordinates(const Vector& y) const {
    Vector c = zeros(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = y[pivots_[r]];
    return c;
  }

  const std::vector<Vector>& rows() const { return rows_; }

 private:
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// Restricts to the smallest subspace containing v and closed under every mu.
LinearRep left_reduce(const LinearRep& rep) {
  const std::size_t d = rep.dimension();
  RowSpace space(d);
  std::vector<Vector> queue;
  if (auto r = space.insert(rep.v)) queue.push_back(*r);
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const Matrix& m : rep.mu)
      if (auto r = space.insert(row_times(queue[head], m))) queue.push_back(*r);
  const auto& basis = space.rows();
  const std::size_t n = basis.size();
  LinearRep out;
  out.system = rep.system;
  out.v = n == 0 ? Vector{} : space.coordinates(rep.v);
  for (const Matrix& m : rep.mu) {
    Matrix mm;
    for (const Vector& b : basis) mm.push_back(space.coordinates(row_times(b, m)));
    out.mu.push_back(std::move(mm));
  }
  for (const Vector& b : basis) out.w.push_back(dot(b, rep.w));
  return out;
}

LinearRep transposed(const LinearRep& rep) {
  LinearRep out;
  out.system = rep.system;
  out.v = rep.w;
  out.w = rep.v;
  const std::size_t d = rep.dimension();
  for (const Matrix& m : rep.mu) {
    Matrix t = zero_matrix(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) t[j][i] = m[i][j];
    out.mu.push_back(std::move(t));
  }
  return out;
}

std::vector<State> find_cycle(const std::vector<std::vector<State>>& succ, const std::vector<State>& from) {
  const std::size_t n = succ.size();
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<State> stack;
  std::vector<State> cycle;
  std::function<bool(State)> dfs = [&](State q) {
    color[q] = 1;
    stack.push_back(q);
    for (State t : succ[q]) {
      if (color[t] == 1) {
        auto it = std::find(stack.begin(), stack.end(), t);
        cycle.assign(it, stack.end());
        return true;
      }
      if (color[t] == 0 && dfs(t)) return true;
    }
    stack.pop_back();
    color[q] = 2;
    return false;
  };
  for (State s : from)
    if (color[s] == 0 && dfs(s)) break;
  return cycle;
}

std::string fraction(const Rational& r) { return r.get_str(); }

Rational parse_fraction(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad fraction '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace

Rational LinearRep::eval_digits(const std::vector<int>& digits) const {
  if (dimension() == 0) return 0;
  Vector x = v;
  for (int d : digits) x = row_times(x, mu.at(static_cast<std::size_t>(d)));
  return dot(x, w);
}

Rational LinearRep::eval(std::uint64_t n) const {
  return eval_digits(to_canonical(n, system.with_order(DigitOrder::msd_first)).digits);
}

bool LinearRep::leading_zero_stable() const { return dimension() == 0 || row_times(v, mu.at(0)) == v; }

LinearRep rep_from_counting_dfa(const Dfa& a, int count_track, const NumerationSystem& system) {
  if (a.arity() != 2) throw std::invalid_argument("counting automaton must have two tracks");
  if (count_track != 0 && count_track != 1) throw std::invalid_argument("count track must be 0 or 1");
  if (a.alphabet().radix() != system.radix()) throw std::invalid_argument("automaton radix differs from the system");
  const Alphabet& alpha = a.alphabet();
  const int k = alpha.radix();
  const int value_track = 1 - count_track;

  // live states: reachable and co-accessible
  std::vector<std::uint8_t> reach(a.num_states(), 0);
  std::vector<State> stack{a.initial()};
  reach[a.initial()] = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (Symbol s = 0; s < alpha.size(); ++s)
      if (!reach[a.next(q, s)]) {
        reach[a.next(q, s)] = 1;
        stack.push_back(a.next(q, s));
      }
  }
  auto co = coaccessible(a);
  std::vector<long> index(a.num_states(), -1);
  std::vector<State> live;
  for (State q = 0; q < a.num_states(); ++q)
    if (reach[q] && co[q]) {
      index[q] = static_cast<long>(live.size());
      live.push_back(q);
    }

  LinearRep rep;
  rep.system = system.with_order(DigitOrder::msd_first);
  rep.mu.assign(static_cast<std::size_t>(k), Matrix{});
  const std::size_t d = live.size();
  if (index[a.initial()] < 0) return rep;

  auto symbol = [&](int count_digit, int value_digit) {
    int digits[2];
    digits[count_track] = count_digit;
    digits[value_track] = value_digit;
    return alpha.encode(digits);
  };
  for (auto& m : rep.mu) m = zero_matrix(d);
  Matrix fresh_zero = zero_matrix(d);  // value digit 0, count digit nonzero
  std::vector<std::vector<State>> zero_succ(d);
  for (std::size_t p = 0; p < d; ++p)
    for (int vd = 0; vd < k; ++vd)
      for (int cd = 0; cd < k; ++cd) {
        long q = index[a.next(live[p], symbol(cd, vd))];
        if (q < 0) continue;
        rep.mu[static_cast<std::size_t>(vd)][p][static_cast<std::size_t>(q)] += 1;
        if (vd == 0) {
          zero_succ[p].push_back(static_cast<State>(q));
          if (cd != 0) fresh_zero[p][static_cast<std::size_t>(q)] += 1;
        }
      }

  // Count words longer than the value: leading columns with value digit 0,
  // the first of which has a nonzero count digit.
  Vector start = zeros(d);
  start[static_cast<std::size_t>(index[a.initial()])] = 1;
  rep.v = start;
  Vector x = row_times(start, fresh_zero);
  for (std::size_t step = 0; !is_zero(x); ++step) {
    if (step > d) {
      std::vector<State> support;
      for (std::size_t q = 0; q < d; ++q)
        if (x[q] != 0) support.push_back(static_cast<State>(q));
      std::vector<State> cycle = find_cycle(zero_succ, support);
      for (auto& c : cycle) c = live[c];
      std::string msg = "some value has infinitely many counted witnesses; cycle through states";
      for (State c : cycle) msg += " " + std::to_string(c);
      throw InfiniteCountError(msg, cycle);
    }
    for (std::size_t q = 0; q < d; ++q) rep.v[q] += x[q];
    x = row_times(x, rep.mu[0]);
  }
  for (State q : live) rep.w.push_back(a.is_accepting(q) ? 1 : 0);
  return rep;
}

LinearRep minimize_rep(const LinearRep& rep) { return transposed(left_reduce(transposed(left_reduce(rep)))); }

LinearRep canonical_only(const LinearRep& rep) {
  const NumerationSystem sys = rep.system.with_order(DigitOrder::msd_first);
  const int k = sys.radix();
  Alphabet alpha(1, k);
  // first digit nonzero
  std::vector<State> table;
  for (int s = 0; s < k; ++s) table.push_back(s == 0 ? 2 : 1);
  for (int s = 0; s < k; ++s) table.push_back(1);
  for (int s = 0; s < k; ++s) table.push_back(2);
  Dfa leading(alpha, 0, table, {1, 1, 0});
  Dfa canon = product(leading, validity_automaton(sys, 1), BoolOp::conj);

  const std::size_t d = rep.dimension(), s = canon.num_states();
  LinearRep out;
  out.system = sys;
  out.v = zeros(d * s);
  out.w = zeros(d * s);
  for (std::size_t i = 0; i < d; ++i) {
    out.v[i * s + canon.initial()] = rep.v[i];
    for (State q = 0; q < s; ++q)
      if (canon.is_accepting(q)) out.w[i * s + q] = rep.w[i];
  }
  for (int digit = 0; digit < k; ++digit) {
    Matrix m = zero_matrix(d * s);
    const Matrix& src = rep.mu[static_cast<std::size_t>(digit)];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (src[i][j] == 0) continue;
        for (State q = 0; q < s; ++q) m[i * s + q][j * s + canon.next(q, static_cast<Symbol>(digit))] = src[i][j];
      }
    out.mu.push_back(std::move(m));
  }
  return out;
}

bool reps_equal(const LinearRep& a, const LinearRep& b) {
  if (a.system.kind() != b.system.kind() || a.system.radix() != b.system.radix())
    throw std::invalid_argument("representations use different numeration systems");
  const std::size_t da = a.dimension(), db = b.dimension(), d = da + db;
  LinearRep diff;
  diff.system = a.system;
  diff.v = zeros(d);
  diff.w = zeros(d);
  for (std::size_t i = 0; i < da; ++i) {
    diff.v[i] = a.v[i];
    diff.w[i] = a.w[i];
  }
  for (std::size_t i = 0; i < db; ++i) {
    diff.v[da + i] = -b.v[i];
    diff.w[da + i] = b.w[i];
  }
  for (std::size_t digit = 0; digit < static_cast<std::size_t>(a.system.radix()); ++digit) {
    Matrix m = zero_matrix(d);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) m[i][j] = a.mu[digit][i][j];
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) m[da + i][da + j] = b.mu[digit][i][j];
    diff.mu.push_back(std::move(m));
  }
  return minimize_rep(canonical_only(diff)).dimension() == 0;
}

// ---- text and JSON ----

std::string to_text(const LinearRep& rep) {
  std::ostringstream out;
  auto line = [&](const Vector& x) {
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << fraction(x[i]);
  };
  out << "linear-representation system " << rep.system.name() << " dimension " << rep.dimension() << "\n";
  out << "v ";
  line(rep.v);
  out << "\n";
  for (std::size_t digit = 0; digit < rep.mu.size(); ++digit) {
    out << "mu " << digit << "\n";
    for (const Vector& row : rep.mu[digit]) {
      out << "  ";
      line(row);
      out << "\n";
    }
  }
  out << "w ";
  line(rep.w);
  out << "\n";
  return out.str();
}

LinearRep rep_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    for (std::string t; ls >> t;) tokens.push_back(t);
  }
  std::size_t at = 0;
  auto next = [&]() -> const std::string& {
    if (at >= tokens.size()) throw std::invalid_argument("linear representation: unexpected end of input");
    return tokens[at++];
  };
  auto expect = [&](const std::string& word) {
    const std::string& t = next();
    if (t != word) throw std::invalid_argument("linear representation: expected '" + word + "', found '" + t + "'");
  };
  expect("linear-representation");
  expect("system");
  LinearRep rep;
  rep.system = NumerationSystem::parse(next());
  expect("dimension");
  const std::size_t d = std::stoul(next());
  auto vec = [&]() {
    Vector x;
    for (std::size_t i = 0; i < d; ++i) x.push_back(parse_fraction(next()));
    return x;
  };
  expect("v");
  rep.v = vec();
  for (int digit = 0; digit < rep.system.radix(); ++digit) {
    expect("mu");
    expect(std::to_string(digit));
    Matrix m;
    for (std::size_t i = 0; i < d; ++i) m.push_back(vec());
    rep.mu.push_back(std::move(m));
  }
  expect("w");
  rep.w = vec();
  if (at != tokens.size()) throw std::invalid_argument("linear representation: trailing input '" + tokens[at] + "'");
  return rep;
}

std::string to_json(const LinearRep& rep) {
  using nlohmann::json;
  auto vec = [](const Vector& x) {
    json a = json::array();
    for (const auto& r : x) a.push_back(fraction(r));
    return a;
  };
  json j;
  j["system"] = rep.system.name();
  j["dimension"] = rep.dimension();
  j["v"] = vec(rep.v);
  j["mu"] = json::array();
  for (const Matrix& m : rep.mu) {
    json rows = json::array();
    for (const Vector& row : m) rows.push_back(vec(row));
    j["mu"].push_back(rows);
  }
  j["w"] = vec(rep.w);
  return j.dump(2);
}

LinearRep rep_from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  auto vec = [](const nlohmann::json& a) {
    Vector x;
    for (const auto& e : a) x.push_back(parse_fraction(e.is_string() ? e.get<std::string>() : e.dump()));
    return x;
  };
  LinearRep rep;
  rep.system = NumerationSystem::parse(j.at("system").get<std::string>());
  rep.v = vec(j.at("v"));
  for (const auto& m : j.at("mu")) {
    Matrix mm;
    for (const auto& row : m) mm.push_back(vec(row));
    rep.mu.push_back(std::move(mm));
  }
  rep.w = vec(j.at("w"));
  const std::size_t d = rep.v.size();
  bool ok = rep.w.size() == d && rep.mu.size() == static_cast<std::size_t>(rep.system.radix());
  for (const Matrix& m : rep.mu) {
    ok = ok && m.size() == d;
    for (const Vector& row : m) ok = ok && row.size() == d;
  }
  if (!ok) throw std::invalid_argument("linear representation: inconsistent dimensions");
  return rep;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

LinearRep load_rep(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return rep_from_json(text);
  return rep_from_text(text);
}

// ---- relations ----

namespace {

class RelationScanner {
 public:
  explicit RelationScanner(std::string_view s) : s_(s) {}

  void skip() {
    while (at_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[at_]))) ++at_;
  }
  bool done() {
    skip();
    return at_ >= s_.size();
  }
  char peek() {
    skip();
    return at_ < s_.size() ? s_[at_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++at_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    skip();
    std::size_t start = at_;
    while (at_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[at_]))) ++at_;
    if (start == at_) fail("expected a number");
    return std::stoull(std::string(s_.substr(start, at_ - start)));
  }
  std::string name() {
    skip();
    std::size_t start = at_;
    while (at_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[at_])) && s_[at_] != 'n') ++at_;
    if (start == at_) fail("expected a sequence name");
    return std::string(s_.substr(start, at_ - start));
  }
  RecurrenceRelation::Index index() {
    RecurrenceRelation::Index ix{0, 0};
    expect('(');
    if (peek() == 'n') {
      ++at_;
      ix.scale = 1;
    } else {
      std::uint64_t c = number();
      if (accept('n')) ix.scale = c;
      else ix.offset = c;
    }
    if (ix.scale != 0 && accept('+')) ix.offset = number();
    expect(')');
    return ix;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("relation '" + std::string(s_) + "': " + what + " at column " +
                                std::to_string(at_ + 1));
  }

 private:
  std::string_view s_;
  std::size_t at_ = 0;
};

}  // namespace

RecurrenceRelation RecurrenceRelation::parse(std::string_view text) {
  RelationScanner sc(text);
  RecurrenceRelation rel;
  rel.text = std::string(text);
  rel.name = sc.name();
  rel.lhs = sc.index();
  sc.expect('=');
  if (sc.peek() == '0') {
    sc.number();
    if (!sc.done()) sc.fail("trailing input after 0");
    return rel;
  }
  bool first = true;
  while (!sc.done()) {
    Rational sign = 1;
    if (sc.accept('-')) sign = -1;
    else if (!sc.accept('+') && !first) sc.fail("expected '+' or '-'");
    first = false;
    Rational coef = 1;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      std::uint64_t p = sc.number();
      std::uint64_t q = sc.accept('/') ? sc.number() : 1;
      if (q == 0) sc.fail("zero denominator");
      coef = Rational(std::to_string(p) + "/" + std::to_string(q));
      coef.canonicalize();
    }
    std::string name = sc.name();
    if (name != rel.name) sc.fail("mixes sequences '" + rel.name + "' and '" + name + "'");
    rel.rhs.push_back({sign * coef, sc.index()});
  }
  return rel;
}

std::string RecurrenceRelation::str() const {
  auto index = [](const Index& ix) {
    std::string s;
    if (ix.scale != 0) s = (ix.scale == 1 ? "" : std::to_string(ix.scale)) + "n";
    if (ix.offset != 0 || ix.scale == 0) s += (ix.scale != 0 ? "+" : "") + std::to_string(ix.offset);
    return s;
  };
  std::string out = name + "(" + index(lhs) + ") =";
  if (rhs.empty()) return out + " 0";
  for (std::size_t t = 0; t < rhs.size(); ++t) {
    Rational c = rhs[t].coefficient;
    out += c < 0 ? " - " : (t == 0 ? " " : " + ");
    if (t == 0 && c < 0) out.replace(out.size() - 3, 3, " -");
    Rational a = abs(c);
    if (a != 1) out += a.get_str() + " ";
    out += name + "(" + index(rhs[t].index) + ")";
  }
  return out;
}

std::vector<RecurrenceRelation> parse_relations(std::string_view text) {
  std::vector<RecurrenceRelation> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto first = line.find_first_not_of(" \t");
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(RecurrenceRelation::parse(line.substr(first, last - first + 1)));
  }
  return out;
}

std::vector<RecurrenceRelation> load_relations(const std::string& path) { return parse_relations(read_file(path)); }

RelationCheck verify_relation(const RecurrenceRelation& rel, const std::function<Rational(std::uint64_t)>& f,
                              std::uint64_t bound) {
  RelationCheck out;
  for (std::uint64_t n = 0; n <= bound; ++n) {
    Rational lhs = f(rel.lhs.at(n));
    Rational rhs = 0;
    for (const auto& t : rel.rhs) rhs += t.coefficient * f(t.index.at(n));
    if (lhs != rhs) {
      out.holds = false;
      out.first_failure = n;
      out.lhs = lhs;
      out.rhs = rhs;
      return out;
    }
  }
  return out;
}

RelationCheck verify_relation(const RecurrenceRelation& rel, const LinearRep& rep, std::uint64_t bound) {
  std::map<std::uint64_t, Rational> cache;
  return verify_relation(
      rel,
      [&](std::uint64_t n) {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, rep.eval(n)).first;
        return it->second;
      },
      bound);
}

// ---- closed form ----

std::vector<PiecewiseCase> closed_count_cases(std::uint64_t n) {
  // windows on 2n in units of u = 2^(k+1)
  static constexpr std::int64_t edges[] = {15, 18, 19, 20, 22, 24, 28, 30};
  std::vector<PiecewiseCase> out;
  const std::int64_t m = 2 * static_cast<std::int64_t>(n);
  for (std::int64_t u = 1, k = -1; 15 * u < m; u *= 2, ++k)
    for (int piece = 0; piece < 7; ++piece) {
      if (!(edges[piece] * u < m && m <= edges[piece + 1] * u)) continue;
      const std::int64_t x = static_cast<std::int64_t>(n);
      std::int64_t value = 0;
      switch (piece) {
        case 0: value = 8 * u; break;
        case 1: value = 2 * x - 10 * u - 2; break;
        case 2: value = 28 * u - 2 * x + 2; break;
        case 3: value = 4 * x - 32 * u - 4; break;
        case 4: value = 56 * u - 4 * x + 4; break;
        case 5: value = 8 * u; break;
        case 6: value = 8 * x - 104 * u - 8; break;
      }
      out.push_back({static_cast<int>(k), piece, static_cast<std::uint64_t>(value)});
    }
  return out;
}

PiecewiseCheck verify_piecewise_formula(const LinearRep& rep, std::uint64_t bound) {
  if (bound < 8) throw std::invalid_argument("piecewise check needs a bound of at least 8");
  PiecewiseCheck out;
  for (std::uint64_t n = 8; n <= bound; ++n) {
    auto cases = closed_count_cases(n);
    if (cases.size() != 1) {
      out.uncovered.push_back(n);
      continue;
    }
    if (rep.eval(n) != Rational(std::to_string(cases[0].value))) out.mismatches.push_back(n);
  }
  out.holds = out.mismatches.empty() && out.uncovered.empty();
  return out;
}

}  // namespace autoseq
