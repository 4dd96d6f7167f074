#include "autoseq/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_set>

namespace autoseq::oracle {

std::size_t occurrences(std::string_view x, std::string_view w) {
  if (w.size() > x.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + w.size() <= x.size(); ++i)
    if (x.compare(i, w.size(), w) == 0) ++count;
  return count;
}

bool is_palindrome(std::string_view x) { return std::equal(x.begin(), x.begin() + x.size() / 2, x.rbegin()); }

namespace {

bool is_border(std::string_view x, std::size_t m) { return x.substr(0, m) == x.substr(x.size() - m); }

// The border occurring exactly twice is unique when it exists.
std::size_t complete_return_border(std::string_view x) {
  for (std::size_t m = 1; m < x.size(); ++m)
    if (is_border(x, m) && occurrences(x, x.substr(0, m)) == 2) return m;
  return 0;
}

std::string letters(std::string_view x) {
  std::string a(x);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

bool is_closed(std::string_view x) { return x.size() <= 1 || complete_return_border(x) != 0; }

bool is_privileged(std::string_view x) {
  while (x.size() > 1) {
    std::size_t m = complete_return_border(x);
    if (m == 0) return false;
    x = x.substr(0, m);
  }
  return true;
}

bool has_property_p(std::string_view x) {
  const std::size_t len = x.size();
  for (std::size_t n = 1; n <= len; ++n) {
    std::string_view head = x.substr(0, n), tail = x.substr(len - n);
    bool found = false;
    for (std::size_t p = 1; p <= n && !found; ++p)
      found = is_border(x, p) && occurrences(head, x.substr(0, p)) == 1 && occurrences(tail, x.substr(len - p)) == 1;
    if (!found) return false;
  }
  return true;
}

std::vector<std::size_t> palindrome_counts(std::string_view x) {
  // eertree: node 0 has length -1, node 1 is the empty palindrome
  struct Node {
    long len;
    std::size_t link;
    std::map<char, std::size_t> next;
  };
  std::vector<Node> tree{{-1, 0, {}}, {0, 0, {}}};
  std::size_t last = 1;
  std::vector<std::size_t> counts{1};
  counts.reserve(x.size() + 1);
  auto extendable = [&](std::size_t node, std::size_t pos) {
    long start = static_cast<long>(pos) - tree[node].len - 1;
    return start >= 0 && x[static_cast<std::size_t>(start)] == x[pos];
  };
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    std::size_t cur = last;
    while (!extendable(cur, pos)) cur = tree[cur].link;
    auto it = tree[cur].next.find(x[pos]);
    if (it != tree[cur].next.end()) {
      last = it->second;
      counts.push_back(counts.back());
      continue;
    }
    Node node{tree[cur].len + 2, 1, {}};
    if (node.len > 1) {
      std::size_t back = tree[cur].link;
      while (!extendable(back, pos)) back = tree[back].link;
      node.link = tree[back].next.at(x[pos]);
    }
    tree.push_back(std::move(node));
    last = tree.size() - 1;
    tree[cur].next[x[pos]] = last;
    counts.push_back(counts.back() + 1);
  }
  return counts;
}

std::size_t distinct_palindromes(std::string_view x) { return palindrome_counts(x).back(); }

bool is_rich(std::string_view x) { return distinct_palindromes(x) == x.size() + 1; }

bool is_rich_by_suffixes(std::string_view x) {
  for (std::size_t m = 1; m <= x.size(); ++m) {
    std::string_view p = x.substr(0, m);
    bool found = false;
    for (std::size_t s = 1; s <= m && !found; ++s) {
      std::string_view suffix = p.substr(m - s);
      found = is_palindrome(suffix) && occurrences(p, suffix) == 1;
    }
    if (!found) return false;
  }
  return true;
}

FactorStats factor_stats(std::string_view x) {
  const std::size_t n = x.size();
  FactorStats st;
  st.factors.assign(n + 1, 0);
  st.palindromes.assign(n + 1, 0);
  st.right_special.assign(n + 1, 0);
  for (std::size_t len = 0; len <= n; ++len) {
    std::map<std::string_view, std::set<char>> ext;
    for (std::size_t i = 0; i + len <= n; ++i) {
      auto& e = ext[x.substr(i, len)];
      if (i + len < n) e.insert(x[i + len]);
    }
    st.factors[len] = ext.size();
    for (const auto& [f, follow] : ext) {
      if (is_palindrome(f)) ++st.palindromes[len];
      if (follow.size() >= 2) ++st.right_special[len];
    }
  }
  st.shortest_unrepeated_suffix = n;
  for (std::size_t k = 0; k <= n; ++k)
    if (occurrences(x, x.substr(n - k)) == 1) {
      st.shortest_unrepeated_suffix = k;
      break;
    }
  st.least_without_right_special = n;
  for (std::size_t r = 0; r <= n; ++r)
    if (st.right_special[r] == 0) {
      st.least_without_right_special = r;
      break;
    }
  return st;
}

bool is_trapezoidal(std::string_view x) {
  for (std::size_t len = 0; len <= x.size(); ++len) {
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i + len <= x.size(); ++i) seen.insert(x.substr(i, len));
    if (seen.size() > len + 1) return false;
  }
  return true;
}

bool is_trapezoidal_by_rk(std::string_view x) {
  FactorStats st = factor_stats(x);
  return x.size() == st.least_without_right_special + st.shortest_unrepeated_suffix;
}

bool is_balanced(std::string_view x) {
  const std::string alpha = letters(x);
  for (std::size_t len = 1; len < x.size(); ++len) {
    for (char a : alpha) {
      std::size_t count = static_cast<std::size_t>(std::count(x.begin(), x.begin() + len, a));
      std::size_t lo = count, hi = count;
      for (std::size_t i = len; i < x.size(); ++i) {
        count += (x[i] == a) - (x[i - len] == a);
        lo = std::min(lo, count);
        hi = std::max(hi, count);
      }
      if (hi - lo > 1) return false;
    }
  }
  return true;
}

bool is_balanced_coven_hedlund(std::string_view x) {
  const std::string alpha = letters(x);
  if (alpha.size() > 2) throw std::invalid_argument("Coven-Hedlund test needs a binary word");
  if (alpha.size() < 2) return true;
  // palindromic centres v of factors cvc, by which letters c surround them
  std::map<std::string_view, unsigned> surround;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 2; j <= x.size(); ++j) {
      std::string_view f = x.substr(i, j - i);
      if (f.front() != f.back()) continue;
      std::string_view v = f.substr(1, f.size() - 2);
      if (!is_palindrome(v)) continue;
      unsigned& mask = surround[v];
      mask |= f.front() == alpha[0] ? 1u : 2u;
      if (mask == 3u) return false;
    }
  return true;
}

std::vector<std::string> maximal_palindromes(std::string_view prefix, std::size_t window) {
  window = std::min(window, prefix.size());
  std::string_view w = prefix.substr(0, window);
  std::set<std::string> pals;
  for (std::size_t c = 0; c < 2 * window; ++c) {
    // odd centre at c/2 when c is even, even centre between c/2 and c/2+1 otherwise
    long lo = static_cast<long>(c / 2), hi = static_cast<long>(c / 2 + (c % 2));
    while (lo >= 0 && hi < static_cast<long>(window) && w[static_cast<std::size_t>(lo)] == w[static_cast<std::size_t>(hi)]) {
      pals.emplace(w.substr(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo + 1)));
      --lo;
      ++hi;
    }
  }
  const std::string alpha = letters(prefix);
  std::vector<std::string> out;
  for (const auto& p : pals) {
    bool extends = false;
    for (char a : alpha) {
      std::string axa = a + p + a;
      if (prefix.find(axa) != std::string_view::npos) {
        extends = true;
        break;
      }
    }
    if (!extends) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

constexpr std::array<std::pair<Property, const char*>, 8> property_names{{
    {Property::factor, "factor"},
    {Property::palindrome, "palindrome"},
    {Property::closed, "closed"},
    {Property::privileged, "privileged"},
    {Property::rich, "rich"},
    {Property::trapezoidal, "trapezoidal"},
    {Property::balanced, "balanced"},
    {Property::unbalanced, "unbalanced"},
}};

}  // namespace

Property parse_property(std::string_view name) {
  for (const auto& [p, n] : property_names)
    if (name == n) return p;
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

std::string property_name(Property p) {
  for (const auto& [q, n] : property_names)
    if (p == q) return n;
  return "?";
}

bool holds(Property p, std::string_view x) {
  switch (p) {
    case Property::factor: return true;
    case Property::palindrome: return is_palindrome(x);
    case Property::closed: return is_closed(x);
    case Property::privileged: return is_privileged(x);
    case Property::rich: return is_rich(x);
    case Property::trapezoidal: return is_trapezoidal(x);
    case Property::balanced: return is_balanced(x);
    case Property::unbalanced: return !is_balanced(x);
  }
  return false;
}

std::vector<std::vector<std::string>> stable_factors(SequenceId seq, std::size_t max_len, std::size_t cap,
                                                     std::size_t* prefix_used) {
  std::size_t len = std::max<std::size_t>(4 * max_len, 1024);
  std::vector<std::size_t> previous;
  while (true) {
    if (len > cap)
      throw StabilizationError("factors of " + sequence_name(seq) + " up to length " + std::to_string(max_len) +
                               " did not stabilize within a prefix of " + std::to_string(cap));
    std::string word = prefix(seq, len);
    std::vector<std::unordered_set<std::string_view>> sets(max_len + 1);
    for (std::size_t l = 0; l <= max_len; ++l)
      for (std::size_t i = 0; i + l <= word.size(); ++i) sets[l].insert(std::string_view(word).substr(i, l));
    std::vector<std::size_t> counts;
    for (const auto& s : sets) counts.push_back(s.size());
    if (counts == previous) {
      std::vector<std::vector<std::string>> out(max_len + 1);
      for (std::size_t l = 0; l <= max_len; ++l) {
        out[l].assign(sets[l].begin(), sets[l].end());
        std::sort(out[l].begin(), out[l].end());
      }
      if (prefix_used) *prefix_used = len;
      return out;
    }
    previous = std::move(counts);
    len *= 2;
  }
}

PropertyCounts distinct_property_factors(SequenceId seq, Property property, std::size_t max_len, bool keep_factors,
                                         std::size_t cap) {
  PropertyCounts out;
  auto factors = stable_factors(seq, max_len, cap, &out.prefix_length);
  out.per_length.assign(max_len + 1, 0);
  if (keep_factors) out.factors.resize(max_len + 1);
  for (std::size_t l = 0; l <= max_len; ++l)
    for (const auto& f : factors[l]) {
      if (!holds(property, f)) continue;
      ++out.per_length[l];
      ++out.total;
      out.longest = l;
      if (keep_factors) out.factors[l].push_back(f);
    }
  return out;
}

std::size_t count_palindromes_in_prefix(SequenceId seq, std::size_t n) {
  return distinct_palindromes(prefix(seq, n));
}

}  // namespace autoseq::oracle
