#include "autoseq/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "autoseq/oracle.hpp"

namespace autoseq {

Compiler make_compiler(SequenceId id, DigitOrder order, const PredicateLibrary& library) {
  Binding b;
  b.fallback = id;
  return Compiler(library, b, sequence_system(id).with_order(order));
}

CountKind parse_count_kind(std::string_view name) {
  if (name == "closed") return CountKind::closed;
  if (name == "privileged") return CountKind::privileged;
  if (name == "privileged-palindrome") return CountKind::privileged_palindrome;
  throw std::invalid_argument("unknown count '" + std::string(name) +
                              "' (closed, privileged, privileged-palindrome)");
}

std::string count_kind_name(CountKind kind) {
  switch (kind) {
    case CountKind::closed: return "closed";
    case CountKind::privileged: return "privileged";
    case CountKind::privileged_palindrome: return "privileged-palindrome";
  }
  return "?";
}

std::string counting_formula(CountKind kind) {
  switch (kind) {
    case CountKind::closed: return "$UCF(i,n)";
    case CountKind::privileged: return "$Priv(i,n) & ~$Occurs(i,0,n,i+n-1)";
    case CountKind::privileged_palindrome: return "$Priv(i,n) & $Pal(i,n) & ~$Occurs(i,0,n,i+n-1)";
  }
  return "";
}

LinearRep count_rep(SequenceId id, CountKind kind) {
  Compiler c = make_compiler(id);
  Relation r = c.compile(counting_formula(kind));
  return rep_from_counting_dfa(r.dfa, 0, c.system());
}

namespace {

std::string_view factor(std::string_view w, std::uint64_t i, std::uint64_t n) { return w.substr(i, n); }

bool occurs_within(std::string_view w, std::uint64_t i, std::uint64_t j, std::uint64_t m, std::uint64_t n) {
  return m <= n && w.substr(j, n).find(w.substr(i, m)) != std::string_view::npos;
}

std::vector<WordCheck> build_checks() {
  using Args = const std::vector<std::uint64_t>&;
  std::vector<WordCheck> out;
  auto unary = [&](const char* name, bool (*p)(std::string_view)) {
    out.push_back({name, 2, false, [p](std::string_view w, Args a) { return p(factor(w, a[0], a[1])); }});
  };
  unary("Pal", oracle::is_palindrome);
  unary("Closed", oracle::is_closed);
  unary("Priv", oracle::is_privileged);
  unary("Priv'", oracle::is_privileged);
  unary("Rich", oracle::is_rich);
  unary("Trap", oracle::is_trapezoidal);
  out.push_back({"Unbal", 2, false, [](std::string_view w, Args a) { return !oracle::is_balanced(factor(w, a[0], a[1])); }});
  out.push_back({"UCF", 2, false, [](std::string_view w, Args a) {
                   std::string_view f = factor(w, a[0], a[1]);
                   return oracle::is_closed(f) && w.find(f) == a[0];
                 }});
  out.push_back({"MaxPal", 2, true, [](std::string_view w, Args a) {
                   std::string_view f = factor(w, a[0], a[1]);
                   if (!oracle::is_palindrome(f)) return false;
                   for (std::size_t j = 1; j + f.size() < w.size(); ++j)
                     if (w.compare(j, f.size(), f) == 0 && w[j - 1] == w[j + f.size()]) return false;
                   return true;
                 }});
  out.push_back({"FactorEq", 3, false,
                 [](std::string_view w, Args a) { return factor(w, a[0], a[2]) == factor(w, a[1], a[2]); }});
  out.push_back({"Border", 3, false, [](std::string_view w, Args a) {
                   std::uint64_t i = a[0], m = a[1], n = a[2];
                   return m >= 1 && m <= n && factor(w, i, m) == factor(w, i + n - m, m);
                 }});
  out.push_back({"Occurs", 4, false,
                 [](std::string_view w, Args a) { return occurs_within(w, a[0], a[1], a[2], a[3]); }});
  return out;
}

}  // namespace

const std::vector<WordCheck>& word_checks() {
  static const std::vector<WordCheck> checks = build_checks();
  return checks;
}

const WordCheck& word_check(std::string_view predicate) {
  for (const auto& c : word_checks())
    if (c.predicate == predicate) return c;
  throw std::invalid_argument("no direct check for predicate '" + std::string(predicate) + "'");
}

CrosscheckReport crosscheck(SequenceId id, std::string_view predicate, std::uint64_t bound, DigitOrder order) {
  const WordCheck& check = word_check(predicate);
  Compiler c = make_compiler(id, order);
  std::vector<std::string> params = c.library().find(predicate)->params;
  std::string call = "$" + std::string(predicate) + "(";
  for (std::size_t k = 0; k < params.size(); ++k) call += (k ? "," : "") + params[k];
  Relation r = c.compile_over(*parse_formula(call + ")", &c.library()), params);
  // compile_over sorts the tracks; map parameter k to its track
  std::vector<std::size_t> track_of(params.size());
  for (std::size_t k = 0; k < params.size(); ++k)
    track_of[k] = static_cast<std::size_t>(std::find(r.vars.begin(), r.vars.end(), params[k]) - r.vars.begin());

  CrosscheckReport rep;
  rep.predicate = std::string(predicate);
  rep.bound = bound;
  rep.states = r.dfa.num_states();
  std::size_t len = 2 * bound + 2;
  if (check.needs_context) len = std::max<std::size_t>(len, std::size_t{1} << 16);
  const std::string w = prefix(id, len);

  std::vector<std::uint64_t> args(check.arity, 0), tracks(check.arity, 0);
  std::function<void(std::size_t, std::uint64_t)> sweep = [&](std::size_t k, std::uint64_t left) {
    if (k == args.size()) {
      for (std::size_t t = 0; t < args.size(); ++t) tracks[track_of[t]] = args[t];
      bool engine = r.dfa.accepts(encode_tuple(tracks, c.system()).symbols());
      bool direct = check.check(w, args);
      ++rep.tuples;
      if (engine != direct) {
        if (rep.mismatches.size() < 10) rep.mismatches.push_back(args);
        ++rep.mismatch_count;
      }
      return;
    }
    for (std::uint64_t x = 0; x <= left; ++x) {
      args[k] = x;
      sweep(k + 1, left - x);
    }
  };
  sweep(0, bound);
  return rep;
}

}  // namespace autoseq
