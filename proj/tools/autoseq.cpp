// Command-line front end.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "autoseq/automata.hpp"
#include "autoseq/counting.hpp"
#include "autoseq/engine.hpp"
#include "autoseq/io.hpp"
#include "autoseq/logic.hpp"
#include "autoseq/oracle.hpp"

using namespace autoseq;
using nlohmann::json;

namespace {

enum Exit { ok = 0, falsified = 1, usage = 2, internal = 3 };

struct Globals {
  bool json = false;
  bool lsd = false;
  bool timing = false;
  std::string sequence = "thue-morse";
  std::vector<std::string> libraries;
  std::vector<std::string> bindings;  // SYM=sequence
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Context {
  PredicateLibrary library;
  Binding binding;
  DigitOrder order;
  SequenceId sequence;
};

Context make_context(const Globals& g) {
  Context c;
  c.library = PredicateLibrary::standard();
  for (const auto& path : g.libraries) c.library.merge(PredicateLibrary::parse(read_file(path)));
  c.sequence = parse_sequence(g.sequence);
  c.binding.fallback = c.sequence;
  for (const auto& b : g.bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("binding '" + b + "' is not of the form SYM=sequence");
    c.binding.symbols[b.substr(0, eq)] = parse_sequence(b.substr(eq + 1));
  }
  c.order = g.lsd ? DigitOrder::lsd_first : DigitOrder::msd_first;
  return c;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string join(const std::vector<std::uint64_t>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

// ---- decide ----

int cmd_decide(const Globals& g, const std::string& sentence) {
  auto t0 = Clock::now();
  Context ctx = make_context(g);
  FormulaPtr f = parse_formula(sentence, &ctx.library);
  NumerationSystem sys = system_for(ctx.binding, sequence_symbols(*f, ctx.library), ctx.order);
  Compiler compiler(ctx.library, ctx.binding, sys);
  Decision d = decide(compiler, *f);
  json j{{"command", "decide"},
         {"sentence", sentence},
         {"system", sys.name()},
         {"value", d.value},
         {"operations", compiler.stats().operations},
         {"peak_states", compiler.stats().peak_states}};
  std::string text = d.value ? "true\n" : "false\n";
  if (!d.kind.empty()) {
    json values = json::object();
    std::string line = d.kind + ":";
    for (std::size_t k = 0; k < d.vars.size(); ++k) {
      values[d.vars[k]] = d.values[k];
      line += " " + d.vars[k] + "=" + std::to_string(d.values[k]);
    }
    j[d.kind] = values;
    text += line + "\n";
  }
  if (g.timing) j["seconds"] = seconds_since(t0);
  emit(g, j, text);
  return d.value ? ok : falsified;
}

// ---- accept-set ----

int cmd_accept_set(const Globals& g, const std::string& formula, std::uint64_t bound) {
  auto t0 = Clock::now();
  Context ctx = make_context(g);
  FormulaPtr f = parse_formula(formula, &ctx.library);
  auto free = free_variables(*f);
  if (free.size() != 1)
    throw UsageError("accept-set needs exactly one free variable, found " + std::to_string(free.size()));
  NumerationSystem sys = system_for(ctx.binding, sequence_symbols(*f, ctx.library), ctx.order);
  Compiler compiler(ctx.library, ctx.binding, sys);
  Relation r = compiler.compile(*f);
  auto members = enumerate_values(r.dfa, sys, bound);
  auto finite = enumerate_finite(r.dfa, sys, 4096);
  json j{{"command", "accept-set"},
         {"formula", formula},
         {"variable", free[0]},
         {"system", sys.name()},
         {"states", r.dfa.num_states()},
         {"states_without_dead", trimmed_size(r.dfa)},
         {"bound", bound},
         {"members", members},
         {"finite", finite.has_value()}};
  std::ostringstream text;
  text << "variable " << free[0] << " over " << sys.name() << "\n";
  text << "states " << trimmed_size(r.dfa) << " (complete " << r.dfa.num_states() << ")\n";
  if (finite) {
    std::vector<std::uint64_t> all;
    for (const auto& t : *finite) all.push_back(t[0]);
    j["all"] = all;
    text << "finite, " << all.size() << " members: " << join(all) << "\n";
  } else {
    text << "members <= " << bound << ": " << join(members) << "\n";
  }
  if (g.timing) j["seconds"] = seconds_since(t0);
  emit(g, j, text.str());
  return ok;
}

// ---- count ----

int cmd_count(const Globals& g, const std::string& property, std::uint64_t from, std::uint64_t to, bool minimized) {
  auto t0 = Clock::now();
  Context ctx = make_context(g);
  CountKind kind = parse_count_kind(property);
  LinearRep rep = count_rep(ctx.sequence, kind);
  if (minimized) rep = minimize_rep(rep);
  json values = json::array();
  std::ostringstream text;
  text << "# " << count_kind_name(kind) << " factors of " << sequence_name(ctx.sequence) << ", representation dimension "
       << rep.dimension() << "\n";
  for (std::uint64_t n = from; n <= to; ++n) {
    Rational v = rep.eval(n);
    values.push_back(v.get_str());
    text << n << " " << v.get_str() << "\n";
  }
  json j{{"command", "count"},        {"property", count_kind_name(kind)}, {"sequence", sequence_name(ctx.sequence)},
         {"dimension", rep.dimension()}, {"from", from},                      {"values", values}};
  if (g.timing) j["seconds"] = seconds_since(t0);
  emit(g, j, text.str());
  return ok;
}

// ---- export ----

struct ExportOptions {
  std::string formula;
  bool generator = false;
  std::string count;
  bool minimized = false;
  std::string format = "text";
  std::string output;
  std::string title;
};

int cmd_export(const Globals& g, const ExportOptions& o) {
  Context ctx = make_context(g);
  int chosen = !o.formula.empty() + o.generator + !o.count.empty();
  if (chosen != 1) throw UsageError("export needs exactly one of --formula, --generator, --count");
  if (o.format != "dot" && o.format != "text" && o.format != "json")
    throw UsageError("unknown format '" + o.format + "' (dot, text, json)");
  std::string body;
  if (!o.formula.empty()) {
    FormulaPtr f = parse_formula(o.formula, &ctx.library);
    NumerationSystem sys = system_for(ctx.binding, sequence_symbols(*f, ctx.library), ctx.order);
    Compiler compiler(ctx.library, ctx.binding, sys);
    Relation r = compiler.compile(*f);
    std::string title = o.title.empty() ? o.formula : o.title;
    body = o.format == "dot" ? to_dot(r.dfa, r.vars, title) : o.format == "json" ? to_json(r.dfa, r.vars) + "\n"
                                                                                 : to_text(r.dfa, r.vars);
  } else if (o.generator) {
    Dfao d = dfao(ctx.sequence, ctx.order);
    std::string title = o.title.empty() ? sequence_name(ctx.sequence) : o.title;
    body = o.format == "dot" ? to_dot(d, {"n"}, title) : o.format == "json" ? to_json(d, {"n"}) + "\n" : to_text(d, {"n"});
  } else {
    if (o.format == "dot") throw UsageError("representations export as text or json");
    LinearRep rep = count_rep(ctx.sequence, parse_count_kind(o.count));
    if (o.minimized) rep = minimize_rep(rep);
    body = o.format == "json" ? to_json(rep) + "\n" : to_text(rep);
  }
  if (o.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(o.output);
    if (!out) throw UsageError("cannot write " + o.output);
    out << body;
  }
  return ok;
}

// ---- crosscheck ----

int cmd_crosscheck(const Globals& g, const std::string& predicate, std::uint64_t bound) {
  auto t0 = Clock::now();
  Context ctx = make_context(g);
  CrosscheckReport r = crosscheck(ctx.sequence, predicate, bound, ctx.order);
  json mism = json::array();
  for (const auto& m : r.mismatches) mism.push_back(m);
  json j{{"command", "crosscheck"}, {"sequence", sequence_name(ctx.sequence)},
         {"predicate", predicate},    {"bound", bound},
         {"tuples", r.tuples},        {"states", r.states},
         {"mismatches", r.mismatch_count}, {"examples", mism}};
  std::ostringstream text;
  text << predicate << " over " << sequence_name(ctx.sequence) << ": " << r.tuples << " tuples, "
       << r.mismatch_count << " mismatches\n";
  for (const auto& m : r.mismatches) text << "  mismatch at (" << join(m, ",") << ")\n";
  if (g.timing) j["seconds"] = seconds_since(t0);
  emit(g, j, text.str());
  return r.mismatch_count == 0 ? ok : falsified;
}

// ---- oracle ----

int cmd_oracle_factors(const Globals& g, const std::string& property, std::size_t max_len, bool list) {
  Context ctx = make_context(g);
  oracle::PropertyCounts pc =
      oracle::distinct_property_factors(ctx.sequence, oracle::parse_property(property), max_len, list);
  json j{{"command", "oracle factors"},
         {"sequence", sequence_name(ctx.sequence)},
         {"property", property},
         {"max_len", max_len},
         {"per_length", pc.per_length},
         {"total", pc.total},
         {"longest", pc.longest},
         {"prefix_length", pc.prefix_length}};
  std::ostringstream text;
  text << property << " factors of " << sequence_name(ctx.sequence) << " up to length " << max_len << "\n";
  text << "total " << pc.total << ", longest " << pc.longest << " (stable at prefix length " << pc.prefix_length
       << ")\n";
  for (std::size_t l = 0; l <= max_len; ++l) {
    text << l << " " << pc.per_length[l];
    if (list)
      for (const auto& f : pc.factors[l]) text << " " << (f.empty() ? "\"\"" : f);
    text << "\n";
  }
  if (list) j["factors"] = pc.factors;
  emit(g, j, text.str());
  return ok;
}

int cmd_oracle_word(const Globals& g, const std::string& word) {
  json j{{"command", "oracle word"}, {"word", word}};
  std::ostringstream text;
  for (auto p : {oracle::Property::palindrome, oracle::Property::closed, oracle::Property::privileged,
                 oracle::Property::rich, oracle::Property::trapezoidal, oracle::Property::balanced}) {
    bool v = oracle::holds(p, word);
    j[oracle::property_name(p)] = v;
    text << oracle::property_name(p) << " " << (v ? "yes" : "no") << "\n";
  }
  j["palindromic_factors"] = oracle::distinct_palindromes(word);
  text << "palindromic factors (with the empty word) " << oracle::distinct_palindromes(word) << "\n";
  emit(g, j, text.str());
  return ok;
}

int cmd_oracle_maxpal(const Globals& g, std::size_t window, std::size_t length) {
  Context ctx = make_context(g);
  std::string w = prefix(ctx.sequence, std::max(window, length));
  auto pals = oracle::maximal_palindromes(w, window);
  std::string w2 = prefix(ctx.sequence, 2 * std::max(window, length));
  bool stable = oracle::maximal_palindromes(w2, window) == pals;
  json j{{"command", "oracle maxpal"},
         {"sequence", sequence_name(ctx.sequence)},
         {"window", window},
         {"prefix_length", w.size()},
         {"palindromes", pals},
         {"stable_under_doubling", stable}};
  std::ostringstream text;
  text << pals.size() << " maximal palindromes in the first " << window << " letters"
       << (stable ? " (stable under doubling)" : " (not stable under doubling)") << "\n";
  for (const auto& p : pals) text << p << "\n";
  emit(g, j, text.str());
  return ok;
}

int cmd_oracle_palindromes(const Globals& g, std::size_t n) {
  Context ctx = make_context(g);
  std::size_t c = oracle::count_palindromes_in_prefix(ctx.sequence, n);
  json j{{"command", "oracle palindromes"}, {"sequence", sequence_name(ctx.sequence)}, {"n", n}, {"count", c}};
  emit(g, j, std::to_string(c) + "\n");
  return ok;
}

// ---- rep ----

struct RepOptions {
  std::string count;
  std::string load;
  bool minimized = false;
  std::string eval;  // "a..b" or "n"
  std::string relations;
  std::uint64_t bound = 2048;
  std::uint64_t piecewise = 0;
  std::string compare;
  std::string format;  // print the representation: text or json
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      std::uint64_t n = std::stoull(s);
      return {n, n};
    }
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + s + "' (use a..b)");
  }
}

int cmd_rep(const Globals& g, const RepOptions& o) {
  Context ctx = make_context(g);
  if (o.count.empty() == o.load.empty()) throw UsageError("rep needs exactly one of --count, --load");
  LinearRep rep = o.load.empty() ? count_rep(ctx.sequence, parse_count_kind(o.count)) : load_rep(o.load);
  if (o.minimized) rep = minimize_rep(rep);
  json j{{"command", "rep"}, {"dimension", rep.dimension()}, {"leading_zero_stable", rep.leading_zero_stable()}};
  std::ostringstream text;
  text << "dimension " << rep.dimension() << "\n";
  int status = ok;
  if (!o.eval.empty()) {
    auto [a, b] = parse_range(o.eval);
    json values = json::array();
    text << "values";
    for (std::uint64_t n = a; n <= b; ++n) {
      std::string v = rep.eval(n).get_str();
      values.push_back(v);
      text << " " << v;
    }
    text << "\n";
    j["eval"] = {{"from", a}, {"values", values}};
  }
  if (!o.relations.empty()) {
    json rels = json::array();
    for (const auto& rel : load_relations(o.relations)) {
      RelationCheck ck = verify_relation(rel, rep, o.bound);
      json e{{"relation", rel.str()}, {"holds", ck.holds}};
      text << (ck.holds ? "holds  " : "FAILS  ") << rel.str();
      if (!ck.holds) {
        e["first_failure"] = *ck.first_failure;
        e["lhs"] = ck.lhs.get_str();
        e["rhs"] = ck.rhs.get_str();
        text << "  (n=" << *ck.first_failure << ": " << ck.lhs.get_str() << " vs " << ck.rhs.get_str() << ")";
        status = falsified;
      }
      text << "\n";
      rels.push_back(e);
    }
    j["relations"] = rels;
    j["bound"] = o.bound;
  }
  if (o.piecewise) {
    PiecewiseCheck pw = verify_piecewise_formula(rep, o.piecewise);
    j["piecewise"] = {{"bound", o.piecewise}, {"holds", pw.holds}, {"mismatches", pw.mismatches}, {"uncovered", pw.uncovered}};
    text << "piecewise formula for 8 <= n <= " << o.piecewise << ": " << (pw.holds ? "holds" : "fails") << " ("
         << pw.mismatches.size() << " mismatches, " << pw.uncovered.size() << " uncovered)\n";
    if (!pw.holds) status = falsified;
  }
  if (!o.compare.empty()) {
    bool eq = reps_equal(rep, load_rep(o.compare));
    j["equal"] = eq;
    text << "equal to " << o.compare << ": " << (eq ? "yes" : "no") << "\n";
    if (!eq) status = falsified;
  }
  if (!o.format.empty()) {
    if (o.format != "text" && o.format != "json") throw UsageError("unknown format '" + o.format + "' (text, json)");
    if (g.json) j["representation"] = json::parse(to_json(rep));
    else text << (o.format == "json" ? to_json(rep) + "\n" : to_text(rep));
  }
  emit(g, j, text.str());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide first-order properties of automatic sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--lsd", g.lsd, "Least-significant-digit-first representations");
  app.add_flag("--timing", g.timing, "Include wall-clock time in JSON output");
  app.add_option("-s,--sequence", g.sequence, "Sequence bound to every symbol")->default_str("thue-morse");
  app.add_option("-P,--predicates", g.libraries, "Extra predicate file(s)");
  app.add_option("-b,--bind", g.bindings, "Bind a symbol, e.g. F=fibonacci");

  std::string text;
  std::uint64_t bound = 100;

  auto* decide_cmd = app.add_subcommand("decide", "Decide a sentence");
  decide_cmd->add_option("sentence", text, "Sentence")->required();

  auto* accept = app.add_subcommand("accept-set", "Automaton and members of a one-variable formula");
  accept->add_option("formula", text, "Formula with one free variable")->required();
  accept->add_option("--bound", bound, "Largest member listed")->default_val(100);

  std::string property;
  std::uint64_t from = 0, to = 15;
  bool minimized = false;
  auto* count = app.add_subcommand("count", "Distinct factors of each length");
  count->add_option("property", property, "closed, privileged or privileged-palindrome")->required();
  count->add_option("--from", from, "First length")->default_val(0);
  count->add_option("--to", to, "Last length")->default_val(15);
  count->add_flag("--minimize", minimized, "Minimize the representation first");

  ExportOptions ex;
  auto* exp = app.add_subcommand("export", "Write an automaton or representation");
  exp->add_option("--formula", ex.formula, "Automaton of a formula");
  exp->add_flag("--generator", ex.generator, "Generator of the sequence");
  exp->add_option("--count", ex.count, "Counting representation");
  exp->add_flag("--minimize", ex.minimized, "Minimize the representation");
  exp->add_option("-f,--format", ex.format, "dot, text or json")->default_val("text");
  exp->add_option("-o,--output", ex.output, "Output file");
  exp->add_option("--title", ex.title, "Graph title");

  std::string predicate;
  auto* cross = app.add_subcommand("crosscheck", "Compare a compiled predicate with direct checks");
  cross->add_option("predicate", predicate, "Library predicate")->required();
  cross->add_option("--bound", bound, "Largest argument sum")->default_val(64);

  auto* orc = app.add_subcommand("oracle", "Direct computations on explicit words");
  orc->require_subcommand(1);
  std::size_t max_len = 20, window = 256, length = 0, n_prefix = 0;
  bool list = false;
  std::string word;
  auto* factors = orc->add_subcommand("factors", "Distinct factors with a property");
  factors->add_option("property", property,
                      "factor, palindrome, closed, privileged, rich, trapezoidal, balanced, unbalanced")
      ->required();
  factors->add_option("--max-len", max_len, "Longest length examined")->default_val(20);
  factors->add_flag("--list", list, "List the factors");
  auto* wordc = orc->add_subcommand("word", "Properties of one word");
  wordc->add_option("word", word, "Word")->required();
  auto* maxpal = orc->add_subcommand("maxpal", "Maximal palindromes of a prefix");
  maxpal->add_option("--window", window, "Palindromes taken from this many letters")->default_val(256);
  maxpal->add_option("--prefix-length", length, "Letters searched for extensions")->default_val(65536);
  auto* pals = orc->add_subcommand("palindromes", "Distinct palindromes in a prefix");
  pals->add_option("n", n_prefix, "Prefix length")->required();

  RepOptions ro;
  auto* rep = app.add_subcommand("rep", "Linear representations");
  rep->add_option("--count", ro.count, "Build for closed, privileged or privileged-palindrome");
  rep->add_option("--load", ro.load, "Read a representation file");
  rep->add_flag("--minimize", ro.minimized, "Minimize");
  rep->add_option("--eval", ro.eval, "Evaluate at n or on a..b");
  rep->add_option("--relations", ro.relations, "Verify the relations in a file");
  rep->add_option("--bound", ro.bound, "Largest n for relations")->default_val(2048);
  rep->add_option("--piecewise", ro.piecewise, "Check the closed-factor formula up to this n");
  rep->add_option("--compare", ro.compare, "Decide equality with a representation file");
  rep->add_option("--print", ro.format, "Print the representation (text or json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*decide_cmd) return cmd_decide(g, text);
    if (*accept) return cmd_accept_set(g, text, bound);
    if (*count) return cmd_count(g, property, from, to, minimized);
    if (*exp) return cmd_export(g, ex);
    if (*cross) return cmd_crosscheck(g, predicate, bound);
    if (*factors) return cmd_oracle_factors(g, property, max_len, list);
    if (*wordc) return cmd_oracle_word(g, word);
    if (*maxpal) return cmd_oracle_maxpal(g, window, length);
    if (*pals) return cmd_oracle_palindromes(g, n_prefix);
    if (*rep) return cmd_rep(g, ro);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const CompileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const InfiniteCountError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const oracle::StabilizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return internal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}
