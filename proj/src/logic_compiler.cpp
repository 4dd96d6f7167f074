#include <algorithm>
#include <set>

#include "autoseq/logic.hpp"

namespace autoseq {

SequenceId Binding::resolve(const std::string& symbol) const {
  auto it = symbols.find(symbol);
  return it == symbols.end() ? fallback : it->second;
}

namespace {

void collect_symbols(const Formula& f, const PredicateLibrary& lib, std::set<std::string>& out,
                     std::set<std::string>& seen_macros) {
  switch (f.kind) {
    case Formula::Kind::seq_const: out.insert(f.symbol); return;
    case Formula::Kind::seq_seq:
      out.insert(f.symbol);
      out.insert(f.symbol2);
      return;
    case Formula::Kind::negation:
    case Formula::Kind::exists:
    case Formula::Kind::forall: collect_symbols(*f.left, lib, out, seen_macros); return;
    case Formula::Kind::binary:
      collect_symbols(*f.left, lib, out, seen_macros);
      collect_symbols(*f.right, lib, out, seen_macros);
      return;
    case Formula::Kind::call: {
      if (!seen_macros.insert(f.macro).second) return;
      if (const MacroDef* def = lib.find(f.macro)) collect_symbols(*def->body, lib, out, seen_macros);
      return;
    }
    default: return;
  }
}

bool same_numeration(const NumerationSystem& a, const NumerationSystem& b) {
  return a.kind() == b.kind() && a.radix() == b.radix();
}

}  // namespace

std::vector<std::string> sequence_symbols(const Formula& f, const PredicateLibrary& library) {
  std::set<std::string> out, seen;
  collect_symbols(f, library, out, seen);
  return {out.begin(), out.end()};
}

NumerationSystem system_for(const Binding& binding, const std::vector<std::string>& symbols, DigitOrder order) {
  std::set<SequenceId> ids;
  for (const auto& s : symbols) ids.insert(binding.resolve(s));
  if (ids.empty()) ids.insert(binding.fallback);
  NumerationSystem sys = sequence_system(*ids.begin());
  for (SequenceId id : ids)
    if (!same_numeration(sequence_system(id), sys))
      throw CompileError("sequences " + sequence_name(*ids.begin()) + " and " + sequence_name(id) +
                         " use different numeration systems");
  return sys.with_order(order);
}

Compiler::Compiler(const PredicateLibrary& library, Binding binding, NumerationSystem system)
    : library_(library), binding_(std::move(binding)), system_(system) {}

Relation Compiler::note(Relation r) {
  ++stats_.operations;
  stats_.peak_states = std::max(stats_.peak_states, r.dfa.num_states());
  return r;
}

std::string Compiler::fresh() { return "#" + std::to_string(fresh_counter_++); }

Relation Compiler::truth(bool value) const {
  Alphabet a(0, system_.radix());
  return {{}, value ? Dfa::universal(a) : Dfa::empty_language(a)};
}

const Dfa& Compiler::validity(int arity) {
  auto it = validity_.find(arity);
  if (it == validity_.end()) it = validity_.emplace(arity, validity_automaton(system_, arity)).first;
  return it->second;
}

const Dfao& Compiler::generator(const std::string& symbol) {
  SequenceId id = binding_.resolve(symbol);
  if (!same_numeration(sequence_system(id), system_))
    throw CompileError("sequence " + sequence_name(id) + " is not automatic in " + system_.name());
  auto it = generators_.find(id);
  if (it == generators_.end()) it = generators_.emplace(id, dfao(id, system_.order())).first;
  return it->second;
}

Relation Compiler::placed(const Dfa& d, const std::vector<std::string>& names) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw CompileError("internal: repeated track name");
  if (sorted == names) return {sorted, d};
  std::vector<int> tracks;
  for (const auto& n : names)
    tracks.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), n) - sorted.begin()));
  return {sorted, minimize(cylindrify(d, static_cast<int>(names.size()), tracks))};
}

Relation Compiler::widen(const Relation& r, const std::vector<std::string>& vars) {
  if (r.vars == vars) return r;
  std::vector<int> tracks;
  for (const auto& v : r.vars) {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    if (it == vars.end() || *it != v) throw CompileError("internal: variable '" + v + "' lost while widening");
    tracks.push_back(static_cast<int>(it - vars.begin()));
  }
  const int arity = static_cast<int>(vars.size());
  Dfa d = cylindrify(r.dfa, arity, tracks);
  if (system_.is_zeckendorf()) d = product(d, validity(arity), BoolOp::conj);
  else d = minimize(d);
  return {vars, std::move(d)};
}

Relation Compiler::conj(const Relation& a, const Relation& b, BoolOp op) {
  std::vector<std::string> all;
  std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(), std::back_inserter(all));
  auto tracks = [&](const Relation& r) {
    std::vector<int> t;
    for (const auto& v : r.vars)
      t.push_back(static_cast<int>(std::lower_bound(all.begin(), all.end(), v) - all.begin()));
    return t;
  };
  const int arity = static_cast<int>(all.size());
  Dfa d = product_aligned(a.dfa, tracks(a), b.dfa, tracks(b), arity, op);
  if (op != BoolOp::conj && system_.is_zeckendorf()) d = product(d, validity(arity), BoolOp::conj);
  return note({std::move(all), std::move(d)});
}

Relation Compiler::negate(const Relation& a) {
  Dfa d = complement(a.dfa);
  if (system_.is_zeckendorf()) d = product(d, validity(a.dfa.arity()), BoolOp::conj);
  return note({a.vars, std::move(d)});
}

Relation Compiler::exists(const Relation& a, const std::string& var) {
  auto it = std::lower_bound(a.vars.begin(), a.vars.end(), var);
  if (it == a.vars.end() || *it != var) return a;
  int track = static_cast<int>(it - a.vars.begin());
  std::vector<std::string> rest = a.vars;
  rest.erase(rest.begin() + track);
  return note({std::move(rest), project(a.dfa, track, system_.order())});
}

Relation Compiler::forall(const Relation& a, const std::string& var) {
  return negate(exists(negate(a), var));
}

Relation Compiler::linear(const LinearForm& f, std::int64_t rhs) {
  std::vector<std::string> vars;
  std::vector<std::int64_t> coeffs;
  for (const auto& [v, c] : f.coeffs) {
    if (c == 0) continue;
    vars.push_back(v);
    coeffs.push_back(c);
  }
  if (vars.empty()) return truth(f.constant == rhs);
  return note({vars, linear_automaton(system_, coeffs, rhs - f.constant)});
}

Relation Compiler::comparison(const LinearForm& lhs, RelOp rel, const LinearForm& rhs) {
  switch (rel) {
    case RelOp::gt: return comparison(rhs, RelOp::lt, lhs);
    case RelOp::ge: return comparison(rhs, RelOp::le, lhs);
    case RelOp::ne: return negate(comparison(lhs, RelOp::eq, rhs));
    default: break;
  }
  LinearForm diff = lhs - rhs;  // relation against 0
  if (diff.is_constant()) {
    bool v = rel == RelOp::eq ? diff.constant == 0 : rel == RelOp::lt ? diff.constant < 0 : diff.constant <= 0;
    return truth(v);
  }
  if (rel == RelOp::eq) return linear(LinearForm{diff.coeffs, 0}, -diff.constant);
  // x < y and x <= y directly
  if (diff.constant == 0 && diff.coeffs.size() == 2) {
    auto first = diff.coeffs.begin(), second = std::next(first);
    if (first->second == -second->second && (first->second == 1 || first->second == -1)) {
      const std::string& small = first->second == 1 ? first->first : second->first;
      const std::string& large = first->second == 1 ? second->first : first->first;
      Comparison c = rel == RelOp::lt ? Comparison::lt : Comparison::le;
      return note(placed(comparison_automaton(c, system_), {small, large}));
    }
  }
  // F < 0 iff F + d + 1 = 0 for some d; F <= 0 iff F + d = 0
  std::string d = fresh();
  LinearForm shifted{diff.coeffs, 0};
  shifted.coeffs[d] = 1;
  std::int64_t rhs_value = -diff.constant - (rel == RelOp::lt ? 1 : 0);
  return exists(linear(shifted, rhs_value), d);
}

Relation Compiler::apply(const Dfa& base, const std::vector<LinearForm>& args) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, const LinearForm*>> constraints;
  std::set<std::string> used;
  for (const auto& arg : args) {
    auto plain = arg.plain_variable();
    if (plain && used.insert(*plain).second) {
      names.push_back(*plain);
    } else {
      names.push_back(fresh());
      constraints.emplace_back(names.back(), &arg);
    }
  }
  Relation r = note(placed(base, names));
  for (const auto& [name, arg] : constraints) {
    LinearForm f = LinearForm{{{name, 1}}, 0} - *arg;
    r = conj(r, linear(LinearForm{f.coeffs, 0}, -f.constant), BoolOp::conj);
    r = exists(r, name);
  }
  return r;
}

const Dfa& Compiler::macro_automaton(const std::string& name) {
  auto it = macros_.find(name);
  if (it != macros_.end()) return it->second;
  const MacroDef* def = library_.find(name);
  if (!def) throw CompileError("unknown macro '" + name + "'");
  if (std::find(expanding_.begin(), expanding_.end(), name) != expanding_.end())
    throw CompileError("recursive macro '" + name + "'");
  expanding_.push_back(name);
  Relation body = compile_node(*def->body);
  expanding_.pop_back();
  std::vector<std::string> sorted = def->params;
  std::sort(sorted.begin(), sorted.end());
  Relation wide = widen(body, sorted);
  std::vector<int> tracks;
  for (const auto& v : wide.vars)
    tracks.push_back(static_cast<int>(std::find(def->params.begin(), def->params.end(), v) - def->params.begin()));
  Dfa d = minimize(cylindrify(wide.dfa, static_cast<int>(tracks.size()), tracks));
  return macros_.emplace(name, std::move(d)).first->second;
}

Relation Compiler::compile_node(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::truth: return truth(f.value);
    case Formula::Kind::compare: return comparison(normalize(*f.lhs), f.rel, normalize(*f.rhs));
    case Formula::Kind::seq_const: {
      const Dfao& g = generator(f.symbol);
      Dfa base = output_equals(g, f.letter);
      if (f.rel == RelOp::ne) base = complement(base);
      if (system_.is_zeckendorf()) base = product(base, validity(1), BoolOp::conj);
      return apply(base, {normalize(*f.lhs)});
    }
    case Formula::Kind::seq_seq: {
      Dfa base = outputs_compare(generator(f.symbol), generator(f.symbol2), f.rel == RelOp::eq);
      if (system_.is_zeckendorf()) base = product(base, validity(2), BoolOp::conj);
      return apply(base, {normalize(*f.lhs), normalize(*f.rhs)});
    }
    case Formula::Kind::negation: return negate(compile_node(*f.left));
    case Formula::Kind::binary: {
      Relation left = compile_node(*f.left);
      Relation right = compile_node(*f.right);
      return conj(left, right, f.op);
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      Relation r = compile_node(*f.left);
      for (auto v = f.vars.rbegin(); v != f.vars.rend(); ++v)
        r = f.kind == Formula::Kind::exists ? exists(r, *v) : forall(r, *v);
      return r;
    }
    case Formula::Kind::call: {
      const MacroDef* def = library_.find(f.macro);
      if (!def) throw CompileError(std::to_string(f.pos.line) + ":" + std::to_string(f.pos.col) +
                                   ": unknown macro '" + f.macro + "'");
      if (def->params.size() != f.args.size())
        throw CompileError(std::to_string(f.pos.line) + ":" + std::to_string(f.pos.col) + ": macro '" + f.macro +
                           "' expects " + std::to_string(def->params.size()) + " arguments");
      std::vector<LinearForm> args;
      for (const auto& a : f.args) args.push_back(normalize(*a));
      const Dfa& base = macro_automaton(f.macro);
      return apply(base, args);
    }
  }
  throw CompileError("internal: unknown formula node");
}

Relation Compiler::compile(const Formula& f) { return compile_over(f, free_variables(f)); }

Relation Compiler::compile(std::string_view text) { return compile(*parse_formula(text, &library_)); }

Relation Compiler::compile_over(const Formula& f, const std::vector<std::string>& vars) {
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& v : free_variables(f))
    if (!std::binary_search(sorted.begin(), sorted.end(), v))
      throw CompileError("free variable '" + v + "' is not among the requested tracks");
  return widen(compile_node(f), sorted);
}

namespace {

// Leading block of quantifiers of one kind, flattened.
const Formula* strip_block(const Formula& f, Formula::Kind kind, std::vector<std::string>& vars) {
  const Formula* cur = &f;
  while (cur->kind == kind) {
    vars.insert(vars.end(), cur->vars.begin(), cur->vars.end());
    cur = cur->left.get();
  }
  return cur;
}

}  // namespace

Decision decide(Compiler& compiler, const Formula& sentence) {
  auto free = free_variables(sentence);
  if (!free.empty()) throw CompileError("not a sentence: free variable '" + free.front() + "'");
  Decision out;
  if (sentence.kind != Formula::Kind::exists && sentence.kind != Formula::Kind::forall) {
    Relation r = compiler.compile(sentence);
    out.value = r.dfa.is_accepting(r.dfa.initial());
    return out;
  }
  std::vector<std::string> vars;
  const Formula* body = strip_block(sentence, sentence.kind, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  bool universal = sentence.kind == Formula::Kind::forall;
  Relation r = compiler.compile_over(*body, vars);
  Dfa target = r.dfa;
  if (universal) {
    target = complement(target);
    target = product(target, validity_automaton(compiler.system(), target.arity()), BoolOp::conj);
  }
  EmptinessResult e = is_empty(target);
  out.value = universal ? e.empty : !e.empty;
  if (!e.empty) {
    Alphabet alpha = target.alphabet();
    DigitString w{compiler.system(), alpha.arity(), {}};
    for (Symbol s : e.witness)
      for (int c = 0; c < alpha.arity(); ++c) w.digits.push_back(alpha.digit(s, c));
    out.vars = r.vars;
    out.values = decode_tuple(w);
    out.kind = universal ? "counterexample" : "witness";
  }
  return out;
}

Decision decide(Compiler& compiler, std::string_view text) {
  return decide(compiler, *parse_formula(text, nullptr));
}

}  // namespace autoseq
