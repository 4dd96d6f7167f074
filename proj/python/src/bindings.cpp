#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "autoseq/automata.hpp"
#include "autoseq/counting.hpp"
#include "autoseq/engine.hpp"
#include "autoseq/io.hpp"
#include "autoseq/logic.hpp"
#include "autoseq/oracle.hpp"
#include "autoseq/sequences.hpp"

namespace py = pybind11;
using namespace autoseq;

namespace {

struct Setup {
  PredicateLibrary library = PredicateLibrary::standard();
  Binding binding;
  DigitOrder order = DigitOrder::msd_first;
};

Setup setup(const std::string& sequence, bool lsd, const std::map<std::string, std::string>& bindings,
            const std::string& predicates) {
  Setup s;
  s.binding.fallback = parse_sequence(sequence);
  for (const auto& [sym, seq] : bindings) s.binding.symbols[sym] = parse_sequence(seq);
  if (!predicates.empty()) s.library.merge(PredicateLibrary::parse(predicates));
  s.order = lsd ? DigitOrder::lsd_first : DigitOrder::msd_first;
  return s;
}

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(q.get_str()); }

py::dict decide_py(const std::string& sentence, const std::string& sequence, bool lsd,
                   const std::map<std::string, std::string>& bindings, const std::string& predicates) {
  Setup s = setup(sequence, lsd, bindings, predicates);
  FormulaPtr f = parse_formula(sentence, &s.library);
  Compiler c(s.library, s.binding, system_for(s.binding, sequence_symbols(*f, s.library), s.order));
  Decision d = decide(c, *f);
  py::dict out;
  out["value"] = d.value;
  out["kind"] = d.kind.empty() ? py::object(py::none()) : py::str(d.kind);
  py::dict values;
  for (std::size_t k = 0; k < d.vars.size(); ++k) values[py::str(d.vars[k])] = d.values[k];
  out["values"] = values;
  return out;
}

Relation compile_py(const Setup& s, const std::string& formula, NumerationSystem* sys) {
  FormulaPtr f = parse_formula(formula, &s.library);
  *sys = system_for(s.binding, sequence_symbols(*f, s.library), s.order);
  Compiler c(s.library, s.binding, *sys);
  return c.compile(*f);
}

py::dict accept_set_py(const std::string& formula, const std::string& sequence, std::uint64_t bound, bool lsd,
                       const std::map<std::string, std::string>& bindings, const std::string& predicates) {
  Setup s = setup(sequence, lsd, bindings, predicates);
  NumerationSystem sys;
  Relation r = compile_py(s, formula, &sys);
  if (r.vars.size() != 1) throw std::invalid_argument("accept_set needs exactly one free variable");
  py::dict out;
  out["variable"] = r.vars[0];
  out["states"] = r.dfa.num_states();
  out["states_without_dead"] = trimmed_size(r.dfa);
  out["members"] = enumerate_values(r.dfa, sys, bound);
  auto all = enumerate_finite(r.dfa, sys, 4096);
  if (all) {
    std::vector<std::uint64_t> xs;
    for (const auto& t : *all) xs.push_back(t[0]);
    out["all"] = xs;
  } else {
    out["all"] = py::none();
  }
  return out;
}

std::string export_py(const std::string& formula, const std::string& sequence, const std::string& format, bool lsd) {
  Setup s = setup(sequence, lsd, {}, "");
  NumerationSystem sys;
  Relation r = compile_py(s, formula, &sys);
  if (format == "dot") return to_dot(r.dfa, r.vars, formula);
  if (format == "json") return to_json(r.dfa, r.vars);
  if (format == "text") return to_text(r.dfa, r.vars);
  throw std::invalid_argument("unknown format '" + format + "'");
}

py::dict crosscheck_py(const std::string& sequence, const std::string& predicate, std::uint64_t bound, bool lsd) {
  CrosscheckReport r = crosscheck(parse_sequence(sequence), predicate, bound,
                                  lsd ? DigitOrder::lsd_first : DigitOrder::msd_first);
  py::dict out;
  out["tuples"] = r.tuples;
  out["states"] = r.states;
  out["mismatches"] = r.mismatch_count;
  out["examples"] = r.mismatches;
  return out;
}

py::dict property_factors_py(const std::string& sequence, const std::string& property, std::size_t max_len,
                             bool keep) {
  auto c = oracle::distinct_property_factors(parse_sequence(sequence), oracle::parse_property(property), max_len, keep);
  py::dict out;
  out["per_length"] = c.per_length;
  out["total"] = c.total;
  out["longest"] = c.longest;
  out["prefix_length"] = c.prefix_length;
  if (keep) out["factors"] = c.factors;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "First-order decision procedure for automatic sequences";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CompileError>(m, "CompileError", PyExc_ValueError);
  py::register_exception<InfiniteCountError>(m, "InfiniteCountError", PyExc_ArithmeticError);

  using Bindings = std::map<std::string, std::string>;
  m.def("decide", &decide_py, py::arg("sentence"), py::arg("sequence") = "thue-morse", py::arg("lsd") = false,
        py::arg("bindings") = Bindings{}, py::arg("predicates") = "");
  m.def("accept_set", &accept_set_py, py::arg("formula"), py::arg("sequence") = "thue-morse",
        py::arg("bound") = 100, py::arg("lsd") = false, py::arg("bindings") = Bindings{}, py::arg("predicates") = "");
  m.def("export", &export_py, py::arg("formula"), py::arg("sequence") = "thue-morse", py::arg("format") = "text",
        py::arg("lsd") = false);
  m.def("crosscheck", &crosscheck_py, py::arg("sequence"), py::arg("predicate"), py::arg("bound") = 64,
        py::arg("lsd") = false);

  m.def("sequences", [] {
    std::vector<std::string> names;
    for (auto id : all_sequences) names.push_back(sequence_name(id));
    return names;
  });
  m.def("prefix", [](const std::string& seq, std::size_t n) { return prefix(parse_sequence(seq), n); });
  m.def("library", [] {
    const auto& lib = PredicateLibrary::standard();
    return lib.names();
  });

  py::class_<LinearRep>(m, "LinearRep")
      .def_property_readonly("dimension", &LinearRep::dimension)
      .def("__call__", [](const LinearRep& r, std::uint64_t n) { return fraction(r.eval(n)); })
      .def("minimize", &minimize_rep)
      .def("equals", &reps_equal)
      .def("to_text", [](const LinearRep& r) { return to_text(r); })
      .def("to_json", [](const LinearRep& r) { return to_json(r); })
      .def("verify", [](const LinearRep& r, const std::string& relation, std::uint64_t bound) {
        RelationCheck c = verify_relation(RecurrenceRelation::parse(relation), r, bound);
        return c.holds ? py::object(py::none()) : py::object(py::int_(*c.first_failure));
      }, py::arg("relation"), py::arg("bound") = 2048)
      .def_static("from_text", [](const std::string& t) { return rep_from_text(t); })
      .def_static("from_json", [](const std::string& t) { return rep_from_json(t); });

  m.def("count_rep", [](const std::string& kind, const std::string& seq) {
    return count_rep(parse_sequence(seq), parse_count_kind(kind));
  }, py::arg("kind"), py::arg("sequence") = "thue-morse");

  py::module_ o = m.def_submodule("oracle", "Direct checks on explicit words");
  o.def("occurrences", [](const std::string& x, const std::string& w) { return oracle::occurrences(x, w); });
  o.def("is_palindrome", [](const std::string& x) { return oracle::is_palindrome(x); });
  o.def("is_closed", [](const std::string& x) { return oracle::is_closed(x); });
  o.def("is_privileged", [](const std::string& x) { return oracle::is_privileged(x); });
  o.def("is_rich", [](const std::string& x) { return oracle::is_rich(x); });
  o.def("is_trapezoidal", [](const std::string& x) { return oracle::is_trapezoidal(x); });
  o.def("is_balanced", [](const std::string& x) { return oracle::is_balanced(x); });
  o.def("distinct_palindromes", [](const std::string& x) { return oracle::distinct_palindromes(x); });
  o.def("maximal_palindromes", [](const std::string& p, std::size_t window) {
    return oracle::maximal_palindromes(p, window);
  });
  o.def("property_factors", &property_factors_py, py::arg("sequence"), py::arg("property"), py::arg("max_len"),
        py::arg("factors") = false);
}
