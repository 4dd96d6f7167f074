#include "autoseq/engine.hpp"
#include "autoseq/io.hpp"
#include "autoseq/logic.hpp"
#include "doctest.h"

using namespace autoseq;

TEST_CASE("automata round-trip through text and JSON") {
  Compiler c = make_compiler(SequenceId::thue_morse);
  Relation r = c.compile("$Pal(i,n)");
  for (const std::string& s : {to_text(r.dfa, r.vars), to_json(r.dfa, r.vars)}) {
    LoadedAutomaton back = load_automaton(s);
    CHECK_FALSE(back.has_output);
    CHECK(back.tracks == r.vars);
    CHECK(back.dfa == r.dfa);
  }
  Dfao g = dfao(SequenceId::rudin_shapiro);
  for (const std::string& s : {to_text(g), to_json(g)}) {
    LoadedAutomaton back = load_automaton(s);
    CHECK(back.has_output);
    CHECK(back.dfao == g);
  }
}

TEST_CASE("DOT output marks accepting states") {
  Compiler c = make_compiler(SequenceId::thue_morse);
  Relation r = c.compile("n = 2");
  std::string dot = to_dot(r.dfa, r.vars, "two");
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"two\\ntracks: n\"") != std::string::npos);
}

TEST_CASE("malformed automata are rejected") {
  CHECK_THROWS(load_automaton(""));
  CHECK_THROWS(load_automaton("dfa arity 1 radix 2 states 1 initial 0\n0 [0] -> 0\naccepting 0\n"));
  CHECK_THROWS(load_automaton("dfa arity 1 radix 2 states 1 initial 0\n0 [0] -> 0\n0 [1] -> 3\n"));
  CHECK_NOTHROW(load_automaton("dfa arity 1 radix 2 states 1 initial 0\n0 [0] -> 0\n0 [1] -> 0\naccepting\n"));
  CHECK_THROWS(load_automaton("dfao arity 1 radix 2 states 1 initial 0\n0 [0] -> 0\n0 [1] -> 0\n"));
}
