#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autoseq/automata.hpp"

namespace autoseq {

// Text format:
//   dfa arity A radix K states N initial Q      (or "dfao ...")
//   p [d1,...,dA] -> q                           one line per transition
//   accepting q1 q2 ...                          Dfa only
//   output q x                                   Dfao only, one line per state
// Lines starting with '#' are comments; "# tracks: a b" names the tracks.

std::string to_text(const Dfa& a, const std::vector<std::string>& tracks = {});
std::string to_text(const Dfao& a, const std::vector<std::string>& tracks = {});
std::string to_dot(const Dfa& a, const std::vector<std::string>& tracks = {}, std::string_view title = "");
std::string to_dot(const Dfao& a, const std::vector<std::string>& tracks = {}, std::string_view title = "");
std::string to_json(const Dfa& a, const std::vector<std::string>& tracks = {});
std::string to_json(const Dfao& a, const std::vector<std::string>& tracks = {});

struct LoadedAutomaton {
  bool has_output = false;
  Dfa dfa;    // when !has_output
  Dfao dfao;  // when has_output
  std::vector<std::string> tracks;
};

/// Reads either format (JSON when the text starts with '{').
LoadedAutomaton load_automaton(std::string_view text);

}  // namespace autoseq
