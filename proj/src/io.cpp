#include "autoseq/io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace autoseq {

namespace {

std::string symbol_label(const Alphabet& alpha, Symbol s) {
  std::string out = "[";
  for (int c = 0; c < alpha.arity(); ++c) out += (c ? "," : "") + std::to_string(alpha.digit(s, c));
  return out + "]";
}

template <class Machine>
std::string text_body(const char* kind, const Machine& a, const std::vector<std::string>& tracks) {
  const Alphabet& alpha = a.alphabet();
  std::ostringstream out;
  if (!tracks.empty()) {
    out << "# tracks:";
    for (const auto& t : tracks) out << " " << t;
    out << "\n";
  }
  out << kind << " arity " << alpha.arity() << " radix " << alpha.radix() << " states " << a.num_states()
      << " initial " << a.initial() << "\n";
  for (State q = 0; q < a.num_states(); ++q)
    for (Symbol s = 0; s < alpha.size(); ++s) out << q << " " << symbol_label(alpha, s) << " -> " << a.next(q, s) << "\n";
  return out.str();
}

template <class Machine>
std::string dot_body(const Machine& a, const std::vector<std::string>& tracks, std::string_view title,
                     const std::vector<std::string>& node_attrs) {
  const Alphabet& alpha = a.alphabet();
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  std::string label(title);
  if (!tracks.empty()) {
    label += label.empty() ? "" : "\\n";
    label += "tracks:";
    for (const auto& t : tracks) label += " " + t;
  }
  if (!label.empty()) out << "  label=\"" << label << "\";\n";
  out << "  start [shape=point];\n";
  for (State q = 0; q < a.num_states(); ++q) out << "  " << q << " [" << node_attrs[q] << "];\n";
  out << "  start -> " << a.initial() << ";\n";
  for (State q = 0; q < a.num_states(); ++q) {
    std::map<State, std::string> edges;
    for (Symbol s = 0; s < alpha.size(); ++s) {
      std::string& l = edges[a.next(q, s)];
      l += (l.empty() ? "" : ", ") + symbol_label(alpha, s);
    }
    for (const auto& [t, l] : edges) out << "  " << q << " -> " << t << " [label=\"" << l << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

template <class Machine>
nlohmann::json json_body(const char* kind, const Machine& a, const std::vector<std::string>& tracks) {
  nlohmann::json j;
  j["type"] = kind;
  j["arity"] = a.alphabet().arity();
  j["radix"] = a.alphabet().radix();
  j["states"] = a.num_states();
  j["initial"] = a.initial();
  j["tracks"] = tracks;
  nlohmann::json rows = nlohmann::json::array();
  for (State q = 0; q < a.num_states(); ++q) {
    nlohmann::json row = nlohmann::json::array();
    for (Symbol s = 0; s < a.alphabet().size(); ++s) row.push_back(a.next(q, s));
    rows.push_back(row);
  }
  j["transitions"] = rows;
  return j;
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("automaton text: " + what); }

}  // namespace

std::string to_text(const Dfa& a, const std::vector<std::string>& tracks) {
  std::string out = text_body("dfa", a, tracks) + "accepting";
  for (State q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) out += " " + std::to_string(q);
  return out + "\n";
}

std::string to_text(const Dfao& a, const std::vector<std::string>& tracks) {
  std::string out = text_body("dfao", a, tracks);
  for (State q = 0; q < a.num_states(); ++q) out += "output " + std::to_string(q) + " " + std::to_string(a.output(q)) + "\n";
  return out;
}

std::string to_dot(const Dfa& a, const std::vector<std::string>& tracks, std::string_view title) {
  std::vector<std::string> attrs;
  for (State q = 0; q < a.num_states(); ++q) attrs.push_back(a.is_accepting(q) ? "shape=doublecircle" : "shape=circle");
  return dot_body(a, tracks, title, attrs);
}

std::string to_dot(const Dfao& a, const std::vector<std::string>& tracks, std::string_view title) {
  std::vector<std::string> attrs;
  for (State q = 0; q < a.num_states(); ++q)
    attrs.push_back("shape=circle, label=\"" + std::to_string(q) + "/" + std::to_string(a.output(q)) + "\"");
  return dot_body(a, tracks, title, attrs);
}

std::string to_json(const Dfa& a, const std::vector<std::string>& tracks) {
  auto j = json_body("dfa", a, tracks);
  std::vector<State> acc;
  for (State q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) acc.push_back(q);
  j["accepting"] = acc;
  return j.dump(2);
}

std::string to_json(const Dfao& a, const std::vector<std::string>& tracks) {
  auto j = json_body("dfao", a, tracks);
  j["outputs"] = std::vector<int>(a.outputs().begin(), a.outputs().end());
  return j.dump(2);
}

LoadedAutomaton load_automaton(std::string_view text) {
  LoadedAutomaton out;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    auto j = nlohmann::json::parse(text);
    const std::string type = j.at("type").get<std::string>();
    if (type != "dfa" && type != "dfao") bad("unknown type '" + type + "'");
    Alphabet alpha(j.at("arity").get<int>(), j.at("radix").get<int>());
    std::vector<State> table;
    for (const auto& row : j.at("transitions")) {
      if (row.size() != alpha.size()) bad("transition row has the wrong width");
      for (const auto& t : row) table.push_back(t.get<State>());
    }
    State initial = j.at("initial").get<State>();
    State n = j.at("states").get<State>();
    if (table.size() != std::size_t{n} * alpha.size()) bad("transition count does not match the state count");
    if (j.contains("tracks")) out.tracks = j["tracks"].get<std::vector<std::string>>();
    if (type == "dfao") {
      out.has_output = true;
      out.dfao = Dfao(alpha, initial, std::move(table), j.at("outputs").get<std::vector<int>>());
    } else {
      std::vector<std::uint8_t> acc(n, 0);
      for (const auto& q : j.at("accepting")) acc.at(q.get<State>()) = 1;
      out.dfa = Dfa(alpha, initial, std::move(table), std::move(acc));
    }
    return out;
  }

  std::istringstream in{std::string(text)};
  std::string line;
  std::string kind;
  int arity = 0, radix = 0;
  State n = 0, initial = 0;
  std::vector<State> table;
  std::vector<std::uint8_t> acc;
  std::vector<int> outputs;
  std::vector<std::uint8_t> seen_output;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# tracks:", 0) == 0) {
        std::istringstream ts(line.substr(9));
        for (std::string t; ts >> t;) out.tracks.push_back(t);
      }
      continue;
    }
    std::istringstream ls(line);
    if (!header) {
      std::string w1, w2, w3, w4, w5;
      ls >> kind >> w1 >> arity >> w2 >> radix >> w3 >> n >> w4 >> initial;
      if (!ls || (kind != "dfa" && kind != "dfao") || w1 != "arity" || w2 != "radix" || w3 != "states" ||
          w4 != "initial")
        bad("malformed header '" + line + "'");
      Alphabet alpha(arity, radix);
      table.assign(std::size_t{n} * alpha.size(), n);
      acc.assign(n, 0);
      outputs.assign(n, 0);
      seen_output.assign(n, 0);
      header = true;
      continue;
    }
    std::string word;
    ls >> word;
    if (word == "accepting") {
      for (State q; ls >> q;) {
        if (q >= n) bad("accepting state out of range");
        acc[q] = 1;
      }
    } else if (word == "output") {
      State q;
      int x;
      if (!(ls >> q >> x) || q >= n) bad("malformed output line '" + line + "'");
      outputs[q] = x;
      seen_output[q] = 1;
    } else {
      State p = static_cast<State>(std::stoul(word));
      std::string digits, arrow;
      State q;
      ls >> digits >> arrow >> q;
      if (!ls || arrow != "->" || p >= n || q >= n || digits.size() < 2) bad("malformed transition '" + line + "'");
      std::vector<int> d;
      std::istringstream ds(digits.substr(1, digits.size() - 2));
      for (std::string part; std::getline(ds, part, ',');) d.push_back(std::stoi(part));
      Alphabet alpha(arity, radix);
      if (static_cast<int>(d.size()) != arity) bad("transition has the wrong arity '" + line + "'");
      table[std::size_t{p} * alpha.size() + alpha.encode(d)] = q;
    }
  }
  if (!header) bad("missing header");
  for (State t : table)
    if (t >= n) bad("transition function is not total");
  Alphabet alpha(arity, radix);
  if (kind == "dfao") {
    for (auto s : seen_output)
      if (!s) bad("missing output line");
    out.has_output = true;
    out.dfao = Dfao(alpha, initial, std::move(table), std::move(outputs));
  } else {
    out.dfa = Dfa(alpha, initial, std::move(table), std::move(acc));
  }
  return out;
}

}  // namespace autoseq
