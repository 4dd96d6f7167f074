#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "autoseq/logic.hpp"

namespace autoseq {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + message), pos_(pos) {}

// ------------------------------------------------------------ linear forms

std::optional<std::string> LinearForm::plain_variable() const {
  if (constant != 0 || coeffs.size() != 1 || coeffs.begin()->second != 1) return std::nullopt;
  return coeffs.begin()->first;
}

LinearForm LinearForm::operator-(const LinearForm& other) const {
  LinearForm out = *this;
  out.constant -= other.constant;
  for (const auto& [v, c] : other.coeffs) {
    if ((out.coeffs[v] -= c) == 0) out.coeffs.erase(v);
  }
  return out;
}

std::string LinearForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : coeffs) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << v;
    first = false;
  }
  if (first) {
    os << constant;
  } else if (constant != 0) {
    os << (constant < 0 ? " - " : " + ") << (constant < 0 ? -constant : constant);
  }
  return os.str();
}

LinearForm normalize(const Term& t) {
  switch (t.kind) {
    case Term::Kind::variable: return LinearForm{{{t.name, 1}}, 0};
    case Term::Kind::constant: return LinearForm{{}, t.value};
    case Term::Kind::add: {
      LinearForm zero;
      return normalize(*t.left) - (zero - normalize(*t.right));
    }
    case Term::Kind::subtract: return normalize(*t.left) - normalize(*t.right);
    case Term::Kind::scale: {
      LinearForm f = normalize(*t.left);
      if (t.value == 0) return {};
      for (auto& [v, c] : f.coeffs) c *= t.value;
      f.constant *= t.value;
      return f;
    }
  }
  return {};
}

// ------------------------------------------------------------------ lexer

namespace {

enum class Tok {
  var, symbol, macro, number, forall, exists, lparen, rparen, lbrack, rbrack, comma, plus, minus, star,
  lnot, land, lor, implies, iff, eq, ne, lt, le, gt, ge, kw_true, kw_false, kw_def, assign, semicolon, end
};

struct Token {
  Tok kind;
  std::string text;
  std::int64_t value = 0;
  SourcePos pos;
};

std::string describe(Tok k) {
  switch (k) {
    case Tok::var: return "variable";
    case Tok::symbol: return "sequence symbol";
    case Tok::macro: return "macro call";
    case Tok::number: return "number";
    case Tok::forall: return "'A'";
    case Tok::exists: return "'E'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrack: return "'['";
    case Tok::rbrack: return "']'";
    case Tok::comma: return "','";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::lnot: return "'~'";
    case Tok::land: return "'&'";
    case Tok::lor: return "'|'";
    case Tok::implies: return "'=>'";
    case Tok::iff: return "'<=>'";
    case Tok::eq: return "'='";
    case Tok::ne: return "'!='";
    case Tok::lt: return "'<'";
    case Tok::le: return "'<='";
    case Tok::gt: return "'>'";
    case Tok::ge: return "'>='";
    case Tok::kw_true: return "'true'";
    case Tok::kw_false: return "'false'";
    case Tok::kw_def: return "'def'";
    case Tok::assign: return "':='";
    case Tok::semicolon: return "';'";
    case Tok::end: return "end of input";
  }
  return "?";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view src) {
  static const std::pair<std::string_view, Tok> unicode[] = {
      {"∀", Tok::forall}, {"∃", Tok::exists}, {"≤", Tok::le},      {"≥", Tok::ge},
      {"≠", Tok::ne},     {"¬", Tok::lnot},   {"∧", Tok::land},    {"∨", Tok::lor},
      {"⇒", Tok::implies}, {"⇔", Tok::iff},   {"−", Tok::minus},
  };
  static const std::pair<std::string_view, Tok> ascii[] = {
      {"<=>", Tok::iff}, {"=>", Tok::implies}, {":=", Tok::assign}, {"<=", Tok::le}, {">=", Tok::ge},
      {"!=", Tok::ne},   {"(", Tok::lparen},   {")", Tok::rparen},  {"[", Tok::lbrack}, {"]", Tok::rbrack},
      {",", Tok::comma}, {"+", Tok::plus},     {"-", Tok::minus},   {"*", Tok::star},   {"~", Tok::lnot},
      {"&", Tok::land},  {"|", Tok::lor},      {"=", Tok::eq},      {"<", Tok::lt},     {">", Tok::gt},
      {";", Tok::semicolon},
  };
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++pos.col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourcePos start = pos;
    std::string_view rest = src.substr(i);
    bool matched = false;
    for (const auto& [text, kind] : unicode) {
      if (rest.starts_with(text)) {
        out.push_back({kind, std::string(text), 0, start});
        advance(text.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::int64_t v = 0;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        if (v > (INT64_MAX - 9) / 10) throw ParseError(start, "number too large");
        v = v * 10 + (src[j] - '0');
        ++j;
      }
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), v, start});
      advance(j - i);
      continue;
    }
    if (c == '$') {
      std::size_t j = i + 1;
      while (j < src.size() && (ident_char(src[j]) || src[j] == '\'')) ++j;
      if (j == i + 1) throw ParseError(start, "expected macro name after '$'");
      out.push_back({Tok::macro, std::string(src.substr(i + 1, j - i - 1)), 0, start});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      bool naming = !out.empty() && out.back().kind == Tok::kw_def;
      if ((c == 'A' || c == 'E') && !naming) {
        char next = i + 1 < src.size() ? src[i + 1] : ' ';
        if (next != '[' && !std::isupper(static_cast<unsigned char>(next))) {
          out.push_back({c == 'A' ? Tok::forall : Tok::exists, std::string(1, c), 0, start});
          advance(1);
          continue;
        }
      }
      bool upper = std::isupper(static_cast<unsigned char>(c)) || naming;
      std::size_t j = i;
      while (j < src.size() && (ident_char(src[j]) || (upper && src[j] == '\''))) ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = upper ? Tok::symbol : Tok::var;
      if (word == "true") kind = Tok::kw_true;
      if (word == "false") kind = Tok::kw_false;
      if (word == "def") kind = Tok::kw_def;
      out.push_back({kind, word, 0, start});
      advance(j - i);
      continue;
    }
    for (const auto& [text, kind] : ascii) {
      if (rest.starts_with(text)) {
        out.push_back({kind, std::string(text), 0, start});
        advance(text.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::end, "", 0, pos});
  return out;
}

// ----------------------------------------------------------------- parser

bool is_relation(Tok k) {
  return k == Tok::eq || k == Tok::ne || k == Tok::lt || k == Tok::le || k == Tok::gt || k == Tok::ge;
}

RelOp relation_of(Tok k) {
  switch (k) {
    case Tok::eq: return RelOp::eq;
    case Tok::ne: return RelOp::ne;
    case Tok::lt: return RelOp::lt;
    case Tok::le: return RelOp::le;
    case Tok::gt: return RelOp::gt;
    default: return RelOp::ge;
  }
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const PredicateLibrary* library)
      : toks_(std::move(tokens)), library_(library) {}

  FormulaPtr formula_to_end() {
    FormulaPtr f = formula();
    expect(Tok::end);
    return f;
  }

  bool at_end() const { return peek().kind == Tok::end; }

  MacroDef definition() {
    MacroDef def;
    def.pos = peek().pos;
    expect(Tok::kw_def);
    const Token& name = peek();
    if (name.kind != Tok::symbol)
      throw ParseError(name.pos, "expected macro name after 'def'");
    def.name = name.text;
    ++at_;
    expect(Tok::lparen);
    if (peek().kind != Tok::rparen) {
      do {
        const Token& p = expect(Tok::var);
        if (std::find(def.params.begin(), def.params.end(), p.text) != def.params.end())
          throw ParseError(p.pos, "duplicate parameter '" + p.text + "'");
        def.params.push_back(p.text);
      } while (accept(Tok::comma));
    }
    expect(Tok::rparen);
    expect(Tok::assign);
    def.body = formula();
    expect(Tok::semicolon);
    return def;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }

  const Token& expect(Tok k) {
    const Token& t = peek();
    if (t.kind != k)
      throw ParseError(t.pos, "expected " + describe(k) + ", found " + (t.kind == Tok::end ? describe(t.kind) : "'" + t.text + "'"));
    ++at_;
    return t;
  }

  static FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

  FormulaPtr formula() { return iff(); }

  FormulaPtr iff() {
    FormulaPtr left = implies();
    while (peek().kind == Tok::iff) {
      SourcePos pos = peek().pos;
      ++at_;
      FormulaPtr right = implies();
      Formula f;
      f.kind = Formula::Kind::binary;
      f.pos = pos;
      f.op = BoolOp::iff;
      f.left = left;
      f.right = right;
      left = make(std::move(f));
    }
    return left;
  }

  FormulaPtr implies() {
    FormulaPtr left = disjunction();
    if (peek().kind != Tok::implies) return left;
    SourcePos pos = peek().pos;
    ++at_;
    FormulaPtr right = implies();
    Formula f;
    f.kind = Formula::Kind::binary;
    f.pos = pos;
    f.op = BoolOp::implies;
    f.left = left;
    f.right = right;
    return make(std::move(f));
  }

  FormulaPtr disjunction() {
    FormulaPtr left = conjunction();
    while (peek().kind == Tok::lor) {
      SourcePos pos = peek().pos;
      ++at_;
      Formula f;
      f.kind = Formula::Kind::binary;
      f.pos = pos;
      f.op = BoolOp::disj;
      f.left = left;
      f.right = conjunction();
      left = make(std::move(f));
    }
    return left;
  }

  FormulaPtr conjunction() {
    FormulaPtr left = unary();
    while (peek().kind == Tok::land) {
      SourcePos pos = peek().pos;
      ++at_;
      Formula f;
      f.kind = Formula::Kind::binary;
      f.pos = pos;
      f.op = BoolOp::conj;
      f.left = left;
      f.right = unary();
      left = make(std::move(f));
    }
    return left;
  }

  FormulaPtr unary() {
    const Token& t = peek();
    if (t.kind == Tok::lnot) {
      ++at_;
      Formula f;
      f.kind = Formula::Kind::negation;
      f.pos = t.pos;
      f.left = unary();
      return make(std::move(f));
    }
    if (t.kind == Tok::forall || t.kind == Tok::exists) {
      ++at_;
      Formula f;
      f.kind = t.kind == Tok::forall ? Formula::Kind::forall : Formula::Kind::exists;
      f.pos = t.pos;
      do {
        f.vars.push_back(expect(Tok::var).text);
      } while (accept(Tok::comma));
      f.left = formula();
      return make(std::move(f));
    }
    return primary();
  }

  FormulaPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kw_true:
      case Tok::kw_false: {
        ++at_;
        Formula f;
        f.kind = Formula::Kind::truth;
        f.pos = t.pos;
        f.value = t.kind == Tok::kw_true;
        return make(std::move(f));
      }
      case Tok::macro: return call();
      case Tok::lparen: {
        std::size_t save = at_;
        try {
          ++at_;
          FormulaPtr inner = formula();
          expect(Tok::rparen);
          Tok next = peek().kind;
          if (!is_relation(next) && next != Tok::plus && next != Tok::minus && next != Tok::star) return inner;
        } catch (const ParseError& first) {
          std::size_t reached = at_;
          at_ = save;
          try {
            return atom();
          } catch (const ParseError&) {
            if (reached >= at_) throw first;
            throw;
          }
        }
        at_ = save;
        return atom();
      }
      default: return atom();
    }
  }

  FormulaPtr call() {
    const Token& name = expect(Tok::macro);
    Formula f;
    f.kind = Formula::Kind::call;
    f.pos = name.pos;
    f.macro = name.text;
    expect(Tok::lparen);
    if (peek().kind != Tok::rparen) {
      do {
        f.args.push_back(term());
      } while (accept(Tok::comma));
    }
    expect(Tok::rparen);
    if (library_) {
      const MacroDef* def = library_->find(f.macro);
      if (!def) throw ParseError(name.pos, "unknown macro '" + f.macro + "'");
      if (def->params.size() != f.args.size())
        throw ParseError(name.pos, "macro '" + f.macro + "' expects " + std::to_string(def->params.size()) +
                                       " arguments, got " + std::to_string(f.args.size()));
    }
    return make(std::move(f));
  }

  struct Operand {
    SourcePos pos;
    std::string symbol;  // empty for a plain term
    TermPtr term;
  };

  Operand operand() {
    const Token& t = peek();
    if (t.kind == Tok::symbol) {
      ++at_;
      expect(Tok::lbrack);
      TermPtr index = term();
      expect(Tok::rbrack);
      return {t.pos, t.text, index};
    }
    return {t.pos, "", term()};
  }

  FormulaPtr atom() {
    Operand lhs = operand();
    const Token& r = peek();
    if (!is_relation(r.kind))
      throw ParseError(r.pos, "expected a relation, found " + (r.kind == Tok::end ? describe(r.kind) : "'" + r.text + "'"));
    ++at_;
    Operand rhs = operand();
    RelOp rel = relation_of(r.kind);
    if (lhs.symbol.empty() && rhs.symbol.empty()) {
      Formula f;
      f.kind = Formula::Kind::compare;
      f.pos = r.pos;
      f.rel = rel;
      f.lhs = lhs.term;
      f.rhs = rhs.term;
      return make(std::move(f));
    }
    if (rel != RelOp::eq && rel != RelOp::ne) throw ParseError(r.pos, "sequence terms only support '=' and '!='");
    if (!lhs.symbol.empty() && !rhs.symbol.empty()) {
      Formula f;
      f.kind = Formula::Kind::seq_seq;
      f.pos = r.pos;
      f.rel = rel;
      f.symbol = lhs.symbol;
      f.lhs = lhs.term;
      f.symbol2 = rhs.symbol;
      f.rhs = rhs.term;
      return make(std::move(f));
    }
    if (lhs.symbol.empty()) std::swap(lhs, rhs);
    LinearForm letter = normalize(*rhs.term);
    if (!letter.is_constant() || letter.constant < 0)
      throw ParseError(rhs.pos, "a sequence term can only be compared with a letter or another sequence term");
    Formula f;
    f.kind = Formula::Kind::seq_const;
    f.pos = r.pos;
    f.rel = rel;
    f.symbol = lhs.symbol;
    f.lhs = lhs.term;
    f.letter = static_cast<int>(letter.constant);
    return make(std::move(f));
  }

  static TermPtr make_term(Term t) { return std::make_shared<const Term>(std::move(t)); }

  TermPtr term() {
    TermPtr left;
    if (peek().kind == Tok::minus) {
      SourcePos pos = peek().pos;
      ++at_;
      Term zero;
      zero.kind = Term::Kind::constant;
      zero.pos = pos;
      Term t;
      t.kind = Term::Kind::subtract;
      t.pos = pos;
      t.left = make_term(zero);
      t.right = product();
      left = make_term(std::move(t));
    } else {
      left = product();
    }
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = peek();
      ++at_;
      Term t;
      t.kind = op.kind == Tok::plus ? Term::Kind::add : Term::Kind::subtract;
      t.pos = op.pos;
      t.left = left;
      t.right = product();
      left = make_term(std::move(t));
    }
    return left;
  }

  TermPtr product() {
    TermPtr left = factor();
    while (true) {
      bool star = peek().kind == Tok::star;
      // juxtaposition such as "2n"
      bool implicit = left->kind == Term::Kind::constant && (peek().kind == Tok::var || peek().kind == Tok::lparen);
      if (!star && !implicit) break;
      SourcePos pos = peek().pos;
      if (star) ++at_;
      TermPtr right = factor();
      TermPtr scalar = left, other = right;
      if (scalar->kind != Term::Kind::constant) std::swap(scalar, other);
      if (scalar->kind != Term::Kind::constant) throw ParseError(pos, "multiplication of two variables is not allowed");
      Term t;
      t.kind = Term::Kind::scale;
      t.pos = pos;
      t.value = scalar->value;
      t.left = other;
      left = make_term(std::move(t));
    }
    return left;
  }

  TermPtr factor() {
    const Token& t = peek();
    if (t.kind == Tok::var) {
      ++at_;
      Term v;
      v.kind = Term::Kind::variable;
      v.pos = t.pos;
      v.name = t.text;
      return make_term(std::move(v));
    }
    if (t.kind == Tok::number) {
      ++at_;
      Term c;
      c.kind = Term::Kind::constant;
      c.pos = t.pos;
      c.value = t.value;
      return make_term(std::move(c));
    }
    if (t.kind == Tok::lparen) {
      ++at_;
      TermPtr inner = term();
      expect(Tok::rparen);
      return inner;
    }
    throw ParseError(t.pos, "expected a term, found " + (t.kind == Tok::end ? describe(t.kind) : "'" + t.text + "'"));
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  const PredicateLibrary* library_;
};

void collect_term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::variable) out.insert(t.name);
  if (t.left) collect_term_vars(*t.left, out);
  if (t.right) collect_term_vars(*t.right, out);
}

void collect_free(const Formula& f, std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::truth: return;
    case Formula::Kind::compare:
    case Formula::Kind::seq_const:
    case Formula::Kind::seq_seq:
      if (f.lhs) collect_term_vars(*f.lhs, out);
      if (f.rhs) collect_term_vars(*f.rhs, out);
      return;
    case Formula::Kind::negation: collect_free(*f.left, out); return;
    case Formula::Kind::binary:
      collect_free(*f.left, out);
      collect_free(*f.right, out);
      return;
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      std::set<std::string> inner;
      collect_free(*f.left, inner);
      for (const auto& v : f.vars) inner.erase(v);
      out.insert(inner.begin(), inner.end());
      return;
    }
    case Formula::Kind::call:
      for (const auto& a : f.args) collect_term_vars(*a, out);
      return;
  }
}

std::string term_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::variable: return t.name;
    case Term::Kind::constant: return std::to_string(t.value);
    case Term::Kind::add: return term_string(*t.left) + "+" + term_string(*t.right);
    case Term::Kind::subtract: {
      std::string r = term_string(*t.right);
      if (t.right->kind == Term::Kind::add || t.right->kind == Term::Kind::subtract) r = "(" + r + ")";
      return term_string(*t.left) + "-" + r;
    }
    case Term::Kind::scale: {
      std::string inner = term_string(*t.left);
      if (t.left->kind == Term::Kind::add || t.left->kind == Term::Kind::subtract) inner = "(" + inner + ")";
      return std::to_string(t.value) + "*" + inner;
    }
  }
  return "?";
}

const char* rel_string(RelOp r) {
  switch (r) {
    case RelOp::eq: return "=";
    case RelOp::ne: return "!=";
    case RelOp::lt: return "<";
    case RelOp::le: return "<=";
    case RelOp::gt: return ">";
    case RelOp::ge: return ">=";
  }
  return "?";
}

}  // namespace

FormulaPtr parse_formula(std::string_view text, const PredicateLibrary* library) {
  Parser p(lex(text), library);
  return p.formula_to_end();
}

std::vector<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  collect_free(f, out);
  return {out.begin(), out.end()};
}

std::string to_string(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::truth: return f.value ? "true" : "false";
    case Formula::Kind::compare:
      return term_string(*f.lhs) + " " + rel_string(f.rel) + " " + term_string(*f.rhs);
    case Formula::Kind::seq_const:
      return f.symbol + "[" + term_string(*f.lhs) + "] " + rel_string(f.rel) + " " + std::to_string(f.letter);
    case Formula::Kind::seq_seq:
      return f.symbol + "[" + term_string(*f.lhs) + "] " + rel_string(f.rel) + " " + f.symbol2 + "[" +
             term_string(*f.rhs) + "]";
    case Formula::Kind::negation: return "~(" + to_string(*f.left) + ")";
    case Formula::Kind::binary: {
      const char* op = f.op == BoolOp::conj      ? " & "
                       : f.op == BoolOp::disj    ? " | "
                       : f.op == BoolOp::implies ? " => "
                                                 : " <=> ";
      return "(" + to_string(*f.left) + op + to_string(*f.right) + ")";
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      std::string out = f.kind == Formula::Kind::exists ? "E" : "A";
      for (std::size_t i = 0; i < f.vars.size(); ++i) out += (i ? "," : "") + f.vars[i];
      return out + " " + to_string(*f.left);
    }
    case Formula::Kind::call: {
      std::string out = "$" + f.macro + "(";
      for (std::size_t i = 0; i < f.args.size(); ++i) out += (i ? "," : "") + term_string(*f.args[i]);
      return out + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------- library

void PredicateLibrary::add(MacroDef def) {
  if (macros_.count(def.name)) throw ParseError(def.pos, "macro '" + def.name + "' is already defined");
  std::set<std::string> free;
  collect_free(*def.body, free);
  for (const auto& v : free)
    if (std::find(def.params.begin(), def.params.end(), v) == def.params.end())
      throw ParseError(def.pos, "unbound variable '" + v + "' in macro '" + def.name + "'");
  order_.push_back(def.name);
  std::string name = def.name;
  macros_.emplace(std::move(name), std::move(def));
}

void PredicateLibrary::merge(const PredicateLibrary& other) {
  for (const auto& name : other.order_) {
    if (macros_.count(name)) continue;
    order_.push_back(name);
    macros_.emplace(name, other.macros_.at(name));
  }
}

const MacroDef* PredicateLibrary::find(std::string_view name) const {
  auto it = macros_.find(name);
  return it == macros_.end() ? nullptr : &it->second;
}

PredicateLibrary PredicateLibrary::parse(std::string_view text) {
  PredicateLibrary lib;
  std::vector<Token> toks = lex(text);
  // definitions are parsed one at a time so calls resolve against earlier ones
  Parser p(std::move(toks), &lib);
  while (!p.at_end()) lib.add(p.definition());
  return lib;
}

const PredicateLibrary& PredicateLibrary::standard() {
  static const PredicateLibrary lib = parse(standard_library_text());
  return lib;
}

}  // namespace autoseq
