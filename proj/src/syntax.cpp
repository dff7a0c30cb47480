#include "palab/syntax.hpp"

#include "palab/symbols.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace palab {

namespace {
// Largest numeral spelled out as an actual successor chain.
constexpr std::uint64_t kEagerNumeral = 100000;
}  // namespace

TermPtr t_var(std::uint64_t k) {
  if (k == 0) throw ParseError("variable indices start at 1");
  return std::make_shared<Term>(Term{Term::Variable{k}});
}
TermPtr t_zero() { return std::make_shared<Term>(Term{Term::Zero{}}); }
TermPtr t_succ(TermPtr t) { return std::make_shared<Term>(Term{Term::Succ{std::move(t)}}); }
TermPtr t_plus(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Term::Plus{std::move(a), std::move(b)}});
}
TermPtr t_times(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Term::Times{std::move(a), std::move(b)}});
}
TermPtr t_sb(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Term::SbTerm{std::move(a), std::move(b)}});
}
TermPtr t_bignum(SymNat n) { return std::make_shared<Term>(Term{Term::BigNumeral{std::move(n)}}); }

FormulaPtr f_atom(std::string name) {
  return std::make_shared<Formula>(Formula{Formula::Atom{std::move(name)}});
}
FormulaPtr f_eq(TermPtr a, TermPtr b) {
  return std::make_shared<Formula>(Formula{Formula::Equals{std::move(a), std::move(b)}});
}
FormulaPtr f_not(FormulaPtr a) {
  return std::make_shared<Formula>(Formula{Formula::Not{std::move(a)}});
}
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Formula::Implies{std::move(a), std::move(b)}});
}
FormulaPtr f_all(std::uint64_t var, FormulaPtr body) {
  if (var == 0) throw ParseError("variable indices start at 1");
  return std::make_shared<Formula>(Formula{Formula::ForAll{var, std::move(body)}});
}

TermPtr numeral(const SymNat& n) {
  if (auto v = probe_value(n, 63)) {
    std::uint64_t value = v->convert_to<std::uint64_t>();
    if (value <= kEagerNumeral) {
      TermPtr t = t_zero();
      for (std::uint64_t i = 0; i < value; ++i) t = t_succ(t);
      return t;
    }
    return t_bignum(SymNat::of(*v));
  }
  return t_bignum(n);
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  struct Cmp {
    const Term& other;
    bool operator()(const Term::Variable& x) const {
      return std::get<Term::Variable>(other.node).index == x.index;
    }
    bool operator()(const Term::Zero&) const { return true; }
    bool operator()(const Term::Succ& x) const {
      return term_equal(x.arg, std::get<Term::Succ>(other.node).arg);
    }
    bool operator()(const Term::Plus& x) const {
      const auto& o = std::get<Term::Plus>(other.node);
      return term_equal(x.lhs, o.lhs) && term_equal(x.rhs, o.rhs);
    }
    bool operator()(const Term::Times& x) const {
      const auto& o = std::get<Term::Times>(other.node);
      return term_equal(x.lhs, o.lhs) && term_equal(x.rhs, o.rhs);
    }
    bool operator()(const Term::SbTerm& x) const {
      const auto& o = std::get<Term::SbTerm>(other.node);
      return term_equal(x.lhs, o.lhs) && term_equal(x.rhs, o.rhs);
    }
    bool operator()(const Term::BigNumeral& x) const {
      return symnat_equal(x.n, std::get<Term::BigNumeral>(other.node).n);
    }
  };
  return std::visit(Cmp{*b}, a->node);
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  struct Cmp {
    const Formula& other;
    bool operator()(const Formula::Atom& x) const {
      return std::get<Formula::Atom>(other.node).name == x.name;
    }
    bool operator()(const Formula::Equals& x) const {
      const auto& o = std::get<Formula::Equals>(other.node);
      return term_equal(x.lhs, o.lhs) && term_equal(x.rhs, o.rhs);
    }
    bool operator()(const Formula::Not& x) const {
      return formula_equal(x.arg, std::get<Formula::Not>(other.node).arg);
    }
    bool operator()(const Formula::Implies& x) const {
      const auto& o = std::get<Formula::Implies>(other.node);
      return formula_equal(x.lhs, o.lhs) && formula_equal(x.rhs, o.rhs);
    }
    bool operator()(const Formula::ForAll& x) const {
      const auto& o = std::get<Formula::ForAll>(other.node);
      return x.var == o.var && formula_equal(x.body, o.body);
    }
  };
  return std::visit(Cmp{*b}, a->node);
}

std::set<std::uint64_t> term_vars(const TermPtr& t) {
  std::set<std::uint64_t> out;
  struct Walk {
    std::set<std::uint64_t>& out;
    void operator()(const Term::Variable& x) { out.insert(x.index); }
    void operator()(const Term::Zero&) {}
    void operator()(const Term::Succ& x) { std::visit(*this, x.arg->node); }
    void operator()(const Term::Plus& x) {
      std::visit(*this, x.lhs->node);
      std::visit(*this, x.rhs->node);
    }
    void operator()(const Term::Times& x) {
      std::visit(*this, x.lhs->node);
      std::visit(*this, x.rhs->node);
    }
    void operator()(const Term::SbTerm& x) {
      std::visit(*this, x.lhs->node);
      std::visit(*this, x.rhs->node);
    }
    void operator()(const Term::BigNumeral&) {}
  };
  std::visit(Walk{out}, t->node);
  return out;
}

namespace {
void collect_free(const FormulaPtr& f, std::set<std::uint64_t> bound,
                  std::set<std::uint64_t>& out) {
  struct Walk {
    std::set<std::uint64_t>& bound;
    std::set<std::uint64_t>& out;
    void operator()(const Formula::Atom&) {}
    void operator()(const Formula::Equals& x) {
      for (auto v : term_vars(x.lhs))
        if (!bound.count(v)) out.insert(v);
      for (auto v : term_vars(x.rhs))
        if (!bound.count(v)) out.insert(v);
    }
    void operator()(const Formula::Not& x) { std::visit(*this, x.arg->node); }
    void operator()(const Formula::Implies& x) {
      std::visit(*this, x.lhs->node);
      std::visit(*this, x.rhs->node);
    }
    void operator()(const Formula::ForAll& x) {
      bool fresh = bound.insert(x.var).second;
      std::visit(*this, x.body->node);
      if (fresh) bound.erase(x.var);
    }
  };
  Walk w{bound, out};
  std::visit(w, f->node);
}
}  // namespace

std::set<std::uint64_t> free_vars(const FormulaPtr& f) {
  std::set<std::uint64_t> out;
  collect_free(f, {}, out);
  return out;
}

bool is_closed(const FormulaPtr& f) { return free_vars(f).empty(); }

bool is_free_for(const TermPtr& t, std::uint64_t k, const FormulaPtr& f) {
  struct Walk {
    const TermPtr& t;
    std::uint64_t k;
    bool operator()(const Formula::Atom&) const { return true; }
    bool operator()(const Formula::Equals&) const { return true; }
    bool operator()(const Formula::Not& x) const { return std::visit(*this, x.arg->node); }
    bool operator()(const Formula::Implies& x) const {
      return std::visit(*this, x.lhs->node) && std::visit(*this, x.rhs->node);
    }
    bool operator()(const Formula::ForAll& x) const {
      if (x.var == k) return true;  // no free occurrence of x_k below
      if (free_vars(x.body).count(k) && term_vars(t).count(x.var)) return false;
      return std::visit(*this, x.body->node);
    }
  };
  return std::visit(Walk{t, k}, f->node);
}

TermPtr substitute_term(const TermPtr& s, std::uint64_t k, const TermPtr& t) {
  struct Walk {
    std::uint64_t k;
    const TermPtr& t;
    const TermPtr& self;
    TermPtr operator()(const Term::Variable& x) const { return x.index == k ? t : self; }
    TermPtr operator()(const Term::Zero&) const { return self; }
    TermPtr operator()(const Term::Succ& x) const { return t_succ(substitute_term(x.arg, k, t)); }
    TermPtr operator()(const Term::Plus& x) const {
      return t_plus(substitute_term(x.lhs, k, t), substitute_term(x.rhs, k, t));
    }
    TermPtr operator()(const Term::Times& x) const {
      return t_times(substitute_term(x.lhs, k, t), substitute_term(x.rhs, k, t));
    }
    TermPtr operator()(const Term::SbTerm& x) const {
      return t_sb(substitute_term(x.lhs, k, t), substitute_term(x.rhs, k, t));
    }
    TermPtr operator()(const Term::BigNumeral&) const { return self; }
  };
  return std::visit(Walk{k, t, s}, s->node);
}

FormulaPtr substitute(const FormulaPtr& f, std::uint64_t k, const TermPtr& t) {
  struct Walk {
    std::uint64_t k;
    const TermPtr& t;
    const FormulaPtr& self;
    FormulaPtr operator()(const Formula::Atom&) const { return self; }
    FormulaPtr operator()(const Formula::Equals& x) const {
      return f_eq(substitute_term(x.lhs, k, t), substitute_term(x.rhs, k, t));
    }
    FormulaPtr operator()(const Formula::Not& x) const { return f_not(substitute(x.arg, k, t)); }
    FormulaPtr operator()(const Formula::Implies& x) const {
      return f_imp(substitute(x.lhs, k, t), substitute(x.rhs, k, t));
    }
    FormulaPtr operator()(const Formula::ForAll& x) const {
      if (x.var == k) return self;
      if (free_vars(x.body).count(k) && term_vars(t).count(x.var))
        throw CaptureError("substituting for x" + std::to_string(k) + " under (all x" +
                           std::to_string(x.var) + ") would capture; not renaming");
      return f_all(x.var, substitute(x.body, k, t));
    }
  };
  return std::visit(Walk{k, t, f}, f->node);
}

bool uses_sb_term(const FormulaPtr& f) {
  struct TermWalk {
    bool operator()(const Term::Variable&) const { return false; }
    bool operator()(const Term::Zero&) const { return false; }
    bool operator()(const Term::Succ& x) const { return std::visit(*this, x.arg->node); }
    bool operator()(const Term::Plus& x) const {
      return std::visit(*this, x.lhs->node) || std::visit(*this, x.rhs->node);
    }
    bool operator()(const Term::Times& x) const {
      return std::visit(*this, x.lhs->node) || std::visit(*this, x.rhs->node);
    }
    bool operator()(const Term::SbTerm&) const { return true; }
    bool operator()(const Term::BigNumeral&) const { return false; }
  };
  struct Walk {
    bool operator()(const Formula::Atom&) const { return false; }
    bool operator()(const Formula::Equals& x) const {
      return std::visit(TermWalk{}, x.lhs->node) || std::visit(TermWalk{}, x.rhs->node);
    }
    bool operator()(const Formula::Not& x) const { return std::visit(*this, x.arg->node); }
    bool operator()(const Formula::Implies& x) const {
      return std::visit(*this, x.lhs->node) || std::visit(*this, x.rhs->node);
    }
    bool operator()(const Formula::ForAll& x) const { return std::visit(*this, x.body->node); }
  };
  return std::visit(Walk{}, f->node);
}

namespace {

void print_term(const TermPtr& t, std::ostringstream& out) {
  struct P {
    std::ostringstream& out;
    void operator()(const Term::Variable& x) { out << "x" << x.index; }
    void operator()(const Term::Zero&) { out << "0"; }
    void operator()(const Term::Succ& x) {
      out << "(";
      print_term(x.arg, out);
      out << ")'";
    }
    void operator()(const Term::Plus& x) {
      out << "(";
      print_term(x.lhs, out);
      out << " + ";
      print_term(x.rhs, out);
      out << ")";
    }
    void operator()(const Term::Times& x) {
      out << "(";
      print_term(x.lhs, out);
      out << " . ";
      print_term(x.rhs, out);
      out << ")";
    }
    void operator()(const Term::SbTerm& x) {
      out << "sb(";
      print_term(x.lhs, out);
      out << " , ";
      print_term(x.rhs, out);
      out << ")";
    }
    void operator()(const Term::BigNumeral& x) {
      // Not reparseable on purpose: the spelled-out numeral would not fit in
      // any buffer.
      if (x.n.concrete() && bit_length(x.n.value()) <= 40) {
        out << "<numeral " << x.n.value().str() << ">";
      } else {
        double bits = x.n.concrete() ? double(bit_length(x.n.value())) : approx_bits(x.n.code());
        out << "<numeral ~2^" << std::llround(bits) << ">";
      }
    }
  };
  std::visit(P{out}, t->node);
}

void print_formula(const FormulaPtr& f, std::ostringstream& out) {
  struct P {
    std::ostringstream& out;
    void operator()(const Formula::Atom& x) { out << x.name; }
    void operator()(const Formula::Equals& x) {
      out << "(";
      print_term(x.lhs, out);
      out << " = ";
      print_term(x.rhs, out);
      out << ")";
    }
    void operator()(const Formula::Not& x) {
      out << "(~ ";
      print_formula(x.arg, out);
      out << ")";
    }
    void operator()(const Formula::Implies& x) {
      out << "(";
      print_formula(x.lhs, out);
      out << " -> ";
      print_formula(x.rhs, out);
      out << ")";
    }
    void operator()(const Formula::ForAll& x) {
      out << "((all x" << x.var << ") ";
      print_formula(x.body, out);
      out << ")";
    }
  };
  std::visit(P{out}, f->node);
}

struct Token {
  std::string text;
  std::size_t pos;
  std::optional<SymNat> num;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(' || c == ')' || c == ',' || c == '~' || c == '=' || c == '\'' || c == '+' ||
        c == '.') {
      out.push_back({std::string(1, c), i});
      ++i;
      continue;
    }
    if (c == '-') {
      if (i + 1 < s.size() && s[i + 1] == '>') {
        out.push_back({"->", i});
        i += 2;
        continue;
      }
      throw ParseError("stray '-' at position " + std::to_string(i));
    }
    if (c == '0') {
      if (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))
        throw ParseError("numerals are spelled with 0 and ' only (position " + std::to_string(i) +
                         ")");
      out.push_back({"0", i});
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({s.substr(i, j - i), i});
      i = j;
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                     std::to_string(i));
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const SymbolTable& table)
      : ts_(std::move(tokens)), table_(table) {}

  FormulaPtr formula_all() {
    auto f = formula();
    expect_end();
    return f;
  }
  TermPtr term_all() {
    auto t = term();
    expect_end();
    return t;
  }

 private:
  std::vector<Token> ts_;
  std::size_t i_ = 0;
  const SymbolTable& table_;

  [[noreturn]] void fail(const std::string& why) {
    std::string where =
        i_ < ts_.size() ? "at \"" + ts_[i_].text + "\" (position " + std::to_string(ts_[i_].pos) + ")"
                        : "at end of input";
    throw ParseError(why + " " + where);
  }
  const std::string* peek(std::size_t ahead = 0) const {
    return i_ + ahead < ts_.size() ? &ts_[i_ + ahead].text : nullptr;
  }
  bool at(const char* text, std::size_t ahead = 0) const {
    const auto* p = peek(ahead);
    return p && *p == text;
  }
  bool eat(const char* text) {
    if (at(text)) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(const char* text) {
    if (!eat(text)) fail(std::string("expected \"") + text + "\"");
  }
  void expect_end() {
    if (i_ != ts_.size()) fail("trailing input");
  }

  std::optional<std::uint64_t> var_of(const std::string& text) {
    if (text.size() < 2 || text[0] != 'x') return std::nullopt;
    for (std::size_t j = 1; j < text.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
    if (text[1] == '0') fail("variable indices start at x1");
    return std::stoull(text.substr(1));
  }

  std::uint64_t variable() {
    const auto* p = peek();
    if (!p) fail("expected a variable");
    auto k = var_of(*p);
    if (!k) fail("expected a variable");
    ++i_;
    return *k;
  }

  TermPtr term() {
    if (i_ < ts_.size() && ts_[i_].num) {
      auto n = *ts_[i_].num;
      ++i_;
      return numeral(n);
    }
    const auto* p = peek();
    if (!p) fail("expected a term");
    if (*p == "0") {
      ++i_;
      return t_zero();
    }
    if (auto k = var_of(*p)) {
      ++i_;
      return t_var(*k);
    }
    if (*p == "sb") {
      ++i_;
      expect("(");
      auto a = term();
      expect(",");
      auto b = term();
      expect(")");
      return t_sb(std::move(a), std::move(b));
    }
    if (*p == "(") {
      ++i_;
      auto a = term();
      if (eat(")")) {
        expect("'");
        return t_succ(std::move(a));
      }
      if (eat("+")) {
        auto b = term();
        expect(")");
        return t_plus(std::move(a), std::move(b));
      }
      if (eat(".")) {
        auto b = term();
        expect(")");
        return t_times(std::move(a), std::move(b));
      }
      fail("expected \")'\", \"+\" or \".\" in term");
    }
    fail("expected a term");
  }

  FormulaPtr formula() {
    const auto* p = peek();
    if (!p) fail("expected a formula");
    if (table_.is_atom(*p)) {
      auto name = *p;
      ++i_;
      return f_atom(name);
    }
    if (*p != "(") fail("expected a formula");
    // ((all xK) body)
    if (at("(", 1) && at("all", 2)) {
      expect("(");
      expect("(");
      expect("all");
      auto k = variable();
      expect(")");
      auto body = formula();
      expect(")");
      return f_all(k, std::move(body));
    }
    if (at("~", 1)) {
      expect("(");
      expect("~");
      auto a = formula();
      expect(")");
      return f_not(std::move(a));
    }
    // Either (t = t) or (f -> f); try the term reading first.
    std::size_t save = i_;
    expect("(");
    try {
      auto lhs = term();
      if (eat("=")) {
        auto rhs = term();
        expect(")");
        return f_eq(std::move(lhs), std::move(rhs));
      }
    } catch (const ParseError&) {
    }
    i_ = save;
    expect("(");
    auto lhs = formula();
    expect("->");
    auto rhs = formula();
    expect(")");
    return f_imp(std::move(lhs), std::move(rhs));
  }
};

}  // namespace

std::string to_string(const TermPtr& t) {
  std::ostringstream out;
  print_term(t, out);
  return out.str();
}

std::string to_string(const FormulaPtr& f) {
  std::ostringstream out;
  print_formula(f, out);
  return out.str();
}

FormulaPtr parse_formula(const std::string& text, const SymbolTable& table) {
  return Parser(lex(text), table).formula_all();
}

TermPtr parse_term(const std::string& text, const SymbolTable& table) {
  return Parser(lex(text), table).term_all();
}

namespace {
std::vector<Token> adopt(std::vector<SyntaxToken> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i)
    out.push_back(Token{std::move(tokens[i].text), i, std::move(tokens[i].num)});
  return out;
}
}  // namespace

FormulaPtr parse_formula_tokens(std::vector<SyntaxToken> tokens, const SymbolTable& table) {
  return Parser(adopt(std::move(tokens)), table).formula_all();
}

TermPtr parse_term_tokens(std::vector<SyntaxToken> tokens, const SymbolTable& table) {
  return Parser(adopt(std::move(tokens)), table).term_all();
}

}  // namespace palab
