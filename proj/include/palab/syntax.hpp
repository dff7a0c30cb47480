#pragma once

// Terms and formulas of first-order arithmetic, their fully parenthesized
// concrete syntax, and capture-checked substitution.
//
// Grammar (ASCII, everything parenthesized):
//   term     := xK | 0 | (t)' | (t + t) | (t . t) | sb(t , t)
//   formula  := ATOM | (t = t) | (~ f) | (f -> f) | ((all xK) f)
// Atoms only exist in the toy micro-language. sb(s , t) is a deliberate
// language extension: an object-level substitution former with its own
// primitive symbol; everything downstream flags formulas that use it.
//
// Trees are immutable and freely shared.

#include "palab/code.hpp"

#include <memory>
#include <set>
#include <string>
#include <variant>

namespace palab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CaptureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  struct Variable {
    std::uint64_t index;  // >= 1
  };
  struct Zero {};
  struct Succ {
    TermPtr arg;
  };
  struct Plus {
    TermPtr lhs, rhs;
  };
  struct Times {
    TermPtr lhs, rhs;
  };
  struct SbTerm {
    TermPtr lhs, rhs;
  };
  // A numeral too large to spell as a successor chain. Only numeral() and
  // the decoder build these.
  struct BigNumeral {
    SymNat n;
  };
  std::variant<Variable, Zero, Succ, Plus, Times, SbTerm, BigNumeral> node;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  struct Atom {
    std::string name;  // toy-mode atomic sentence
  };
  struct Equals {
    TermPtr lhs, rhs;
  };
  struct Not {
    FormulaPtr arg;
  };
  struct Implies {
    FormulaPtr lhs, rhs;
  };
  struct ForAll {
    std::uint64_t var;
    FormulaPtr body;
  };
  std::variant<Atom, Equals, Not, Implies, ForAll> node;
};

TermPtr t_var(std::uint64_t k);
TermPtr t_zero();
TermPtr t_succ(TermPtr t);
TermPtr t_plus(TermPtr a, TermPtr b);
TermPtr t_times(TermPtr a, TermPtr b);
TermPtr t_sb(TermPtr a, TermPtr b);
TermPtr t_bignum(SymNat n);

FormulaPtr f_atom(std::string name);
FormulaPtr f_eq(TermPtr a, TermPtr b);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr f_all(std::uint64_t var, FormulaPtr body);

// The numeral n-bar: 0 under n successors. Concrete small n builds the actual
// chain; anything larger (or code-valued) stays a lazily represented numeral.
TermPtr numeral(const SymNat& n);

bool term_equal(const TermPtr& a, const TermPtr& b);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::uint64_t> free_vars(const FormulaPtr& f);
std::set<std::uint64_t> term_vars(const TermPtr& t);
bool is_closed(const FormulaPtr& f);

// Would substituting t for x_k in f capture a variable of t?
bool is_free_for(const TermPtr& t, std::uint64_t k, const FormulaPtr& f);

// Replace free occurrences of x_k by t. Signals capture; never renames.
FormulaPtr substitute(const FormulaPtr& f, std::uint64_t k, const TermPtr& t);
TermPtr substitute_term(const TermPtr& s, std::uint64_t k, const TermPtr& t);

// Does f use the sb(_,_) language extension anywhere?
bool uses_sb_term(const FormulaPtr& f);

std::string to_string(const TermPtr& t);
std::string to_string(const FormulaPtr& f);

class SymbolTable;
FormulaPtr parse_formula(const std::string& text, const SymbolTable& table);
TermPtr parse_term(const std::string& text, const SymbolTable& table);

// Token-stream parsing, for decoding codes: a token is either a spelled
// symbol or a whole lazy numeral standing in term position.
struct SyntaxToken {
  std::string text;
  std::optional<SymNat> num;
};
FormulaPtr parse_formula_tokens(std::vector<SyntaxToken> tokens, const SymbolTable& table);
TermPtr parse_term_tokens(std::vector<SyntaxToken> tokens, const SymbolTable& table);

}  // namespace palab
