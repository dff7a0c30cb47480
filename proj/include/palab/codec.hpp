#pragma once

// Translation between syntax trees and prime-power codes, in both directions.
//
// Numbering: each primitive symbol has an odd code; an expression maps to
// prod_i p_i^(c_i) over its symbol string; a proof (formula sequence) maps to
// prod_i p_i^(code of line i). Lazily represented numerals inside a formula
// become splice parts, so codes of formulas mentioning astronomically large
// numerals stay small objects.

#include "palab/code.hpp"
#include "palab/symbols.hpp"
#include "palab/syntax.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace palab {

struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Codec {
 public:
  explicit Codec(SymbolTable table) : table_(std::move(table)) { table_.validate(); }

  const SymbolTable& table() const { return table_; }

  CodePtr encode_term(const TermPtr& t) const;
  CodePtr encode_formula(const FormulaPtr& f) const;
  CodePtr encode_proof(const std::vector<FormulaPtr>& lines) const;

  // Strict decoders; throw DecodeError on anything malformed.
  TermPtr decode_term(const CodePtr& x) const;
  FormulaPtr decode_formula(const CodePtr& x) const;
  std::vector<FormulaPtr> decode_proof(const CodePtr& x) const;
  std::variant<FormulaPtr, TermPtr> decode_expression(const CodePtr& x) const;

  // Total variants for predicate evaluation.
  std::optional<FormulaPtr> try_decode_formula(const CodePtr& x) const;

  // The length-1 sequence 2^code("token").
  CodePtr single(const std::string& token) const;

  // Read an integer back as a code: odd -> symbol; even -> consecutive-prime
  // factorization with recursively valid exponents; nullopt otherwise.
  static std::optional<CodePtr> from_integer(const BigNat& x);

 private:
  std::vector<SyntaxToken> tokens_of(const CodePtr& x) const;
  SymbolTable table_;
};

}  // namespace palab
