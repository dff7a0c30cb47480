#pragma once

// Symbolic prime-power codes.
//
// A code is one of:
//   Symbol c     -- a primitive symbol, value c (odd);
//   Sequence ps  -- value prod_i p_i^(e_i) over its element list, p_0 = 2;
//   Numeral n    -- the sequence code of the numeral n-bar's 3n+1 symbols.
// A Sequence stores *parts*; each part is either one element (a nested code
// whose integer value is that element's exponent) or a Splice, which inlines
// the 3n+1 symbols of a numeral without expanding them. Splices are how codes
// of formulas containing astronomically large numerals stay finite objects.
//
// Invariants: symbol values are odd, sequence values are even, so parity
// distinguishes the two; structural equality coincides with equality of the
// materialized integers.

#include "palab/bignat.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace palab {

struct CodeExpr;
using CodePtr = std::shared_ptr<const CodeExpr>;

struct CodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised only when two codes are provably impossible to compare structurally
// (two lazy numeral runs met at different offsets); no encoder output can
// produce that shape.
struct CodeCompareError : CodeError {
  using CodeError::CodeError;
};

// A natural number, either held outright or known only as the value of a code
// (typically far too large to materialize).
struct SymNat {
  std::variant<BigNat, CodePtr> v;

  bool concrete() const { return v.index() == 0; }
  const BigNat& value() const { return std::get<BigNat>(v); }
  const CodePtr& code() const { return std::get<CodePtr>(v); }

  static SymNat of(BigNat n) { return SymNat{std::move(n)}; }
  static SymNat of(std::uint64_t n) { return SymNat{BigNat(n)}; }
  static SymNat of_code(CodePtr c) { return SymNat{std::move(c)}; }
};

// The four symbol codes a numeral is spelled with: n opening parens, one
// zero, then n close-paren/successor pairs. Stamped into numeral nodes at
// construction so code operations need no symbol table.
struct NumeralSyms {
  std::uint64_t lparen, zero, rparen, succ;
  friend bool operator==(const NumeralSyms&, const NumeralSyms&) = default;
};

struct CodeExpr {
  struct Symbol {
    std::uint64_t code;  // odd
  };
  struct Splice {
    SymNat n;
    NumeralSyms syms;
  };
  using Part = std::variant<CodePtr, Splice>;
  struct Sequence {
    std::vector<Part> parts;
  };
  struct Numeral {
    SymNat n;
    NumeralSyms syms;
  };

  std::variant<Symbol, Sequence, Numeral> node;
};

CodePtr make_symbol(std::uint64_t code);                    // code must be odd
CodePtr make_sequence(std::vector<CodeExpr::Part> parts);   // parts nonempty
CodePtr make_numeral(SymNat n, NumeralSyms syms);
CodeExpr::Part splice_part(SymNat n, NumeralSyms syms);

bool is_symbol(const CodePtr& x);
bool is_sequence_valued(const CodePtr& x);  // Sequence or Numeral node

// Result of bounded materialization. No value means the integer needs more
// than the permitted number of bits; approx_bits still estimates its size.
struct Materialized {
  std::optional<BigNat> value;
  double approx_bits = 0.0;
  bool overflow() const { return !value.has_value(); }
};

// Exact integer value if it fits in bit_limit bits, else a typed overflow.
Materialized materialize(const CodePtr& x, std::uint64_t bit_limit);

// log2 estimate of the value (saturates at infinity for nested towers).
double approx_bits(const CodePtr& x);

// Structural equality; agrees with integer equality of materializations.
bool code_equal(const CodePtr& a, const CodePtr& b);

bool symnat_equal(const SymNat& a, const SymNat& b);

// Concrete value of n if it fits in bit_limit bits.
std::optional<BigNat> probe_value(const SymNat& n, std::uint64_t bit_limit);

// Number of elements of a sequence code. Throws CodeError when x is not
// sequence-valued or the length is not concretely representable.
BigNat lh(const CodePtr& x);

// i-th element (0-based) of a sequence code, as a code.
CodePtr component(const CodePtr& x, const BigNat& i);

// Sequence concatenation per the codes' concatenation operator: symbols act
// as length-1 sequences, numerals splice their symbol runs in.
CodePtr concat(const std::vector<CodePtr>& xs);

// Truncated monus on concrete naturals; code-valued operands are rejected.
SymNat monus(const SymNat& a, const SymNat& b);

// Human-readable factored form "2^3 * 3^9 * ..." with nested exponents in
// parentheses and long tails elided.
std::string factored(const CodePtr& x, std::size_t max_terms = 64);

}  // namespace palab
