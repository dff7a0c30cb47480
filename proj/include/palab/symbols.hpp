#pragma once

// Symbol tables: the odd code assigned to each primitive symbol, the
// arithmetic-progression family for variables, and named atoms for the toy
// micro-language. Five codes are locked and cannot be reassigned:
//   "(" 3   ")" 5   "~" 9   "->" 11   "all" 13

#include "palab/code.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace palab {

struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SymbolTable {
 public:
  // Full table for Peano Arithmetic:
  //   ( 3, ) 5, , 7, ~ 9, -> 11, all 13, 0 15, = 17, ' 19, + 23, . 25, sb 27,
  //   variables x_k at 13 + 8k.
  static SymbolTable pa_default();

  // Micro-table: the locked five, atoms A (code 1, the single axiom) and
  // B (code 17), same variable family.
  static SymbolTable toy();

  // Config file: lines "<symbol> <odd-code>", "@var <base> <step>",
  // "#" comments. Unrecognized symbol names define atoms. Starts from the
  // PA defaults; locked entries may be restated but not changed.
  static SymbolTable load_file(const std::string& path);
  static SymbolTable parse(const std::string& text, const std::string& origin);

  std::uint64_t code(const std::string& token) const;  // fixed or atom
  std::optional<std::uint64_t> try_code(const std::string& token) const;

  std::uint64_t var_code(std::uint64_t k) const;  // k >= 1
  std::optional<std::uint64_t> var_index(std::uint64_t code) const;

  // Token spelled by a code ("x3" for variable codes); nullopt if unknown.
  std::optional<std::string> token_of(std::uint64_t code) const;
  bool known_code(std::uint64_t code) const;

  bool is_atom(const std::string& name) const { return atoms_.count(name) > 0; }
  const std::map<std::string, std::uint64_t>& atoms() const { return atoms_; }
  bool has_numerals() const;
  NumeralSyms numeral_syms() const;  // throws if ( 0 ) ' are not all present

  // Oddness, distinctness, locked entries, variable-family separation.
  void validate() const;

 private:
  std::map<std::string, std::uint64_t> fixed_;  // includes atoms' complement
  std::map<std::string, std::uint64_t> atoms_;
  std::uint64_t var_base_ = 13;
  std::uint64_t var_step_ = 8;
};

}  // namespace palab
