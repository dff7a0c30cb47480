#include "palab/symbols.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace palab {

namespace {

const std::map<std::string, std::uint64_t> kLocked = {
    {"(", 3}, {")", 5}, {"~", 9}, {"->", 11}, {"all", 13}};

// Names with grammar roles; anything else in a table file is an atom.
const std::set<std::string> kReserved = {"(", ")", ",", "~", "->", "all", "0",
                                        "=", "'", "+", ".", "sb"};

bool looks_like_var(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

}  // namespace

SymbolTable SymbolTable::pa_default() {
  SymbolTable t;
  t.fixed_ = {{"(", 3},  {")", 5},  {",", 7},  {"~", 9},  {"->", 11}, {"all", 13},
              {"0", 15}, {"=", 17}, {"'", 19}, {"+", 23}, {".", 25},  {"sb", 27}};
  t.validate();
  return t;
}

SymbolTable SymbolTable::toy() {
  SymbolTable t;
  t.fixed_ = {{"(", 3}, {")", 5}, {"~", 9}, {"->", 11}, {"all", 13}};
  t.atoms_ = {{"A", 1}, {"B", 17}};
  t.validate();
  return t;
}

SymbolTable SymbolTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open symbol table: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

SymbolTable SymbolTable::parse(const std::string& text, const std::string& origin) {
  SymbolTable t = pa_default();
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    auto fail = [&](const std::string& why) {
      throw TableError(origin + ":" + std::to_string(lineno) + ": " + why);
    };
    if (name == "@var") {
      std::uint64_t base, step;
      if (!(ls >> base >> step)) fail("@var needs <base> <step>");
      t.var_base_ = base;
      t.var_step_ = step;
      continue;
    }
    std::uint64_t code;
    if (!(ls >> code)) fail("expected \"<symbol> <odd-code>\"");
    std::string extra;
    if (ls >> extra) fail("trailing junk after code");
    if (looks_like_var(name)) fail("variable codes come from @var, not per-symbol lines");
    auto locked = kLocked.find(name);
    if (locked != kLocked.end() && locked->second != code)
      fail("symbol \"" + name + "\" is locked to code " + std::to_string(locked->second));
    if (kReserved.count(name))
      t.fixed_[name] = code;
    else
      t.atoms_[name] = code;
  }
  t.validate();
  return t;
}

std::uint64_t SymbolTable::code(const std::string& token) const {
  auto c = try_code(token);
  if (!c) throw TableError("unknown symbol: \"" + token + "\"");
  return *c;
}

std::optional<std::uint64_t> SymbolTable::try_code(const std::string& token) const {
  if (auto it = fixed_.find(token); it != fixed_.end()) return it->second;
  if (auto it = atoms_.find(token); it != atoms_.end()) return it->second;
  return std::nullopt;
}

std::uint64_t SymbolTable::var_code(std::uint64_t k) const {
  if (k == 0) throw TableError("variable indices start at 1");
  return var_base_ + var_step_ * k;
}

std::optional<std::uint64_t> SymbolTable::var_index(std::uint64_t code) const {
  if (code <= var_base_) return std::nullopt;
  std::uint64_t d = code - var_base_;
  if (d % var_step_ != 0) return std::nullopt;
  return d / var_step_;
}

std::optional<std::string> SymbolTable::token_of(std::uint64_t code) const {
  for (const auto& [name, c] : fixed_)
    if (c == code) return name;
  for (const auto& [name, c] : atoms_)
    if (c == code) return name;
  if (auto k = var_index(code)) return "x" + std::to_string(*k);
  return std::nullopt;
}

bool SymbolTable::known_code(std::uint64_t code) const {
  return token_of(code).has_value();
}

bool SymbolTable::has_numerals() const {
  return fixed_.count("(") && fixed_.count(")") && fixed_.count("0") && fixed_.count("'");
}

NumeralSyms SymbolTable::numeral_syms() const {
  if (!has_numerals()) throw TableError("table has no numeral symbols ( 0 ) '");
  return NumeralSyms{fixed_.at("("), fixed_.at("0"), fixed_.at(")"), fixed_.at("'")};
}

void SymbolTable::validate() const {
  std::map<std::uint64_t, std::string> seen;
  auto check = [&](const std::string& name, std::uint64_t code) {
    if (code % 2 == 0)
      throw TableError("symbol \"" + name + "\" has even code " + std::to_string(code));
    auto [it, fresh] = seen.emplace(code, name);
    if (!fresh)
      throw TableError("code " + std::to_string(code) + " assigned to both \"" + it->second +
                       "\" and \"" + name + "\"");
    if (var_index(code))
      throw TableError("symbol \"" + name + "\" collides with the variable family at code " +
                       std::to_string(code));
  };
  for (const auto& [name, code] : fixed_) check(name, code);
  for (const auto& [name, code] : atoms_) check(name, code);
  for (const auto& [name, code] : kLocked) {
    auto it = fixed_.find(name);
    if (it == fixed_.end() || it->second != code)
      throw TableError("locked symbol \"" + name + "\" must have code " + std::to_string(code));
  }
  if (var_step_ == 0 || var_step_ % 2 != 0 || var_base_ % 2 == 0)
    throw TableError("variable family must be odd base + even step");
}

}  // namespace palab
