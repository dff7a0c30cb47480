#include "palab/codec.hpp"

namespace palab {

namespace {

struct TermEmitter {
  const SymbolTable& table;
  std::vector<CodeExpr::Part>& out;

  void sym(const std::string& token) const { out.emplace_back(make_symbol(table.code(token))); }

  void emit(const TermPtr& t) const {
    struct V {
      const TermEmitter& e;
      void operator()(const Term::Variable& x) const {
        e.out.emplace_back(make_symbol(e.table.var_code(x.index)));
      }
      void operator()(const Term::Zero&) const { e.sym("0"); }
      void operator()(const Term::Succ& x) const {
        e.sym("(");
        e.emit(x.arg);
        e.sym(")");
        e.sym("'");
      }
      void operator()(const Term::Plus& x) const {
        e.sym("(");
        e.emit(x.lhs);
        e.sym("+");
        e.emit(x.rhs);
        e.sym(")");
      }
      void operator()(const Term::Times& x) const {
        e.sym("(");
        e.emit(x.lhs);
        e.sym(".");
        e.emit(x.rhs);
        e.sym(")");
      }
      void operator()(const Term::SbTerm& x) const {
        e.sym("sb");
        e.sym("(");
        e.emit(x.lhs);
        e.sym(",");
        e.emit(x.rhs);
        e.sym(")");
      }
      void operator()(const Term::BigNumeral& x) const {
        e.out.emplace_back(splice_part(x.n, e.table.numeral_syms()));
      }
    };
    std::visit(V{*this}, t->node);
  }
};

struct FormulaEmitter {
  TermEmitter terms;

  void sym(const std::string& token) const { terms.sym(token); }

  void emit(const FormulaPtr& f) const {
    struct V {
      const FormulaEmitter& e;
      void operator()(const Formula::Atom& x) const {
        e.terms.out.emplace_back(make_symbol(e.terms.table.code(x.name)));
      }
      void operator()(const Formula::Equals& x) const {
        e.sym("(");
        e.terms.emit(x.lhs);
        e.sym("=");
        e.terms.emit(x.rhs);
        e.sym(")");
      }
      void operator()(const Formula::Not& x) const {
        e.sym("(");
        e.sym("~");
        e.emit(x.arg);
        e.sym(")");
      }
      void operator()(const Formula::Implies& x) const {
        e.sym("(");
        e.emit(x.lhs);
        e.sym("->");
        e.emit(x.rhs);
        e.sym(")");
      }
      void operator()(const Formula::ForAll& x) const {
        e.sym("(");
        e.sym("(");
        e.sym("all");
        e.terms.out.emplace_back(make_symbol(e.terms.table.var_code(x.var)));
        e.sym(")");
        e.emit(x.body);
        e.sym(")");
      }
    };
    std::visit(V{*this}, f->node);
  }
};

}  // namespace

CodePtr Codec::encode_term(const TermPtr& t) const {
  std::vector<CodeExpr::Part> parts;
  TermEmitter{table_, parts}.emit(t);
  return make_sequence(std::move(parts));
}

CodePtr Codec::encode_formula(const FormulaPtr& f) const {
  std::vector<CodeExpr::Part> parts;
  FormulaEmitter{TermEmitter{table_, parts}}.emit(f);
  return make_sequence(std::move(parts));
}

CodePtr Codec::encode_proof(const std::vector<FormulaPtr>& lines) const {
  if (lines.empty()) throw CodeError("a proof has at least one line");
  std::vector<CodeExpr::Part> parts;
  parts.reserve(lines.size());
  for (const auto& f : lines) parts.emplace_back(encode_formula(f));
  return make_sequence(std::move(parts));
}

std::vector<SyntaxToken> Codec::tokens_of(const CodePtr& x) const {
  if (!is_sequence_valued(x)) throw DecodeError("expression codes are sequence codes");
  std::vector<SyntaxToken> out;
  const auto* seq = std::get_if<CodeExpr::Sequence>(&x->node);
  std::vector<CodeExpr::Part> own;
  if (seq == nullptr) {
    const auto& num = std::get<CodeExpr::Numeral>(x->node);
    own.emplace_back(CodeExpr::Splice{num.n, num.syms});
  }
  const auto& parts = seq ? seq->parts : own;
  for (const auto& part : parts) {
    if (const auto* elem = std::get_if<CodePtr>(&part)) {
      const auto* sym = std::get_if<CodeExpr::Symbol>(&(*elem)->node);
      if (!sym)
        throw DecodeError("nested sequence code where a symbol was expected");
      auto token = table_.token_of(sym->code);
      if (!token)
        throw DecodeError("symbol code " + std::to_string(sym->code) + " not in the table");
      out.push_back(SyntaxToken{*token, std::nullopt});
      continue;
    }
    const auto& spl = std::get<CodeExpr::Splice>(part);
    if (table_.has_numerals() && !(spl.syms == table_.numeral_syms()))
      throw DecodeError("numeral run spelled with a different table");
    if (auto n = probe_value(spl.n, 20)) {
      // Small enough to expand into honest symbols.
      std::uint64_t v = n->convert_to<std::uint64_t>();
      for (std::uint64_t i = 0; i < v; ++i) out.push_back({"(", std::nullopt});
      out.push_back({"0", std::nullopt});
      for (std::uint64_t i = 0; i < v; ++i) {
        out.push_back({")", std::nullopt});
        out.push_back({"'", std::nullopt});
      }
    } else {
      out.push_back(SyntaxToken{"<numeral>", spl.n});
    }
  }
  return out;
}

TermPtr Codec::decode_term(const CodePtr& x) const {
  try {
    return parse_term_tokens(tokens_of(x), table_);
  } catch (const ParseError& e) {
    throw DecodeError(std::string("not a term code: ") + e.what());
  }
}

FormulaPtr Codec::decode_formula(const CodePtr& x) const {
  try {
    return parse_formula_tokens(tokens_of(x), table_);
  } catch (const ParseError& e) {
    throw DecodeError(std::string("not a formula code: ") + e.what());
  }
}

std::variant<FormulaPtr, TermPtr> Codec::decode_expression(const CodePtr& x) const {
  auto tokens = tokens_of(x);
  try {
    return parse_formula_tokens(tokens, table_);
  } catch (const ParseError&) {
  }
  try {
    return parse_term_tokens(std::move(tokens), table_);
  } catch (const ParseError& e) {
    throw DecodeError(std::string("neither a formula nor a term code: ") + e.what());
  }
}

std::vector<FormulaPtr> Codec::decode_proof(const CodePtr& x) const {
  if (!is_sequence_valued(x)) throw DecodeError("proof codes are sequence codes");
  const auto* seq = std::get_if<CodeExpr::Sequence>(&x->node);
  if (!seq) throw DecodeError("a numeral run is not a proof");
  std::vector<FormulaPtr> lines;
  for (const auto& part : seq->parts) {
    const auto* elem = std::get_if<CodePtr>(&part);
    if (!elem) throw DecodeError("a numeral run is not a proof line");
    if (!is_sequence_valued(*elem)) throw DecodeError("proof line is a bare symbol, not a formula");
    lines.push_back(decode_formula(*elem));
  }
  if (lines.empty()) throw DecodeError("a proof has at least one line");
  return lines;
}

std::optional<FormulaPtr> Codec::try_decode_formula(const CodePtr& x) const {
  try {
    return decode_formula(x);
  } catch (const DecodeError&) {
    return std::nullopt;
  } catch (const TableError&) {
    return std::nullopt;
  }
}

CodePtr Codec::single(const std::string& token) const {
  return make_sequence({CodeExpr::Part(make_symbol(table_.code(token)))});
}

std::optional<CodePtr> Codec::from_integer(const BigNat& x) {
  if (x == 0) return std::nullopt;
  if (x % 2 == 1) {
    // Odd integers read as symbol codes (whether the table knows them is the
    // predicates' business, not the codec's).
    if (bit_length(x) > 63) return std::nullopt;
    return make_symbol(x.convert_to<std::uint64_t>());
  }
  // Even: must be prod p_i^(e_i) over consecutive primes with valid exponents.
  BigNat rem = x;
  std::vector<CodeExpr::Part> parts;
  for (std::size_t i = 0; rem > 1; ++i) {
    BigNat p = primes().nth(i);
    BigNat e = 0;
    while (rem % p == 0) {
      rem /= p;
      e += 1;
    }
    if (e == 0) return std::nullopt;  // gap before the factorization ended
    auto sub = from_integer(e);
    if (!sub) return std::nullopt;
    parts.emplace_back(*sub);
  }
  return make_sequence(std::move(parts));
}

}  // namespace palab
