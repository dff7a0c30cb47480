#include "palab/predicates.hpp"

#include <stdexcept>

namespace palab {
namespace {

bool known_numeral_syms(const SymbolTable& t, const NumeralSyms& s) {
  return t.known_code(s.lparen) && t.known_code(s.zero) && t.known_code(s.rparen) &&
         t.known_code(s.succ);
}

}  // namespace

// Equality as the predicates see it: a comparison that cannot be decided
// means the operands are not well-formed pieces of the calculus, so the
// predicate in question is simply false. Nothing may escape as an exception.
bool Predicates::eq(const CodePtr& a, const CodePtr& b) {
  try {
    return code_equal(a, b);
  } catch (const CodeCompareError&) {
    return false;
  }
}

bool Predicates::gd(const CodePtr& x) const {
  const auto& table = codec_.table();
  if (const auto* num = std::get_if<CodeExpr::Numeral>(&x->node))
    return known_numeral_syms(table, num->syms);
  const auto* seq = std::get_if<CodeExpr::Sequence>(&x->node);
  if (!seq) return false;  // bare symbols are not symbol *strings*
  for (const auto& part : seq->parts) {
    if (const auto* elem = std::get_if<CodePtr>(&part)) {
      const auto* sym = std::get_if<CodeExpr::Symbol>(&(*elem)->node);
      if (!sym || !table.known_code(sym->code)) return false;
    } else {
      if (!known_numeral_syms(table, std::get<CodeExpr::Splice>(part).syms))
        return false;
    }
  }
  return true;
}

bool Predicates::evbl(const CodePtr& x) const {
  if (!is_sequence_valued(x)) return false;
  try {
    // A length that is not concretely representable is astronomically > 1.
    if (lh(x) != 1) return false;
    CodePtr e = component(x, BigNat(0));
    const auto* sym = std::get_if<CodeExpr::Symbol>(&e->node);
    return sym && codec_.table().var_index(sym->code).has_value();
  } catch (const CodeError&) {
    return false;
  }
}

bool Predicates::fml(const CodePtr& x) const {
  return codec_.try_decode_formula(x).has_value();
}

bool Predicates::ax(const CodePtr& x) const {
  auto f = codec_.try_decode_formula(x);
  return f && is_axiom(*f, mode_);
}

CodePtr Predicates::neg_code(const CodePtr& v) const {
  return concat({codec_.single("("), codec_.single("~"), v, codec_.single(")")});
}

bool Predicates::mp(const CodePtr& x, const CodePtr& y, const CodePtr& z) const {
  if (!gd(x) || !gd(z)) return false;
  CodePtr want = concat(
      {codec_.single("("), x, codec_.single("->"), z, codec_.single(")")});
  return eq(y, want);
}

bool Predicates::gen(const CodePtr& x, const CodePtr& y) const {
  if (!gd(x)) return false;
  if (!is_sequence_valued(y)) return false;
  CodePtr vsym;
  try {
    vsym = component(y, BigNat(3));  // ( ( all xk ...  -- the variable slot
  } catch (const CodeError&) {
    return false;
  }
  if (!is_symbol(vsym)) return false;
  CodePtr v = make_sequence({vsym});
  if (!evbl(v)) return false;
  CodePtr want =
      concat({codec_.single("("), codec_.single("("), codec_.single("all"), v,
              codec_.single(")"), x, codec_.single(")")});
  return eq(y, want);
}

std::vector<CodePtr> Predicates::proof_lines(const CodePtr& x) const {
  BigNat n = lh(x);
  if (n > 100000) throw CodeError("proof implausibly long");
  std::vector<CodePtr> lines;
  std::uint64_t count = n.convert_to<std::uint64_t>();
  lines.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) lines.push_back(component(x, BigNat(i)));
  return lines;
}

bool Predicates::justified_at(const std::vector<CodePtr>& lines, std::size_t p) const {
  const CodePtr& v = lines[p];
  if (ax(v)) return true;
  for (std::size_t i = 0; i < p; ++i) {
    if (fml(lines[i]) && gen(lines[i], v)) return true;
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (!fml(lines[i])) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (i == j || !fml(lines[j])) continue;
      if (mp(lines[i], lines[j], v)) return true;
    }
  }
  return false;
}

bool Predicates::prf(const CodePtr& x) const {
  if (!is_sequence_valued(x)) return false;
  std::vector<CodePtr> lines;
  try {
    lines = proof_lines(x);
  } catch (const CodeError&) {
    // Non-representable length means lazy numeral runs: the lines include
    // single symbols, which nothing justifies.
    return false;
  }
  if (lines.empty()) return false;
  for (std::size_t p = 0; p < lines.size(); ++p) {
    if (!justified_at(lines, p)) return false;
  }
  return true;
}

bool Predicates::pf(const CodePtr& x, const CodePtr& v) const {
  if (!prf(x)) return false;
  BigNat n = lh(x);
  return eq(component(x, n - 1), v);
}

bool Predicates::rf(const CodePtr& x, const CodePtr& v) const {
  return pf(x, neg_code(v));
}

bool Predicates::rf_expanded(const CodePtr& x, const CodePtr& v) const {
  if (!is_sequence_valued(x)) return false;
  std::vector<CodePtr> lines;
  try {
    lines = proof_lines(x);
  } catch (const CodeError&) {
    return false;
  }
  if (lines.empty()) return false;
  // The last line must spell ( ~ v ), and each case of the last-step split
  // re-checks the remaining prefix as a proof on its own.
  const CodePtr& last = lines.back();
  if (!eq(last, neg_code(v))) return false;
  if (lines.size() == 1) return ax(last);
  for (std::size_t p = 0; p + 1 < lines.size(); ++p) {
    if (!justified_at(lines, p)) return false;
  }
  if (ax(last)) return true;
  std::size_t p = lines.size() - 1;
  for (std::size_t i = 0; i < p; ++i) {
    if (fml(lines[i]) && gen(lines[i], last)) return true;
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (!fml(lines[i])) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (i == j || !fml(lines[j])) continue;
      if (mp(lines[i], lines[j], last)) return true;
    }
  }
  return false;
}

bool Predicates::ref(const CodePtr& x) const { return prf(neg_code(x)); }

int Predicates::char_fn(const std::string& name,
                        const std::vector<CodePtr>& args) const {
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument(name + " takes " + std::to_string(n) +
                                  " argument(s), got " + std::to_string(args.size()));
  };
  if (name == "prf") return want(1), prf(args[0]) ? 0 : 1;
  if (name == "pf") return want(2), char_pf(args[0], args[1]);
  if (name == "rf") return want(2), char_rf(args[0], args[1]);
  if (name == "ref") return want(1), ref(args[0]) ? 0 : 1;
  throw std::invalid_argument("no characteristic value for: " + name);
}

bool Predicates::eval_named(const std::string& name,
                            const std::vector<CodePtr>& args) const {
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument(name + " takes " + std::to_string(n) +
                                  " argument(s), got " + std::to_string(args.size()));
  };
  if (name == "gd") return want(1), gd(args[0]);
  if (name == "evbl") return want(1), evbl(args[0]);
  if (name == "fml") return want(1), fml(args[0]);
  if (name == "ax") return want(1), ax(args[0]);
  if (name == "mp") return want(3), mp(args[0], args[1], args[2]);
  if (name == "gen") return want(2), gen(args[0], args[1]);
  if (name == "prf") return want(1), prf(args[0]);
  if (name == "pf") return want(2), pf(args[0], args[1]);
  if (name == "rf") return want(2), rf(args[0], args[1]);
  if (name == "ref") return want(1), ref(args[0]);
  throw std::invalid_argument("unknown predicate: " + name);
}

}  // namespace palab
