#include "palab/diagonal.hpp"

namespace palab {
namespace {

std::uint64_t resolve_var(const FormulaPtr& f, std::optional<std::uint64_t> var,
                          const char* who) {
  if (var) return *var;
  auto fv = free_vars(f);
  if (fv.size() != 1)
    throw DiagonalError(std::string(who) +
                        ": formula does not have exactly one free variable; "
                        "pass the variable explicitly");
  return *fv.begin();
}

}  // namespace

CodePtr sb_code(const Codec& codec, const CodePtr& e, const SymNat& n,
                std::optional<std::uint64_t> var) {
  FormulaPtr f;
  try {
    f = codec.decode_formula(e);
  } catch (const DecodeError& err) {
    throw DiagonalError(std::string("sb: first argument is not a formula code: ") +
                        err.what());
  }
  std::uint64_t k = resolve_var(f, var, "sb");
  return codec.encode_formula(substitute(f, k, numeral(n)));
}

DiagResult diagonalize(const Codec& codec, const FormulaPtr& phi,
                       std::optional<std::uint64_t> var) {
  std::uint64_t k = resolve_var(phi, var, "diagonalize");
  FormulaPtr beta = substitute(phi, k, t_sb(t_var(k), t_var(k)));
  CodePtr m = codec.encode_formula(beta);
  FormulaPtr delta = substitute(beta, k, numeral(SymNat::of_code(m)));
  CodePtr delta_code = codec.encode_formula(delta);
  bool ok = code_equal(sb_code(codec, m, SymNat::of_code(m), k), delta_code);
  return DiagResult{beta, m, delta, delta_code, ok};
}

bool verify_fixed_point(const Codec& codec, const CodePtr& m, const CodePtr& target,
                        std::optional<std::uint64_t> var) {
  return code_equal(sb_code(codec, m, SymNat::of_code(m), var), target);
}

}  // namespace palab
