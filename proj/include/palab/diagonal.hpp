#pragma once

// The substitution operation on codes and the diagonal construction built on
// it: from a formula phi(x_k), produce the sentence delta that says of the
// number m -- the code of an intermediate formula beta -- exactly what phi
// says, where delta's own construction makes sb(m, m-bar) the code of delta.

#include "palab/codec.hpp"
#include "palab/syntax.hpp"

#include <optional>

namespace palab {

struct DiagonalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sb(e, n): decode e as a formula, substitute the numeral n-bar for its free
// variable, re-encode. The variable defaults to the formula's unique free
// variable; pass it explicitly when there are several (throws when omitted
// and the choice is ambiguous or empty).
CodePtr sb_code(const Codec& codec, const CodePtr& e, const SymNat& n,
                std::optional<std::uint64_t> var = std::nullopt);

struct DiagResult {
  FormulaPtr beta;     // phi with sb(x_k, x_k) written for x_k
  CodePtr m;           // code of beta
  FormulaPtr delta;    // beta with the numeral m-bar written for x_k
  CodePtr delta_code;  // code of delta
  bool fixed_point_ok; // does sb(m, m-bar) equal the code of delta?
};

// Diagonalize phi over x_k (default: phi's unique free variable).
DiagResult diagonalize(const Codec& codec, const FormulaPtr& phi,
                       std::optional<std::uint64_t> var = std::nullopt);

// The fixed-point equation in isolation: sb(m, m-bar) == target.
bool verify_fixed_point(const Codec& codec, const CodePtr& m,
                        const CodePtr& target,
                        std::optional<std::uint64_t> var = std::nullopt);

}  // namespace palab
