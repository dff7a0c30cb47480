#pragma once

// Axiom-schema recognizers for the three calculi the lab works in:
//   PA  — predicate logic (A1..A5) plus the arithmetic axioms (S1..S9),
//   PF  — predicate logic alone,
//   TOY — a micro-calculus whose sole axiom is the atomic sentence A.
// Everything here is pure formula inspection; no proofs, no codes.

#include "palab/syntax.hpp"

#include <optional>
#include <string>

namespace palab {

enum class TheoryMode { PA, PF, TOY };

std::string to_string(TheoryMode mode);
std::optional<TheoryMode> theory_mode_of(const std::string& name);

// If B == A[x_k := t] for some term t that is free for x_k in A, return such
// a t (x_k itself when x_k is not free in A, so any term would do). This is
// anti-substitution: it reads the witness off the structural difference.
std::optional<TermPtr> match_substitution(const FormulaPtr& a, std::uint64_t k,
                                          const FormulaPtr& b);

// Which logical schema (A1..A5), if any, does f instantiate?
std::optional<std::string> classify_logical_axiom(const FormulaPtr& f);

// Which arithmetic schema (S1..S9), if any, does f instantiate?
std::optional<std::string> classify_proper_axiom(const FormulaPtr& f);

bool is_logical_axiom(const FormulaPtr& f);
bool is_proper_axiom(const FormulaPtr& f);

// Schema name under the given mode, nullopt when f is not an axiom there.
std::optional<std::string> classify_axiom(const FormulaPtr& f, TheoryMode mode);
bool is_axiom(const FormulaPtr& f, TheoryMode mode);

}  // namespace palab
