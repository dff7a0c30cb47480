#pragma once

// Bounded forward proof search: instantiate axiom schemas over a finite term
// and formula pool read off the target, then close under generalization and
// modus ponens level by level up to a line budget. Everything is
// deterministic; two runs on the same inputs produce the same script.

#include "palab/axioms.hpp"
#include "palab/proof.hpp"

#include <cstddef>
#include <optional>

namespace palab {

struct SearchStats {
  std::size_t axiom_pool = 0;      // axiom instances seeded
  std::size_t derived = 0;         // distinct formulas reached within budget
  std::size_t expansions = 0;      // closure steps attempted
  bool exhausted = false;          // closure complete below the budget, no proof
};

struct SearchResult {
  std::optional<Proof> proof;
  SearchStats stats;
};

// Search for a proof of target with at most max_lines lines (counting each
// distinct formula used once). The axiom pool is finite and derived from the
// target's own subterms and subformulas, so exhaustion is meaningful relative
// to that pool.
SearchResult bounded_proof_search(const FormulaPtr& target, TheoryMode mode,
                                  std::size_t max_lines);

}  // namespace palab
