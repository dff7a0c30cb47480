#pragma once

// Proof objects: annotated derivations, the .paproof script format, the
// sequence-level validity check that mirrors the arithmetic proof predicate,
// and deterministic proof mutation for adversarial testing.
//
// Script format, one step per line ("#" starts a comment):
//   A <formula>      assert an axiom instance
//   MP <i> <j>       modus ponens: line i the antecedent, line j the implication
//   GEN <i> <xk>     generalize line i over variable xk
// References are 1-based and must point strictly upward.

#include "palab/axioms.hpp"
#include "palab/symbols.hpp"
#include "palab/syntax.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace palab {

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Justification {
  struct Axiom {};
  struct MP {
    std::size_t from, via;  // 0-based: antecedent line, implication line
  };
  struct Gen {
    std::size_t from;  // 0-based premise line
    std::uint64_t var;
  };
  std::variant<Axiom, MP, Gen> node;
};

struct ProofLine {
  FormulaPtr formula;
  Justification just;
};

struct Proof {
  std::vector<ProofLine> lines;

  std::vector<FormulaPtr> formulas() const;
  FormulaPtr last_formula() const;  // throws ProofError when empty
};

Proof parse_proof(const std::string& text, const std::string& origin,
                  const SymbolTable& table);
Proof load_proof(const std::string& path, const SymbolTable& table);
std::string to_script(const Proof& p);
void save_proof(const Proof& p, const std::string& path);

// Is each formula an axiom, or obtainable from strictly earlier formulas by
// generalization or modus ponens? This is the tree-level twin of the
// arithmetic proof predicate: the two must agree on every sequence.
bool check_sequence(const std::vector<FormulaPtr>& lines, TheoryMode mode);

struct CheckResult {
  bool ok;              // verdict on the bare formula sequence
  bool annotations_ok;  // do the recorded justifications themselves hold up
  std::vector<std::string> diagnostics;
};

// Verdict is check_sequence on the formulas; the annotations are audited
// separately and only feed diagnostics.
CheckResult check_proof(const Proof& p, TheoryMode mode);

// Deterministic corruption: seed 0 is the identity; other seeds swap two
// lines, rewrite one formula, or retarget a modus ponens reference.
Proof mutate_proof(const Proof& p, std::uint64_t seed);

}  // namespace palab
