// Axiom schema recognizers: positives for every schema, near-miss
// negatives, side conditions, and the substitution matcher they rest on.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "palab/axioms.hpp"
#include "palab/symbols.hpp"

using namespace palab;

namespace {

const SymbolTable& pa_table() {
  static const SymbolTable t = SymbolTable::pa_default();
  return t;
}

FormulaPtr pf(const std::string& text) { return parse_formula(text, pa_table()); }

std::string klass(const std::string& text) {
  auto c = classify_axiom(pf(text), TheoryMode::PA);
  return c ? *c : "none";
}

}  // namespace

TEST_CASE("every schema has recognized instances") {
  CHECK(klass("((0 = 0) -> ((x1 = 0) -> (0 = 0)))") == "A1");
  CHECK(klass("(((0 = 0) -> ((x1 = x1) -> (x2 = x2))) -> (((0 = 0) -> (x1 = "
              "x1)) -> ((0 = 0) -> (x2 = x2))))") == "A2");
  CHECK(klass("(((~ (0 = 0)) -> (~ (x1 = 0))) -> (((~ (0 = 0)) -> (x1 = 0)) "
              "-> (0 = 0)))") == "A3");
  CHECK(klass("(((all x1) (x1 = x1)) -> (0 = 0))") == "A4");
  CHECK(klass("(((all x1) ((0 = 0) -> (x1 = x1))) -> ((0 = 0) -> ((all x1) "
              "(x1 = x1))))") == "A5");
  CHECK(klass("((x1 = x2) -> ((x1 = x3) -> (x2 = x3)))") == "S1");
  CHECK(klass("((x1 = x2) -> ((x1)' = (x2)'))") == "S2");
  CHECK(klass("(~ (0 = (x1)'))") == "S3");
  CHECK(klass("(((x1)' = (x2)') -> (x1 = x2))") == "S4");
  CHECK(klass("((x1 + 0) = x1)") == "S5");
  CHECK(klass("((x1 + (x2)') = ((x1 + x2))')") == "S6");
  CHECK(klass("((x1 . 0) = 0)") == "S7");
  CHECK(klass("((x1 . (x2)') = ((x1 . x2) + x1))") == "S8");
  CHECK(klass("((0 = 0) -> (((all x1) ((x1 = x1) -> ((x1)' = (x1)'))) -> "
              "((all x1) (x1 = x1))))") == "S9");
}

TEST_CASE("schemas accept compound terms, not just variables") {
  CHECK(klass("(((x1 + x2) + 0) = (x1 + x2))") == "S5");
  CHECK(klass("(((x1 . x2) . 0) = 0)") == "S7");
  CHECK(klass("(~ (0 = ((x1 . x2))'))") == "S3");
  CHECK(klass("((((x1 + x2))' = ((x1 . x2))') -> ((x1 + x2) = (x1 . x2)))") ==
        "S4");
  CHECK(klass("(((x1 + 0) = x1) -> (((x1 + 0))' = (x1)'))") == "S2");
}

TEST_CASE("near misses are rejected") {
  CHECK(klass("(0 = 0)") == "none");
  CHECK(klass("((x1 + 0) = x2)") == "none");           // wrong rhs for S5
  CHECK(klass("((0 + x1) = x1)") == "none");           // arguments swapped
  CHECK(klass("(~ ((0)' = (x1)'))") == "none");        // S3 needs 0 on the left
  CHECK(klass("((x1 = x2) -> ((x2)' = (x1)'))") == "none");  // S2 crossed
  CHECK(klass("((0 = 0) -> ((x1 = 0) -> (0 = (0)')))") == "none");  // A1 broken
  CHECK(klass("((x1 . (x2)') = ((x1 . x2) + x2))") == "none");      // S8 broken
  // S1 with the conclusion arguments flipped.
  CHECK(klass("((x1 = x2) -> ((x1 = x3) -> (x3 = x2)))") == "none");
}

TEST_CASE("instantiation respects the free-for side condition") {
  // Substituting x2 for x1 under (all x2) would capture it.
  CHECK(klass("(((all x1) ((all x2) (x1 = x2))) -> ((all x2) (x2 = x2)))") ==
        "none");
  // The same shape with a fresh variable is a proper instance.
  CHECK(klass("(((all x1) ((all x2) (x1 = x2))) -> ((all x2) (x3 = x2)))") ==
        "A4");
  // Instantiating with the bound variable itself is always allowed.
  CHECK(klass("(((all x1) ((x1 + 0) = x1)) -> ((x1 + 0) = x1))") == "A4");
}

TEST_CASE("quantifier shift requires the variable absent from the antecedent") {
  CHECK(klass("(((all x1) ((x1 = 0) -> (x1 = x1))) -> ((x1 = 0) -> ((all x1) "
              "(x1 = x1))))") == "none");
  CHECK(klass("(((all x2) ((~ (0 = (0)')) -> (x2 = 0))) -> ((~ (0 = (0)')) "
              "-> ((all x2) (x2 = 0))))") == "A5");
}

TEST_CASE("logical-only mode excludes the proper axioms") {
  FormulaPtr s5 = pf("((x1 + 0) = x1)");
  CHECK(is_axiom(s5, TheoryMode::PA));
  CHECK_FALSE(is_axiom(s5, TheoryMode::PF));
  FormulaPtr a1 = pf("((0 = 0) -> ((x1 = 0) -> (0 = 0)))");
  CHECK(is_axiom(a1, TheoryMode::PA));
  CHECK(is_axiom(a1, TheoryMode::PF));
  CHECK_FALSE(is_axiom(pf("(0 = 0)"), TheoryMode::PF));
}

TEST_CASE("the toy calculus has exactly one axiom") {
  CHECK(classify_axiom(f_atom("A"), TheoryMode::TOY) == std::string("TOY"));
  CHECK_FALSE(classify_axiom(f_atom("B"), TheoryMode::TOY).has_value());
  CHECK_FALSE(classify_axiom(f_not(f_atom("A")), TheoryMode::TOY).has_value());
  CHECK_FALSE(
      classify_axiom(f_imp(f_atom("A"), f_atom("A")), TheoryMode::TOY).has_value());
  // Logical schemas still apply over atoms in the logical-only mode.
  CHECK(is_axiom(f_imp(f_atom("A"), f_imp(f_atom("B"), f_atom("A"))),
                 TheoryMode::PF));
}

TEST_CASE("the substitution matcher recovers witnesses") {
  FormulaPtr body = pf("(x1 = (x1 + x2))");
  auto w = match_substitution(body, 1, pf("((0)' = ((0)' + x2))"));
  REQUIRE(w.has_value());
  CHECK(term_equal(*w, t_succ(t_zero())));
  // Mismatched occurrences yield nothing.
  CHECK_FALSE(match_substitution(body, 1, pf("((0)' = (0 + x2))")).has_value());
  // Vacuous substitution matches with the default witness.
  auto v = match_substitution(pf("(x2 = x2)"), 1, pf("(x2 = x2)"));
  CHECK(v.has_value());
  // The shadowed case: no free occurrence under the binder, so the target
  // must equal the body verbatim.
  FormulaPtr shadowed = pf("((all x1) (x1 = x1))");
  CHECK(match_substitution(shadowed, 1, shadowed).has_value());
  CHECK_FALSE(match_substitution(shadowed, 1, pf("((all x1) (0 = 0))")).has_value());
}

TEST_CASE("induction instances bind the conclusion variable") {
  // Base or step drawn from a different formula is rejected.
  CHECK(klass("(((0 + 0) = 0) -> (((all x1) (((x1 + 0) = x1) -> (((x1)' + 0) "
              "= (x1)'))) -> ((all x1) ((x1 + 0) = x1))))") == "S9");
  CHECK(klass("((0 = 0) -> (((all x1) (((x1 + 0) = x1) -> (((x1)' + 0) = "
              "(x1)'))) -> ((all x1) ((x1 + 0) = x1))))") == "none");
  CHECK(klass("(((0 + 0) = 0) -> (((all x1) (((x1 + 0) = x1) -> ((x1 + 0) = "
              "x1))) -> ((all x1) ((x1 + 0) = x1))))") == "none");
  // Step and conclusion quantify different variables: rejected.
  CHECK(klass("(((0 + 0) = 0) -> (((all x2) (((x1 + 0) = x1) -> (((x1)' + 0) "
              "= (x1)'))) -> ((all x1) ((x1 + 0) = x1))))") == "none");
}
