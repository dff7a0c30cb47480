// Bounded forward proof search: finds short derivations deterministically,
// reports honest exhaustion on unprovable targets, and everything it returns
// survives the tree checker and the arithmetic proof predicate.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "palab/predicates.hpp"
#include "palab/search.hpp"

using namespace palab;

namespace {

const SymbolTable& pa_table() {
  static const SymbolTable t = SymbolTable::pa_default();
  return t;
}

FormulaPtr pf_(const std::string& text) { return parse_formula(text, pa_table()); }

}  // namespace

TEST_CASE("a base axiom is found as a one-line derivation") {
  SearchResult r = bounded_proof_search(pf_("((x1 + 0) = x1)"), TheoryMode::PA, 3);
  REQUIRE(r.proof.has_value());
  CHECK(r.proof->lines.size() == 1);
  CHECK(to_script(*r.proof) == "A ((x1 + 0) = x1)\n");
  CHECK(check_proof(*r.proof, TheoryMode::PA).ok);
}

TEST_CASE("a weakening-schema instance is found as a one-line derivation") {
  SearchResult r = bounded_proof_search(
      pf_("((0 = 0) -> ((x1 = 0) -> (0 = 0)))"), TheoryMode::PA, 3);
  REQUIRE(r.proof.has_value());
  CHECK(r.proof->lines.size() == 1);
}

TEST_CASE("a generalized axiom needs exactly two lines") {
  SearchResult r = bounded_proof_search(pf_("((all x1) ((x1 + 0) = x1))"),
                                        TheoryMode::PA, 3);
  REQUIRE(r.proof.has_value());
  REQUIRE(r.proof->lines.size() == 2);
  CHECK(to_script(*r.proof) == "A ((x1 + 0) = x1)\nGEN 1 x1\n");
  CHECK(check_proof(*r.proof, TheoryMode::PA).ok);
}

TEST_CASE("the search exhausts honestly on a false equation") {
  SearchResult r = bounded_proof_search(pf_("(0 = (0)')"), TheoryMode::PA, 3);
  CHECK(!r.proof.has_value());
  CHECK(r.stats.exhausted);
  CHECK(r.stats.axiom_pool > 0);
}

TEST_CASE("two runs produce identical scripts and statistics") {
  for (const char* target :
       {"((all x1) ((x1 + 0) = x1))", "(0 = (0)')",
        "((0 = 0) -> ((0 = 0) -> (0 = 0)))"}) {
    SearchResult a = bounded_proof_search(pf_(target), TheoryMode::PA, 4);
    SearchResult b = bounded_proof_search(pf_(target), TheoryMode::PA, 4);
    CHECK(a.proof.has_value() == b.proof.has_value());
    if (a.proof && b.proof) CHECK(to_script(*a.proof) == to_script(*b.proof));
    CHECK(a.stats.axiom_pool == b.stats.axiom_pool);
    CHECK(a.stats.derived == b.stats.derived);
    CHECK(a.stats.expansions == b.stats.expansions);
    CHECK(a.stats.exhausted == b.stats.exhausted);
  }
}

TEST_CASE("returned proofs satisfy the arithmetic proof predicate") {
  Codec codec{pa_table()};
  Predicates preds(codec, TheoryMode::PA);
  for (const char* target :
       {"((x1 + 0) = x1)", "((all x1) ((x1 + 0) = x1))",
        "((all x2) ((all x1) ((x1 + x2) = (x2 + x1))))"}) {
    SearchResult r = bounded_proof_search(pf_(target), TheoryMode::PA, 4);
    if (!r.proof) continue;
    CodePtr code = codec.encode_proof(r.proof->formulas());
    CHECK(preds.prf(code));
    CHECK(preds.pf(code, codec.encode_formula(pf_(target))));
  }
}

TEST_CASE("a modus ponens target is reachable within a small budget") {
  // (0 = 0) -> (0 = 0) via the two weakening-style schemas and detachment.
  SearchResult r = bounded_proof_search(pf_("((0 = 0) -> (0 = 0))"),
                                        TheoryMode::PA, 5);
  REQUIRE(r.proof.has_value());
  CHECK(r.proof->lines.size() <= 5);
  CHECK(check_proof(*r.proof, TheoryMode::PA).ok);
  // The last line is the target.
  CHECK(formula_equal(r.proof->last_formula(), pf_("((0 = 0) -> (0 = 0))")));
}

TEST_CASE("search works in the pure-logic fragment too") {
  // The base arithmetic axiom is not available there.
  SearchResult r = bounded_proof_search(pf_("((x1 + 0) = x1)"), TheoryMode::PF, 3);
  CHECK(!r.proof.has_value());
  SearchResult w = bounded_proof_search(
      pf_("((0 = 0) -> ((x1 = 0) -> (0 = 0)))"), TheoryMode::PF, 3);
  REQUIRE(w.proof.has_value());
  CHECK(w.proof->lines.size() == 1);
}
