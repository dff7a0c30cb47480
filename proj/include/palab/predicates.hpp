#pragma once

// The number-theoretic predicate family, evaluated structurally on codes:
//   Gd, EVbl, Fml, Ax, Neg, MP, Gen, Prf, Pf, Rf, Ref
// plus the 0/1 characteristic values. Each predicate follows its defining
// arithmetic equation read as a statement about sequence codes; none of them
// consults proof objects or any other side channel.

#include "palab/axioms.hpp"
#include "palab/codec.hpp"

#include <string>
#include <vector>

namespace palab {

class Predicates {
 public:
  // The toy calculus only makes sense over a table that names its axiom atom.
  Predicates(Codec codec, TheoryMode mode) : codec_(std::move(codec)), mode_(mode) {
    if (mode_ == TheoryMode::TOY && !codec_.table().is_atom("A"))
      throw TableError("toy mode needs a table with the atom A");
  }

  const Codec& codec() const { return codec_; }
  TheoryMode mode() const { return mode_; }

  // x is the code of a nonempty string of primitive symbols.
  bool gd(const CodePtr& x) const;

  // x is the code of a length-1 string holding one variable symbol.
  bool evbl(const CodePtr& x) const;

  // x is the code of a well-formed formula.
  bool fml(const CodePtr& x) const;

  // x is the code of an axiom of the current calculus.
  bool ax(const CodePtr& x) const;

  // The code of ( ~ v ) given the code v.
  CodePtr neg_code(const CodePtr& v) const;

  // y is the code of ( x -> z ), with x and z symbol strings.
  bool mp(const CodePtr& x, const CodePtr& y, const CodePtr& z) const;

  // y is the code of ( ( all xk ) x ) for some variable xk.
  bool gen(const CodePtr& x, const CodePtr& y) const;

  // x is the code of a proof: every line an axiom, or derived from strictly
  // earlier lines by generalization or modus ponens.
  bool prf(const CodePtr& x) const;

  // x is the code of a proof whose last line is v.
  bool pf(const CodePtr& x, const CodePtr& v) const;

  // x is the code of a proof whose last line is ( ~ v ).
  bool rf(const CodePtr& x, const CodePtr& v) const;

  // Same relation, evaluated along the expanded last-step case split instead
  // of delegating to pf; kept as an independent cross-check.
  bool rf_expanded(const CodePtr& x, const CodePtr& v) const;

  // Refutability as actually defined: the *symbol string* ( ~ x ) read as a
  // proof code. Its lines are single symbols, so this is uniformly false.
  bool ref(const CodePtr& x) const;

  // Characteristic values: 0 when the relation holds, 1 when it fails.
  int char_pf(const CodePtr& x, const CodePtr& v) const { return pf(x, v) ? 0 : 1; }
  int char_rf(const CodePtr& x, const CodePtr& v) const { return rf(x, v) ? 0 : 1; }

  // Characteristic value by predicate name (prf, pf, rf, ref), and its
  // complement 1 - C. Throws on unknown names or wrong arity.
  int char_fn(const std::string& name, const std::vector<CodePtr>& args) const;
  int co_char_fn(const std::string& name, const std::vector<CodePtr>& args) const {
    return 1 - char_fn(name, args);
  }

  // Dispatch by predicate name for the command line; throws on unknown names
  // or wrong arity.
  bool eval_named(const std::string& name, const std::vector<CodePtr>& args) const;

 private:
  bool justified_at(const std::vector<CodePtr>& lines, std::size_t p) const;
  std::vector<CodePtr> proof_lines(const CodePtr& x) const;
  static bool eq(const CodePtr& a, const CodePtr& b);

  Codec codec_;
  TheoryMode mode_;
};

}  // namespace palab
