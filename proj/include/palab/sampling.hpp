#pragma once

// Deterministic random syntax generators for property tests and the claim
// lab. All draws go through one mt19937_64 stream and use modulo reduction,
// so a seed pins the exact sample sequence.

#include "palab/syntax.hpp"

#include <cstdint>
#include <random>

namespace palab {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t pick(std::uint64_t n) { return n ? rng_() % n : 0; }
  std::mt19937_64& rng() { return rng_; }

  TermPtr term(int depth, std::uint64_t max_var = 3) {
    if (depth <= 0) {
      std::uint64_t c = pick(max_var + 1);
      return c == 0 ? t_zero() : t_var(c);
    }
    switch (pick(5)) {
      case 0:
        return t_zero();
      case 1:
        return t_var(1 + pick(max_var));
      case 2:
        return t_succ(term(depth - 1, max_var));
      case 3:
        return t_plus(term(depth - 1, max_var), term(depth - 1, max_var));
      default:
        return t_times(term(depth - 1, max_var), term(depth - 1, max_var));
    }
  }

  FormulaPtr formula(int depth, std::uint64_t max_var = 3) {
    if (depth <= 0) return f_eq(term(0, max_var), term(0, max_var));
    switch (pick(4)) {
      case 0:
        return f_eq(term(depth - 1, max_var), term(depth - 1, max_var));
      case 1:
        return f_not(formula(depth - 1, max_var));
      case 2:
        return f_imp(formula(depth - 1, max_var), formula(depth - 1, max_var));
      default:
        return f_all(1 + pick(max_var), formula(depth - 1, max_var));
    }
  }

  FormulaPtr toy_formula(int depth) {
    if (depth <= 0) return f_atom(pick(2) == 0 ? "A" : "B");
    switch (pick(3)) {
      case 0:
        return f_atom(pick(2) == 0 ? "A" : "B");
      case 1:
        return f_not(toy_formula(depth - 1));
      default:
        return f_imp(toy_formula(depth - 1), toy_formula(depth - 1));
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace palab
