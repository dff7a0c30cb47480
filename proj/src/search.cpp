#include "palab/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace palab {
namespace {

constexpr std::size_t kMaxTerms = 24;
constexpr std::size_t kMaxInstances = 4000;
constexpr std::size_t kMaxLogical = 768;  // share of the pool for A1..A3
constexpr std::size_t kMaxDerived = 20000;
constexpr std::size_t kMaxFormulaPool = 8;
constexpr std::size_t kMaxVars = 4;

struct Entry {
  FormulaPtr f;
  std::size_t cost;
  int how;             // 0 axiom, 1 gen, 2 mp
  std::size_t a = 0;   // gen: premise; mp: implication entry
  std::size_t b = 0;   // mp: antecedent entry
  std::uint64_t var = 0;
};

void collect_subterms(const TermPtr& t, std::vector<TermPtr>& out) {
  if (const auto* s = std::get_if<Term::Succ>(&t->node)) collect_subterms(s->arg, out);
  if (const auto* s = std::get_if<Term::Plus>(&t->node)) {
    collect_subterms(s->lhs, out);
    collect_subterms(s->rhs, out);
  }
  if (const auto* s = std::get_if<Term::Times>(&t->node)) {
    collect_subterms(s->lhs, out);
    collect_subterms(s->rhs, out);
  }
  if (const auto* s = std::get_if<Term::SbTerm>(&t->node)) {
    collect_subterms(s->lhs, out);
    collect_subterms(s->rhs, out);
  }
  out.push_back(t);
}

void collect_subformulas(const FormulaPtr& f, std::vector<FormulaPtr>& formulas,
                         std::vector<TermPtr>& terms) {
  if (const auto* e = std::get_if<Formula::Equals>(&f->node)) {
    collect_subterms(e->lhs, terms);
    collect_subterms(e->rhs, terms);
  } else if (const auto* n = std::get_if<Formula::Not>(&f->node)) {
    collect_subformulas(n->arg, formulas, terms);
  } else if (const auto* i = std::get_if<Formula::Implies>(&f->node)) {
    collect_subformulas(i->lhs, formulas, terms);
    collect_subformulas(i->rhs, formulas, terms);
  } else if (const auto* q = std::get_if<Formula::ForAll>(&f->node)) {
    collect_subformulas(q->body, formulas, terms);
  }
  formulas.push_back(f);
}

template <typename T>
class Dedup {
 public:
  bool add(const T& x, const std::string& key) {
    if (!seen_.insert(key).second) return false;
    items_.push_back(x);
    return true;
  }
  const std::vector<T>& items() const { return items_; }

 private:
  std::set<std::string> seen_;
  std::vector<T> items_;
};

}  // namespace

SearchResult bounded_proof_search(const FormulaPtr& target, TheoryMode mode,
                                  std::size_t max_lines) {
  SearchResult result;

  // Term, variable, and formula pools read off the target.
  std::vector<FormulaPtr> subf_raw;
  std::vector<TermPtr> subt_raw;
  collect_subformulas(target, subf_raw, subt_raw);
  subt_raw.push_back(t_zero());
  subt_raw.push_back(t_var(1));
  subt_raw.push_back(t_var(2));

  Dedup<TermPtr> terms;
  for (const auto& t : subt_raw) {
    if (terms.items().size() >= kMaxTerms) break;
    terms.add(t, to_string(t));
  }
  {
    std::vector<TermPtr> base = terms.items();
    for (const auto& t : base) {
      if (terms.items().size() >= kMaxTerms) break;
      terms.add(t_succ(t), to_string(t_succ(t)));
    }
  }
  const auto& T = terms.items();

  Dedup<FormulaPtr> pool;
  std::size_t pool_cap = kMaxInstances;
  auto seed = [&](const FormulaPtr& f) {
    if (pool.items().size() >= pool_cap) return;
    if (is_axiom(f, mode)) pool.add(f, to_string(f));
  };

  seed(target);  // covers schema shapes the pools below do not instantiate
  if (mode == TheoryMode::TOY) seed(f_atom("A"));
  if (mode == TheoryMode::PA) {
    for (const auto& t : T) {
      seed(f_eq(t_plus(t, t_zero()), t));                       // S5
      seed(f_eq(t_times(t, t_zero()), t_zero()));               // S7
      seed(f_not(f_eq(t_zero(), t_succ(t))));                   // S3
    }
    for (const auto& t : T) {
      for (const auto& r : T) {
        seed(f_imp(f_eq(t, r), f_eq(t_succ(t), t_succ(r))));    // S2
        seed(f_imp(f_eq(t_succ(t), t_succ(r)), f_eq(t, r)));    // S4
        seed(f_eq(t_plus(t, t_succ(r)), t_succ(t_plus(t, r))));                 // S6
        seed(f_eq(t_times(t, t_succ(r)), t_plus(t_times(t, r), t)));            // S8
      }
    }
    for (const auto& t : T) {
      if (pool.items().size() >= kMaxInstances) break;
      for (const auto& r : T)
        for (const auto& s : T)
          seed(f_imp(f_eq(t, r), f_imp(f_eq(t, s), f_eq(r, s))));  // S1
    }
  }
  if (mode == TheoryMode::PA || mode == TheoryMode::PF) {
    // A4/A5 instances for the universally quantified subformulas.
    for (const auto& f : subf_raw) {
      const auto* q = std::get_if<Formula::ForAll>(&f->node);
      if (!q) continue;
      for (const auto& t : T) {
        try {
          seed(f_imp(f, substitute(q->body, q->var, t)));
        } catch (const CaptureError&) {
        }
      }
      if (const auto* body = std::get_if<Formula::Implies>(&q->body->node))
        seed(f_imp(f, f_imp(body->lhs, f_all(q->var, body->rhs))));
    }
    Dedup<FormulaPtr> phi;
    for (const auto& f : subf_raw) {
      if (phi.items().size() >= kMaxFormulaPool) break;
      phi.add(f, to_string(f));
    }
    for (const auto& f : pool.items()) {
      if (phi.items().size() >= kMaxFormulaPool) break;
      phi.add(f, to_string(f));
    }
    const auto& P = phi.items();
    pool_cap = std::min(kMaxInstances, pool.items().size() + kMaxLogical);
    for (const auto& a : P)
      for (const auto& b : P) {
        seed(f_imp(a, f_imp(b, a)));                             // A1
        seed(f_imp(f_imp(f_not(b), f_not(a)),
                   f_imp(f_imp(f_not(b), a), b)));               // A3
      }
    for (const auto& a : P)
      for (const auto& b : P)
        for (const auto& c : P)
          seed(f_imp(f_imp(a, f_imp(b, c)),
                     f_imp(f_imp(a, b), f_imp(a, c))));          // A2
  }

  result.stats.axiom_pool = pool.items().size();

  // Generalization is only tried over variables that can matter: those free
  // in the premise, plus variables the target itself binds (for vacuous
  // quantifiers).
  std::set<std::uint64_t> target_bound;
  for (const auto& f : subf_raw) {
    if (const auto* q = std::get_if<Formula::ForAll>(&f->node))
      target_bound.insert(q->var);
  }

  // Level-synchronous closure under Gen and MP.
  std::vector<Entry> entries;
  std::map<std::string, std::size_t> index;
  std::optional<std::size_t> goal;
  bool truncated = false;
  std::string target_key = to_string(target);

  auto add = [&](Entry e) -> bool {
    std::string key = to_string(e.f);
    if (index.count(key)) return false;
    if (entries.size() >= kMaxDerived) {
      truncated = true;
      return false;
    }
    index[key] = entries.size();
    entries.push_back(std::move(e));
    if (!goal && key == target_key) goal = entries.size() - 1;
    return true;
  };

  for (const auto& f : pool.items()) {
    if (max_lines >= 1) add({f, 1, 0});
    if (goal) break;
  }

  for (std::size_t cost = 2; cost <= max_lines && !goal; ++cost) {
    std::size_t frozen = entries.size();
    for (std::size_t i = 0; i < frozen && !goal; ++i) {
      ++result.stats.expansions;
      if (entries[i].cost == cost - 1) {
        std::set<std::uint64_t> gen_vars = free_vars(entries[i].f);
        gen_vars.insert(target_bound.begin(), target_bound.end());
        for (auto v : gen_vars) {
          add({f_all(v, entries[i].f), cost, 1, i, 0, v});
          if (goal) break;
        }
      }
      if (goal) break;
      const auto* imp = std::get_if<Formula::Implies>(&entries[i].f->node);
      if (!imp) continue;
      auto it = index.find(to_string(imp->lhs));
      if (it == index.end() || it->second >= frozen) continue;
      std::size_t j = it->second;
      if (entries[i].cost + entries[j].cost + 1 == cost)
        add({imp->rhs, cost, 2, i, j});
    }
  }

  result.stats.derived = entries.size();
  if (!goal) {
    result.stats.exhausted = !truncated;
    return result;
  }

  // Reconstruct: dependencies always precede dependents, so sorting the
  // needed entry indices yields a valid line order.
  std::set<std::size_t> needed;
  std::vector<std::size_t> stack{*goal};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    if (!needed.insert(i).second) continue;
    if (entries[i].how == 1) stack.push_back(entries[i].a);
    if (entries[i].how == 2) {
      stack.push_back(entries[i].a);
      stack.push_back(entries[i].b);
    }
  }
  std::vector<std::size_t> order(needed.begin(), needed.end());
  std::map<std::size_t, std::size_t> pos;
  Proof proof;
  for (std::size_t i : order) {
    pos[i] = proof.lines.size();
    const Entry& e = entries[i];
    if (e.how == 0) {
      proof.lines.push_back({e.f, {Justification::Axiom{}}});
    } else if (e.how == 1) {
      proof.lines.push_back({e.f, {Justification::Gen{pos[e.a], e.var}}});
    } else {
      proof.lines.push_back({e.f, {Justification::MP{pos[e.b], pos[e.a]}}});
    }
  }
  result.proof = std::move(proof);
  return result;
}

}  // namespace palab
