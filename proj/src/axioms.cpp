#include "palab/axioms.hpp"

#include <functional>

namespace palab {
namespace {

// --- accessors ---------------------------------------------------------------

const Formula::Implies* as_imp(const FormulaPtr& f) {
  return std::get_if<Formula::Implies>(&f->node);
}
const Formula::Not* as_not(const FormulaPtr& f) {
  return std::get_if<Formula::Not>(&f->node);
}
const Formula::ForAll* as_all(const FormulaPtr& f) {
  return std::get_if<Formula::ForAll>(&f->node);
}
const Formula::Equals* as_eq(const FormulaPtr& f) {
  return std::get_if<Formula::Equals>(&f->node);
}
const Term::Succ* as_succ(const TermPtr& t) {
  return std::get_if<Term::Succ>(&t->node);
}
const Term::Plus* as_plus(const TermPtr& t) {
  return std::get_if<Term::Plus>(&t->node);
}
const Term::Times* as_times(const TermPtr& t) {
  return std::get_if<Term::Times>(&t->node);
}
bool is_zero(const TermPtr& t) {
  if (std::holds_alternative<Term::Zero>(t->node)) return true;
  if (const auto* bn = std::get_if<Term::BigNumeral>(&t->node)) {
    if (bn->n.concrete()) return bn->n.value() == 0;
  }
  return false;
}

// --- anti-substitution -------------------------------------------------------

struct SubstMatcher {
  std::uint64_t k;
  std::optional<TermPtr> witness;

  bool term(const TermPtr& a, const TermPtr& b, bool shadowed) {
    if (const auto* v = std::get_if<Term::Variable>(&a->node)) {
      if (v->index == k && !shadowed) {
        if (!witness) {
          witness = b;
          return true;
        }
        return term_equal(*witness, b);
      }
      const auto* w = std::get_if<Term::Variable>(&b->node);
      return w && w->index == v->index;
    }
    if (std::holds_alternative<Term::Zero>(a->node))
      return std::holds_alternative<Term::Zero>(b->node);
    if (const auto* s = std::get_if<Term::Succ>(&a->node)) {
      const auto* t = std::get_if<Term::Succ>(&b->node);
      return t && term(s->arg, t->arg, shadowed);
    }
    if (const auto* s = std::get_if<Term::Plus>(&a->node)) {
      const auto* t = std::get_if<Term::Plus>(&b->node);
      return t && term(s->lhs, t->lhs, shadowed) && term(s->rhs, t->rhs, shadowed);
    }
    if (const auto* s = std::get_if<Term::Times>(&a->node)) {
      const auto* t = std::get_if<Term::Times>(&b->node);
      return t && term(s->lhs, t->lhs, shadowed) && term(s->rhs, t->rhs, shadowed);
    }
    if (const auto* s = std::get_if<Term::SbTerm>(&a->node)) {
      const auto* t = std::get_if<Term::SbTerm>(&b->node);
      return t && term(s->lhs, t->lhs, shadowed) && term(s->rhs, t->rhs, shadowed);
    }
    const auto* s = std::get_if<Term::BigNumeral>(&a->node);
    const auto* t = std::get_if<Term::BigNumeral>(&b->node);
    return s && t && symnat_equal(s->n, t->n);
  }

  bool formula(const FormulaPtr& a, const FormulaPtr& b, bool shadowed) {
    if (const auto* p = std::get_if<Formula::Atom>(&a->node)) {
      const auto* q = std::get_if<Formula::Atom>(&b->node);
      return q && p->name == q->name;
    }
    if (const auto* p = as_eq(a)) {
      const auto* q = as_eq(b);
      return q && term(p->lhs, q->lhs, shadowed) && term(p->rhs, q->rhs, shadowed);
    }
    if (const auto* p = as_not(a)) {
      const auto* q = as_not(b);
      return q && formula(p->arg, q->arg, shadowed);
    }
    if (const auto* p = as_imp(a)) {
      const auto* q = as_imp(b);
      return q && formula(p->lhs, q->lhs, shadowed) && formula(p->rhs, q->rhs, shadowed);
    }
    const auto* p = as_all(a);
    const auto* q = as_all(b);
    if (!p || !q || p->var != q->var) return false;
    return formula(p->body, q->body, shadowed || p->var == k);
  }
};

// --- logical schemas ---------------------------------------------------------

// A1: a -> (b -> a)
bool match_a1(const FormulaPtr& f) {
  const auto* top = as_imp(f);
  if (!top) return false;
  const auto* rhs = as_imp(top->rhs);
  return rhs && formula_equal(top->lhs, rhs->rhs);
}

// A2: (a -> (b -> c)) -> ((a -> b) -> (a -> c))
bool match_a2(const FormulaPtr& f) {
  const auto* top = as_imp(f);
  if (!top) return false;
  const auto* l = as_imp(top->lhs);
  const auto* r = as_imp(top->rhs);
  if (!l || !r) return false;
  const auto* lr = as_imp(l->rhs);    // b -> c
  const auto* rl = as_imp(r->lhs);    // a -> b
  const auto* rr = as_imp(r->rhs);    // a -> c
  if (!lr || !rl || !rr) return false;
  return formula_equal(l->lhs, rl->lhs) && formula_equal(l->lhs, rr->lhs) &&
         formula_equal(lr->lhs, rl->rhs) && formula_equal(lr->rhs, rr->rhs);
}

// A3: ((~b) -> (~a)) -> (((~b) -> a) -> b)
bool match_a3(const FormulaPtr& f) {
  const auto* top = as_imp(f);
  if (!top) return false;
  const auto* l = as_imp(top->lhs);
  const auto* r = as_imp(top->rhs);
  if (!l || !r) return false;
  const auto* lnb = as_not(l->lhs);
  const auto* lna = as_not(l->rhs);
  const auto* rl = as_imp(r->lhs);
  if (!lnb || !lna || !rl) return false;
  const auto* rlnb = as_not(rl->lhs);
  if (!rlnb) return false;
  return formula_equal(lnb->arg, rlnb->arg) && formula_equal(lnb->arg, r->rhs) &&
         formula_equal(lna->arg, rl->rhs);
}

// A4: ((all xk) a) -> a[xk := t], t free for xk in a
bool match_a4(const FormulaPtr& f) {
  const auto* top = as_imp(f);
  if (!top) return false;
  const auto* q = as_all(top->lhs);
  if (!q) return false;
  return match_substitution(q->body, q->var, top->rhs).has_value();
}

// A5: ((all xk) (a -> b)) -> (a -> ((all xk) b)), xk not free in a
bool match_a5(const FormulaPtr& f) {
  const auto* top = as_imp(f);
  if (!top) return false;
  const auto* q = as_all(top->lhs);
  const auto* r = as_imp(top->rhs);
  if (!q || !r) return false;
  const auto* body = as_imp(q->body);
  const auto* rq = as_all(r->rhs);
  if (!body || !rq || rq->var != q->var) return false;
  if (!formula_equal(body->lhs, r->lhs)) return false;
  if (!formula_equal(body->rhs, rq->body)) return false;
  return !free_vars(body->lhs).contains(q->var);
}

// --- arithmetic schemas ------------------------------------------------------

// S1: (t = r) -> ((t = s) -> (r = s))
bool match_s1(const FormulaPtr& f) {
  const auto* top = as_imp(f);
  if (!top) return false;
  const auto* e1 = as_eq(top->lhs);
  const auto* inner = as_imp(top->rhs);
  if (!e1 || !inner) return false;
  const auto* e2 = as_eq(inner->lhs);
  const auto* e3 = as_eq(inner->rhs);
  if (!e2 || !e3) return false;
  return term_equal(e1->lhs, e2->lhs) && term_equal(e1->rhs, e3->lhs) &&
         term_equal(e2->rhs, e3->rhs);
}

// S2: (t = r) -> ((t)' = (r)')
bool match_s2(const FormulaPtr& f) {
  const auto* top = as_imp(f);
  if (!top) return false;
  const auto* e1 = as_eq(top->lhs);
  const auto* e2 = as_eq(top->rhs);
  if (!e1 || !e2) return false;
  const auto* sl = as_succ(e2->lhs);
  const auto* sr = as_succ(e2->rhs);
  if (!sl || !sr) return false;
  return term_equal(e1->lhs, sl->arg) && term_equal(e1->rhs, sr->arg);
}

// S3: (~ (0 = (t)'))
bool match_s3(const FormulaPtr& f) {
  const auto* n = as_not(f);
  if (!n) return false;
  const auto* e = as_eq(n->arg);
  if (!e) return false;
  return is_zero(e->lhs) && as_succ(e->rhs) != nullptr;
}

// S4: ((t)' = (r)') -> (t = r)
bool match_s4(const FormulaPtr& f) {
  const auto* top = as_imp(f);
  if (!top) return false;
  const auto* e1 = as_eq(top->lhs);
  const auto* e2 = as_eq(top->rhs);
  if (!e1 || !e2) return false;
  const auto* sl = as_succ(e1->lhs);
  const auto* sr = as_succ(e1->rhs);
  if (!sl || !sr) return false;
  return term_equal(sl->arg, e2->lhs) && term_equal(sr->arg, e2->rhs);
}

// S5: ((t + 0) = t)
bool match_s5(const FormulaPtr& f) {
  const auto* e = as_eq(f);
  if (!e) return false;
  const auto* p = as_plus(e->lhs);
  if (!p) return false;
  return is_zero(p->rhs) && term_equal(p->lhs, e->rhs);
}

// S6: ((t + (r)') = ((t + r))')
bool match_s6(const FormulaPtr& f) {
  const auto* e = as_eq(f);
  if (!e) return false;
  const auto* p = as_plus(e->lhs);
  const auto* s = as_succ(e->rhs);
  if (!p || !s) return false;
  const auto* sr = as_succ(p->rhs);
  const auto* inner = as_plus(s->arg);
  if (!sr || !inner) return false;
  return term_equal(p->lhs, inner->lhs) && term_equal(sr->arg, inner->rhs);
}

// S7: ((t . 0) = 0)
bool match_s7(const FormulaPtr& f) {
  const auto* e = as_eq(f);
  if (!e) return false;
  const auto* m = as_times(e->lhs);
  if (!m) return false;
  return is_zero(m->rhs) && is_zero(e->rhs);
}

// S8: ((t . (r)') = ((t . r) + t))
bool match_s8(const FormulaPtr& f) {
  const auto* e = as_eq(f);
  if (!e) return false;
  const auto* m = as_times(e->lhs);
  const auto* p = as_plus(e->rhs);
  if (!m || !p) return false;
  const auto* sr = as_succ(m->rhs);
  const auto* inner = as_times(p->lhs);
  if (!sr || !inner) return false;
  return term_equal(m->lhs, inner->lhs) && term_equal(sr->arg, inner->rhs) &&
         term_equal(m->lhs, p->rhs);
}

// S9: a[xk:=0] -> (((all xk)(a -> a[xk:=(xk)'])) -> ((all xk) a))
bool match_s9(const FormulaPtr& f) {
  const auto* top = as_imp(f);
  if (!top) return false;
  const auto* inner = as_imp(top->rhs);
  if (!inner) return false;
  const auto* stepq = as_all(inner->lhs);
  const auto* concq = as_all(inner->rhs);
  if (!stepq || !concq || stepq->var != concq->var) return false;
  const std::uint64_t k = concq->var;
  const FormulaPtr& alpha = concq->body;
  const auto* steps = as_imp(stepq->body);
  if (!steps) return false;
  if (!formula_equal(steps->lhs, alpha)) return false;
  try {
    if (!formula_equal(top->lhs, substitute(alpha, k, t_zero()))) return false;
    return formula_equal(steps->rhs, substitute(alpha, k, t_succ(t_var(k))));
  } catch (const CaptureError&) {
    return false;
  }
}

}  // namespace

std::string to_string(TheoryMode mode) {
  switch (mode) {
    case TheoryMode::PA:
      return "pa";
    case TheoryMode::PF:
      return "pf";
    case TheoryMode::TOY:
      return "toy";
  }
  return "?";
}

std::optional<TheoryMode> theory_mode_of(const std::string& name) {
  if (name == "pa") return TheoryMode::PA;
  if (name == "pf") return TheoryMode::PF;
  if (name == "toy") return TheoryMode::TOY;
  return std::nullopt;
}

std::optional<TermPtr> match_substitution(const FormulaPtr& a, std::uint64_t k,
                                          const FormulaPtr& b) {
  SubstMatcher m{k, std::nullopt};
  if (!m.formula(a, b, false)) return std::nullopt;
  TermPtr t = m.witness ? *m.witness : t_var(k);
  if (!is_free_for(t, k, a)) return std::nullopt;
  return t;
}

std::optional<std::string> classify_logical_axiom(const FormulaPtr& f) {
  if (match_a1(f)) return "A1";
  if (match_a2(f)) return "A2";
  if (match_a3(f)) return "A3";
  if (match_a4(f)) return "A4";
  if (match_a5(f)) return "A5";
  return std::nullopt;
}

std::optional<std::string> classify_proper_axiom(const FormulaPtr& f) {
  if (match_s1(f)) return "S1";
  if (match_s2(f)) return "S2";
  if (match_s3(f)) return "S3";
  if (match_s4(f)) return "S4";
  if (match_s5(f)) return "S5";
  if (match_s6(f)) return "S6";
  if (match_s7(f)) return "S7";
  if (match_s8(f)) return "S8";
  if (match_s9(f)) return "S9";
  return std::nullopt;
}

bool is_logical_axiom(const FormulaPtr& f) {
  return classify_logical_axiom(f).has_value();
}

bool is_proper_axiom(const FormulaPtr& f) {
  return classify_proper_axiom(f).has_value();
}

std::optional<std::string> classify_axiom(const FormulaPtr& f, TheoryMode mode) {
  switch (mode) {
    case TheoryMode::PA:
      if (auto c = classify_logical_axiom(f)) return c;
      return classify_proper_axiom(f);
    case TheoryMode::PF:
      return classify_logical_axiom(f);
    case TheoryMode::TOY:
      if (formula_equal(f, f_atom("A"))) return "TOY";
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_axiom(const FormulaPtr& f, TheoryMode mode) {
  return classify_axiom(f, mode).has_value();
}

}  // namespace palab
