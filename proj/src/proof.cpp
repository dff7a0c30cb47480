#include "palab/proof.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace palab {
namespace {

const Formula::Implies* as_imp(const FormulaPtr& f) {
  return std::get_if<Formula::Implies>(&f->node);
}
const Formula::ForAll* as_all(const FormulaPtr& f) {
  return std::get_if<Formula::ForAll>(&f->node);
}

std::uint64_t parse_var_token(const std::string& tok, const std::string& where) {
  if (tok.size() < 2 || tok[0] != 'x')
    throw ProofError(where + ": expected a variable like x1, got '" + tok + "'");
  std::uint64_t k = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9')
      throw ProofError(where + ": expected a variable like x1, got '" + tok + "'");
    k = k * 10 + (tok[i] - '0');
  }
  if (k == 0) throw ProofError(where + ": variable indices start at 1");
  return k;
}

std::size_t parse_ref(const std::string& tok, std::size_t line_count,
                      const std::string& where) {
  std::uint64_t n = 0;
  if (tok.empty()) throw ProofError(where + ": missing line reference");
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw ProofError(where + ": bad line reference '" + tok + "'");
    n = n * 10 + (c - '0');
  }
  if (n == 0 || n > line_count)
    throw ProofError(where + ": reference " + tok + " does not point strictly upward");
  return static_cast<std::size_t>(n - 1);
}

}  // namespace

std::vector<FormulaPtr> Proof::formulas() const {
  std::vector<FormulaPtr> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(l.formula);
  return out;
}

FormulaPtr Proof::last_formula() const {
  if (lines.empty()) throw ProofError("empty proof has no last formula");
  return lines.back().formula;
}

Proof parse_proof(const std::string& text, const std::string& origin,
                  const SymbolTable& table) {
  Proof p;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string where = origin + ":" + std::to_string(lineno);
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string op;
    if (!(ls >> op)) continue;
    if (op == "A") {
      std::string rest;
      std::getline(ls, rest);
      try {
        p.lines.push_back({parse_formula(rest, table), {Justification::Axiom{}}});
      } catch (const ParseError& e) {
        throw ProofError(where + ": " + e.what());
      }
    } else if (op == "MP") {
      std::string ti, tj;
      if (!(ls >> ti >> tj)) throw ProofError(where + ": MP needs two references");
      std::size_t i = parse_ref(ti, p.lines.size(), where);
      std::size_t j = parse_ref(tj, p.lines.size(), where);
      const auto* imp = as_imp(p.lines[j].formula);
      if (!imp)
        throw ProofError(where + ": line " + tj + " is not an implication");
      if (!formula_equal(imp->lhs, p.lines[i].formula))
        throw ProofError(where + ": line " + ti +
                         " does not match the antecedent of line " + tj);
      p.lines.push_back({imp->rhs, {Justification::MP{i, j}}});
    } else if (op == "GEN") {
      std::string ti, tv;
      if (!(ls >> ti >> tv))
        throw ProofError(where + ": GEN needs a reference and a variable");
      std::size_t i = parse_ref(ti, p.lines.size(), where);
      std::uint64_t k = parse_var_token(tv, where);
      p.lines.push_back({f_all(k, p.lines[i].formula), {Justification::Gen{i, k}}});
    } else {
      throw ProofError(where + ": unknown step '" + op + "'");
    }
  }
  if (p.lines.empty()) throw ProofError(origin + ": empty proof script");
  return p;
}

Proof load_proof(const std::string& path, const SymbolTable& table) {
  std::ifstream in(path);
  if (!in) throw ProofError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof(buf.str(), path, table);
}

std::string to_script(const Proof& p) {
  std::ostringstream out;
  for (const auto& l : p.lines) {
    if (std::holds_alternative<Justification::Axiom>(l.just.node)) {
      out << "A " << to_string(l.formula) << "\n";
    } else if (const auto* mp = std::get_if<Justification::MP>(&l.just.node)) {
      out << "MP " << (mp->from + 1) << " " << (mp->via + 1) << "\n";
    } else {
      const auto& g = std::get<Justification::Gen>(l.just.node);
      out << "GEN " << (g.from + 1) << " x" << g.var << "\n";
    }
  }
  return out.str();
}

void save_proof(const Proof& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ProofError("cannot write " + path);
  out << to_script(p);
}

bool check_sequence(const std::vector<FormulaPtr>& lines, TheoryMode mode) {
  if (lines.empty()) return false;
  for (std::size_t p = 0; p < lines.size(); ++p) {
    const FormulaPtr& f = lines[p];
    bool ok = is_axiom(f, mode);
    if (!ok) {
      if (const auto* q = as_all(f)) {
        for (std::size_t i = 0; i < p && !ok; ++i)
          ok = formula_equal(q->body, lines[i]);
      }
    }
    for (std::size_t j = 0; j < p && !ok; ++j) {
      const auto* imp = as_imp(lines[j]);
      if (!imp || !formula_equal(imp->rhs, f)) continue;
      for (std::size_t i = 0; i < p && !ok; ++i)
        ok = formula_equal(imp->lhs, lines[i]);
    }
    if (!ok) return false;
  }
  return true;
}

CheckResult check_proof(const Proof& p, TheoryMode mode) {
  CheckResult r{false, true, {}};
  for (std::size_t n = 0; n < p.lines.size(); ++n) {
    const auto& l = p.lines[n];
    std::string at = "line " + std::to_string(n + 1);
    if (std::holds_alternative<Justification::Axiom>(l.just.node)) {
      if (auto c = classify_axiom(l.formula, mode)) {
        r.diagnostics.push_back(at + ": axiom " + *c);
      } else {
        r.annotations_ok = false;
        r.diagnostics.push_back(at + ": not an axiom of " + to_string(mode) + ": " +
                                to_string(l.formula));
      }
    } else if (const auto* mp = std::get_if<Justification::MP>(&l.just.node)) {
      if (mp->from >= n || mp->via >= n) {
        r.annotations_ok = false;
        r.diagnostics.push_back(at + ": reference does not point strictly upward");
        continue;
      }
      const auto* imp = as_imp(p.lines[mp->via].formula);
      if (!imp || !formula_equal(imp->lhs, p.lines[mp->from].formula) ||
          !formula_equal(imp->rhs, l.formula)) {
        r.annotations_ok = false;
        r.diagnostics.push_back(at + ": modus ponens from lines " +
                                std::to_string(mp->from + 1) + ", " +
                                std::to_string(mp->via + 1) + " does not yield " +
                                to_string(l.formula));
      } else {
        r.diagnostics.push_back(at + ": MP " + std::to_string(mp->from + 1) + " " +
                                std::to_string(mp->via + 1));
      }
    } else {
      const auto& g = std::get<Justification::Gen>(l.just.node);
      if (g.from >= n) {
        r.annotations_ok = false;
        r.diagnostics.push_back(at + ": reference does not point strictly upward");
        continue;
      }
      const auto* q = as_all(l.formula);
      if (!q || q->var != g.var || !formula_equal(q->body, p.lines[g.from].formula)) {
        r.annotations_ok = false;
        r.diagnostics.push_back(at + ": generalization of line " +
                                std::to_string(g.from + 1) + " over x" +
                                std::to_string(g.var) + " does not yield " +
                                to_string(l.formula));
      } else {
        r.diagnostics.push_back(at + ": GEN " + std::to_string(g.from + 1) + " x" +
                                std::to_string(g.var));
      }
    }
  }
  r.ok = check_sequence(p.formulas(), mode);
  return r;
}

namespace {

FormulaPtr tweak(const FormulaPtr& f, std::mt19937_64& rng) {
  if (const auto* imp = std::get_if<Formula::Implies>(&f->node)) {
    switch (rng() % 3) {
      case 0:
        if (!formula_equal(imp->lhs, imp->rhs)) return f_imp(imp->rhs, imp->lhs);
        [[fallthrough]];
      case 1:
        return f_imp(tweak(imp->lhs, rng), imp->rhs);
      default:
        return f_imp(imp->lhs, tweak(imp->rhs, rng));
    }
  }
  if (const auto* n = std::get_if<Formula::Not>(&f->node)) {
    if (rng() % 2 == 0) return n->arg;  // drop the negation
    return f_not(tweak(n->arg, rng));
  }
  if (const auto* q = std::get_if<Formula::ForAll>(&f->node)) {
    if (rng() % 2 == 0) return f_all(q->var + 1, q->body);
    return f_all(q->var, tweak(q->body, rng));
  }
  if (const auto* e = std::get_if<Formula::Equals>(&f->node)) {
    if (rng() % 2 == 0 && !term_equal(e->lhs, e->rhs)) return f_eq(e->rhs, e->lhs);
    return f_eq(e->lhs, t_succ(e->rhs));
  }
  const auto& a = std::get<Formula::Atom>(f->node);
  return f_atom(a.name == "A" ? "B" : "A");
}

}  // namespace

Proof mutate_proof(const Proof& p, std::uint64_t seed) {
  if (seed == 0 || p.lines.empty()) return p;
  std::mt19937_64 rng(seed);
  Proof q = p;
  int kind = static_cast<int>(rng() % 3);
  if (q.lines.size() < 2 && kind == 0) kind = 1;
  if (kind == 2) {
    std::vector<std::size_t> mp_lines;
    for (std::size_t i = 0; i < q.lines.size(); ++i) {
      if (std::holds_alternative<Justification::MP>(q.lines[i].just.node) && i >= 2)
        mp_lines.push_back(i);
    }
    if (mp_lines.empty()) {
      kind = 1;
    } else {
      std::size_t at = mp_lines[rng() % mp_lines.size()];
      auto mp = std::get<Justification::MP>(q.lines[at].just.node);
      std::size_t fresh = rng() % at;
      if (rng() % 2 == 0) {
        if (fresh == mp.from) fresh = (fresh + 1) % at;
        mp.from = fresh;
      } else {
        if (fresh == mp.via) fresh = (fresh + 1) % at;
        mp.via = fresh;
      }
      q.lines[at].just.node = mp;
      // The recorded formula stays; the step usually no longer derives it.
      return q;
    }
  }
  if (kind == 0) {
    std::size_t i = rng() % q.lines.size();
    std::size_t j = rng() % q.lines.size();
    if (i == j) j = (j + 1) % q.lines.size();
    std::swap(q.lines[i], q.lines[j]);
    return q;
  }
  std::size_t at = rng() % q.lines.size();
  q.lines[at].formula = tweak(q.lines[at].formula, rng);
  return q;
}

}  // namespace palab
