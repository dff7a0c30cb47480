#include "palab/lemma_lab.hpp"

#include "palab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string_view>

namespace palab {
namespace {

using nlohmann::ordered_json;

std::string code_string(const CodePtr& x) {
  Materialized m = materialize(x, 512);
  if (!m.overflow()) {
    std::ostringstream ss;
    ss << *m.value;
    return ss.str();
  }
  return factored(x);
}

std::string size_note(const CodePtr& x) {
  Materialized m = materialize(x, 512);
  if (!m.overflow()) {
    std::ostringstream ss;
    ss << "value " << *m.value << ", " << bit_length(*m.value) << " bits";
    return ss.str();
  }
  std::ostringstream ss;
  if (std::isfinite(m.approx_bits) && m.approx_bits < 1e15) {
    ss << "around 2^" << static_cast<std::uint64_t>(m.approx_bits)
       << " in size";
  } else {
    ss << "size beyond estimation";
  }
  return ss.str();
}

// Every claim draws from its own random stream, keyed by the run seed and
// the claim name, so claims can be reordered or skipped without perturbing
// each other's samples.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view claim_id) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the claim name
  for (char c : claim_id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

std::string formula_text_of_code(const Codec& codec, const CodePtr& x) {
  if (auto f = codec.try_decode_formula(x)) return to_string(*f);
  return "";
}

// Candidate numbers for universally quantified claims, in adjudication
// order: the one-symbol string "(" (value 8) first, then other small
// sequence codes, then the bare symbol code 3, then the corpus proofs.
std::vector<CodePtr> claim_candidates(const std::vector<CodePtr>& corpus_codes) {
  std::vector<CodePtr> out;
  out.push_back(make_sequence({make_symbol(3)}));  // value 2^3 = 8
  for (std::uint64_t n = 2; n <= 200; n += 2) {
    if (n == 8) continue;
    if (auto c = Codec::from_integer(BigNat(n))) out.push_back(*c);
  }
  out.push_back(make_symbol(3));
  for (const auto& c : corpus_codes) out.push_back(c);
  return out;
}

struct PoolEntry {
  CodePtr code;
  bool is_proof;
  CodePtr last;  // null unless is_proof
};

}  // namespace

std::string to_string(ReplayKind k) {
  switch (k) {
    case ReplayKind::EVALUATED_TRUE:
      return "EVALUATED_TRUE";
    case ReplayKind::EVALUATED_FALSE:
      return "EVALUATED_FALSE";
    case ReplayKind::PROVABILITY_NOT_EVALUATED:
      return "PROVABILITY_NOT_EVALUATED";
  }
  return "?";
}

ReplayTrace replay_incompleteness(const Predicates& preds,
                                  const FormulaPtr& delta_like, const Proof& p) {
  ReplayTrace tr;
  const Codec& codec = preds.codec();
  if (p.lines.empty())
    throw std::invalid_argument(
        "the derivation is empty; it proves nothing, related or not");
  FormulaPtr last = p.last_formula();
  bool proves = formula_equal(last, delta_like);
  bool refutes = formula_equal(last, f_not(delta_like));
  if (!proves && !refutes)
    throw std::invalid_argument(
        "the derivation proves something unrelated: its last line is neither "
        "the sentence nor its negation");

  CodePtr r = codec.encode_proof(p.formulas());
  CodePtr q = codec.encode_formula(delta_like);
  if (!free_vars(delta_like).empty())
    tr.notes.push_back(
        "the sentence has free variables; the steps below read it schematically");
  tr.notes.push_back("r = code of the derivation (" + size_note(r) + ")");
  tr.notes.push_back("q = code of the sentence (" + size_note(q) + ")");
  tr.notes.push_back(proves ? "the derivation ends in the sentence itself"
                            : "the derivation ends in the sentence's negation");

  auto eval = [&](const std::string& what, bool v) {
    tr.steps.push_back(
        {what, v ? ReplayKind::EVALUATED_TRUE : ReplayKind::EVALUATED_FALSE});
  };
  int cpf = preds.char_pf(r, q);
  int crf = preds.char_rf(r, q);
  eval("prf(r): r codes a derivation", preds.prf(r));
  eval("pf(r, q): r derives the sentence", cpf == 0);
  eval("rf(r, q): r derives the sentence's negation", crf == 0);
  int want_cpf = proves ? 0 : 1;
  eval("C_Pf(r, q) = " + std::to_string(want_cpf) +
           " (the value this branch of the argument asserts)",
       cpf == want_cpf);
  eval("C_Rf(r, q) = " + std::to_string(1 - want_cpf) +
           " (the value this branch of the argument asserts)",
       crf == 1 - want_cpf);
  tr.steps.push_back({"the sentence is provable: exists x pf(x, q)",
                      ReplayKind::PROVABILITY_NOT_EVALUATED});
  tr.steps.push_back({"the sentence is refutable: exists x rf(x, q)",
                      ReplayKind::PROVABILITY_NOT_EVALUATED});
  return tr;
}

const char* const kClaimIds[] = {
    "pf_rf_exclusive",
    "char_values_on_proofs",
    "pf_rf_duality_on_witnesses",
    "prf_iff_not_ref",
    "pf_iff_not_rf",
    "theoremhood_refutability_partition",
    "consistency",
    "completeness",
    "pf_calculus_decidable",
    "char_decides_theoremhood",
    "diagonalization_contradiction",
};

LabReport run_lemma_lab(const Codec& codec, const std::vector<Proof>& corpus,
                        const LabConfig& cfg) {
  LabReport report{cfg, {}};

  if (cfg.budget == 0) {
    for (const char* id : kClaimIds)
      report.claims.push_back({id, "NOT_NUMBER_CHECKABLE", 0, nullptr,
                               "skipped: a budget of zero leaves no samples"});
    return report;
  }

  Predicates preds(codec, TheoryMode::PA);
  auto capped = [&](std::uint64_t n) { return std::min<std::uint64_t>(n, cfg.budget); };

  // Shared material.
  std::vector<CodePtr> corpus_codes;
  std::vector<FormulaPtr> corpus_lasts;
  for (const auto& p : corpus) {
    corpus_codes.push_back(codec.encode_proof(p.formulas()));
    corpus_lasts.push_back(p.last_formula());
  }

  std::vector<PoolEntry> pool;
  auto add_pool = [&](const CodePtr& c) {
    PoolEntry e{c, false, nullptr};
    e.is_proof = preds.prf(c);
    if (e.is_proof) e.last = component(c, lh(c) - 1);
    pool.push_back(std::move(e));
  };
  for (const auto& c : corpus_codes) add_pool(c);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::uint64_t s = 1; s <= 3; ++s)
      add_pool(codec.encode_proof(
          mutate_proof(corpus[i], cfg.seed * 1000 + i * 10 + s).formulas()));
  }
  for (std::uint64_t n = 1; n <= 200; ++n) {
    if (auto c = Codec::from_integer(BigNat(n))) add_pool(*c);
  }
  Sampler shared_sampler(stream_seed(cfg.seed, "shared_formula_pool"));
  std::vector<CodePtr> formula_codes;
  formula_codes.push_back(codec.encode_formula(
      f_eq(t_zero(), t_zero())));  // the sentence (0 = 0), first on purpose
  for (const auto& f : corpus_lasts) formula_codes.push_back(codec.encode_formula(f));
  for (int i = 0; i < 50; ++i)
    formula_codes.push_back(codec.encode_formula(shared_sampler.formula(2)));

  // --- pf_rf_exclusive: no x proves v and refutes v at once ----------------
  {
    ClaimVerdict v{"pf_rf_exclusive", "HOLDS_ON_SAMPLES", 0, nullptr, ""};
    Sampler sampler(stream_seed(cfg.seed, v.claim_id));
    bool violated = false;
    std::uint64_t sweep = capped(corpus_codes.size());
    for (std::uint64_t i = 0; i < sweep && !violated; ++i) {
      CodePtr vf = codec.encode_formula(corpus_lasts[i]);
      ++v.samples_tried;
      if (preds.pf(corpus_codes[i], vf) && preds.rf(corpus_codes[i], vf)) {
        violated = true;
        v.witness = {{"x", code_string(corpus_codes[i])}, {"v", code_string(vf)}};
      }
    }
    for (std::uint64_t t = 0; t < cfg.budget && !violated; ++t) {
      const PoolEntry& e = pool[sampler.pick(pool.size())];
      const CodePtr& vf = formula_codes[sampler.pick(formula_codes.size())];
      ++v.samples_tried;
      bool pf_holds = e.is_proof && code_equal(e.last, vf);
      bool rf_holds = e.is_proof && code_equal(e.last, preds.neg_code(vf));
      if (pf_holds && rf_holds) {
        violated = true;
        v.witness = {{"x", code_string(e.code)}, {"v", code_string(vf)}};
      }
    }
    v.status = violated ? "COUNTEREXAMPLE_FOUND" : "HOLDS_ON_SAMPLES";
    v.notes =
        "a violation would need the strings v and ( ~ v ) to coincide, which "
        "the layout of negation rules out";
    report.claims.push_back(std::move(v));
  }

  // --- char_values_on_proofs: 0/1 pattern on actual witnesses --------------
  {
    ClaimVerdict v{"char_values_on_proofs", "HOLDS_ON_SAMPLES", 0, nullptr, ""};
    bool violated = false;
    std::uint64_t sweep = capped(corpus.size());
    for (std::uint64_t i = 0; i < sweep && !violated; ++i) {
      const CodePtr& x = corpus_codes[i];
      const FormulaPtr& last = corpus_lasts[i];
      if (const auto* neg = std::get_if<Formula::Not>(&last->node)) {
        CodePtr g = codec.encode_formula(neg->arg);
        v.samples_tried += 2;
        if (preds.char_rf(x, g) != 0 || preds.char_pf(x, g) != 1) {
          violated = true;
          v.witness = {{"x", code_string(x)}, {"v", code_string(g)}};
        }
      } else {
        CodePtr g = codec.encode_formula(last);
        v.samples_tried += 2;
        if (preds.char_pf(x, g) != 0 || preds.char_rf(x, g) != 1) {
          violated = true;
          v.witness = {{"x", code_string(x)}, {"v", code_string(g)}};
        }
      }
    }
    v.status = violated ? "COUNTEREXAMPLE_FOUND" : "HOLDS_ON_SAMPLES";
    v.notes =
        "checked on every corpus derivation; variants of this claim wrapped "
        "in a provability operator are not evaluated as numbers "
        "(NOT_NUMBER_CHECKABLE convention)";
    report.claims.push_back(std::move(v));
  }

  // --- pf_rf_duality_on_witnesses: C_Pf + C_Rf = 1 given a witness ---------
  {
    ClaimVerdict v{"pf_rf_duality_on_witnesses", "HOLDS_ON_SAMPLES", 0, nullptr, ""};
    bool violated = false;
    std::uint64_t sweep = capped(corpus.size());
    for (std::uint64_t i = 0; i < sweep && !violated; ++i) {
      const CodePtr& x = corpus_codes[i];
      const FormulaPtr& last = corpus_lasts[i];
      CodePtr g;
      if (const auto* neg = std::get_if<Formula::Not>(&last->node))
        g = codec.encode_formula(neg->arg);
      else
        g = codec.encode_formula(last);
      ++v.samples_tried;
      if (preds.char_pf(x, g) + preds.char_rf(x, g) != 1) {
        violated = true;
        v.witness = {{"x", code_string(x)}, {"v", code_string(g)}};
      }
    }
    v.status = violated ? "COUNTEREXAMPLE_FOUND" : "HOLDS_ON_SAMPLES";
    v.notes =
        "holds under the hypothesis that x witnesses one of the two sides; "
        "dropping the hypothesis is the content of pf_iff_not_rf";
    report.claims.push_back(std::move(v));
  }

  // --- prf_iff_not_ref: claimed equivalence of prf(x) and not ref(x) -------
  {
    ClaimVerdict v{"prf_iff_not_ref", "HOLDS_ON_SAMPLES", 0, nullptr, ""};
    bool violated = false;
    auto candidates = claim_candidates(corpus_codes);
    for (std::size_t i = 0; i < candidates.size() && i < capped(100); ++i) {
      const CodePtr& x = candidates[i];
      ++v.samples_tried;
      bool p = preds.prf(x);
      bool r = preds.ref(x);
      if (p == r) {  // the claim says prf(x) iff not ref(x)
        violated = true;
        v.witness = {{"x", code_string(x)},
                     {"prf", p},
                     {"ref", r},
                     {"x_factored", factored(x)}};
        break;
      }
    }
    v.status = violated ? "COUNTEREXAMPLE_FOUND" : "HOLDS_ON_SAMPLES";
    v.notes =
        "ref(x) reads the symbol string ( ~ x ) as a proof code, so its lines "
        "are single symbols and ref is uniformly false; the one-symbol string "
        "value 8 has prf false too, so the equivalence fails. The bare symbol "
        "code 3 violates it as well.";
    report.claims.push_back(std::move(v));
  }

  // --- pf_iff_not_rf: claimed equivalence of pf(x,v) and not rf(x,v) -------
  {
    ClaimVerdict v{"pf_iff_not_rf", "HOLDS_ON_SAMPLES", 0, nullptr, ""};
    bool violated = false;
    auto candidates = claim_candidates(corpus_codes);
    for (std::size_t i = 0; i < candidates.size() && i < capped(100) && !violated;
         ++i) {
      const CodePtr& x = candidates[i];
      for (std::size_t j = 0; j < formula_codes.size(); ++j) {
        const CodePtr& vf = formula_codes[j];
        ++v.samples_tried;
        bool p = preds.pf(x, vf);
        bool r = preds.rf(x, vf);
        if (p == r) {
          violated = true;
          v.witness = {{"x", code_string(x)},
                       {"v", code_string(vf)},
                       {"v_text", formula_text_of_code(codec, vf)},
                       {"pf", p},
                       {"rf", r}};
          break;
        }
      }
    }
    v.status = violated ? "COUNTEREXAMPLE_FOUND" : "HOLDS_ON_SAMPLES";
    v.notes =
        "pf(x,v) and rf(x,v) are both false whenever x codes no proof at all, "
        "so the claimed equivalence fails already at the first candidate";
    report.claims.push_back(std::move(v));
  }

  bool falsified =
      report.claims[3].status == "COUNTEREXAMPLE_FOUND" ||
      report.claims[4].status == "COUNTEREXAMPLE_FOUND";
  auto dependent = [&](std::string id, std::string holds_notes,
                       std::string depends_notes) {
    ClaimVerdict v{std::move(id), "NOT_NUMBER_CHECKABLE", 0, nullptr, ""};
    if (falsified) {
      v.status = "DEPENDS_ON_FALSIFIED";
      v.notes = std::move(depends_notes);
    } else {
      v.notes = std::move(holds_notes);
    }
    report.claims.push_back(std::move(v));
  };

  dependent("theoremhood_refutability_partition",
            "quantifies over all sentences and all proof codes; its nested "
            "implication case is ambiguous between ranging over formula codes "
            "and over proof codes, and neither reading is finitely checkable",
            "the partition of sentences into provable and refutable is argued "
            "from prf_iff_not_ref and pf_iff_not_rf, both falsified; its "
            "nested implication case is ambiguous between ranging over "
            "formula codes and over proof codes, and both readings route "
            "through the same falsified equivalences");
  dependent("consistency",
            "quantifies over all proof codes",
            "argued from the falsified equivalences; the underlying "
            "exclusivity evidence lives in pf_rf_exclusive, which does hold "
            "on samples");
  dependent("completeness",
            "quantifies over all sentences",
            "argued from the falsified equivalences; no independent numeric "
            "content remains once they fall");
  dependent("pf_calculus_decidable",
            "quantifies over all inputs",
            "pf and rf on given numbers are decidable (this program decides "
            "them); deciding theoremhood needs an unbounded search over proof "
            "codes, and the claimed bound comes from the falsified "
            "equivalences");

  // --- char_decides_theoremhood: C_Pf(x, v) = 0 whenever v is a theorem ----
  {
    ClaimVerdict v{"char_decides_theoremhood", "HOLDS_ON_SAMPLES", 0, nullptr, ""};
    bool violated = false;
    // A theorem with a corpus derivation in hand.
    std::optional<std::size_t> theorem_at;
    FormulaPtr wanted = f_eq(t_plus(t_var(1), t_zero()), t_var(1));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (formula_equal(corpus_lasts[i], wanted)) {
        theorem_at = i;
        break;
      }
    }
    if (!theorem_at) {
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!std::holds_alternative<Formula::Not>(corpus_lasts[i]->node)) {
          theorem_at = i;
          break;
        }
      }
    }
    if (theorem_at) {
      CodePtr vf = codec.encode_formula(corpus_lasts[*theorem_at]);
      auto candidates = claim_candidates(corpus_codes);
      for (std::size_t i = 0; i < candidates.size() && i < capped(100); ++i) {
        ++v.samples_tried;
        if (preds.char_pf(candidates[i], vf) != 0) {
          violated = true;
          v.witness = {{"x", code_string(candidates[i])},
                       {"v", code_string(vf)},
                       {"v_text", to_string(corpus_lasts[*theorem_at])},
                       {"witnessing_derivation_lines",
                        corpus[*theorem_at].lines.size()}};
          break;
        }
      }
      v.status = violated ? "COUNTEREXAMPLE_FOUND" : "HOLDS_ON_SAMPLES";
      v.notes =
          "v codes a sentence the corpus derives, yet C_Pf(x, v) = 1 for the "
          "first candidate x: the characteristic value depends on both "
          "arguments, so it cannot decide theoremhood of v alone. pf and rf "
          "stay decidable per pair; theoremhood is a search over x.";
    } else {
      v.status = "NOT_NUMBER_CHECKABLE";
      v.notes = "no corpus derivation available to anchor a theorem code";
    }
    report.claims.push_back(std::move(v));
  }

  // --- diagonalization_contradiction ---------------------------------------
  {
    ClaimVerdict v{"diagonalization_contradiction", "DEPENDS_ON_FALSIFIED", 0,
                   nullptr, ""};
    FormulaPtr phi = f_all(2, f_not(f_eq(t_var(2), t_var(1))));
    DiagResult diag = diagonalize(codec, phi);
    ++v.samples_tried;
    Materialized m = materialize(diag.m, 1 << 20);
    v.witness = {{"phi", to_string(phi)},
                 {"fixed_point", diag.fixed_point_ok},
                 {"m_bits", m.overflow() ? 0 : bit_length(*m.value)}};
    if (!diag.fixed_point_ok) {
      v.status = "COUNTEREXAMPLE_FOUND";
      v.notes = "the diagonal fixed point itself fails, which would be a bug "
                "in this laboratory rather than in the source argument";
    } else if (falsified) {
      v.notes =
          "the diagonal fixed point checks out on concrete codes; the "
          "contradiction drawn from it additionally routes through "
          "pf_iff_not_rf, which has a counterexample";
    } else {
      v.status = "NOT_NUMBER_CHECKABLE";
      v.notes = "fixed point verified; the remaining steps quantify over all "
                "proof codes";
    }
    report.claims.push_back(std::move(v));
  }

  return report;
}

ordered_json report_json(const LabReport& report) {
  ordered_json claims = ordered_json::array();
  for (const auto& c : report.claims) {
    ordered_json e;
    e["claim_id"] = c.claim_id;
    e["status"] = c.status;
    e["samples_tried"] = c.samples_tried;
    e["witness"] = c.witness;
    e["notes"] = c.notes;
    claims.push_back(std::move(e));
  }
  return claims;
}

}  // namespace palab
