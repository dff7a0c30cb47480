#pragma once

// Empirical adjudication of the claim suite about the predicate family.
// Each claim is evaluated against concrete numbers: corpus proofs, mutated
// proofs, small integers, and targeted candidates. Verdict statuses:
//   HOLDS_ON_SAMPLES       no violation in the sampled space
//   COUNTEREXAMPLE_FOUND   a concrete witness violates the claim
//   NOT_NUMBER_CHECKABLE   the claim quantifies past what numbers can settle
//   DEPENDS_ON_FALSIFIED   the claim's own derivation cites a falsified claim
// The report is deterministic: same corpus, budget, and seed give the same
// bytes.

#include "palab/diagonal.hpp"
#include "palab/predicates.hpp"
#include "palab/proof.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace palab {

struct ClaimVerdict {
  std::string claim_id;
  std::string status;
  std::uint64_t samples_tried = 0;
  nlohmann::ordered_json witness;  // null when no witness applies
  std::string notes;
};

struct LabConfig {
  std::uint64_t budget = 10000;
  std::uint64_t seed = 1;
};

struct LabReport {
  LabConfig config;
  std::vector<ClaimVerdict> claims;
};

LabReport run_lemma_lab(const Codec& codec, const std::vector<Proof>& corpus,
                        const LabConfig& cfg);

nlohmann::ordered_json report_json(const LabReport& report);

// Step-by-step numeric replay of the diagonal argument for a given sentence
// and candidate proof code. Everything decidable is evaluated; steps that
// quantify over all proof codes are recorded, not decided.
enum class ReplayKind { EVALUATED_TRUE, EVALUATED_FALSE, PROVABILITY_NOT_EVALUATED };
std::string to_string(ReplayKind k);

struct ReplayStep {
  std::string what;
  ReplayKind kind;
};
struct ReplayTrace {
  std::vector<ReplayStep> steps;
  std::vector<std::string> notes;
};

// Throws std::invalid_argument unless the derivation's last line is the
// sentence or its negation.
ReplayTrace replay_incompleteness(const Predicates& preds,
                                  const FormulaPtr& delta_like, const Proof& p);

}  // namespace palab
