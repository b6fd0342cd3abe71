#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/dataset.hpp"
#include "hilbert/kernel.hpp"

namespace hilbert {

// ---------------------------------------------------------------------------
// Scoring
// ---------------------------------------------------------------------------

enum class Verdict {
    Valid,
    Invalid,      // parsed but rejected by the checker
    Unparseable,  // lexically broken answer text
    Missing,      // no candidate supplied for this instance
};

std::string verdict_name(Verdict verdict);

struct ScoredAnswer {
    std::string id;
    int depth_label = 0;
    int width_label = 0;
    Verdict verdict = Verdict::Missing;
    std::vector<Violation> violations;  // empty unless verdict == Invalid
};

struct BucketStats {
    std::size_t total = 0;
    std::size_t valid = 0;

    double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(valid) / total; }
};

struct ScoreReport {
    std::vector<ScoredAnswer> entries;
    BucketStats overall;
    std::map<int, BucketStats> by_depth;
    std::map<int, BucketStats> by_width;
};

// Judge one answer text against its instance.
ScoredAnswer score_answer(const ReasoningInstance& instance, const std::string& answer_text);

// Judge a batch: candidates keyed by instance id. Instances without a
// candidate are counted as Missing (and as incorrect).
ScoreReport score(const std::vector<DatasetRecord>& records,
                  const std::map<std::string, std::string>& candidates);

// Plain-text rendering, one block per bucket; and a tab-separated table
// (label, total, valid, accuracy) for plotting.
std::string render_report(const ScoreReport& report);
std::string render_curve_tsv(const std::map<int, BucketStats>& curve, const std::string& label);

// ---------------------------------------------------------------------------
// Diversity
// ---------------------------------------------------------------------------

struct DiversityCount {
    std::size_t valid = 0;
    std::size_t distinct = 0;
};

// Canonical shape of a proof with restatements erased: Deducted steps vanish,
// references chase through to the originating step, and steps renumber.
// Answers differing only in restatement placement collapse together.
Proof normalize_proof(const Proof& proof);

// How many structurally different valid proofs the candidate texts contain.
DiversityCount diversity(const ReasoningInstance& instance,
                         const std::vector<std::string>& candidate_texts);

// ---------------------------------------------------------------------------
// Generalization report
// ---------------------------------------------------------------------------

struct PairedOutcome {
    std::size_t pairs = 0;
    std::size_t both_valid = 0;
    std::size_t original_only = 0;
    std::size_t transformed_only = 0;
    std::size_t neither = 0;
};

struct GeneralizationReport {
    std::map<int, BucketStats> depth_curve;
    std::map<int, BucketStats> width_curve;
    // Outcome over (original, transformed) pairs, recognized from provenance
    // trail entries of the form "transform:of=<original id>".
    PairedOutcome paired;
};

GeneralizationReport generalization_report(const std::vector<DatasetRecord>& records,
                                           const ScoreReport& scores);

std::string render_generalization(const GeneralizationReport& report);

}  // namespace hilbert
