#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/formula.hpp"
#include "hilbert/kernel.hpp"
#include "hilbert/rng.hpp"

namespace hilbert {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct GenConfig {
    std::uint64_t rng_seed = 0;
    std::vector<std::string> variable_pool = {"P", "Q", "R", "S"};
    int goal_max_height = 3;
    int expansion_formula_max_height = 3;
    // Chance that a random formula node keeps branching instead of becoming a
    // variable (height permitting).
    double branch_probability = 0.5;
    // Per open node: resolve as an assumption, grow a modus ponens step, or
    // close as an axiom instance. Must sum to 1. The axiom share is only
    // spendable when the node's formula actually matches a schema; otherwise
    // it falls through to expansion.
    double p_stop = 0.3;
    double p_expand = 0.6;
    double p_axiom = 0.1;
    // Size/height caps for unconstrained growth; generate_instance overrides
    // the size with its exact target.
    int target_step_count = 7;
    int max_tree_height = 8;

    // Throws std::invalid_argument on out-of-range fields.
    void check() const;
};

// Key=value text config ('#' comments, blank lines ignored). Unknown keys are
// an error; missing keys keep their defaults.
GenConfig load_gen_config(const std::string& path);
std::uint64_t gen_config_digest(const GenConfig& cfg);

// ---------------------------------------------------------------------------
// Proof trees
// ---------------------------------------------------------------------------
//
// Goal-directed backward construction: the root claims the goal, a modus
// ponens node for h has children f and f -> h, and leaves are either future
// assumptions or axiom instances. `Open` only occurs mid-construction.

struct ProofTreeNode {
    enum class Kind { Open, AssumptionLeaf, AxiomLeaf, MpNode };

    explicit ProofTreeNode(Formula f) : formula(std::move(f)) {}

    Formula formula;
    Kind kind = Kind::Open;

    // AxiomLeaf only.
    AxiomSchema schema = AxiomSchema::A1;
    Substitution schema_subst;

    // MpNode only: antecedent holds f, implication holds f -> formula.
    std::unique_ptr<ProofTreeNode> antecedent;
    std::unique_ptr<ProofTreeNode> implication;
};

struct ProofTree {
    std::unique_ptr<ProofTreeNode> root;
};

// Uniform random formula over `pool` with height <= max_height.
Formula random_formula(const std::vector<std::string>& pool, int max_height, RandomStream& rng,
                       double branch_probability = 0.5);

// As above but with height exactly `target_height` (at least one maximal
// path). Used for width-controlled substitutions.
Formula random_formula_exact_height(const std::vector<std::string>& pool, int target_height,
                                    RandomStream& rng, double branch_probability = 0.5);

enum class WireProfile {
    // The shape the answer corpus uses: every derived implication premise is
    // restated directly before the modus ponens that consumes it, and the
    // final conclusion is restated to close the proof.
    Canonical,
    // Textbook shape: no restatements, premises cited wherever they are.
    Compact,
};

std::string wire_profile_name(WireProfile profile);

// Random goal + random backward growth until the stop draws or the size and
// height caps end it. Growth is budgeted so that the finished tree never
// linearizes to more than cfg.target_step_count steps under `profile`. Never
// returns open nodes.
ProofTree generate_tree(const GenConfig& cfg, RandomStream& rng,
                        WireProfile profile = WireProfile::Canonical);

// Flatten a finished tree into an instance and a proof, children before
// parents. Assumption formulas are collected in first-use order and
// duplicates collapse to a single assumption entry. Throws
// std::invalid_argument on a tree with open nodes.
std::pair<ReasoningInstance, Proof> linearize(const ProofTree& tree,
                                              WireProfile profile = WireProfile::Canonical);

// Steps a linearization of `tree` under `profile` will produce, without
// linearizing.
std::size_t linear_step_count(const ProofTree& tree,
                              WireProfile profile = WireProfile::Canonical);

// True iff some tree linearizes to exactly `steps` steps under `profile`.
// Canonical proofs have 1, 4 or >= 6 steps; compact proofs have odd counts.
bool step_count_reachable(std::size_t steps, WireProfile profile = WireProfile::Canonical);

// Sized so that rejection sampling practically never gives up: the hardest
// exact target misses a single draw with probability around 0.85, and extra
// attempts only consume stream draws on failure, so raising the budget never
// changes an output that already succeeded.
inline constexpr int kGenerateRetryBudget = 256;

// A fresh instance whose proof has exactly `target_depth` steps under
// `profile`, found by redrawing trees. The stream is seeded from
// cfg.rng_seed. Throws std::runtime_error when the target is unreachable or
// was not hit within kGenerateRetryBudget attempts (the message carries the
// attempt count).
std::pair<ReasoningInstance, Proof> generate_instance(int target_depth, const GenConfig& cfg,
                                                      WireProfile profile = WireProfile::Canonical);

}  // namespace hilbert
