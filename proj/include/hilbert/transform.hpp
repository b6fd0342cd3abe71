#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/generator.hpp"
#include "hilbert/kernel.hpp"
#include "hilbert/rng.hpp"

namespace hilbert {

// ---------------------------------------------------------------------------
// Template transformation
// ---------------------------------------------------------------------------
//
// A proved instance stays proved under any simultaneous substitution: apply
// one map to the goal, the assumptions and every step formula, and compose it
// into stored axiom substitutions. Nothing about the proof's shape changes,
// which makes this a cheap way to multiply a corpus without re-proving.

struct TransformConfig {
    // Replacements draw their variables from a pool of at most this many
    // names, chosen fresh per transformation from `namespace_pool`.
    int target_pool_size = 4;
    int max_replacement_height = 4;
    double branch_probability = 0.5;
    // Candidate names for target pools. Overlap with the variables being
    // replaced is fine; substitution is simultaneous.
    std::vector<std::string> namespace_pool = {"P", "Q", "R", "S", "T", "U", "V", "W"};

    void check() const;
};

// Fraction of batch items that get transformed (the rest pass through).
inline constexpr double kDefaultTransformShare = 0.7;

// TransformConfig plus the batch-level share, loadable together. Keys:
// transform_share, target_pool_size, max_replacement_height,
// branch_probability, namespace_pool (comma list). Same key=value text shape
// as the generator config; unknown keys are an error.
struct AugmentConfig {
    TransformConfig transform;
    double share = kDefaultTransformShare;

    void check() const;
};

AugmentConfig load_augment_config(const std::string& path);

// A substitution over exactly the given domain: each variable maps to a
// random formula of height <= cfg.max_replacement_height over a pool of at
// most cfg.target_pool_size names drawn from cfg.namespace_pool.
Substitution random_substitution(const std::set<std::string>& domain,
                                 const TransformConfig& cfg, RandomStream& rng);

// Applies `subst` across an instance and its proof. Throws
// std::invalid_argument when the input proof does not validate; the output
// always validates. Justification kinds and indices are untouched; axiom
// substitutions become subst ∘ stored.
std::pair<ReasoningInstance, Proof> transform_instance(const Substitution& subst,
                                                       const ReasoningInstance& instance,
                                                       const Proof& proof);

// Batch item after augmentation; `transformed` tells the two apart.
struct AugmentedItem {
    ReasoningInstance instance;
    Proof proof;
    bool transformed = false;
};

// Each input is independently transformed with probability `share`, with a
// per-item stream derived from (master_seed, position), so results do not
// depend on processing order or thread count.
std::vector<AugmentedItem> augment_batch(const std::vector<std::pair<ReasoningInstance, Proof>>& batch,
                                         double share, const TransformConfig& cfg,
                                         std::uint64_t master_seed);

// Substitutes every variable of `base` with a random formula of height
// exactly `width`, leaving step count and proof shape alone. width 0 is a
// plain renaming. Throws std::invalid_argument unless `base` validates and
// has width label 0.
std::pair<ReasoningInstance, Proof> make_width_instance(const ReasoningInstance& base,
                                                        const Proof& proof, int width,
                                                        const TransformConfig& cfg,
                                                        RandomStream& rng);

}  // namespace hilbert
