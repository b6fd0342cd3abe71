#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/generator.hpp"
#include "hilbert/kernel.hpp"
#include "hilbert/transform.hpp"

namespace hilbert {

// ---------------------------------------------------------------------------
// Depth reduction
// ---------------------------------------------------------------------------
//
// Shortens a proved instance by one inference: the first modus ponens whose
// premises rest directly on assumptions or axioms is granted as a new
// assumption, and the steps that only served it disappear. The goal is
// untouched, so repeated reduction yields a family of easier problems that
// end in the same place.

// Throws std::invalid_argument when the input does not validate or contains
// no reducible modus ponens step. The output validates and has strictly
// fewer steps.
std::pair<ReasoningInstance, Proof> reduce_depth(const ReasoningInstance& instance,
                                                 const Proof& proof);

// ---------------------------------------------------------------------------
// Evaluation suites
// ---------------------------------------------------------------------------

struct SuiteItem {
    ReasoningInstance instance;
    Proof proof;
};

// Carves one instance per requested depth out of each deep input by repeated
// reduction (a lineage: all slices of one input share its goal). `depths`
// must be distinct step counts in any order; every input must reach every
// depth, or this throws std::runtime_error naming the depth it missed.
// Output order: all slices of deepest[0], then deepest[1], and so on, each
// lineage sliced deepest first.
std::vector<SuiteItem> carve_lineage(const SuiteItem& deepest, const std::vector<int>& depths);

// Suite assembly: `per_depth` lineages generated from (master_seed, slot),
// carved at `depths`. A lineage is discarded and redrawn when any slice
// collides with `exclude_keys` or with the suite built so far, so the result
// is duplicate-free and disjoint from the given corpus. With lineage=false
// every (depth, slot) cell is carved from its own fresh deep proof instead
// of sharing one per slot. Throws std::runtime_error when a slot exhausts
// its redraw budget.
std::vector<SuiteItem> build_depth_suite(const std::vector<int>& depths, int per_depth,
                                         const GenConfig& cfg, std::uint64_t master_seed,
                                         const std::set<std::string>& exclude_keys = {},
                                         bool lineage = true);

// Width suite: `per_width` width-0 base instances at cfg.target_step_count
// steps, each reissued at every width in `widths` via make_width_instance.
// Same dedup discipline as build_depth_suite, with fresh substitutions drawn
// on collision.
std::vector<SuiteItem> build_width_suite(const std::vector<int>& widths, int per_width,
                                         const GenConfig& cfg, const TransformConfig& tcfg,
                                         std::uint64_t master_seed,
                                         const std::set<std::string>& exclude_keys = {});

}  // namespace hilbert
