#include "hilbert/curriculum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hilbert {

// ---------------------------------------------------------------------------
// Depth reduction
// ---------------------------------------------------------------------------

namespace {

// Follow restatement links down to the step that actually did the work.
std::size_t resolve_restatements(const Proof& proof, std::size_t index) {
    while (const auto* r = std::get_if<Restatement>(&proof.steps[index].justification))
        index = r->index;
    return index;
}

bool is_leaf_justified(const Proof& proof, std::size_t index) {
    const Justification& j = proof.steps[resolve_restatements(proof, index)].justification;
    return std::holds_alternative<AssumptionRef>(j) || std::holds_alternative<AxiomInstance>(j);
}

void for_each_reference(const Justification& j, const std::function<void(std::size_t)>& fn) {
    if (const auto* mp = std::get_if<ModusPonens>(&j)) {
        fn(mp->premise_a);
        fn(mp->premise_b);
    } else if (const auto* r = std::get_if<Restatement>(&j)) {
        fn(r->index);
    }
}

void rewrite_references(Justification& j, const std::vector<std::size_t>& map) {
    if (auto* mp = std::get_if<ModusPonens>(&j)) {
        mp->premise_a = map[mp->premise_a];
        mp->premise_b = map[mp->premise_b];
    } else if (auto* r = std::get_if<Restatement>(&j)) {
        r->index = map[r->index];
    }
}

}  // namespace

std::pair<ReasoningInstance, Proof> reduce_depth(const ReasoningInstance& instance,
                                                 const Proof& proof) {
    if (!is_valid(instance, proof))
        throw std::invalid_argument("reduce_depth: input proof does not validate");

    // The first modus ponens resting directly on leaves is the inference the
    // shorter problem will take for granted.
    std::size_t target = proof.steps.size();
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
        const auto* mp = std::get_if<ModusPonens>(&proof.steps[i].justification);
        if (mp && is_leaf_justified(proof, mp->premise_a) &&
            is_leaf_justified(proof, mp->premise_b)) {
            target = i;
            break;
        }
    }
    if (target == proof.steps.size())
        throw std::invalid_argument("reduce_depth: no modus ponens step rests on leaves");

    ReasoningInstance out = instance;
    const Formula& conclusion = proof.steps[target].formula;
    std::size_t assumption_index = out.assumptions.size();
    for (std::size_t i = 0; i < out.assumptions.size(); ++i) {
        if (out.assumptions[i] == conclusion) {
            assumption_index = i;
            break;
        }
    }
    if (assumption_index == out.assumptions.size())
        out.assumptions.push_back(conclusion);

    Proof work = proof;
    work.steps[target].justification = AssumptionRef{assumption_index};

    // Restating what is now an assumption adds nothing: route references
    // through to the reduced step and drop the restatements themselves.
    std::vector<bool> alias(work.steps.size(), false);
    std::vector<std::size_t> route(work.steps.size());
    for (std::size_t i = 0; i < work.steps.size(); ++i)
        route[i] = i;
    for (std::size_t i = target + 1; i < work.steps.size(); ++i) {
        if (const auto* r = std::get_if<Restatement>(&work.steps[i].justification)) {
            std::size_t to = route[r->index];
            if (to == target) {
                alias[i] = true;
                route[i] = target;
            }
        }
    }
    for (ProofStep& step : work.steps)
        rewrite_references(step.justification, route);

    // Sweep everything that no longer feeds anything. The final surviving
    // step is pinned: it is the proof's claim on the goal.
    std::vector<std::size_t> refs(work.steps.size(), 0);
    std::vector<bool> removed = alias;
    for (std::size_t i = 0; i < work.steps.size(); ++i) {
        if (!removed[i])
            for_each_reference(work.steps[i].justification,
                               [&](std::size_t t) { ++refs[t]; });
    }
    std::size_t last_kept = work.steps.size();
    for (std::size_t i = work.steps.size(); i-- > 0;) {
        if (!removed[i]) {
            last_kept = i;
            break;
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = work.steps.size(); i-- > 0;) {
            if (removed[i] || refs[i] > 0 || i == last_kept)
                continue;
            removed[i] = true;
            changed = true;
            for_each_reference(work.steps[i].justification,
                               [&](std::size_t t) { --refs[t]; });
        }
    }

    // Renumber the survivors.
    std::vector<std::size_t> new_index(work.steps.size(), 0);
    Proof reduced;
    for (std::size_t i = 0; i < work.steps.size(); ++i) {
        if (removed[i])
            continue;
        new_index[i] = reduced.steps.size();
        reduced.steps.push_back(work.steps[i]);
    }
    for (ProofStep& step : reduced.steps)
        rewrite_references(step.justification, new_index);

    // Drop assumptions nothing cites any more, keeping the original order.
    std::vector<bool> used(out.assumptions.size(), false);
    for (const ProofStep& step : reduced.steps) {
        if (const auto* a = std::get_if<AssumptionRef>(&step.justification))
            used[a->index] = true;
    }
    std::vector<std::size_t> assumption_map(out.assumptions.size(), 0);
    std::vector<Formula> kept;
    for (std::size_t i = 0; i < out.assumptions.size(); ++i) {
        if (used[i]) {
            assumption_map[i] = kept.size();
            kept.push_back(out.assumptions[i]);
        }
    }
    out.assumptions = std::move(kept);
    for (ProofStep& step : reduced.steps) {
        if (auto* a = std::get_if<AssumptionRef>(&step.justification))
            a->index = assumption_map[a->index];
    }

    if (reduced.steps.size() >= proof.steps.size())
        throw std::logic_error("reduce_depth: step count did not decrease");
    out.meta.depth_label = static_cast<int>(reduced.steps.size());
    return {std::move(out), std::move(reduced)};
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

std::vector<SuiteItem> carve_lineage(const SuiteItem& deepest, const std::vector<int>& depths) {
    std::vector<int> order = depths;
    std::sort(order.begin(), order.end(), std::greater<int>());
    if (std::adjacent_find(order.begin(), order.end()) != order.end())
        throw std::invalid_argument("carve_lineage: duplicate depth requested");

    std::vector<SuiteItem> out;
    SuiteItem current = deepest;
    for (int depth : order) {
        while (current.proof.steps.size() > static_cast<std::size_t>(depth)) {
            auto [instance, proof] = reduce_depth(current.instance, current.proof);
            current = SuiteItem{std::move(instance), std::move(proof)};
        }
        if (current.proof.steps.size() != static_cast<std::size_t>(depth))
            throw std::runtime_error("carve_lineage: depth " + std::to_string(depth) +
                                     " unreachable from the given proof");
        current.instance.meta.depth_label = depth;
        out.push_back(current);
    }
    return out;
}

namespace {

inline constexpr int kSuiteRedrawBudget = 64;

// Right-chain instance with exactly `target_depth` canonical steps: each
// level adds one assumption leaf and grows down the implication side, so the
// reduction ladder later hits every rung at -3 per step.
std::pair<ReasoningInstance, Proof> generate_chain_instance(int target_depth,
                                                            const GenConfig& cfg,
                                                            RandomStream& rng) {
    if (target_depth < 4 || target_depth % 3 != 1)
        throw std::invalid_argument("generate_chain_instance: depth must be 3k+1, k >= 1");
    const int links = (target_depth - 1) / 3;

    ProofTree tree;
    tree.root = std::make_unique<ProofTreeNode>(
        random_formula(cfg.variable_pool, cfg.goal_max_height, rng, cfg.branch_probability));
    ProofTreeNode* node = tree.root.get();
    for (int i = 0; i < links; ++i) {
        Formula f = random_formula(cfg.variable_pool, cfg.expansion_formula_max_height, rng,
                                   cfg.branch_probability);
        node->kind = ProofTreeNode::Kind::MpNode;
        node->antecedent = std::make_unique<ProofTreeNode>(f);
        node->antecedent->kind = ProofTreeNode::Kind::AssumptionLeaf;
        node->implication =
            std::make_unique<ProofTreeNode>(Formula::implies(std::move(f), node->formula));
        node->implication->kind = ProofTreeNode::Kind::AssumptionLeaf;
        node = node->implication.get();
    }
    return linearize(tree, WireProfile::Canonical);
}

}  // namespace

std::vector<SuiteItem> build_depth_suite(const std::vector<int>& depths, int per_depth,
                                         const GenConfig& cfg, std::uint64_t master_seed,
                                         const std::set<std::string>& exclude_keys,
                                         bool lineage) {
    cfg.check();
    if (depths.empty() || per_depth < 1)
        throw std::invalid_argument("build_depth_suite: nothing to build");
    const int deepest = *std::max_element(depths.begin(), depths.end());

    std::set<std::string> seen = exclude_keys;
    std::vector<SuiteItem> suite;
    suite.reserve(static_cast<std::size_t>(per_depth) * depths.size());

    // Draw one fresh deep chain from (master_seed, ordinal), carve it at
    // `want`, and keep the slices only when none collide with `seen`.
    auto try_place = [&](std::uint64_t ordinal, const std::vector<int>& want) -> bool {
        RandomStream rng = RandomStream::derive(master_seed, ordinal, stream_salt::depth_suite);
        auto [instance, proof] = generate_chain_instance(deepest, cfg, rng);
        instance.meta.seed = master_seed;
        std::vector<SuiteItem> slices =
            carve_lineage(SuiteItem{std::move(instance), std::move(proof)}, want);
        std::vector<std::string> keys;
        keys.reserve(slices.size());
        for (const SuiteItem& item : slices) {
            keys.push_back(instance_key(item.instance));
            if (seen.count(keys.back()))
                return false;
        }
        seen.insert(keys.begin(), keys.end());
        for (SuiteItem& item : slices)
            suite.push_back(std::move(item));
        return true;
    };

    auto place_or_throw = [&](std::uint64_t base_ordinal, const std::vector<int>& want,
                              const std::string& where) {
        for (int attempt = 0; attempt < kSuiteRedrawBudget; ++attempt)
            if (try_place(base_ordinal | static_cast<std::uint64_t>(attempt), want))
                return;
        throw std::runtime_error("build_depth_suite: " + where +
                                 " could not find a fresh lineage in " +
                                 std::to_string(kSuiteRedrawBudget) + " attempts");
    };

    if (lineage) {
        // One deep chain per slot, every requested depth carved from it.
        for (int slot = 0; slot < per_depth; ++slot)
            place_or_throw(static_cast<std::uint64_t>(slot) << 16, depths,
                           "slot " + std::to_string(slot));
    } else {
        // Independent chain per (depth, slot) cell, carved at that depth only.
        for (int depth : depths)
            for (int slot = 0; slot < per_depth; ++slot)
                place_or_throw((static_cast<std::uint64_t>(depth) << 32) |
                                   (static_cast<std::uint64_t>(slot) << 16),
                               std::vector<int>{depth},
                               "depth " + std::to_string(depth) + " slot " +
                                   std::to_string(slot));
    }
    return suite;
}

std::vector<SuiteItem> build_width_suite(const std::vector<int>& widths, int per_width,
                                         const GenConfig& cfg, const TransformConfig& tcfg,
                                         std::uint64_t master_seed,
                                         const std::set<std::string>& exclude_keys) {
    cfg.check();
    tcfg.check();
    if (widths.empty() || per_width < 1)
        throw std::invalid_argument("build_width_suite: nothing to build");

    // Shared bases: each width level is the same family of problems wearing
    // bigger formulas.
    std::vector<SuiteItem> bases;
    bases.reserve(per_width);
    for (int slot = 0; slot < per_width; ++slot) {
        GenConfig item_cfg = cfg;
        item_cfg.rng_seed = RandomStream::derive_seed(
            master_seed, static_cast<std::uint64_t>(slot), stream_salt::width_suite + 1);
        auto [instance, proof] = generate_instance(cfg.target_step_count, item_cfg);
        instance.meta.seed = master_seed;
        bases.push_back(SuiteItem{std::move(instance), std::move(proof)});
    }

    std::set<std::string> seen = exclude_keys;
    std::vector<SuiteItem> suite;
    suite.reserve(static_cast<std::size_t>(per_width) * widths.size());
    for (int width : widths) {
        for (int slot = 0; slot < per_width; ++slot) {
            const std::uint64_t ordinal = (static_cast<std::uint64_t>(width) << 32) |
                                          static_cast<std::uint64_t>(slot);
            RandomStream rng =
                RandomStream::derive(master_seed, ordinal, stream_salt::width_suite);
            bool placed = false;
            for (int attempt = 0; attempt < kSuiteRedrawBudget && !placed; ++attempt) {
                auto [instance, proof] =
                    make_width_instance(bases[slot].instance, bases[slot].proof, width, tcfg, rng);
                std::string key = instance_key(instance);
                if (seen.count(key))
                    continue;
                seen.insert(std::move(key));
                suite.push_back(SuiteItem{std::move(instance), std::move(proof)});
                placed = true;
            }
            if (!placed)
                throw std::runtime_error("build_width_suite: width " + std::to_string(width) +
                                         " slot " + std::to_string(slot) +
                                         " could not find a fresh variant in " +
                                         std::to_string(kSuiteRedrawBudget) + " attempts");
        }
    }
    return suite;
}

}  // namespace hilbert
