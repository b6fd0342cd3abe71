#include <doctest.h>

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/curriculum.hpp"
#include "hilbert/formula.hpp"
#include "hilbert/generator.hpp"
#include "hilbert/kernel.hpp"

using namespace hilbert;

namespace {

Formula f(const char* text) { return parse_formula(text); }

std::unique_ptr<ProofTreeNode> leaf(Formula formula) {
    auto node = std::make_unique<ProofTreeNode>(std::move(formula));
    node->kind = ProofTreeNode::Kind::AssumptionLeaf;
    return node;
}

// Right chain with `links` inferences: the implication side keeps growing, so
// a canonical linearization has 3 * links + 1 steps.
SuiteItem chain_item(int links) {
    Formula goal = f("G0");
    ProofTree tree;
    tree.root = std::make_unique<ProofTreeNode>(goal);
    ProofTreeNode* node = tree.root.get();
    for (int i = 1; i <= links; ++i) {
        Formula step = Formula::var("F" + std::to_string(i));
        node->kind = ProofTreeNode::Kind::MpNode;
        node->antecedent = leaf(step);
        node->implication =
            std::make_unique<ProofTreeNode>(Formula::implies(step, node->formula));
        node->implication->kind = ProofTreeNode::Kind::AssumptionLeaf;
        node = node->implication.get();
    }
    auto [instance, proof] = linearize(tree, WireProfile::Canonical);
    return SuiteItem{std::move(instance), std::move(proof)};
}

std::set<std::string> suite_keys(const std::vector<SuiteItem>& suite) {
    std::set<std::string> keys;
    for (const SuiteItem& item : suite)
        keys.insert(instance_key(item.instance));
    return keys;
}

}  // namespace

TEST_CASE("reduce_depth grants the first leaf-level inference as an assumption") {
    SuiteItem deep = chain_item(2);
    REQUIRE(deep.proof.steps.size() == 7);

    auto [instance, proof] = reduce_depth(deep.instance, deep.proof);
    CHECK(proof.steps.size() == 4);
    CHECK(instance.goal == deep.instance.goal);
    CHECK(is_valid(instance, proof));
    CHECK(instance.meta.depth_label == 4);

    // The derived rung F1 -> G0 is now an assumption; the leaves that only
    // served it are gone.
    bool granted = false;
    for (const Formula& a : instance.assumptions)
        if (a == f("Implies(F1, G0)"))
            granted = true;
    CHECK(granted);
    for (const Formula& a : instance.assumptions) {
        CHECK_FALSE(a == f("F2"));
        CHECK_FALSE(a == f("Implies(F2, Implies(F1, G0))"));
    }
}

TEST_CASE("reduce_depth walks a chain down by three steps per rung") {
    SuiteItem current = chain_item(4);
    std::vector<std::size_t> ladder = {13, 10, 7, 4, 1};
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
        REQUIRE(current.proof.steps.size() == ladder[i]);
        auto [instance, proof] = reduce_depth(current.instance, current.proof);
        CHECK(proof.steps.size() == ladder[i + 1]);
        CHECK(is_valid(instance, proof));
        CHECK(instance.goal == current.instance.goal);
        current = SuiteItem{std::move(instance), std::move(proof)};
    }
    // The fully reduced problem assumes its goal outright.
    CHECK(current.proof.steps.size() == 1);
    CHECK(current.instance.assumptions == std::vector<Formula>{f("G0")});
}

TEST_CASE("reduce_depth reuses an existing assumption for the conclusion") {
    ReasoningInstance instance{{f("A"), f("Implies(A, B)"), f("B")}, f("B"), {}};
    Proof proof;
    proof.steps = {ProofStep{f("A"), AssumptionRef{0}},
                   ProofStep{f("Implies(A, B)"), AssumptionRef{1}},
                   ProofStep{f("B"), ModusPonens{0, 1}},
                   ProofStep{f("B"), Restatement{2}}};
    REQUIRE(is_valid(instance, proof));

    auto [reduced, reduced_proof] = reduce_depth(instance, proof);
    CHECK(reduced_proof.steps.size() == 1);
    // No duplicate assumption was added and unused ones were swept.
    CHECK(reduced.assumptions == std::vector<Formula>{f("B")});
    CHECK(is_valid(reduced, reduced_proof));
}

TEST_CASE("reduce_depth handles compact proofs too") {
    ReasoningInstance instance{{f("Implies(P, Q)"), f("P")}, f("Q"), {}};
    Proof proof;
    proof.steps = {ProofStep{f("Implies(P, Q)"), AssumptionRef{0}},
                   ProofStep{f("P"), AssumptionRef{1}},
                   ProofStep{f("Q"), ModusPonens{0, 1}}};
    REQUIRE(is_valid(instance, proof));
    auto [reduced, reduced_proof] = reduce_depth(instance, proof);
    CHECK(reduced_proof.steps.size() == 1);
    CHECK(reduced.assumptions == std::vector<Formula>{f("Q")});
    CHECK(is_valid(reduced, reduced_proof));
}

TEST_CASE("reduce_depth rejects bad inputs") {
    SuiteItem deep = chain_item(2);
    Proof broken = deep.proof;
    broken.steps[0].justification = AssumptionRef{42};
    CHECK_THROWS_AS(reduce_depth(deep.instance, broken), std::invalid_argument);

    // Nothing to reduce: the proof is a single assumption.
    ReasoningInstance flat{{f("P")}, f("P"), {}};
    Proof single;
    single.steps = {ProofStep{f("P"), AssumptionRef{0}}};
    CHECK_THROWS_AS(reduce_depth(flat, single), std::invalid_argument);
}

TEST_CASE("carve_lineage slices one proof at every requested depth") {
    SuiteItem deep = chain_item(3);   // 10 canonical steps
    std::vector<SuiteItem> slices = carve_lineage(deep, {4, 10, 7, 1});
    REQUIRE(slices.size() == 4);
    // Deepest first, whatever order was asked for.
    CHECK(slices[0].proof.steps.size() == 10);
    CHECK(slices[1].proof.steps.size() == 7);
    CHECK(slices[2].proof.steps.size() == 4);
    CHECK(slices[3].proof.steps.size() == 1);
    for (const SuiteItem& item : slices) {
        CHECK(item.instance.goal == deep.instance.goal);
        CHECK(is_valid(item.instance, item.proof));
        CHECK(item.instance.meta.depth_label == static_cast<int>(item.proof.steps.size()));
    }
}

TEST_CASE("carve_lineage rejects duplicates and unreachable depths") {
    SuiteItem deep = chain_item(3);
    CHECK_THROWS_AS(carve_lineage(deep, {7, 7}), std::invalid_argument);
    try {
        carve_lineage(deep, {10, 6});
        FAIL("expected runtime_error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("depth 6") != std::string::npos);
    }
    CHECK_THROWS_AS(carve_lineage(deep, {13}), std::runtime_error);
}

TEST_CASE("build_depth_suite produces unique valid items at exact depths") {
    GenConfig cfg;
    const std::vector<int> depths = {4, 7, 10};
    std::vector<SuiteItem> suite = build_depth_suite(depths, 5, cfg, 2718);
    REQUIRE(suite.size() == 15);

    // Slot-major order, each lineage deepest first.
    for (int slot = 0; slot < 5; ++slot) {
        const SuiteItem& a = suite[slot * 3 + 0];
        const SuiteItem& b = suite[slot * 3 + 1];
        const SuiteItem& c = suite[slot * 3 + 2];
        CHECK(a.proof.steps.size() == 10);
        CHECK(b.proof.steps.size() == 7);
        CHECK(c.proof.steps.size() == 4);
        // A lineage shares its goal across depths.
        CHECK(a.instance.goal == b.instance.goal);
        CHECK(b.instance.goal == c.instance.goal);
    }
    for (const SuiteItem& item : suite) {
        CHECK(is_valid(item.instance, item.proof));
        CHECK(item.instance.meta.depth_label == static_cast<int>(item.proof.steps.size()));
    }
    CHECK(suite_keys(suite).size() == suite.size());
}

TEST_CASE("build_depth_suite avoids excluded keys and is deterministic") {
    GenConfig cfg;
    const std::vector<int> depths = {4, 7};
    std::vector<SuiteItem> first = build_depth_suite(depths, 4, cfg, 99);
    std::vector<SuiteItem> again = build_depth_suite(depths, 4, cfg, 99);
    REQUIRE(first.size() == again.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        CHECK(instance_key(first[i].instance) == instance_key(again[i].instance));

    std::set<std::string> taken = suite_keys(first);
    std::vector<SuiteItem> fresh = build_depth_suite(depths, 4, cfg, 99, taken);
    for (const SuiteItem& item : fresh)
        CHECK(taken.count(instance_key(item.instance)) == 0);
    CHECK(suite_keys(fresh).size() == fresh.size());
}

TEST_CASE("build_depth_suite fresh mode carves each cell independently") {
    GenConfig cfg;
    const std::vector<int> depths = {4, 7};
    std::vector<SuiteItem> fresh = build_depth_suite(depths, 3, cfg, 1234, {}, false);
    REQUIRE(fresh.size() == 6);
    // Depth-major order: all depth-4 cells, then all depth-7 cells.
    for (int i = 0; i < 3; ++i)
        CHECK(fresh[i].proof.steps.size() == 4);
    for (int i = 3; i < 6; ++i)
        CHECK(fresh[i].proof.steps.size() == 7);
    for (const SuiteItem& item : fresh)
        CHECK(is_valid(item.instance, item.proof));
    CHECK(suite_keys(fresh).size() == fresh.size());

    // Same master, both modes: the fresh suite is not the lineage suite.
    std::vector<SuiteItem> lineage = build_depth_suite(depths, 3, cfg, 1234);
    CHECK(suite_keys(fresh) != suite_keys(lineage));
}

TEST_CASE("build_depth_suite rejects empty requests") {
    GenConfig cfg;
    CHECK_THROWS_AS(build_depth_suite({}, 5, cfg, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_depth_suite({7}, 0, cfg, 1), std::invalid_argument);
}

TEST_CASE("build_width_suite reissues shared bases at every width") {
    GenConfig cfg;
    cfg.rng_seed = 777;
    TransformConfig tcfg;
    const std::vector<int> widths = {0, 1, 2};
    std::vector<SuiteItem> suite = build_width_suite(widths, 4, cfg, tcfg, 777);
    REQUIRE(suite.size() == 12);

    for (std::size_t w = 0; w < widths.size(); ++w) {
        for (int slot = 0; slot < 4; ++slot) {
            const SuiteItem& item = suite[w * 4 + slot];
            CHECK(item.proof.steps.size() ==
                  static_cast<std::size_t>(cfg.target_step_count));
            CHECK(item.instance.meta.width_label == widths[w]);
            CHECK(is_valid(item.instance, item.proof));
            // Widths stack on the same base, so each level adds exactly its
            // width to the width-0 goal height.
            const SuiteItem& base = suite[slot];
            CHECK(height(item.instance.goal) == height(base.instance.goal) + widths[w]);
        }
    }
    CHECK(suite_keys(suite).size() == suite.size());
}

TEST_CASE("build_width_suite honors exclusions and determinism") {
    GenConfig cfg;
    TransformConfig tcfg;
    const std::vector<int> widths = {0, 1};
    std::vector<SuiteItem> first = build_width_suite(widths, 3, cfg, tcfg, 31);
    std::vector<SuiteItem> again = build_width_suite(widths, 3, cfg, tcfg, 31);
    REQUIRE(first.size() == again.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        CHECK(instance_key(first[i].instance) == instance_key(again[i].instance));

    std::set<std::string> taken = suite_keys(first);
    std::vector<SuiteItem> fresh = build_width_suite(widths, 3, cfg, tcfg, 31, taken);
    for (const SuiteItem& item : fresh)
        CHECK(taken.count(instance_key(item.instance)) == 0);

    CHECK_THROWS_AS(build_width_suite({}, 3, cfg, tcfg, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_width_suite({0}, 0, cfg, tcfg, 1), std::invalid_argument);
}
