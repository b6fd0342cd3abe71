#include "hilbert/generator.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace hilbert {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

void GenConfig::check() const {
    if (variable_pool.empty())
        throw std::invalid_argument("GenConfig: variable pool is empty");
    for (const std::string& v : variable_pool) {
        if (!is_valid_variable_name(v))
            throw std::invalid_argument("GenConfig: bad pool variable '" + v + "'");
    }
    if (goal_max_height < 0 || expansion_formula_max_height < 0)
        throw std::invalid_argument("GenConfig: negative formula height");
    if (branch_probability < 0.0 || branch_probability > 1.0)
        throw std::invalid_argument("GenConfig: branch_probability outside [0, 1]");
    for (double p : {p_stop, p_expand, p_axiom}) {
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("GenConfig: decision probability outside [0, 1]");
    }
    if (std::abs(p_stop + p_expand + p_axiom - 1.0) > 1e-9)
        throw std::invalid_argument("GenConfig: p_stop + p_expand + p_axiom must be 1");
    if (target_step_count < 1)
        throw std::invalid_argument("GenConfig: target_step_count must be at least 1");
    if (max_tree_height < 1)
        throw std::invalid_argument("GenConfig: max_tree_height must be at least 1");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

}  // namespace

GenConfig load_gen_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");

    GenConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "seed")
                cfg.rng_seed = std::stoull(value);
            else if (key == "variable_pool")
                cfg.variable_pool = split_list(value);
            else if (key == "goal_max_height")
                cfg.goal_max_height = std::stoi(value);
            else if (key == "expansion_formula_max_height")
                cfg.expansion_formula_max_height = std::stoi(value);
            else if (key == "branch_probability")
                cfg.branch_probability = std::stod(value);
            else if (key == "p_stop")
                cfg.p_stop = std::stod(value);
            else if (key == "p_expand")
                cfg.p_expand = std::stod(value);
            else if (key == "p_axiom")
                cfg.p_axiom = std::stod(value);
            else if (key == "target_step_count")
                cfg.target_step_count = std::stoi(value);
            else if (key == "max_tree_height")
                cfg.max_tree_height = std::stoi(value);
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + e.what());
        } catch (const std::out_of_range&) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": value out of range");
        }
    }
    cfg.check();
    return cfg;
}

std::uint64_t gen_config_digest(const GenConfig& cfg) {
    std::ostringstream s;
    s << cfg.rng_seed;
    for (const std::string& v : cfg.variable_pool)
        s << ',' << v;
    s << ';' << cfg.goal_max_height << ';' << cfg.expansion_formula_max_height << ';'
      << cfg.branch_probability << ';' << cfg.p_stop << ';' << cfg.p_expand << ';'
      << cfg.p_axiom << ';' << cfg.target_step_count << ';' << cfg.max_tree_height;
    // FNV-1a.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Random formulas
// ---------------------------------------------------------------------------

Formula random_formula(const std::vector<std::string>& pool, int max_height, RandomStream& rng,
                       double branch_probability) {
    if (pool.empty())
        throw std::invalid_argument("random_formula: empty variable pool");
    if (max_height <= 0 || !rng.bernoulli(branch_probability))
        return Formula::var(rng.pick(pool));
    Formula a = random_formula(pool, max_height - 1, rng, branch_probability);
    Formula b = random_formula(pool, max_height - 1, rng, branch_probability);
    return Formula::implies(std::move(a), std::move(b));
}

Formula random_formula_exact_height(const std::vector<std::string>& pool, int target_height,
                                    RandomStream& rng, double branch_probability) {
    if (pool.empty())
        throw std::invalid_argument("random_formula_exact_height: empty variable pool");
    if (target_height < 0)
        throw std::invalid_argument("random_formula_exact_height: negative height");
    if (target_height == 0)
        return Formula::var(rng.pick(pool));
    // One side must carry the full height; the other is free below it.
    bool left_tall = rng.below(2) == 0;
    Formula tall = random_formula_exact_height(pool, target_height - 1, rng, branch_probability);
    Formula rest = random_formula(pool, target_height - 1, rng, branch_probability);
    return left_tall ? Formula::implies(std::move(tall), std::move(rest))
                     : Formula::implies(std::move(rest), std::move(tall));
}

// ---------------------------------------------------------------------------
// Tree growth
// ---------------------------------------------------------------------------

namespace {

// Step cost bookkeeping for the two wire profiles. Expanding a node into a
// modus ponens replaces its pending leaf step with an MP step plus two new
// pending leaves (net +2); under the canonical profile the proof also pays a
// restatement when a derived implication premise is used, and one closing
// restatement at the root.
struct GrowthBudget {
    WireProfile profile;
    std::size_t limit;
    std::size_t committed = 1;  // the root's pending leaf step
    bool root_expanded = false;

    std::size_t expansion_cost(bool is_implication_child, bool is_root) const {
        std::size_t cost = 2;
        if (profile == WireProfile::Canonical && (is_implication_child || is_root))
            ++cost;  // restatement before use, or the closing restatement
        return cost;
    }

    bool can_expand(bool is_implication_child, bool is_root) const {
        return committed + expansion_cost(is_implication_child, is_root) <= limit;
    }

    void expanded(bool is_implication_child, bool is_root) {
        committed += expansion_cost(is_implication_child, is_root);
    }
};

struct TreeGrower {
    const GenConfig& cfg;
    RandomStream& rng;
    GrowthBudget budget;

    void grow(ProofTreeNode& node, int depth, bool is_implication_child, bool is_root) {
        const bool blocked =
            depth >= cfg.max_tree_height || !budget.can_expand(is_implication_child, is_root);
        if (blocked) {
            node.kind = ProofTreeNode::Kind::AssumptionLeaf;
            return;
        }

        double u = rng.unit();
        if (u < cfg.p_stop) {
            node.kind = ProofTreeNode::Kind::AssumptionLeaf;
            return;
        }
        if (u >= cfg.p_stop + cfg.p_expand) {
            // Axiom share: only spendable when the formula is an instance;
            // otherwise the mass falls through to expansion.
            if (auto m = match_axiom(AxiomSchema::A1, node.formula)) {
                node.kind = ProofTreeNode::Kind::AxiomLeaf;
                node.schema = AxiomSchema::A1;
                node.schema_subst = std::move(*m);
                return;
            }
            if (auto m = match_axiom(AxiomSchema::A2, node.formula)) {
                node.kind = ProofTreeNode::Kind::AxiomLeaf;
                node.schema = AxiomSchema::A2;
                node.schema_subst = std::move(*m);
                return;
            }
        }

        budget.expanded(is_implication_child, is_root);
        node.kind = ProofTreeNode::Kind::MpNode;
        Formula f = random_formula(cfg.variable_pool, cfg.expansion_formula_max_height, rng,
                                   cfg.branch_probability);
        node.antecedent = std::make_unique<ProofTreeNode>(f);
        node.implication =
            std::make_unique<ProofTreeNode>(Formula::implies(std::move(f), node.formula));
        grow(*node.antecedent, depth + 1, false, false);
        grow(*node.implication, depth + 1, true, false);
    }
};

}  // namespace

ProofTree generate_tree(const GenConfig& cfg, RandomStream& rng, WireProfile profile) {
    cfg.check();
    ProofTree tree;
    tree.root = std::make_unique<ProofTreeNode>(
        random_formula(cfg.variable_pool, cfg.goal_max_height, rng, cfg.branch_probability));
    TreeGrower grower{cfg, rng,
                      GrowthBudget{profile, static_cast<std::size_t>(cfg.target_step_count)}};
    grower.grow(*tree.root, 1, false, true);
    return tree;
}

// ---------------------------------------------------------------------------
// Linearization
// ---------------------------------------------------------------------------

std::string wire_profile_name(WireProfile profile) {
    return profile == WireProfile::Canonical ? "canonical" : "compact";
}

namespace {

struct Linearizer {
    WireProfile profile;
    std::vector<Formula> assumptions;
    std::unordered_map<Formula, std::size_t, FormulaHash> assumption_index;
    std::vector<ProofStep> steps;

    std::size_t emit_leaf(const ProofTreeNode& node) {
        if (node.kind == ProofTreeNode::Kind::AxiomLeaf) {
            steps.push_back(
                ProofStep{node.formula, AxiomInstance{node.schema, node.schema_subst}});
        } else {
            auto [it, inserted] = assumption_index.try_emplace(node.formula, assumptions.size());
            if (inserted)
                assumptions.push_back(node.formula);
            steps.push_back(ProofStep{node.formula, AssumptionRef{it->second}});
        }
        return steps.size() - 1;
    }

    // Returns the index of the step that states node's formula.
    std::size_t emit(const ProofTreeNode& node) {
        if (node.kind != ProofTreeNode::Kind::MpNode)
            return emit_leaf(node);
        return profile == WireProfile::Canonical ? emit_canonical(node) : emit_compact(node);
    }

    // Derived subtrees first (implication then antecedent), then the two
    // premise steps immediately before their modus ponens. A premise derived
    // earlier is carried forward by a restatement unless it already sits in
    // the preceding step.
    std::size_t emit_canonical(const ProofTreeNode& node) {
        std::size_t antecedent_conclusion = 0;
        std::size_t implication_conclusion = 0;
        const bool antecedent_derived = node.antecedent->kind == ProofTreeNode::Kind::MpNode;
        const bool implication_derived = node.implication->kind == ProofTreeNode::Kind::MpNode;
        if (implication_derived)
            implication_conclusion = emit(*node.implication);
        if (antecedent_derived)
            antecedent_conclusion = emit(*node.antecedent);

        std::size_t premise_a = antecedent_derived ? bring_forward(antecedent_conclusion)
                                                   : emit_leaf(*node.antecedent);
        std::size_t premise_i = implication_derived ? bring_forward(implication_conclusion)
                                                    : emit_leaf(*node.implication);
        steps.push_back(ProofStep{node.formula, ModusPonens{premise_a, premise_i}});
        return steps.size() - 1;
    }

    std::size_t bring_forward(std::size_t conclusion) {
        if (conclusion == steps.size() - 1)
            return conclusion;
        steps.push_back(ProofStep{steps[conclusion].formula, Restatement{conclusion}});
        return steps.size() - 1;
    }

    // No restatements; premises cited wherever they were derived, implication
    // side first.
    std::size_t emit_compact(const ProofTreeNode& node) {
        std::size_t premise_i = emit(*node.implication);
        std::size_t premise_a = emit(*node.antecedent);
        steps.push_back(ProofStep{node.formula, ModusPonens{premise_i, premise_a}});
        return steps.size() - 1;
    }
};

void require_closed(const ProofTreeNode& node) {
    if (node.kind == ProofTreeNode::Kind::Open)
        throw std::invalid_argument("linearize: tree contains open nodes");
    if (node.kind == ProofTreeNode::Kind::MpNode) {
        require_closed(*node.antecedent);
        require_closed(*node.implication);
    }
}

}  // namespace

std::pair<ReasoningInstance, Proof> linearize(const ProofTree& tree, WireProfile profile) {
    if (!tree.root)
        throw std::invalid_argument("linearize: empty tree");
    require_closed(*tree.root);

    Linearizer lin{profile};
    std::size_t conclusion = lin.emit(*tree.root);
    if (profile == WireProfile::Canonical && tree.root->kind == ProofTreeNode::Kind::MpNode)
        lin.steps.push_back(ProofStep{tree.root->formula, Restatement{conclusion}});

    ReasoningInstance instance{std::move(lin.assumptions), tree.root->formula, {}};
    Proof proof;
    proof.steps = std::move(lin.steps);
    return {std::move(instance), std::move(proof)};
}

std::size_t linear_step_count(const ProofTree& tree, WireProfile profile) {
    if (!tree.root)
        throw std::invalid_argument("linear_step_count: empty tree");

    struct Counter {
        WireProfile profile;
        std::size_t count(const ProofTreeNode& node) const {
            if (node.kind != ProofTreeNode::Kind::MpNode)
                return 1;
            std::size_t restate =
                profile == WireProfile::Canonical &&
                        node.implication->kind == ProofTreeNode::Kind::MpNode
                    ? 1
                    : 0;
            return count(*node.antecedent) + count(*node.implication) + restate + 1;
        }
    } counter{profile};

    std::size_t total = counter.count(*tree.root);
    if (profile == WireProfile::Canonical && tree.root->kind == ProofTreeNode::Kind::MpNode)
        ++total;
    return total;
}

bool step_count_reachable(std::size_t steps, WireProfile profile) {
    if (profile == WireProfile::Canonical)
        return steps == 1 || steps == 4 || steps >= 6;
    return steps % 2 == 1;
}

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

std::pair<ReasoningInstance, Proof> generate_instance(int target_depth, const GenConfig& cfg,
                                                      WireProfile profile) {
    cfg.check();
    if (target_depth < 1)
        throw std::invalid_argument("generate_instance: target depth must be positive");
    if (!step_count_reachable(static_cast<std::size_t>(target_depth), profile))
        throw std::runtime_error("generate_instance: no " + wire_profile_name(profile) +
                                 " proof has exactly " + std::to_string(target_depth) +
                                 " steps");

    GenConfig bounded = cfg;
    bounded.target_step_count = target_depth;

    RandomStream rng(cfg.rng_seed);
    for (int attempt = 1; attempt <= kGenerateRetryBudget; ++attempt) {
        ProofTree tree = generate_tree(bounded, rng, profile);
        if (linear_step_count(tree, profile) != static_cast<std::size_t>(target_depth))
            continue;
        auto [instance, proof] = linearize(tree, profile);
        instance.meta.depth_label = target_depth;
        instance.meta.width_label = 0;
        instance.meta.seed = cfg.rng_seed;
        return {std::move(instance), std::move(proof)};
    }
    throw std::runtime_error("generate_instance: target step count " +
                             std::to_string(target_depth) + " not reached after " +
                             std::to_string(kGenerateRetryBudget) + " attempts");
}

}  // namespace hilbert
