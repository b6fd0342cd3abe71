#include "hilbert/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbert {

// ---------------------------------------------------------------------------
// Axiom schemas
// ---------------------------------------------------------------------------

const Formula& axiom_pattern(AxiomSchema schema) {
    static const Formula a = Formula::var("A");
    static const Formula b = Formula::var("B");
    static const Formula c = Formula::var("C");
    // A -> (B -> A)
    static const Formula a1 = Formula::implies(a, Formula::implies(b, a));
    // (A -> (B -> C)) -> ((A -> B) -> (A -> C))
    static const Formula a2 = Formula::implies(
        Formula::implies(a, Formula::implies(b, c)),
        Formula::implies(Formula::implies(a, b), Formula::implies(a, c)));
    return schema == AxiomSchema::A1 ? a1 : a2;
}

const std::vector<std::string>& axiom_placeholders(AxiomSchema schema) {
    static const std::vector<std::string> a1 = {"A", "B"};
    static const std::vector<std::string> a2 = {"A", "B", "C"};
    return schema == AxiomSchema::A1 ? a1 : a2;
}

std::string axiom_name(AxiomSchema schema) {
    return schema == AxiomSchema::A1 ? "A1" : "A2";
}

namespace {

// One-way matching: every variable of `pattern` is a placeholder that binds
// the corresponding subtree of `f`; repeated placeholders must agree.
bool match_into(const Formula& pattern, const Formula& f, Substitution& binding) {
    if (pattern.is_var()) {
        if (const Formula* bound = binding.find(pattern.var_name()))
            return *bound == f;
        binding.set(pattern.var_name(), f);
        return true;
    }
    if (f.is_var())
        return false;
    return match_into(pattern.antecedent(), f.antecedent(), binding) &&
           match_into(pattern.consequent(), f.consequent(), binding);
}

}  // namespace

std::optional<Substitution> match_axiom(AxiomSchema schema, const Formula& f) {
    Substitution binding;
    if (!match_into(axiom_pattern(schema), f, binding))
        return std::nullopt;
    return binding;
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

std::string instance_key(const ReasoningInstance& instance) {
    std::vector<std::string> assumptions;
    assumptions.reserve(instance.assumptions.size());
    for (const Formula& a : instance.assumptions)
        assumptions.push_back(print_formula(a));
    std::sort(assumptions.begin(), assumptions.end());
    std::string key = print_formula(instance.goal);
    for (const std::string& a : assumptions) {
        key += '|';
        key += a;
    }
    return key;
}

// ---------------------------------------------------------------------------
// Step checking
// ---------------------------------------------------------------------------

std::string violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::AssumptionNotFound: return "AssumptionNotFound";
        case ViolationKind::AxiomMismatch: return "AxiomMismatch";
        case ViolationKind::MPShapeMismatch: return "MPShapeMismatch";
        case ViolationKind::ForwardReference: return "ForwardReference";
        case ViolationKind::IndexOutOfRange: return "IndexOutOfRange";
        case ViolationKind::RestatementMismatch: return "RestatementMismatch";
        case ViolationKind::GoalNotClaimed: return "GoalNotClaimed";
    }
    return "Unknown";
}

namespace {

// Shared index hygiene for justifications that cite earlier steps.
std::optional<ViolationKind> check_back_reference(std::size_t cited, std::size_t current,
                                                  std::size_t total) {
    if (cited >= total)
        return ViolationKind::IndexOutOfRange;
    if (cited >= current)
        return ViolationKind::ForwardReference;
    return std::nullopt;
}

struct StepChecker {
    const ReasoningInstance& instance;
    const Proof& proof;
    std::size_t index;

    std::optional<ViolationKind> run() const {
        const ProofStep& step = proof.steps[index];
        return std::visit([&](const auto& j) { return check(step.formula, j); },
                          step.justification);
    }

    std::optional<ViolationKind> check(const Formula& claim, const AssumptionRef& j) const {
        // An out-of-range reference and a formula mismatch mean the same
        // thing to a reader: the claim is not backed by the assumption list.
        if (j.index >= instance.assumptions.size())
            return ViolationKind::AssumptionNotFound;
        if (claim != instance.assumptions[j.index])
            return ViolationKind::AssumptionNotFound;
        return std::nullopt;
    }

    std::optional<ViolationKind> check(const Formula& claim, const AxiomInstance& j) const {
        const std::vector<std::string>& placeholders = axiom_placeholders(j.schema);
        if (j.subst.size() != placeholders.size())
            return ViolationKind::AxiomMismatch;
        for (const std::string& name : placeholders) {
            if (!j.subst.contains(name))
                return ViolationKind::AxiomMismatch;
        }
        if (j.subst.apply(axiom_pattern(j.schema)) != claim)
            return ViolationKind::AxiomMismatch;
        return std::nullopt;
    }

    std::optional<ViolationKind> check(const Formula& claim, const ModusPonens& j) const {
        for (std::size_t cited : {j.premise_a, j.premise_b}) {
            if (auto bad = check_back_reference(cited, index, proof.steps.size()))
                return bad;
        }
        const Formula& a = proof.steps[j.premise_a].formula;
        const Formula& b = proof.steps[j.premise_b].formula;
        // Premises may be cited in either order.
        if (b.is_implication() && b.antecedent() == a && b.consequent() == claim)
            return std::nullopt;
        if (a.is_implication() && a.antecedent() == b && a.consequent() == claim)
            return std::nullopt;
        return ViolationKind::MPShapeMismatch;
    }

    std::optional<ViolationKind> check(const Formula& claim, const Restatement& j) const {
        if (auto bad = check_back_reference(j.index, index, proof.steps.size()))
            return bad;
        if (claim != proof.steps[j.index].formula)
            return ViolationKind::RestatementMismatch;
        return std::nullopt;
    }
};

}  // namespace

std::optional<Violation> check_step(const ReasoningInstance& instance, const Proof& proof,
                                    std::size_t index) {
    if (index >= proof.steps.size())
        throw std::out_of_range("check_step: no such step");
    if (auto kind = StepChecker{instance, proof, index}.run())
        return Violation{*kind, index};
    return std::nullopt;
}

std::vector<Violation> validate(const ReasoningInstance& instance, const Proof& proof) {
    std::vector<Violation> out;
    bool goal_claimed = false;
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
        if (auto v = check_step(instance, proof, i))
            out.push_back(*v);
        if (proof.steps[i].formula == instance.goal)
            goal_claimed = true;
    }
    if (!goal_claimed)
        out.push_back(Violation{ViolationKind::GoalNotClaimed, proof.steps.size()});
    return out;
}

bool is_valid(const ReasoningInstance& instance, const Proof& proof) {
    return validate(instance, proof).empty();
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

ProofMeasures proof_measures(const ReasoningInstance& instance, const Proof& proof) {
    if (!is_valid(instance, proof))
        throw std::invalid_argument("proof_measures: proof does not validate");

    ProofMeasures m;
    m.step_count = proof.steps.size();

    std::vector<std::size_t> height(proof.steps.size(), 0);
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
        const Justification& j = proof.steps[i].justification;
        if (std::holds_alternative<ModusPonens>(j)) {
            const auto& mp = std::get<ModusPonens>(j);
            height[i] = 1 + std::max(height[mp.premise_a], height[mp.premise_b]);
            ++m.mp_count;
        } else if (std::holds_alternative<Restatement>(j)) {
            height[i] = height[std::get<Restatement>(j).index];
        } else {
            height[i] = 1;
        }
        m.tree_height = std::max(m.tree_height, height[i]);
    }
    return m;
}

}  // namespace hilbert
