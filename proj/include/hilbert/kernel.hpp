#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hilbert/formula.hpp"

namespace hilbert {

// ---------------------------------------------------------------------------
// Proof objects
// ---------------------------------------------------------------------------
//
// A proof is a numbered list of steps. Each step claims a formula and carries
// a justification referring only to assumptions, axiom schemas, or earlier
// steps. Step and assumption indices are 0-based in memory; the text formats
// are 1-based and converted at the boundary.

enum class AxiomSchema { A1, A2 };

// A -> (B -> A)
// (A -> (B -> C)) -> ((A -> B) -> (A -> C))
const Formula& axiom_pattern(AxiomSchema schema);
const std::vector<std::string>& axiom_placeholders(AxiomSchema schema);
std::string axiom_name(AxiomSchema schema);

struct AssumptionRef {
    std::size_t index;
};

struct AxiomInstance {
    AxiomSchema schema;
    Substitution subst;  // domain must be exactly the schema placeholders
};

struct ModusPonens {
    std::size_t premise_a;  // either order: one premise is X, the other X -> claim
    std::size_t premise_b;
};

struct Restatement {
    std::size_t index;
};

using Justification = std::variant<AssumptionRef, AxiomInstance, ModusPonens, Restatement>;

struct ProofStep {
    Formula formula;
    Justification justification;
};

struct Proof {
    std::vector<ProofStep> steps;
};

// The problem an answer is judged against: prove `goal` from `assumptions`.
struct InstanceMeta {
    std::string id;
    int depth_label = 0;
    int width_label = 0;
    std::uint64_t seed = 0;
};

struct ReasoningInstance {
    std::vector<Formula> assumptions;
    Formula goal;
    InstanceMeta meta;
};

// Identity of the problem itself, independent of metadata and assumption
// order: the goal print plus the sorted assumption prints.
std::string instance_key(const ReasoningInstance& instance);

// ---------------------------------------------------------------------------
// Checking
// ---------------------------------------------------------------------------

enum class ViolationKind {
    AssumptionNotFound,   // claimed formula is not the referenced assumption
    AxiomMismatch,        // formula is not the schema instantiated as stored
    MPShapeMismatch,      // neither premise implies the claim from the other
    ForwardReference,     // reference to the current or a later step
    IndexOutOfRange,      // step reference beyond the proof
    RestatementMismatch,  // restated formula differs from its source
    GoalNotClaimed,       // no step claims the goal (whole-proof violation)
};

std::string violation_kind_name(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    // Offending 0-based step; == proof.steps.size() for GoalNotClaimed.
    std::size_t step;
};

// Match a formula against a schema. Returns the unique substitution over the
// schema placeholders that instantiates the schema to `f`, or nullopt.
std::optional<Substitution> match_axiom(AxiomSchema schema, const Formula& f);

// Check one step in the context of everything before it. `index` is the
// step's own position; callers pass steps[0..index) implicitly via `proof`.
std::optional<Violation> check_step(const ReasoningInstance& instance, const Proof& proof,
                                    std::size_t index);

// Every violation in the proof, in step order, with GoalNotClaimed (if any)
// last. Empty result means the proof is accepted.
std::vector<Violation> validate(const ReasoningInstance& instance, const Proof& proof);

bool is_valid(const ReasoningInstance& instance, const Proof& proof);

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

struct ProofMeasures {
    std::size_t step_count = 0;
    std::size_t mp_count = 0;
    // Height of the derivation tree: leaves (assumptions, axioms) count 1,
    // modus ponens adds a level, restatements are transparent.
    std::size_t tree_height = 0;
};

// Throws std::invalid_argument if the proof does not validate.
ProofMeasures proof_measures(const ReasoningInstance& instance, const Proof& proof);

}  // namespace hilbert
