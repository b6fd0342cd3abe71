#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbert {

// ---------------------------------------------------------------------------
// Formula
// ---------------------------------------------------------------------------
//
// The implication-only fragment: a formula is either a propositional variable
// or Implies(antecedent, consequent). Values are immutable and share subtrees
// freely, so copies are cheap and substitution can reuse untouched branches.

class Formula {
public:
    Formula() = delete;

    static Formula var(std::string name);
    static Formula implies(Formula antecedent, Formula consequent);

    bool is_var() const { return node_->var_index >= 0; }
    bool is_implication() const { return !is_var(); }

    const std::string& var_name() const;
    const Formula& antecedent() const;
    const Formula& consequent() const;

    // Structural equality. Shared subtrees compare by pointer first, which is
    // the common case after substitution.
    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    std::size_t hash() const { return node_->hash; }

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        // var_index >= 0 marks a variable (name held in `name`); -1 marks an
        // implication with both children set.
        int var_index;
        std::string name;
        NodePtr left;
        NodePtr right;
        std::size_t hash;
        int height;
        std::size_t node_count;
    };

    explicit Formula(NodePtr node) : node_(std::move(node)) {}

    static const Formula& wrap(const NodePtr& node);

    NodePtr node_;

    friend int height(const Formula& f);
    friend std::size_t node_count(const Formula& f);
    friend struct FormulaHash;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Height: a variable has height 0, an implication is 1 + max of its children.
int height(const Formula& f);
std::size_t node_count(const Formula& f);

// All distinct variable names, sorted.
std::set<std::string> variables(const Formula& f);

struct FormulaMeasures {
    int height = 0;
    std::size_t node_count = 0;
    std::set<std::string> variables;
};

FormulaMeasures measures(const Formula& f);

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------
//
// Canonical form: variables print as their identifier, implications print as
// "Implies(a, b)" with exactly one space after the comma. parse_formula
// accepts arbitrary whitespace between tokens and round-trips anything
// print_formula emits.

std::string print_formula(const Formula& f);
void print_formula(const Formula& f, std::string& out);

// Thrown on malformed formula text; `offset` is a byte position into the
// parsed string.
class FormulaParseError : public std::runtime_error {
public:
    FormulaParseError(std::string message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

Formula parse_formula(const std::string& text);

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------
//
// A finite map from variable names to formulas, applied simultaneously:
// variables introduced by a replacement are never rewritten again.

class Substitution {
public:
    Substitution() = default;

    void set(const std::string& var, Formula replacement);
    const Formula* find(const std::string& var) const;
    bool contains(const std::string& var) const { return find(var) != nullptr; }

    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }

    // Domain in sorted order; iteration over entries follows the same order.
    std::set<std::string> domain() const;
    const std::map<std::string, Formula>& entries() const { return map_; }

    Formula apply(const Formula& f) const;

    // this ∘ other: apply `other` first, then this. Domain is the union of
    // both domains.
    Substitution compose_after(const Substitution& other) const;

    friend bool operator==(const Substitution& a, const Substitution& b);
    friend bool operator!=(const Substitution& a, const Substitution& b) { return !(a == b); }

private:
    std::map<std::string, Formula> map_;
};

// True iff `name` is a legal variable identifier: an uppercase letter followed
// by letters, digits or underscores.
bool is_valid_variable_name(const std::string& name);

}  // namespace hilbert
