#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/formula.hpp"

namespace hilbert {

// ---------------------------------------------------------------------------
// Truth-table semantics
// ---------------------------------------------------------------------------
//
// Ground truth independent of the proof system: implication is material, and
// entailment is decided by exhausting assignments. Everything here is slow on
// purpose; it exists to check the symbolic side, not to scale.

class Assignment {
public:
    Assignment() = default;

    void set(const std::string& var, bool value) { values_[var] = value; }
    bool contains(const std::string& var) const { return values_.count(var) != 0; }

    // Throws std::out_of_range when the variable is unassigned.
    bool value(const std::string& var) const;

    const std::map<std::string, bool>& values() const { return values_; }

private:
    std::map<std::string, bool> values_;
};

// Material implication over a total assignment; throws std::out_of_range if
// the formula mentions an unassigned variable.
bool evaluate(const Formula& f, const Assignment& assignment);

inline constexpr std::size_t kDefaultVariableLimit = 20;

class VariableLimitExceeded : public std::runtime_error {
public:
    VariableLimitExceeded(std::size_t count, std::size_t limit);
    std::size_t count() const { return count_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t count_;
    std::size_t limit_;
};

// True iff every assignment making all assumptions true also makes the goal
// true. Exhausts all 2^n assignments over the variables that occur; throws
// VariableLimitExceeded when n exceeds `limit`.
bool entails(const std::vector<Formula>& assumptions, const Formula& goal,
             std::size_t limit = kDefaultVariableLimit);

// A satisfying assignment, built constructively: every implication-only
// formula is satisfied by making its rightmost consequent variable true.
// Total over the variables of `f`; everything but that one variable is false.
Assignment satisfy(const Formula& f);

// ---------------------------------------------------------------------------
// CNF reduction
// ---------------------------------------------------------------------------
//
// Bridges classical SAT into the implication fragment: each clause becomes an
// implication formula mentioning one shared fresh variable x, such that the
// CNF is satisfiable exactly when some assignment with x false satisfies all
// the clause formulas.

struct Literal {
    std::string var;
    bool positive = true;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
    std::vector<Clause> clauses;
};

// Distinct variable names occurring in the CNF, sorted.
std::set<std::string> cnf_variables(const CnfFormula& cnf);

// Plain DIMACS text ("p cnf V C" header, clauses as zero-terminated integer
// lists, "c" comment lines). Variable i becomes "X<i>". Parse errors carry a
// 1-based line number in the message.
class DimacsParseError : public std::runtime_error {
public:
    DimacsParseError(const std::string& message, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

CnfFormula parse_dimacs(const std::string& text);

// One implication formula per clause, in clause order. For a clause with
// positive literals q1..qn (clause order) and negated literals p1..pm
// (clause order), the formula is
//     p_m -> ( ... p_1 -> ( (q_n -> x) -> ( ... (q_1 -> x) -> x ) ) )
// with x the fresh variable. Throws std::invalid_argument when `fresh` is
// not a legal identifier or collides with a CNF variable.
std::vector<Formula> cnf_to_hilbert(const CnfFormula& cnf, const std::string& fresh = "FALSE_X");

// Satisfiability of the CNF decided through the reduction: true iff some
// assignment with the fresh variable false satisfies every clause formula.
// Same variable limit discipline as entails (the fresh variable counts).
bool reduction_sat(const CnfFormula& cnf, const std::string& fresh = "FALSE_X",
                   std::size_t limit = kDefaultVariableLimit);

}  // namespace hilbert
