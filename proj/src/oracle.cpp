#include "hilbert/oracle.hpp"

#include <sstream>

namespace hilbert {

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

bool Assignment::value(const std::string& var) const {
    auto it = values_.find(var);
    if (it == values_.end())
        throw std::out_of_range("Assignment: variable '" + var + "' is unassigned");
    return it->second;
}

bool evaluate(const Formula& f, const Assignment& assignment) {
    if (f.is_var())
        return assignment.value(f.var_name());
    // Evaluate both sides; the consequent may mention unassigned variables
    // even when the antecedent is false, and that must still be an error.
    bool a = evaluate(f.antecedent(), assignment);
    bool b = evaluate(f.consequent(), assignment);
    return !a || b;
}

VariableLimitExceeded::VariableLimitExceeded(std::size_t count, std::size_t limit)
    : std::runtime_error("entailment check over " + std::to_string(count) +
                         " variables exceeds the limit of " + std::to_string(limit)),
      count_(count), limit_(limit) {}

// ---------------------------------------------------------------------------
// Entailment
// ---------------------------------------------------------------------------

bool entails(const std::vector<Formula>& assumptions, const Formula& goal, std::size_t limit) {
    std::set<std::string> vars = variables(goal);
    for (const Formula& a : assumptions) {
        std::set<std::string> more = variables(a);
        vars.insert(more.begin(), more.end());
    }
    if (vars.size() > limit)
        throw VariableLimitExceeded(vars.size(), limit);

    std::vector<std::string> order(vars.begin(), vars.end());
    const std::size_t n = order.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Assignment pi;
        for (std::size_t i = 0; i < n; ++i)
            pi.set(order[i], (bits >> i) & 1);
        bool premises_hold = true;
        for (const Formula& a : assumptions) {
            if (!evaluate(a, pi)) {
                premises_hold = false;
                break;
            }
        }
        if (premises_hold && !evaluate(goal, pi))
            return false;
    }
    return true;
}

Assignment satisfy(const Formula& f) {
    // Walk down the consequent spine; setting its final variable true makes
    // every implication along the way true, whatever the antecedents do.
    const Formula* spine = &f;
    while (spine->is_implication())
        spine = &spine->consequent();
    Assignment pi;
    for (const std::string& v : variables(f))
        pi.set(v, false);
    pi.set(spine->var_name(), true);
    return pi;
}

// ---------------------------------------------------------------------------
// CNF handling
// ---------------------------------------------------------------------------

std::set<std::string> cnf_variables(const CnfFormula& cnf) {
    std::set<std::string> vars;
    for (const Clause& clause : cnf.clauses)
        for (const Literal& lit : clause)
            vars.insert(lit.var);
    return vars;
}

DimacsParseError::DimacsParseError(const std::string& message, std::size_t line)
    : std::runtime_error("DIMACS line " + std::to_string(line) + ": " + message), line_(line) {}

CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula cnf;
    Clause current;
    bool saw_header = false;
    long long declared_vars = 0;
    long long declared_clauses = 0;

    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream fields(line);
        if (line[0] == 'p') {
            std::string p, kind;
            if (!(fields >> p >> kind >> declared_vars >> declared_clauses) || kind != "cnf")
                throw DimacsParseError("malformed problem line", line_no);
            if (declared_vars < 0 || declared_clauses < 0)
                throw DimacsParseError("negative counts in problem line", line_no);
            saw_header = true;
            continue;
        }
        if (!saw_header)
            throw DimacsParseError("clause before 'p cnf' header", line_no);
        long long lit;
        while (fields >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(current);
                current.clear();
                continue;
            }
            long long v = lit < 0 ? -lit : lit;
            if (v > declared_vars)
                throw DimacsParseError("literal " + std::to_string(lit) +
                                           " outside declared variable range",
                                       line_no);
            current.push_back(Literal{"X" + std::to_string(v), lit > 0});
        }
        if (!fields.eof())
            throw DimacsParseError("unexpected token", line_no);
    }
    if (!saw_header)
        throw DimacsParseError("missing 'p cnf' header", line_no == 0 ? 1 : line_no);
    if (!current.empty())
        throw DimacsParseError("last clause not terminated by 0", line_no);
    if (static_cast<long long>(cnf.clauses.size()) != declared_clauses)
        throw DimacsParseError("clause count disagrees with header", line_no);
    return cnf;
}

std::vector<Formula> cnf_to_hilbert(const CnfFormula& cnf, const std::string& fresh) {
    if (!is_valid_variable_name(fresh))
        throw std::invalid_argument("cnf_to_hilbert: '" + fresh +
                                    "' is not a legal variable name");
    if (cnf_variables(cnf).count(fresh))
        throw std::invalid_argument("cnf_to_hilbert: fresh variable '" + fresh +
                                    "' already occurs in the CNF");

    const Formula x = Formula::var(fresh);
    std::vector<Formula> out;
    out.reserve(cnf.clauses.size());
    for (const Clause& clause : cnf.clauses) {
        // (q_i -> x) -> ... peels one positive literal per layer, innermost
        // first, so the clause is violated only when every q_i is false ...
        Formula g = x;
        for (const Literal& lit : clause) {
            if (lit.positive)
                g = Formula::implies(Formula::implies(Formula::var(lit.var), x), g);
        }
        // ... and p_i -> ... peels the negated literals, so the whole formula
        // is only forced down to g when every p_i is true.
        for (const Literal& lit : clause) {
            if (!lit.positive)
                g = Formula::implies(Formula::var(lit.var), g);
        }
        out.push_back(g);
    }
    return out;
}

bool reduction_sat(const CnfFormula& cnf, const std::string& fresh, std::size_t limit) {
    std::vector<Formula> formulas = cnf_to_hilbert(cnf, fresh);
    std::set<std::string> vars = cnf_variables(cnf);
    if (vars.size() + 1 > limit)
        throw VariableLimitExceeded(vars.size() + 1, limit);

    std::vector<std::string> order(vars.begin(), vars.end());
    const std::size_t n = order.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Assignment pi;
        pi.set(fresh, false);
        for (std::size_t i = 0; i < n; ++i)
            pi.set(order[i], (bits >> i) & 1);
        bool all_true = true;
        for (const Formula& f : formulas) {
            if (!evaluate(f, pi)) {
                all_true = false;
                break;
            }
        }
        if (all_true)
            return true;
    }
    return false;
}

}  // namespace hilbert
