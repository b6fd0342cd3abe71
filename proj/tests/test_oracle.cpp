#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/formula.hpp"
#include "hilbert/generator.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/rng.hpp"

using namespace hilbert;

namespace {

Formula f(const char* text) { return parse_formula(text); }

Assignment assign(std::initializer_list<std::pair<const char*, bool>> pairs) {
    Assignment pi;
    for (const auto& [name, value] : pairs)
        pi.set(name, value);
    return pi;
}

// Clause satisfaction straight off the definition, used to cross-check the
// implication-fragment reduction.
bool cnf_brute_force_sat(const CnfFormula& cnf) {
    std::set<std::string> vars = cnf_variables(cnf);
    std::vector<std::string> order(vars.begin(), vars.end());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << order.size()); ++bits) {
        Assignment pi;
        for (std::size_t i = 0; i < order.size(); ++i)
            pi.set(order[i], (bits >> i) & 1);
        bool all = true;
        for (const Clause& clause : cnf.clauses) {
            bool sat = false;
            for (const Literal& lit : clause)
                if (pi.value(lit.var) == lit.positive) {
                    sat = true;
                    break;
                }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("evaluate implements material implication") {
    Formula pq = f("Implies(P, Q)");
    CHECK(evaluate(pq, assign({{"P", false}, {"Q", false}})));
    CHECK(evaluate(pq, assign({{"P", false}, {"Q", true}})));
    CHECK_FALSE(evaluate(pq, assign({{"P", true}, {"Q", false}})));
    CHECK(evaluate(pq, assign({{"P", true}, {"Q", true}})));
    CHECK(evaluate(f("P"), assign({{"P", true}})));
    CHECK_FALSE(evaluate(f("P"), assign({{"P", false}})));
}

TEST_CASE("evaluate never short-circuits past an unassigned variable") {
    // P false would make the implication true regardless of Q, but an
    // unassigned Q must still be an error.
    CHECK_THROWS_AS(evaluate(f("Implies(P, Q)"), assign({{"P", false}})),
                    std::out_of_range);
    CHECK_THROWS_AS(evaluate(f("Implies(Implies(P, Q), P)"), assign({{"P", true}})),
                    std::out_of_range);
    CHECK_THROWS_AS(evaluate(f("P"), Assignment{}), std::out_of_range);
}

TEST_CASE("assignment lookups") {
    Assignment pi = assign({{"P", true}});
    CHECK(pi.contains("P"));
    CHECK_FALSE(pi.contains("Q"));
    CHECK(pi.value("P"));
    CHECK_THROWS_AS(pi.value("Q"), std::out_of_range);
}

TEST_CASE("entails decides semantic consequence") {
    CHECK(entails({f("Implies(P, Q)"), f("Implies(Q, R)")}, f("Implies(P, R)")));
    CHECK(entails({f("P"), f("Implies(P, Q)")}, f("Q")));
    CHECK(entails({f("P"), f("Implies(P, Q)"), f("Implies(Q, R)")}, f("R")));

    // Tautologies need no assumptions.
    CHECK(entails({}, f("Implies(P, P)")));
    CHECK(entails({}, f("Implies(A, Implies(B, A))")));
    CHECK(entails({}, f("Implies(Implies(A, Implies(B, C)), Implies(Implies(A, B), Implies(A, C)))")));

    CHECK_FALSE(entails({}, f("P")));
    CHECK_FALSE(entails({f("P")}, f("Q")));
    CHECK_FALSE(entails({f("Implies(P, Q)")}, f("Implies(Q, P)")));
    // Affirming the consequent.
    CHECK_FALSE(entails({f("Q"), f("Implies(P, Q)")}, f("P")));
}

TEST_CASE("entails enforces the variable limit") {
    std::vector<Formula> assumptions;
    Formula goal = f("V0");
    for (int i = 1; i <= 20; ++i)
        goal = Formula::implies(Formula::var("V" + std::to_string(i)), goal);
    // 21 distinct variables against the default limit of 20.
    REQUIRE(variables(goal).size() == 21);
    try {
        entails(assumptions, goal);
        FAIL("expected VariableLimitExceeded");
    } catch (const VariableLimitExceeded& e) {
        CHECK(e.count() == 21);
        CHECK(e.limit() == kDefaultVariableLimit);
    }

    CHECK_THROWS_AS(entails({}, f("Implies(P, Q)"), 1), VariableLimitExceeded);
    CHECK(entails({}, f("Implies(P, Q)"), 2) == false);
    CHECK(entails({}, f("Implies(P, P)"), 1));
}

TEST_CASE("satisfy sets the consequent-spine variable true and the rest false") {
    Assignment pi = satisfy(f("Implies(Implies(P, Q), R)"));
    CHECK(pi.values() == std::map<std::string, bool>{{"P", false}, {"Q", false}, {"R", true}});

    Assignment leaf = satisfy(f("P"));
    CHECK(leaf.values() == std::map<std::string, bool>{{"P", true}});

    // The spine can end in a variable that also occurs elsewhere.
    Assignment shared = satisfy(f("Implies(P, Implies(Q, P))"));
    CHECK(shared.values() == std::map<std::string, bool>{{"P", true}, {"Q", false}});
    CHECK(evaluate(f("Implies(P, Implies(Q, P))"), shared));
}

TEST_CASE("satisfy is a witness for every implication formula") {
    RandomStream rng(0xface5eedULL);
    const std::vector<std::string> pool = {"P", "Q", "R", "S", "T"};
    for (int i = 0; i < 500; ++i) {
        Formula g = random_formula(pool, 6, rng);
        Assignment pi = satisfy(g);
        CHECK(evaluate(g, pi));
        // Total exactly over the formula's variables.
        CHECK(pi.values().size() == variables(g).size());
    }
}

TEST_CASE("parse_dimacs reads headers, clauses and comments") {
    CnfFormula cnf = parse_dimacs("c a comment\np cnf 3 2\n1 -2 0\nc mid comment\n2 3 0\n");
    REQUIRE(cnf.clauses.size() == 2);
    REQUIRE(cnf.clauses[0].size() == 2);
    CHECK(cnf.clauses[0][0].var == "X1");
    CHECK(cnf.clauses[0][0].positive);
    CHECK(cnf.clauses[0][1].var == "X2");
    CHECK_FALSE(cnf.clauses[0][1].positive);
    CHECK(cnf.clauses[1][0].var == "X2");
    CHECK(cnf.clauses[1][1].var == "X3");
    CHECK(cnf_variables(cnf) == std::set<std::string>{"X1", "X2", "X3"});
}

TEST_CASE("parse_dimacs allows clauses split and joined across lines") {
    CnfFormula split = parse_dimacs("p cnf 2 1\n1\n-2 0\n");
    REQUIRE(split.clauses.size() == 1);
    CHECK(split.clauses[0].size() == 2);

    CnfFormula joined = parse_dimacs("p cnf 2 2\n1 0 -2 0\n");
    REQUIRE(joined.clauses.size() == 2);
    CHECK(joined.clauses[0].size() == 1);
    CHECK(joined.clauses[1].size() == 1);

    CnfFormula empty_clause = parse_dimacs("p cnf 1 1\n0\n");
    REQUIRE(empty_clause.clauses.size() == 1);
    CHECK(empty_clause.clauses[0].empty());
}

TEST_CASE("parse_dimacs reports 1-based line numbers") {
    try {
        parse_dimacs("c ok\np cnf 2 1\n1 5 0\n");
        FAIL("expected DimacsParseError");
    } catch (const DimacsParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_dimacs(""), DimacsParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf x y\n"), DimacsParseError);
    CHECK_THROWS_AS(parse_dimacs("1 0\np cnf 1 1\n"), DimacsParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1 junk 0\n"), DimacsParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1\n"), DimacsParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 2\n1 0\n"), DimacsParseError);

    try {
        parse_dimacs("1 0\n");
        FAIL("expected DimacsParseError");
    } catch (const DimacsParseError& e) {
        CHECK(e.line() == 1);
    }
}

TEST_CASE("cnf_to_hilbert builds the clause formulas") {
    SUBCASE("mixed clause from DIMACS") {
        CnfFormula cnf = parse_dimacs("p cnf 2 1\n1 -2 0\n");
        std::vector<Formula> out = cnf_to_hilbert(cnf);
        REQUIRE(out.size() == 1);
        CHECK(print_formula(out[0]) ==
              "Implies(X2, Implies(Implies(X1, FALSE_X), FALSE_X))");
    }
    SUBCASE("two positive literals nest first-literal innermost") {
        CnfFormula cnf{{Clause{Literal{"Q0", true}, Literal{"Q1", true}}}};
        std::vector<Formula> out = cnf_to_hilbert(cnf);
        REQUIRE(out.size() == 1);
        CHECK(print_formula(out[0]) ==
              "Implies(Implies(Q1, FALSE_X), Implies(Implies(Q0, FALSE_X), FALSE_X))");
    }
    SUBCASE("negated literals wrap outside, first-literal innermost") {
        CnfFormula cnf{{Clause{Literal{"P1", false}, Literal{"P2", false}, Literal{"Q", true}}}};
        std::vector<Formula> out = cnf_to_hilbert(cnf);
        REQUIRE(out.size() == 1);
        CHECK(print_formula(out[0]) ==
              "Implies(P2, Implies(P1, Implies(Implies(Q, FALSE_X), FALSE_X)))");
    }
    SUBCASE("empty clause collapses to the fresh variable") {
        CnfFormula cnf{{Clause{}}};
        std::vector<Formula> out = cnf_to_hilbert(cnf);
        REQUIRE(out.size() == 1);
        CHECK(out[0] == Formula::var("FALSE_X"));
    }
    SUBCASE("clause order is preserved") {
        CnfFormula cnf{{Clause{Literal{"A", true}}, Clause{Literal{"B", false}}}};
        std::vector<Formula> out = cnf_to_hilbert(cnf, "Z");
        REQUIRE(out.size() == 2);
        CHECK(print_formula(out[0]) == "Implies(Implies(A, Z), Z)");
        CHECK(print_formula(out[1]) == "Implies(B, Z)");
    }
}

TEST_CASE("cnf_to_hilbert validates the fresh variable") {
    CnfFormula cnf{{Clause{Literal{"X1", true}}}};
    CHECK_THROWS_AS(cnf_to_hilbert(cnf, "x1"), std::invalid_argument);
    CHECK_THROWS_AS(cnf_to_hilbert(cnf, ""), std::invalid_argument);
    CHECK_THROWS_AS(cnf_to_hilbert(cnf, "X1"), std::invalid_argument);
    CHECK_NOTHROW(cnf_to_hilbert(cnf, "X2"));
}

TEST_CASE("reduction_sat agrees with clause semantics on known formulas") {
    CHECK(reduction_sat(parse_dimacs("p cnf 2 2\n1 2 0\n-1 0\n")));
    CHECK(reduction_sat(parse_dimacs("p cnf 1 1\n1 0\n")));
    CHECK_FALSE(reduction_sat(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")));
    CHECK_FALSE(reduction_sat(parse_dimacs("p cnf 2 3\n1 2 0\n-1 0\n-2 0\n")));
    // Empty CNF is vacuously satisfiable; an empty clause never is.
    CHECK(reduction_sat(CnfFormula{}));
    CHECK_FALSE(reduction_sat(CnfFormula{{Clause{}}}));
    // Classic pigeonhole-style core: (a or b) (not a or not b) (a) (b).
    CHECK_FALSE(reduction_sat(parse_dimacs("p cnf 2 4\n1 2 0\n-1 -2 0\n1 0\n2 0\n")));
}

TEST_CASE("reduction_sat matches brute force on random CNFs") {
    RandomStream rng(0x5a7f00dULL);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t nvars = 1 + rng.below(6);
        CnfFormula cnf;
        const std::size_t nclauses = 1 + rng.below(8);
        for (std::size_t c = 0; c < nclauses; ++c) {
            Clause clause;
            const std::size_t nlits = 1 + rng.below(4);
            for (std::size_t l = 0; l < nlits; ++l)
                clause.push_back(Literal{"V" + std::to_string(1 + rng.below(nvars)),
                                         rng.bernoulli(0.5)});
            cnf.clauses.push_back(clause);
        }
        CAPTURE(trial);
        CHECK(reduction_sat(cnf) == cnf_brute_force_sat(cnf));
    }
}

TEST_CASE("reduction_sat counts the fresh variable against the limit") {
    CnfFormula cnf;
    Clause wide;
    for (int i = 1; i <= 20; ++i)
        wide.push_back(Literal{"X" + std::to_string(i), true});
    cnf.clauses.push_back(wide);
    try {
        reduction_sat(cnf);
        FAIL("expected VariableLimitExceeded");
    } catch (const VariableLimitExceeded& e) {
        CHECK(e.count() == 21);
        CHECK(e.limit() == 20);
    }
    CHECK(reduction_sat(cnf, "FALSE_X", 21));
}
