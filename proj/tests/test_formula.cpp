#include <doctest.h>

#include <set>
#include <string>

#include "hilbert/formula.hpp"

using namespace hilbert;

namespace {

Formula v(const char* name) { return Formula::var(name); }

}  // namespace

TEST_CASE("variable names are validated at construction") {
    CHECK(is_valid_variable_name("P"));
    CHECK(is_valid_variable_name("Q7"));
    CHECK(is_valid_variable_name("FALSE_X"));
    CHECK(is_valid_variable_name("Y1"));
    CHECK_FALSE(is_valid_variable_name(""));
    CHECK_FALSE(is_valid_variable_name("p"));
    CHECK_FALSE(is_valid_variable_name("1P"));
    CHECK_FALSE(is_valid_variable_name("_P"));
    CHECK_FALSE(is_valid_variable_name("P Q"));
    CHECK_FALSE(is_valid_variable_name("P-Q"));

    CHECK_THROWS_AS(Formula::var("p"), std::invalid_argument);
    CHECK_THROWS_AS(Formula::var(""), std::invalid_argument);
}

TEST_CASE("printing uses one canonical spacing") {
    CHECK(print_formula(v("P")) == "P");
    CHECK(print_formula(Formula::implies(v("P"), v("Q"))) == "Implies(P, Q)");
    CHECK(print_formula(Formula::implies(Formula::implies(v("P"), v("Q")), v("R"))) ==
          "Implies(Implies(P, Q), R)");
}

TEST_CASE("structural equality ignores construction history") {
    Formula a = Formula::implies(v("P"), Formula::implies(v("Q"), v("P")));
    Formula b = Formula::implies(v("P"), Formula::implies(v("Q"), v("P")));
    Formula c = Formula::implies(v("P"), Formula::implies(v("P"), v("Q")));
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(a != c);
    CHECK(v("P") != Formula::implies(v("P"), v("P")));

    Formula copy = a;  // shared node, pointer fast path
    CHECK(copy == a);
}

TEST_CASE("measures are exact") {
    Formula f = Formula::implies(v("P"), Formula::implies(v("Q"), v("R")));
    CHECK(height(v("P")) == 0);
    CHECK(height(f) == 2);
    CHECK(node_count(v("P")) == 1);
    CHECK(node_count(f) == 5);
    CHECK(variables(f) == std::set<std::string>{"P", "Q", "R"});

    FormulaMeasures m = measures(f);
    CHECK(m.height == 2);
    CHECK(m.node_count == 5);
    CHECK(m.variables.size() == 3);
}

TEST_CASE("parser round-trips canonical text") {
    const char* samples[] = {
        "P",
        "Implies(P, Q)",
        "Implies(Implies(P, Q), Implies(Q, Implies(R, S)))",
        "Implies(FALSE_X, Y1)",
    };
    for (const char* s : samples)
        CHECK(print_formula(parse_formula(s)) == s);
}

TEST_CASE("parser accepts loose whitespace") {
    Formula f = parse_formula("  Implies( P ,\tImplies(Q,R) ) ");
    CHECK(print_formula(f) == "Implies(P, Implies(Q, R))");
}

TEST_CASE("parser rejects malformed text with a byte offset") {
    CHECK_THROWS_AS(parse_formula("Implies(P"), FormulaParseError);
    CHECK_THROWS_AS(parse_formula("Implies(P,)"), FormulaParseError);
    CHECK_THROWS_AS(parse_formula("Implies(P, Q) junk"), FormulaParseError);
    CHECK_THROWS_AS(parse_formula("implies(P, Q)"), FormulaParseError);
    CHECK_THROWS_AS(parse_formula("And(P, Q)"), FormulaParseError);
    CHECK_THROWS_AS(parse_formula("p"), FormulaParseError);
    CHECK_THROWS_AS(parse_formula(""), FormulaParseError);
    CHECK_THROWS_AS(parse_formula("(P)"), FormulaParseError);

    try {
        parse_formula("Implies(P, q)");
        FAIL("expected FormulaParseError");
    } catch (const FormulaParseError& e) {
        CHECK(e.offset() == 11);
        CHECK(std::string(e.what()).find("at byte 11") != std::string::npos);
    }
}

TEST_CASE("substitution is simultaneous") {
    Substitution swap;
    swap.set("P", v("Q"));
    swap.set("Q", v("P"));
    CHECK(print_formula(swap.apply(Formula::implies(v("P"), v("Q")))) == "Implies(Q, P)");

    // No cascading: P -> Q must not then turn into the image of Q.
    Substitution chain;
    chain.set("P", v("Q"));
    chain.set("Q", Formula::implies(v("R"), v("R")));
    CHECK(print_formula(chain.apply(v("P"))) == "Q");
}

TEST_CASE("substitution leaves unmapped variables alone") {
    Substitution s;
    s.set("P", Formula::implies(v("A"), v("B")));
    Formula f = Formula::implies(v("P"), v("Z"));
    CHECK(print_formula(s.apply(f)) == "Implies(Implies(A, B), Z)");
}

TEST_CASE("compose_after matches function composition") {
    Substitution outer;
    outer.set("Q", v("R"));
    Substitution inner;
    inner.set("P", Formula::implies(v("Q"), v("Q")));

    Substitution composed = outer.compose_after(inner);
    Formula probe = Formula::implies(v("P"), v("Q"));
    CHECK(composed.apply(probe) == outer.apply(inner.apply(probe)));
    CHECK(print_formula(composed.apply(probe)) == "Implies(Implies(R, R), R)");
}

TEST_CASE("substitution equality compares mappings") {
    Substitution a;
    a.set("P", v("Q"));
    Substitution b;
    b.set("P", v("Q"));
    Substitution c;
    c.set("P", v("R"));
    CHECK(a == b);
    CHECK_FALSE(a == c);
}
