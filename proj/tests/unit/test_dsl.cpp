// Parser and printer for the declaration + equation language.
#include <doctest.h>

#include "symq/dsl.hpp"
#include "symq/polarize.hpp"
#include "symq/prng.hpp"

using namespace symq;

TEST_CASE("parsing declarations and equations") {
    Script s = parse("biadditive B; eq mult: B(x*y, x*y) = B(x,x)*B(y,y);");
    CHECK(s.items.size() == 2);
    CHECK(s.symbols().size() == 1);
    const Equation* eq = s.find_equation("mult");
    REQUIRE(eq != nullptr);

    FuncSymbol B = FuncSymbol::bi_additive("B");
    Expr lhs = expand(rapply(B, {rprod({rvar("x"), rvar("y")}), rprod({rvar("x"), rvar("y")})}));
    Expr rhs = expand(rprod({rapply(B, {rvar("x"), rvar("x")}), rapply(B, {rvar("y"), rvar("y")})}));
    CHECK(eq->lhs == lhs);
    CHECK(eq->rhs == rhs);
}

TEST_CASE("parsing facts") {
    Script s = parse("additive a; fact: a(1) = 0;");
    FactSet facts = s.fact_set();
    REQUIRE(facts.facts().size() == 1);
    CHECK(facts.facts()[0].sym.name == "a");
    CHECK(facts.facts()[0].pattern.size() == 1);
    CHECK(facts.facts()[0].pattern[0].is_one);
    CHECK(facts.facts()[0].rhs.is_zero());

    Script named = parse("biadditive B; additive a; fact b11: B(1,1) = 1; fact bx1: B(u, 1) = a(u);");
    std::vector<std::string> only_bx1{"bx1"};
    CHECK(named.fact_set(&only_bx1).facts().size() == 1);
    CHECK(named.fact_set().facts().size() == 2);
}

TEST_CASE("parse errors carry positions and names") {
    // undeclared symbol in an equation
    try {
        parse("eq bad: q(x) = 1;");
        FAIL("expected parse error");
    } catch (const parse_error& err) {
        CHECK(std::string(err.what()).find("q") != std::string::npos);
        CHECK(err.line == 1);
        CHECK(err.column > 1);
    }

    CHECK_THROWS_AS(parse("biadditive B; biadditive B;"), parse_error);   // duplicate declaration
    CHECK_THROWS_AS(parse("eq e: x = ;"), parse_error);                   // syntax error
    CHECK_THROWS_AS(parse("degree nope 4;"), parse_error);                // unknown equation
    CHECK_THROWS_AS(parse("additive a; fact: a(x) = a(x) + 1;"), parse_error);  // non-reducing fact
    CHECK_THROWS_AS(parse("additive a; eq e: a(x) = 0; specialize e at (x) with missing;"), parse_error);

    // multi-line input: error position is on the second line
    try {
        parse("additive a;\neq two: a(x) = Q(x);");
        FAIL("expected parse error");
    } catch (const parse_error& err) {
        CHECK(err.line == 2);
    }
}

TEST_CASE("operator precedence and literals") {
    Script s = parse("additive a; eq e: -a(x)*x + 2*x^2 = 1/3*x*x;");
    const Equation* eq = s.find_equation("e");
    REQUIRE(eq != nullptr);
    FuncSymbol a = FuncSymbol::additive("a");
    Expr lhs = -(Expr::atom(App(a, {Monomial{{"x", 1}}})) * Expr::variable("x")) +
               Expr::variable("x").pow(2).scaled(2);
    CHECK(eq->lhs == lhs);
    CHECK(eq->rhs == Expr::variable("x").pow(2).scaled(Rational(1, 3)));

    // unary minus binds looser than *: -x*y is -(x*y); ^ binds tighter than *
    Script s2 = parse("eq m: -x*y = x*y^2;");
    CHECK(s2.find_equation("m")->lhs == -(Expr::variable("x") * Expr::variable("y")));
    CHECK(s2.find_equation("m")->rhs == Expr::variable("x") * Expr::variable("y").pow(2));
}

TEST_CASE("print/parse round trip on the worked scripts") {
    const char* sources[] = {
        "biadditive B; eq mult: B(x*y, x*y) = B(x,x)*B(y,y); degree mult 4;",
        "additive a; fact: a(1) = 0;",
        "biadditive B; additive a; scalar c;\n"
        "eq add: B(x*y, x*y) = B(x,x)*y^2 + x^2*B(y,y);\n"
        "degree add 4;\n"
        "fact b11: B(1, 1) = 0;\n"
        "fact bx1: B(u, 1) = a(u);\n"
        "specialize add at (x, y, 1, 1) with b11, bx1;",
        "hom p1; hom p2; additive a;\n"
        "eq m1: a(x*y) = p1(x)*a(y) + 1/3*p2(y)*a(x);",
        "multiadditive A arity 3; eq tr: A(x, x, x) = 0; degree tr 3;",
        "power pi2 2; additive d; eq ex: d(pi2(x)) = 2*x*d(x);",
        // a rank-2 moment family: one additive symbol per index up to (1,1)
        "additive a1_0; additive a0_1; additive a1_1; hom m;\n"
        "eq f1_1: a1_0(x)*a0_1(x)*m(x) + a1_1(x)*m(x) = 0;",
    };
    for (const char* src : sources) {
        Script s = parse(src);
        std::string rendered = print(s);
        Script again = parse(rendered);
        CHECK(again == s);
        CHECK(print(again) == rendered);
    }
}

TEST_CASE("round trip on generated scripts") {
    SplitMix64 rng(314);
    for (int round = 0; round < 30; ++round) {
        // declarations: B (biadditive), a (additive), h (hom), c (scalar)
        std::string src = "biadditive B; additive a; hom h; scalar c;\n";
        auto gen_expr = [&](auto&& self, int depth) -> std::string {
            if (depth == 0) {
                switch (rng.below(4)) {
                    case 0: return "x";
                    case 1: return "y";
                    case 2: return std::to_string(rng.range(1, 9));
                    default: return std::to_string(rng.range(1, 9)) + "/" + std::to_string(rng.range(2, 9));
                }
            }
            switch (rng.below(6)) {
                case 0: return "(" + self(self, depth - 1) + " + " + self(self, depth - 1) + ")";
                case 1: return "(" + self(self, depth - 1) + " - " + self(self, depth - 1) + ")";
                case 2: return self(self, depth - 1) + "*" + self(self, depth - 1);
                case 3: return "a(" + self(self, depth - 1) + ")";
                case 4: return "B(x*y, " + self(self, depth - 1) + ")";
                default: return "h(x*y)*c";
            }
        };
        int n_eqs = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < n_eqs; ++i)
            src += "eq e" + std::to_string(i) + ": " + gen_expr(gen_expr, 2) + " = " +
                   gen_expr(gen_expr, 2) + ";\n";
        src += "fact f0: a(1) = 0;\n";

        Script s;
        try {
            s = parse(src);
        } catch (const parse_error&) {
            continue;  // generator may produce applications over applications; skip those
        }
        Script again = parse(print(s));
        CHECK(again == s);
        CHECK(print(again) == print(s));
    }
}

TEST_CASE("parsed equations drive the symmetrizer") {
    Script s = parse("biadditive B; eq e: x*B(x, x) = 0; degree e 3;");
    const Equation* eq = s.find_equation("e");
    REQUIRE(eq != nullptr);
    REQUIRE(s.degree_of("e").has_value());
    Expr sym3 = symmetrize(eq->lhs - eq->rhs, *s.degree_of("e"), "x");
    FuncSymbol B = FuncSymbol::bi_additive("B");
    Expr expected = (Expr::variable("x1") * Expr::atom(App(B, {Monomial{{"x2", 1}}, Monomial{{"x3", 1}}})) +
                     Expr::variable("x2") * Expr::atom(App(B, {Monomial{{"x1", 1}}, Monomial{{"x3", 1}}})) +
                     Expr::variable("x3") * Expr::atom(App(B, {Monomial{{"x1", 1}}, Monomial{{"x2", 1}}})))
                        .scaled(Rational(1, 3));
    CHECK(sym3 == expected);
}
