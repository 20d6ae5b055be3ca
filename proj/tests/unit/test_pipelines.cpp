// Golden reproductions of the derived constraint sets, and the soundness
// bridge from symbolic identities to the concrete model fields.
#include <doctest.h>

#include "symq/checks.hpp"
#include "symq/evalbind.hpp"
#include "symq/pipelines.hpp"
#include "symq/prng.hpp"

using namespace symq;

namespace {

Expr a_of(std::initializer_list<const char*> m) {
    Monomial mono;
    for (const char* s : m) mono[s] += 1;
    return Expr::atom(App(sym::a, {mono}));
}
Expr b_of(std::initializer_list<const char*> m1, std::initializer_list<const char*> m2) {
    Monomial a1, a2;
    for (const char* s : m1) a1[s] += 1;
    for (const char* s : m2) a2[s] += 1;
    return Expr::atom(App(sym::B, {a1, a2}));
}
Expr hom_of(const FuncSymbol& phi, const char* v) {
    return Expr::atom(App(phi, {Monomial{{v, 1}}}));
}
Expr var(const char* v) { return Expr::variable(v); }

}  // namespace

TEST_CASE("multiplicative pipeline: specializations of B4") {
    MultPipeline p = derive_mult_pipeline();
    Expr b11 = b_of({}, {});
    Expr bx1 = b_of({"x"}, {});
    Expr bxx = b_of({"x"}, {"x"});

    // 3 B4(1,1,1,1) = -3 (B(1,1) - 1) B(1,1)
    CHECK(p.at_1111.scaled(3) == b11.scaled(3) - (b11 * b11).scaled(3));
    // 3 B4(x,1,1,1) = -3 (B(1,1) - 1) B(x,1)
    CHECK(p.at_x111.scaled(3) == bx1.scaled(3) - (bx1 * b11).scaled(3));
    // under B(1,1)=1, B(u,1)=a(u):  3 B4(x,x,1,1) = B(x,x) + a(x^2) - 2a(x)^2
    Expr ax = a_of({"x"});
    CHECK(p.at_xx11.scaled(3) == bxx + a_of({"x", "x"}) - (ax * ax).scaled(2));
}

TEST_CASE("multiplicative pipeline: quartic, A4 and the three-variable identity") {
    MultPipeline p = derive_mult_pipeline();

    // the additive-function quartic -a(x^4) + a(x^2)^2 + 4a(x)^2 a(x^2) - 4a(x)^4
    Expr ax = a_of({"x"});
    Expr ax2 = a_of({"x", "x"});
    Expr quartic = -a_of({"x", "x", "x", "x"}) + ax2 * ax2 + (ax * ax * ax2).scaled(4) - ax.pow(4).scaled(4);
    CHECK(p.quartic == quartic);

    // the displayed A4 with its 1/3 and 2/3 coefficients
    Expr pair_part = a_of({"x1", "x2"}) * a_of({"x3", "x4"}) + a_of({"x1", "x3"}) * a_of({"x2", "x4"}) +
                     a_of({"x2", "x3"}) * a_of({"x1", "x4"});
    Expr single_part = a_of({"x1"}) * a_of({"x2"}) * a_of({"x3", "x4"}) +
                       a_of({"x1"}) * a_of({"x3"}) * a_of({"x2", "x4"}) +
                       a_of({"x2"}) * a_of({"x3"}) * a_of({"x1", "x4"}) +
                       a_of({"x1"}) * a_of({"x2", "x3"}) * a_of({"x4"}) +
                       a_of({"x2"}) * a_of({"x1", "x3"}) * a_of({"x4"}) +
                       a_of({"x1", "x2"}) * a_of({"x3"}) * a_of({"x4"});
    Expr quad_part = a_of({"x1"}) * a_of({"x2"}) * a_of({"x3"}) * a_of({"x4"});
    Expr a4 = -a_of({"x1", "x2", "x3", "x4"}) + pair_part.scaled(Rational(1, 3)) +
              single_part.scaled(Rational(2, 3)) - quad_part.scaled(4);
    CHECK(p.a4 == a4);
    CHECK(diagonal(p.a4, slot_names(4), "x") == p.quartic);

    // specializing at (x, y, z, 1) with a(1)=1 gives the product identity
    Expr three = -a_of({"x", "y", "z"}) + a_of({"x"}) * a_of({"y", "z"}) + a_of({"y"}) * a_of({"x", "z"}) +
                 a_of({"x", "y"}) * a_of({"z"}) - (a_of({"x"}) * a_of({"y"}) * a_of({"z"})).scaled(2);
    CHECK(p.three_var == three);
}

TEST_CASE("pi2-additive pipeline") {
    AddPipeline p = derive_add_pipeline();

    CHECK(p.at_1111 == -b_of({}, {}));

    // 3 B4(x,y,1,1) = B(x,y) + a(xy) - 2x a(y) - 2y a(x); equated to zero this
    // is the symmetric corrected form B(x,y) = 2x a(y) + 2y a(x) - a(xy)
    Expr expected = b_of({"x"}, {"y"}) + a_of({"x", "y"}) - (var("x") * a_of({"y"})).scaled(2) -
                    (var("y") * a_of({"x"})).scaled(2);
    CHECK(p.at_xy11.scaled(3) == expected);

    // back-substitution yields a(x^4) - 6x^2 a(x^2) + 8x^3 a(x)
    Expr quartic = a_of({"x", "x", "x", "x"}) - (var("x").pow(2) * a_of({"x", "x"})).scaled(6) +
                   (var("x").pow(3) * a_of({"x"})).scaled(8);
    CHECK(p.quartic == quartic);
}

TEST_CASE("moment pipeline: q-form, quartic and the spadesuit identity") {
    MomentPipeline p = derive_moment_pipeline();

    // unit specialization forces q(1) = B(1,1) = 0
    CHECK(p.b4_at_1111 == -Expr::atom(App(sym::B, {Monomial{}, Monomial{}})));

    // q(x) = B(x,x) satisfies B(x,x) + a(x^2) - 2(phi1(x)+phi2(x)) a(x) = 0
    Expr p1x = hom_of(sym::phi1, "x"), p2x = hom_of(sym::phi2, "x");
    Expr q_form = b_of({"x"}, {"x"}) + a_of({"x", "x"}) - ((p1x + p2x) * a_of({"x"})).scaled(2);
    CHECK(p.q_form == q_form);

    // a(x^4) - 2(phi1^2 + phi1 phi2 + phi2^2) a(x^2) + 4 phi1 phi2 (phi1+phi2) a(x)
    Expr quartic = a_of({"x", "x", "x", "x"}) -
                   ((p1x * p1x + p1x * p2x + p2x * p2x) * a_of({"x", "x"})).scaled(2) +
                   (p1x * p2x * (p1x + p2x) * a_of({"x"})).scaled(4);
    CHECK(p.quartic == quartic);
    CHECK(diagonal(p.a4, slot_names(4), "x") == p.quartic);

    // the all-ones specialization forces a(1) = 0
    CHECK(p.at_1111 == Expr::atom(App(sym::a, {Monomial{}})).scaled(3));

    // the spadesuit identity, term for term
    Expr p1y = hom_of(sym::phi1, "y"), p2y = hom_of(sym::phi2, "y");
    Expr p1z = hom_of(sym::phi1, "z"), p2z = hom_of(sym::phi2, "z");
    Expr spade = a_of({"x", "y", "z"}).scaled(2) - (p1x + p2x) * a_of({"y", "z"}) -
                 (p1y + p2y) * a_of({"x", "z"}) - (p1z + p2z) * a_of({"x", "y"}) +
                 (p1x * p2y + p2x * p1y) * a_of({"z"}) + (p1x * p2z + p2x * p1z) * a_of({"y"}) +
                 (p1y * p2z + p2y * p1z) * a_of({"x"});
    CHECK(p.spadesuit == spade);
}

TEST_CASE("derive_quartic_constraints bundles every named identity") {
    std::vector<NamedExpr> all = derive_quartic_constraints();
    CHECK(all.size() == 18);
    bool found_spade = false;
    for (const auto& [name, expr] : all) {
        CHECK_FALSE(name.empty());
        if (name == "moment.spadesuit") {
            found_spade = true;
            CHECK(expr == derive_moment_pipeline().spadesuit);
        }
    }
    CHECK(found_spade);
}

TEST_CASE("model soundness bridge: derived identities vanish on the models") {
    const FieldMap d = FieldMap::formal_derivative();
    const FieldMap dd = FieldMap::composition({d, d});
    const FieldMap id = FieldMap::identity();
    const FieldMap subst = FieldMap::substitution(Poly::t() * Poly::t());
    RatFuncSampler gen(2024);

    auto fn = [](const FieldMap& m) {
        return [m](const RatFunc& x) { return m(x); };
    };

    AddPipeline add = derive_add_pipeline();
    for (const FieldMap& D : {d, dd}) {
        SymBinding<RatFunc> bind;
        bind.unary["a"] = fn(D);
        for (int i = 0; i < 4; ++i) {
            std::map<std::string, RatFunc> vars{{"x", gen()}};
            CHECK(eval_expr(add.quartic, bind, vars).is_zero());
        }
        // the derived bi-additive form makes the whole B4 vanish
        SymBinding<RatFunc> bform = bind;
        bform.binary["B"] = [&D](const RatFunc& u, const RatFunc& v) {
            return RatFunc(2) * u * D(v) + RatFunc(2) * v * D(u) - D(u * v);
        };
        for (int i = 0; i < 2; ++i) {
            std::map<std::string, RatFunc> vars{
                {"x1", gen()}, {"x2", gen()}, {"x3", gen()}, {"x4", gen()}};
            CHECK(eval_expr(add.b4, bform, vars).is_zero());
        }
    }

    MultPipeline mult = derive_mult_pipeline();
    {
        // three-variable identity under a homomorphism
        SymBinding<RatFunc> bind;
        bind.unary["a"] = fn(subst);
        for (int i = 0; i < 4; ++i) {
            std::map<std::string, RatFunc> vars{{"x", gen()}, {"y", gen()}, {"z", gen()}};
            CHECK(eval_expr(mult.three_var, bind, vars).is_zero());
        }
        // quartic under the averaged homomorphism pair
        SymBinding<RatFunc> avg;
        FieldMap half_sum = FieldMap::linear_combo({{RatFunc(Rational(1, 2)), id},
                                                    {RatFunc(Rational(1, 2)), subst}});
        avg.unary["a"] = fn(half_sum);
        for (int i = 0; i < 4; ++i) {
            std::map<std::string, RatFunc> vars{{"x", gen()}};
            CHECK(eval_expr(mult.quartic, avg, vars).is_zero());
        }
    }

    MomentPipeline moment = derive_moment_pipeline();
    {
        // spadesuit with phi1 = phi2 = id and a in D2
        for (const FieldMap& A : {d, dd}) {
            SymBinding<RatFunc> bind;
            bind.unary["a"] = fn(A);
            bind.unary["phi1"] = fn(id);
            bind.unary["phi2"] = fn(id);
            for (int i = 0; i < 3; ++i) {
                std::map<std::string, RatFunc> vars{
                    {"x", gen.nonzero()}, {"y", gen.nonzero()}, {"z", gen.nonzero()}};
                CHECK(eval_expr(moment.spadesuit, bind, vars).is_zero());
            }
        }
        // spadesuit with phi1 = phi2 = phi and a = phi o d
        SymBinding<RatFunc> twisted;
        twisted.unary["a"] = fn(FieldMap::composition({subst, d}));
        twisted.unary["phi1"] = fn(subst);
        twisted.unary["phi2"] = fn(subst);
        for (int i = 0; i < 3; ++i) {
            std::map<std::string, RatFunc> vars{
                {"x", gen.nonzero()}, {"y", gen.nonzero()}, {"z", gen.nonzero()}};
            CHECK(eval_expr(moment.spadesuit, twisted, vars).is_zero());
        }
    }
}
