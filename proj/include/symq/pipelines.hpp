// Symmetrize/specialize pipelines: one per hypothesis class, each deriving
// the bi-additive form, the induced additive-function constraints, and the
// resulting multi-variable identities from the one-variable hypothesis.
#pragma once

#include "symq/polarize.hpp"
#include "symq/rewrite.hpp"

namespace symq {

namespace sym {
inline const FuncSymbol B = FuncSymbol::bi_additive("B");
inline const FuncSymbol a = FuncSymbol::additive("a");
inline const FuncSymbol phi1 = FuncSymbol::homomorphism("phi1");
inline const FuncSymbol phi2 = FuncSymbol::homomorphism("phi2");
}  // namespace sym

// Multiplicative case, q(xy) = q(x) q(y):
//   trace of the hypothesis at y = x gives E = B(x^2, x^2) - B(x, x)^2;
//   its degree-4 symmetrization B4 specializes to B(1,1) in {0,1},
//   B(x,x) = 2a(x)^2 - a(x^2), and the three-variable product identity.
struct MultPipeline {
    Expr b4;         // symmetrize(E, 4); 3*b4 is the classical six-term form
    Expr at_1111;    // b4 at (1,1,1,1)
    Expr at_x111;    // b4 at (x,1,1,1)
    Expr at_xx11;    // b4 at (x,x,1,1) with B(1,1)=1, B(x,1)=a(x)
    Expr quartic;    // -a(x^4) + a(x^2)^2 + 4a(x)^2 a(x^2) - 4a(x)^4
    Expr a4;         // symmetrize(quartic, 4)
    Expr three_var;  // a4 at (x,y,z,1) with a(1)=1
};

inline MultPipeline derive_mult_pipeline() {
    using namespace sym;
    MultPipeline out;
    RawPtr x = rvar("x");
    RawPtr e = rsub(rapply(B, {rpow(x, 2), rpow(x, 2)}), rpow(rapply(B, {x, x}), 2));
    out.b4 = symmetrize(expand(e), 4, "x");

    out.at_1111 = specialize_at(out.b4, {SlotVal::one(), SlotVal::one(), SlotVal::one(), SlotVal::one()});
    out.at_x111 = specialize_at(out.b4, {SlotVal::v("x"), SlotVal::one(), SlotVal::one(), SlotVal::one()});

    // ordered so that B(1,1) resolves to the constant before the generic fact
    FactSet xx_facts;
    xx_facts.add(Fact{B, {ArgPat::one(), ArgPat::one()}, Expr::constant(1)});
    xx_facts.add(Fact{B, {ArgPat::bind("u"), ArgPat::one()}, Expr::atom(App(a, {Monomial{{"u", 1}}}))});
    out.at_xx11 = specialize_at(out.b4, {SlotVal::v("x"), SlotVal::v("x"), SlotVal::one(), SlotVal::one()}, xx_facts);

    RawPtr ax = rapply(a, {x});
    RawPtr ax2 = rapply(a, {rpow(x, 2)});
    RawPtr ax4 = rapply(a, {rpow(x, 4)});
    out.quartic = expand(rsum({rneg(ax4), rpow(ax2, 2),
                               rprod({rconst(4), rpow(ax, 2), ax2}),
                               rneg(rprod({rconst(4), rpow(ax, 4)}))}));
    out.a4 = symmetrize(out.quartic, 4, "x");

    FactSet a1_facts;
    a1_facts.add(Fact{a, {ArgPat::one()}, Expr::constant(1)});
    out.three_var = specialize_at(out.a4, {SlotVal::v("x"), SlotVal::v("y"), SlotVal::v("z"), SlotVal::one()}, a1_facts);
    return out;
}

// pi_2-additive case, q(xy) = q(x) y^2 + x^2 q(y):
//   E = B(x^2, x^2) - 2x^2 B(x, x); the symmetrization equals the classical
//   1/3-coefficient form directly, and back-substituting the derived
//   B(x,y) = 2x a(y) + 2y a(x) - a(xy) yields the order-two quartic.
struct AddPipeline {
    Expr b4;       // symmetrize(E, 4)
    Expr at_1111;  // = -B(1,1)
    Expr at_xy11;  // b4 at (x,y,1,1) with B(1,1)=0, B(x,1)=a(x)
    Expr quartic;  // a(x^4) - 6x^2 a(x^2) + 8x^3 a(x), from 2x^2 q(x) - q(x^2)
};

inline AddPipeline derive_add_pipeline() {
    using namespace sym;
    AddPipeline out;
    RawPtr x = rvar("x");
    RawPtr e = rsub(rapply(B, {rpow(x, 2), rpow(x, 2)}),
                    rprod({rconst(2), rpow(x, 2), rapply(B, {x, x})}));
    out.b4 = symmetrize(expand(e), 4, "x");

    out.at_1111 = specialize_at(out.b4, {SlotVal::one(), SlotVal::one(), SlotVal::one(), SlotVal::one()});

    FactSet facts;
    facts.add(Fact{B, {ArgPat::one(), ArgPat::one()}, Expr::zero()});
    facts.add(Fact{B, {ArgPat::bind("u"), ArgPat::one()}, Expr::atom(App(a, {Monomial{{"u", 1}}}))});
    out.at_xy11 = specialize_at(out.b4, {SlotVal::v("x"), SlotVal::v("y"), SlotVal::one(), SlotVal::one()}, facts);

    // q(u) = 4u a(u) - a(u^2); the hypothesis trace is q(x^2) = 2x^2 q(x)
    auto q_of = [&](const RawPtr& u) {
        return rsub(rprod({rconst(4), u, rapply(a, {u})}), rapply(a, {rpow(u, 2)}));
    };
    out.quartic = expand(rsub(rprod({rconst(2), rpow(x, 2), q_of(x)}), q_of(rpow(x, 2))));
    return out;
}

// Moment case, q(xy) = phi1(x) phi2(x) q(y) + phi1(y) phi2(y) q(x):
//   E = B(x^2, x^2) - 2 phi1(x) phi2(x) B(x, x); the pipeline recovers
//   q(x) = 2(phi1(x) + phi2(x)) a(x) - a(x^2), a(1) = 0, and the
//   three-variable identity with the six homomorphism correction terms.
struct MomentPipeline {
    Expr b4;             // symmetrize(E, 4)
    Expr b4_at_1111;     // b4 at (1,1,1,1) with unit facts; = -B(1,1), forcing q(1)=0
    Expr q_form;         // 3 * (b4 at (x,x,1,1) with the unit facts)
    Expr quartic;        // a(x^4) - 2(phi1^2 + phi1 phi2 + phi2^2) a(x^2) + 4 phi1 phi2 (phi1 + phi2) a(x)
    Expr a4;             // symmetrize(quartic, 4)
    Expr at_1111;        // a4 at (1,1,1,1) with unit facts; = 3 a(1)
    Expr spadesuit;      // 2 * (a4 at (x,y,z,1) with unit facts and a(1)=0)
};

inline MomentPipeline derive_moment_pipeline() {
    using namespace sym;
    MomentPipeline out;
    RawPtr x = rvar("x");
    RawPtr e = rsub(rapply(B, {rpow(x, 2), rpow(x, 2)}),
                    rprod({rconst(2), rapply(phi1, {x}), rapply(phi2, {x}), rapply(B, {x, x})}));
    out.b4 = symmetrize(expand(e), 4, "x");

    FactSet unit_facts;
    unit_facts.add(Fact{phi1, {ArgPat::one()}, Expr::constant(1)});
    unit_facts.add(Fact{phi2, {ArgPat::one()}, Expr::constant(1)});
    out.b4_at_1111 = specialize_at(out.b4, {SlotVal::one(), SlotVal::one(), SlotVal::one(), SlotVal::one()},
                                   unit_facts);
    FactSet q_facts = unit_facts;
    q_facts.add(Fact{B, {ArgPat::one(), ArgPat::one()}, Expr::zero()});
    q_facts.add(Fact{B, {ArgPat::bind("u"), ArgPat::one()}, Expr::atom(App(a, {Monomial{{"u", 1}}}))});
    out.q_form = specialize_at(out.b4, {SlotVal::v("x"), SlotVal::v("x"), SlotVal::one(), SlotVal::one()}, q_facts)
                     .scaled(3);

    // hypothesis trace: q(x^2) = 2 phi1(x) phi2(x) q(x) with
    // q(u) = 2(phi1(u) + phi2(u)) a(u) - a(u^2)
    auto q_of = [&](const RawPtr& u) {
        return rsub(rprod({rconst(2), rsum({rapply(phi1, {u}), rapply(phi2, {u})}), rapply(a, {u})}),
                    rapply(a, {rpow(u, 2)}));
    };
    out.quartic = expand(rsub(rprod({rconst(2), rapply(phi1, {x}), rapply(phi2, {x}), q_of(x)}),
                              q_of(rpow(x, 2))));
    out.a4 = symmetrize(out.quartic, 4, "x");

    out.at_1111 = specialize_at(out.a4,
                                {SlotVal::one(), SlotVal::one(), SlotVal::one(), SlotVal::one()}, unit_facts);

    FactSet spade_facts = unit_facts;
    spade_facts.add(Fact{a, {ArgPat::one()}, Expr::zero()});
    out.spadesuit =
        specialize_at(out.a4, {SlotVal::v("x"), SlotVal::v("y"), SlotVal::v("z"), SlotVal::one()}, spade_facts)
            .scaled(2);
    return out;
}

struct NamedExpr {
    std::string name;
    Expr expr;
};

// Every derived constraint from the three pipelines under one roof.
inline std::vector<NamedExpr> derive_quartic_constraints() {
    MultPipeline m = derive_mult_pipeline();
    AddPipeline p = derive_add_pipeline();
    MomentPipeline q = derive_moment_pipeline();
    return {
        {"mult.b4", m.b4},
        {"mult.at-1111", m.at_1111},
        {"mult.at-x111", m.at_x111},
        {"mult.at-xx11", m.at_xx11},
        {"mult.quartic", m.quartic},
        {"mult.a4", m.a4},
        {"mult.three-var", m.three_var},
        {"add.b4", p.b4},
        {"add.at-1111", p.at_1111},
        {"add.at-xy11", p.at_xy11},
        {"add.quartic", p.quartic},
        {"moment.b4", q.b4},
        {"moment.b4-at-1111", q.b4_at_1111},
        {"moment.q-form", q.q_form},
        {"moment.quartic", q.quartic},
        {"moment.a4", q.a4},
        {"moment.at-1111", q.at_1111},
        {"moment.spadesuit", q.spadesuit},
    };
}

}  // namespace symq
