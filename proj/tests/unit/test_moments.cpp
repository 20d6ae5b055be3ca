// Multi-index Bell polynomials and generalized moment sequences.
#include <doctest.h>

#include "symq/moments.hpp"

using namespace symq;

namespace {
MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }

Expr sc(const std::string& name) { return Expr::atom(App(FuncSymbol::scalar(name), {})); }
}  // namespace

TEST_CASE("multi-index basics") {
    MultiIndex a = mi({2, 1});
    CHECK(a.weight() == 3);
    CHECK(a.suffix() == "2_1");
    CHECK(a.str() == "[2,1]");
    CHECK(mi({1, 1}).leq(a));
    CHECK_FALSE(mi({0, 2}).leq(a));
    CHECK(MultiIndex::binom(a, mi({1, 1})) == Rational(2));
    CHECK(MultiIndex::binom(a, mi({2, 0})) == Rational(1));
    CHECK(a.lower_set().size() == 6);  // (2+1)*(1+1)

    auto upto = indices_up_to(2, 2);
    CHECK(upto.size() == 6);            // 00, 01, 10, 02, 11, 20
    CHECK(upto.front() == mi({0, 0}));  // graded order, weight first
    CHECK(upto.back().weight() == 2);
}

TEST_CASE("bell polynomials by recurrence") {
    BellCache cache(1);
    CHECK(cache.bell(mi({0})) == Expr::constant(1));
    CHECK(cache.bell(mi({1})) == sc("a1"));
    CHECK(cache.bell(mi({2})) == sc("a1") * sc("a1") + sc("a2"));
    // complete Bell polynomial B3 = a1^3 + 3 a1 a2 + a3
    CHECK(cache.bell(mi({3})) == sc("a1").pow(3) + (sc("a1") * sc("a2")).scaled(3) + sc("a3"));

    BellCache cache2(2);
    CHECK(cache2.bell(mi({1, 1})) == sc("a1_0") * sc("a0_1") + sc("a1_1"));
    CHECK(cache2.bell(mi({0, 0})) == Expr::constant(1));
}

TEST_CASE("bell recurrence is coordinate independent") {
    for (int rank : {1, 2}) {
        int bound = rank == 1 ? 4 : 3;
        BellCache cache(rank);
        for (const MultiIndex& alpha : indices_up_to(rank, bound)) {
            if (alpha.is_zero()) continue;
            for (int i = 0; i < rank; ++i) {
                if (alpha.at(i) == 0) continue;
                CHECK(cache.bell_via(alpha, i) == cache.bell(alpha));
            }
        }
    }
}

TEST_CASE("bell polynomials have homogeneous weight") {
    for (int rank : {1, 2}) {
        int bound = rank == 1 ? 4 : 3;
        BellCache cache(rank);
        for (const MultiIndex& alpha : indices_up_to(rank, bound)) {
            // reverse lookup from scalar names to indices
            std::map<std::string, MultiIndex> names;
            for (const MultiIndex& beta : alpha.lower_set())
                if (!beta.is_zero()) names.emplace(bell_scalar_name("a", beta), beta);
            for (const auto& [term, coeff] : cache.bell(alpha).terms()) {
                MultiIndex total = MultiIndex::zeros(rank);
                for (const auto& [app, mult] : term.apps) {
                    auto it = names.find(app.sym.name);
                    REQUIRE(it != names.end());
                    for (int k = 0; k < mult; ++k) total = total.plus(it->second);
                }
                CHECK(total == alpha);
            }
        }
    }
}

TEST_CASE("symbolic closure of the defining property") {
    // B_alpha(x + y) = sum_{beta<=alpha} binom(alpha,beta) B_beta(x) B_{alpha-beta}(y)
    for (int rank : {1, 2}) {
        BellCache base(rank, "a"), xs(rank, "u"), ys(rank, "v");
        for (const MultiIndex& alpha : indices_up_to(rank, 3)) {
            Expr lhs = base.bell(alpha);
            for (const MultiIndex& beta : alpha.lower_set())
                if (!beta.is_zero())
                    lhs = subst_scalar(lhs, bell_scalar_name("a", beta),
                                       bell_scalar("u", beta) + bell_scalar("v", beta));
            Expr rhs;
            for (const MultiIndex& beta : alpha.lower_set())
                rhs += (xs.bell(beta) * ys.bell(alpha.minus(beta))).scaled(MultiIndex::binom(alpha, beta));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("concrete moment recurrence on the additive group") {
    const FieldMap d = FieldMap::formal_derivative();
    const FieldMap subst = FieldMap::substitution(Poly::t() * Poly::t());

    MomentFamily fam;
    fam.rank = 1;
    fam.multiplicative = false;  // (Q(t), +) with m = 1
    fam.additive.emplace(mi({1}), [d](const RatFunc& x) { return d(x); });
    fam.additive.emplace(mi({2}), [subst](const RatFunc& x) { return subst(x); });
    fam.additive.emplace(mi({3}), [d](const RatFunc& x) { return d(d(x)); });

    RatFuncSampler gen(600, 3, 5);
    CHECK(check_moment_recurrence(fam, 3, 8, gen).pass);

    // f_0 is the exponential of the group: here identically one
    BellCache cache(1);
    CHECK(fam.f(mi({0}), gen(), cache).is_one());

    // perturbing one a_beta by a non-additive map breaks the recurrence
    MomentFamily broken = fam;
    broken.additive[mi({1})] = [d](const RatFunc& x) { return d(x) + x * x; };
    auto rep = check_moment_recurrence(broken, 2, 8, gen, "broken");
    CHECK_FALSE(rep.pass);
    CHECK(rep.witness.has_value());

    // a vanishing generating function annihilates the whole family
    MomentFamily dead = fam;
    dead.m = [](const RatFunc&) { return RatFunc(0); };
    BellCache cache0(1);
    for (const MultiIndex& alpha : indices_up_to(1, 3)) CHECK(dead.f(alpha, gen(), cache0).is_zero());
}

TEST_CASE("quadratic moment families from second-order derivations") {
    const FieldMap d = FieldMap::formal_derivative();
    const FieldMap dd = FieldMap::composition({d, d});

    // spot value: a_1(t) = 4 d(t)/t - d(t^2)/t^2 = 2/t
    {
        RatFunc t = RatFunc::t();
        RatFunc a1 = (RatFunc(4) * t * d(t) - d(t * t)) / (t * t);
        CHECK(a1 == RatFunc(Poly(2), Poly::t()));
    }

    for (const FieldMap& dmap : {d, dd}) {
        RatFuncSampler gen(700, 2, 5);
        std::map<MultiIndex, FieldMap> ds;
        ds.emplace(mi({1}), dmap);
        QuadMomentResult res = build_quadratic_moment_family(1, ds, 2, 6, gen);
        CHECK(res.ok);
        for (const auto& r : res.reports) CHECK(r.pass);

        // q_0(x) = x^2 by construction
        BellCache cache(1);
        RatFunc x = gen.nonzero();
        CHECK(res.family.f(mi({0}), x, cache) == x * x);

        // normalization (Remark (c)): dividing out x^2 keeps the recurrence
        MomentFamily unit = res.family.normalized();
        RatFuncSampler gen2(701, 2, 5);
        CHECK(check_moment_recurrence(unit, 2, 6, gen2).pass);
    }

    // division well-definedness: x^2 a(x) = 4x d(x) - d(x^2) exactly
    {
        RatFuncSampler gen(702);
        for (int i = 0; i < 10; ++i) {
            RatFunc x = gen.nonzero();
            RatFunc a = (RatFunc(4) * x * dd(x) - dd(x * x)) / (x * x);
            CHECK(x * x * a == RatFunc(4) * x * dd(x) - dd(x * x));
        }
    }

    // a substitution endomorphism is not an order-two derivation: abort
    {
        RatFuncSampler gen(703, 2, 5);
        std::map<MultiIndex, FieldMap> bad;
        bad.emplace(mi({1}), FieldMap::substitution(Poly::t() * Poly::t()));
        QuadMomentResult res = build_quadratic_moment_family(1, bad, 2, 6, gen);
        CHECK_FALSE(res.ok);
        REQUIRE(!res.reports.empty());
        CHECK_FALSE(res.reports.front().pass);
        CHECK(res.reports.front().witness.has_value());
    }
}
