// Generalized moment sequences over Q(t) and the quadratic moment families
// built from second-order derivations on the multiplicative group.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "symq/bell.hpp"
#include "symq/checks.hpp"
#include "symq/evalbind.hpp"
#include "symq/prng.hpp"

namespace symq {

using ScalarMap = std::function<RatFunc(const RatFunc&)>;

// f_alpha(x) = B_alpha(a(x)) * m(x) on either (Q(t), +) with m = 1 or
// (Q(t)^x, *) with a declared exponential m. Indices without a backing map
// carry the zero additive function.
struct MomentFamily {
    int rank = 1;
    bool multiplicative = false;
    ScalarMap m = [](const RatFunc&) { return RatFunc(1); };
    std::map<MultiIndex, ScalarMap> additive;

    RatFunc a_value(const MultiIndex& beta, const RatFunc& x) const {
        auto it = additive.find(beta);
        return it == additive.end() ? RatFunc(0) : it->second(x);
    }

    RatFunc f(const MultiIndex& alpha, const RatFunc& x, BellCache& cache) const {
        SymBinding<RatFunc> bind;
        for (const MultiIndex& beta : alpha.lower_set())
            if (!beta.is_zero()) bind.scalars.emplace(bell_scalar_name(cache.prefix(), beta), a_value(beta, x));
        return eval_expr(cache.bell(alpha), bind, {}) * m(x);
    }

    // Remark (c): dividing out the exponential leaves a moment family whose
    // generating function is identically one.
    MomentFamily normalized() const {
        MomentFamily out = *this;
        out.m = [](const RatFunc&) { return RatFunc(1); };
        return out;
    }
};

// Exact verification of f_alpha(x op y) = sum_{beta<=alpha} binom f_beta(x) f_{alpha-beta}(y)
// on random pairs, for every alpha with |alpha| <= bound.
inline CheckReport check_moment_recurrence(const MomentFamily& fam, int bound, int samples,
                                           RatFuncSampler& gen, const std::string& name = "moment-recurrence") {
    BellCache cache(fam.rank);
    std::vector<MultiIndex> all = indices_up_to(fam.rank, bound);
    for (int s = 1; s <= samples; ++s) {
        RatFunc x = fam.multiplicative ? gen.nonzero() : gen();
        RatFunc y = fam.multiplicative ? gen.nonzero() : gen();
        RatFunc joined = fam.multiplicative ? x * y : x + y;
        for (const MultiIndex& alpha : all) {
            RatFunc lhs = fam.f(alpha, joined, cache);
            RatFunc rhs(0);
            for (const MultiIndex& beta : alpha.lower_set())
                rhs += RatFunc(MultiIndex::binom(alpha, beta)) * fam.f(beta, x, cache) *
                       fam.f(alpha.minus(beta), y, cache);
            if (lhs != rhs)
                return CheckReport::failed(name, s,
                                           "alpha=" + alpha.str() + ", x=" + x.str() + ", y=" + y.str() +
                                               ": lhs=" + lhs.str() + ", rhs=" + rhs.str());
        }
    }
    return CheckReport::passed(name, samples);
}

struct QuadMomentResult {
    MomentFamily family;
    std::vector<CheckReport> reports;
    bool ok = false;
};

// The quadratic moment family q_alpha(x) = B_alpha(a(x)) x^2 on Q(t)^x with
//   a_alpha(x) = 4 d_alpha(x)/x - d_alpha(x^2)/x^2,   d_alpha in D2.
// Every supplied d_alpha is gated through the order-two check first; a
// failing one aborts with its witness. Indices without a supplied map use
// the zero derivation.
inline QuadMomentResult build_quadratic_moment_family(int rank, const std::map<MultiIndex, FieldMap>& d,
                                                      int bound, int samples, RatFuncSampler& gen) {
    QuadMomentResult out;
    out.family.rank = rank;
    out.family.multiplicative = true;
    out.family.m = [](const RatFunc& x) { return x * x; };

    for (const auto& [beta, d_beta] : d) {
        CheckReport gate = check_order_two_derivation<RatFunc>(
            "moment-order2[" + beta.str() + "]", d_beta, samples, gen);
        out.reports.push_back(gate);
        if (!gate.pass) return out;  // abort with the witness in the report

        FieldMap dm = d_beta;
        ScalarMap a = [dm](const RatFunc& x) {
            return (RatFunc(4) * x * dm(x) - dm(x * x)) / (x * x);
        };

        bool additive_ok = true;
        for (int s = 1; s <= samples && additive_ok; ++s) {
            RatFunc x = gen.nonzero(), y = gen.nonzero();
            RatFunc lhs = a(x * y), rhs = a(x) + a(y);
            if (lhs != rhs) {
                out.reports.push_back(CheckReport::failed(
                    "moment-additive[" + beta.str() + "]", s,
                    "x=" + x.str() + ", y=" + y.str() + ": lhs=" + lhs.str() + ", rhs=" + rhs.str()));
                additive_ok = false;
            }
        }
        if (!additive_ok) return out;
        out.reports.push_back(CheckReport::passed("moment-additive[" + beta.str() + "]", samples));
        out.family.additive.emplace(beta, std::move(a));
    }

    CheckReport rec = check_moment_recurrence(out.family, bound, samples, gen, "moment-q-recurrence");
    out.reports.push_back(rec);
    out.ok = rec.pass;
    return out;
}

}  // namespace symq
