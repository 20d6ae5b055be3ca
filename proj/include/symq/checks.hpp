// Exact equation checkers for the map classes: each verifies an identity on
// seeded random tuples and reports the first counterexample on failure.
//
// "samples" bounds the number of random substitution tuples; the equality
// tested per tuple is exact structural equality in the carrier field, so
// there are no false positives or negatives up to the sampled tuples.
#pragma once

#include <functional>
#include <string>

#include "symq/fieldmap.hpp"
#include "symq/quadmap.hpp"
#include "symq/report.hpp"

namespace symq {

namespace detail {

template <class F>
std::string pair_witness(const F& x, const F& y, const F& lhs, const F& rhs) {
    return "x=" + x.str() + ", y=" + y.str() + ": lhs=" + lhs.str() + ", rhs=" + rhs.str();
}

template <class F>
std::string point_witness(const F& x, const F& lhs, const F& rhs) {
    return "x=" + x.str() + ": lhs=" + lhs.str() + ", rhs=" + rhs.str();
}

}  // namespace detail

// Additivity f(x+y) = f(x) + f(y) on random pairs.
template <class F, class Map, class Sampler>
CheckReport check_additive(const std::string& name, const Map& f, int samples, Sampler& gen) {
    for (int i = 1; i <= samples; ++i) {
        F x = gen(), y = gen();
        F lhs = f(x + y), rhs = f(x) + f(y);
        if (lhs != rhs)
            return CheckReport::failed(name, i, "additivity: " + detail::pair_witness(x, y, lhs, rhs));
    }
    return CheckReport::passed(name, samples);
}

// Additivity plus the Leibniz rule d(xy) = d(x)y + x d(y).
template <class F, class Map, class Sampler>
CheckReport check_derivation(const std::string& name, const Map& d, int samples, Sampler& gen) {
    for (int i = 1; i <= samples; ++i) {
        F x = gen(), y = gen();
        F add_lhs = d(x + y), add_rhs = d(x) + d(y);
        if (add_lhs != add_rhs)
            return CheckReport::failed(name, i, "additivity: " + detail::pair_witness(x, y, add_lhs, add_rhs));
        F lhs = d(x * y), rhs = d(x) * y + x * d(y);
        if (lhs != rhs)
            return CheckReport::failed(name, i, "leibniz: " + detail::pair_witness(x, y, lhs, rhs));
    }
    return CheckReport::passed(name, samples);
}

// Membership test for second-order derivations: additivity first, then the
// quartic a(x^4) - 6x^2 a(x^2) + 8x^3 a(x) = 0 on random points.
template <class F, class Map, class Sampler>
CheckReport check_order_two_derivation(const std::string& name, const Map& a, int samples, Sampler& gen) {
    for (int i = 1; i <= samples; ++i) {
        F x = gen(), y = gen();
        F add_lhs = a(x + y), add_rhs = a(x) + a(y);
        if (add_lhs != add_rhs)
            return CheckReport::failed(name, i, "additivity: " + detail::pair_witness(x, y, add_lhs, add_rhs));
        F x2 = x * x;
        F lhs = a(x2 * x2) - scale(6, x2 * a(x2)) + scale(8, x2 * x * a(x));
        F zero = lhs - lhs;
        if (lhs != zero)
            return CheckReport::failed(name, i, "quartic: x=" + x.str() + ": value=" + lhs.str());
    }
    return CheckReport::passed(name, samples);
}

// a(P(x)) = P'(x) a(x) for a given P over Q(t).
template <class Map, class Sampler>
CheckReport check_classical_derivation_identity(const std::string& name, const Map& a, const Poly& p,
                                                int samples, Sampler& gen) {
    Poly dp = p.derivative();
    for (int i = 1; i <= samples; ++i) {
        RatFunc x = gen(), y = gen();
        RatFunc add_lhs = a(x + y), add_rhs = a(x) + a(y);
        if (add_lhs != add_rhs)
            return CheckReport::failed(name, i, "additivity: " + detail::pair_witness(x, y, add_lhs, add_rhs));
        RatFunc lhs = a(poly_eval_subst(p, x));
        RatFunc rhs = poly_eval_subst(dp, x) * a(x);
        if (lhs != rhs)
            return CheckReport::failed(name, i, detail::point_witness(x, lhs, rhs));
    }
    return CheckReport::passed(name, samples);
}

// q(xy) = q(x) q(y) on nonzero pairs.
template <class F, class Sampler>
CheckReport check_multiplicative(const std::string& name, const QuadMap& q, int samples, Sampler& gen) {
    for (int i = 1; i <= samples; ++i) {
        F x = gen.nonzero(), y = gen.nonzero();
        F lhs = q(x * y), rhs = q(x) * q(y);
        if (lhs != rhs) return CheckReport::failed(name, i, detail::pair_witness(x, y, lhs, rhs));
    }
    return CheckReport::passed(name, samples);
}

// q(xy) = q(x) y^2 + x^2 q(y) on nonzero pairs.
template <class F, class Sampler>
CheckReport check_pi2_additive(const std::string& name, const QuadMap& q, int samples, Sampler& gen) {
    for (int i = 1; i <= samples; ++i) {
        F x = gen.nonzero(), y = gen.nonzero();
        F lhs = q(x * y), rhs = q(x) * y * y + x * x * q(y);
        if (lhs != rhs) return CheckReport::failed(name, i, detail::pair_witness(x, y, lhs, rhs));
    }
    return CheckReport::passed(name, samples);
}

// q(xy) = phi(x)^2 q(y) + q(x) phi(y)^2 on nonzero pairs.
template <class F, class Sampler>
CheckReport check_twisted(const std::string& name, const QuadMap& q, const FieldMap& phi,
                          int samples, Sampler& gen) {
    for (int i = 1; i <= samples; ++i) {
        F x = gen.nonzero(), y = gen.nonzero();
        F px = phi(x), py = phi(y);
        F lhs = q(x * y), rhs = px * px * q(y) + q(x) * py * py;
        if (lhs != rhs) return CheckReport::failed(name, i, detail::pair_witness(x, y, lhs, rhs));
    }
    return CheckReport::passed(name, samples);
}

// q(xy) = phi1(x) phi2(x) q(y) + phi1(y) phi2(y) q(x) on nonzero pairs.
template <class F, class Sampler>
CheckReport check_moment1(const std::string& name, const QuadMap& q, const FieldMap& phi1,
                          const FieldMap& phi2, int samples, Sampler& gen) {
    for (int i = 1; i <= samples; ++i) {
        F x = gen.nonzero(), y = gen.nonzero();
        F lhs = q(x * y), rhs = phi1(x) * phi2(x) * q(y) + phi1(y) * phi2(y) * q(x);
        if (lhs != rhs) return CheckReport::failed(name, i, detail::pair_witness(x, y, lhs, rhs));
    }
    return CheckReport::passed(name, samples);
}

// The three-variable identity
//   2a(xyz) - (phi1+phi2)(x) a(yz) - (phi1+phi2)(y) a(xz) - (phi1+phi2)(z) a(xy)
//   + (phi1(x)phi2(y) + phi2(x)phi1(y)) a(z) + ... (two analogous terms) = 0.
// Preconditions checked first: a additive, a(1) = 0.
template <class F, class MapA, class Sampler>
CheckReport check_spadesuit(const std::string& name, const MapA& a, const FieldMap& phi1,
                            const FieldMap& phi2, int samples, Sampler& gen) {
    {
        F probe = gen.nonzero();
        F one = probe / probe;
        F a1 = a(one);
        if (a1 != a1 - a1)
            return CheckReport::failed(name, 0, "precondition a(1)=0 violated: a(1)=" + a1.str());
    }
    for (int i = 1; i <= samples; ++i) {
        F x = gen.nonzero(), y = gen.nonzero(), z = gen.nonzero();
        F add_lhs = a(x + y), add_rhs = a(x) + a(y);
        if (add_lhs != add_rhs)
            return CheckReport::failed(name, i, "precondition additivity: " + detail::pair_witness(x, y, add_lhs, add_rhs));
        F s1x = phi1(x), s2x = phi2(x), s1y = phi1(y), s2y = phi2(y), s1z = phi1(z), s2z = phi2(z);
        F lhs = scale(2, a(x * y * z))
                - (s1x + s2x) * a(y * z) - (s1y + s2y) * a(x * z) - (s1z + s2z) * a(x * y)
                + (s1x * s2y + s2x * s1y) * a(z)
                + (s1x * s2z + s2x * s1z) * a(y)
                + (s1y * s2z + s2y * s1z) * a(x);
        F zero = lhs - lhs;
        if (lhs != zero)
            return CheckReport::failed(name, i, "x=" + x.str() + ", y=" + y.str() + ", z=" + z.str() +
                                                    ": value=" + lhs.str());
    }
    return CheckReport::passed(name, samples);
}

// Diagonal consequence of the identity above for phi1 = phi2 = id:
// 2(a(x^3) - 3x a(x^2) + 3x^2 a(x)) = 0.
template <class F, class MapA, class Sampler>
CheckReport check_spadesuit_diagonal(const std::string& name, const MapA& a, int samples, Sampler& gen) {
    for (int i = 1; i <= samples; ++i) {
        F x = gen.nonzero();
        F x2 = x * x;
        F lhs = scale(2, a(x2 * x) - scale(3, x * a(x2)) + scale(3, x2 * a(x)));
        F zero = lhs - lhs;
        if (lhs != zero)
            return CheckReport::failed(name, i, "x=" + x.str() + ": value=" + lhs.str());
    }
    return CheckReport::passed(name, samples);
}

// q(x+y) + q(x-y) = 2q(x) + 2q(y): certifies q is a quadratic function.
template <class F, class Sampler>
CheckReport check_parallelogram(const std::string& name, const QuadMap& q, int samples, Sampler& gen) {
    for (int i = 1; i <= samples; ++i) {
        F x = gen(), y = gen();
        F lhs = q(x + y) + q(x - y), rhs = scale(2, q(x)) + scale(2, q(y));
        if (lhs != rhs) return CheckReport::failed(name, i, detail::pair_witness(x, y, lhs, rhs));
    }
    return CheckReport::passed(name, samples);
}

}  // namespace symq
