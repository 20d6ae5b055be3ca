// Quadratic maps assembled from concrete field maps.
#pragma once

#include <utility>

#include "symq/fieldmap.hpp"

namespace symq {

// Each constructor yields a generalized monomial of degree 2; the
// parallelogram law q(x+y) + q(x-y) = 2q(x) + 2q(y) certifies this and is
// property-tested for every kind.
//
//   ProdOfHoms(phi1, phi2)          q(x) = phi1(x) * phi2(x)
//   DerivOfSquare(d)                q(x) = d(x^2)
//   SecondOrderForm(D)              q(x) = 4x*D(x) - D(x^2)
//   TwistedSecondOrder(phi, d)      q(x) = phi(4x*d(x) - d(x^2))
//   MomentForm(phi1, phi2, a)       q(x) = 2(phi1(x) + phi2(x))a(x) - a(x^2)
class QuadMap {
public:
    enum class Kind { ProdOfHoms, DerivOfSquare, SecondOrderForm, TwistedSecondOrder, MomentForm };

    static QuadMap prod_of_homs(FieldMap phi1, FieldMap phi2) {
        return QuadMap(Kind::ProdOfHoms, std::move(phi1), std::move(phi2));
    }
    static QuadMap deriv_of_square(FieldMap d) {
        return QuadMap(Kind::DerivOfSquare, std::move(d));
    }
    static QuadMap second_order_form(FieldMap D) {
        return QuadMap(Kind::SecondOrderForm, std::move(D));
    }
    static QuadMap twisted_second_order(FieldMap phi, FieldMap d) {
        return QuadMap(Kind::TwistedSecondOrder, std::move(phi), std::move(d));
    }
    static QuadMap moment_form(FieldMap phi1, FieldMap phi2, FieldMap a) {
        QuadMap q(Kind::MomentForm, std::move(phi1), std::move(phi2));
        q.extra_.push_back(std::move(a));
        return q;
    }

    Kind kind() const { return kind_; }

    template <class F>
    F operator()(const F& x) const {
        switch (kind_) {
            case Kind::ProdOfHoms:
                return first_(x) * second_(x);
            case Kind::DerivOfSquare:
                return first_(x * x);
            case Kind::SecondOrderForm:
                return scale(4, x * first_(x)) - first_(x * x);
            case Kind::TwistedSecondOrder:
                return first_(scale(4, x * second_(x)) - second_(x * x));
            case Kind::MomentForm: {
                const FieldMap& a = extra_.front();
                return scale(2, (first_(x) + second_(x)) * a(x)) - a(x * x);
            }
        }
        throw carrier_mismatch("unreachable quad map kind");
    }

private:
    QuadMap(Kind k, FieldMap a, FieldMap b = FieldMap::identity())
        : kind_(k), first_(std::move(a)), second_(std::move(b)) {}

    Kind kind_;
    FieldMap first_, second_;
    std::vector<FieldMap> extra_;
};

template <class F>
F quad_eval(const QuadMap& q, const F& x) {
    return q(x);
}

}  // namespace symq
