// Concrete maps on the built-in carriers: derivations, differential
// operators, homomorphisms and the pieces they are assembled from.
#pragma once

#include <utility>
#include <vector>

#include "symq/errors.hpp"
#include "symq/quadext.hpp"
#include "symq/ratfunc.hpp"

namespace symq {

enum class Carrier { RatFuncField, QuadField };

// Immutable description of a map F -> F on one of the two carriers.
//
//   FormalDerivative       d/dt on Q(t)
//   Composition            m1 ∘ m2 ∘ ... ∘ mk (rightmost applied first)
//   LinearCombo            sum of c_i * m_i with coefficients from Q(t)
//   SubstitutionHom        x(t) |-> x(p(t)) for nonconstant p
//   QuadConjugation        a + b*sqrt(d) |-> a - b*sqrt(d)
//   Identity, Zero
class FieldMap {
public:
    enum class Kind { FormalDerivative, Composition, LinearCombo, SubstitutionHom, QuadConjugation, Identity, Zero };

    static FieldMap formal_derivative() { return FieldMap(Kind::FormalDerivative, Carrier::RatFuncField); }
    static FieldMap identity(Carrier c = Carrier::RatFuncField) { return FieldMap(Kind::Identity, c); }
    static FieldMap zero(Carrier c = Carrier::RatFuncField) { return FieldMap(Kind::Zero, c); }
    static FieldMap quad_conjugation() { return FieldMap(Kind::QuadConjugation, Carrier::QuadField); }

    static FieldMap substitution(Poly p) {
        if (p.is_constant()) throw carrier_mismatch("substitution polynomial must be nonconstant");
        FieldMap m(Kind::SubstitutionHom, Carrier::RatFuncField);
        m.subst_ = std::move(p);
        return m;
    }

    static FieldMap composition(std::vector<FieldMap> parts) {
        if (parts.empty()) throw carrier_mismatch("empty composition");
        Carrier c = parts.front().carrier();
        for (const auto& p : parts)
            if (p.carrier() != c) throw carrier_mismatch("composition operands must share the carrier");
        FieldMap m(Kind::Composition, c);
        m.parts_ = std::move(parts);
        return m;
    }

    static FieldMap linear_combo(std::vector<std::pair<RatFunc, FieldMap>> terms) {
        if (terms.empty()) throw carrier_mismatch("empty linear combination");
        for (const auto& [c, p] : terms)
            if (p.carrier() != Carrier::RatFuncField)
                throw carrier_mismatch("linear combinations take Q(t) coefficients, so all operands must live on Q(t)");
        FieldMap m(Kind::LinearCombo, Carrier::RatFuncField);
        m.combo_ = std::move(terms);
        return m;
    }

    Kind kind() const { return kind_; }
    Carrier carrier() const { return carrier_; }

    // Maximum composition length among the terms: the declared order of a
    // differential operator. Identity counts as length 0.
    int order() const {
        switch (kind_) {
            case Kind::FormalDerivative: return 1;
            case Kind::Identity:
            case Kind::Zero: return 0;
            case Kind::Composition: {
                int sum = 0;
                for (const auto& p : parts_) sum += p.order();
                return sum;
            }
            case Kind::LinearCombo: {
                int mx = 0;
                for (const auto& [c, p] : combo_) mx = std::max(mx, p.order());
                return mx;
            }
            default: return 0;  // substitution/conjugation are not differential operators
        }
    }

    RatFunc operator()(const RatFunc& x) const {
        if (carrier_ != Carrier::RatFuncField) throw carrier_mismatch("map does not act on Q(t)");
        switch (kind_) {
            case Kind::FormalDerivative: return x.derivative();
            case Kind::SubstitutionHom: return x.substitute(subst_);
            case Kind::Identity: return x;
            case Kind::Zero: return RatFunc(0);
            case Kind::Composition: {
                RatFunc y = x;
                for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) y = (*it)(y);
                return y;
            }
            case Kind::LinearCombo: {
                RatFunc acc(0);
                for (const auto& [c, p] : combo_) acc += c * p(x);
                return acc;
            }
            default: throw carrier_mismatch("map does not act on Q(t)");
        }
    }

    QuadExt operator()(const QuadExt& x) const {
        if (carrier_ != Carrier::QuadField) throw carrier_mismatch("map does not act on Q(sqrt(d))");
        switch (kind_) {
            case Kind::QuadConjugation: return x.conj();
            case Kind::Identity: return x;
            case Kind::Zero: return QuadExt::zero(x.d());
            case Kind::Composition: {
                QuadExt y = x;
                for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) y = (*it)(y);
                return y;
            }
            default: throw carrier_mismatch("map does not act on Q(sqrt(d))");
        }
    }

private:
    FieldMap(Kind k, Carrier c) : kind_(k), carrier_(c) {}

    Kind kind_;
    Carrier carrier_;
    std::vector<FieldMap> parts_;
    std::vector<std::pair<RatFunc, FieldMap>> combo_;
    Poly subst_;
};

inline FieldMap apply_after(FieldMap outer, FieldMap inner) {
    return FieldMap::composition({std::move(outer), std::move(inner)});
}

template <class F>
F apply(const FieldMap& m, const F& x) {
    return m(x);
}

}  // namespace symq
