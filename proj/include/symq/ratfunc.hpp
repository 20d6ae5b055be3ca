// Rational functions over Q in canonical reduced form: the field Q(t).
#pragma once

#include <string>
#include <utility>

#include "symq/errors.hpp"
#include "symq/poly.hpp"

namespace symq {

// Invariants: den != 0, gcd(num, den) = 1, den monic, zero is 0/1.
// Structural equality therefore coincides with field equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT: implicit scalar lift
    RatFunc(long n) : RatFunc(Rational(n)) {}                   // NOLINT
    RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}      // NOLINT: implicit poly lift
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero();
        canonicalize();
    }

    static RatFunc t() { return RatFunc(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, canonical_tag{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw division_by_zero();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const {
        if (is_zero()) throw division_by_zero();
        return RatFunc(den_, num_);
    }

    RatFunc pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r(1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    // Formal derivative by the quotient rule.
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // t |-> p(t) substitution endomorphism; p nonconstant keeps the map injective.
    RatFunc substitute(const Poly& p) const {
        return RatFunc(num_.compose(p), den_.compose(p));
    }

    // "(num)/(den)" with both polynomials in descending-degree form.
    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

    // Accepts "(N)/(D)" and bare "N"; inverse of str() on canonical values.
    static RatFunc parse(const std::string& text) {
        size_t i = 0;
        auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
        skip();
        if (i < text.size() && text[i] == '(') {
            size_t depth = 0, start = i;
            size_t close = std::string::npos;
            for (size_t j = i; j < text.size(); ++j) {
                if (text[j] == '(') ++depth;
                if (text[j] == ')' && --depth == 0) { close = j; break; }
            }
            if (close == std::string::npos) throw parse_error(1, static_cast<int>(i) + 1, "unbalanced '('");
            Poly num = Poly::parse(text.substr(start + 1, close - start - 1));
            i = close + 1;
            skip();
            if (i >= text.size()) return RatFunc(num);
            if (text[i] != '/') throw parse_error(1, static_cast<int>(i) + 1, "expected '/'");
            ++i;
            skip();
            if (i >= text.size() || text[i] != '(') throw parse_error(1, static_cast<int>(i) + 1, "expected '('");
            size_t dstart = i;
            depth = 0;
            close = std::string::npos;
            for (size_t j = i; j < text.size(); ++j) {
                if (text[j] == '(') ++depth;
                if (text[j] == ')' && --depth == 0) { close = j; break; }
            }
            if (close == std::string::npos) throw parse_error(1, static_cast<int>(i) + 1, "unbalanced '('");
            Poly den = Poly::parse(text.substr(dstart + 1, close - dstart - 1));
            return RatFunc(num, den);
        }
        return RatFunc(Poly::parse(text));
    }

private:
    struct canonical_tag {};
    RatFunc(Poly num, Poly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            Rational inv = lead.inverse();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly num_, den_;
};

inline RatFunc scale(int k, const RatFunc& x) { return RatFunc(k) * x; }

// Exact evaluation of p at a rational function, Horner in Q(t).
inline RatFunc poly_eval_subst(const Poly& p, const RatFunc& s) {
    RatFunc r(0);
    for (int d = p.degree(); d >= 0; --d) r = r * s + RatFunc(p.coeff(d));
    return r;
}

}  // namespace symq
