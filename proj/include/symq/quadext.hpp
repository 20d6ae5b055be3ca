// The quadratic extension Q(sqrt(d)) for a square-free integer d.
#pragma once

#include <cstdlib>
#include <string>

#include "symq/errors.hpp"
#include "symq/rational.hpp"

namespace symq {

inline bool is_square_free(long long d) {
    if (d == 0 || d == 1) return false;
    long long m = d < 0 ? -d : d;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) return false;
        while (m % p == 0) m /= p;
    }
    return true;
}

// a + b*sqrt(d); d is shared per-field context, equality is componentwise.
class QuadExt {
public:
    QuadExt(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (!is_square_free(d)) throw carrier_mismatch("d must be a square-free integer other than 0 and 1");
    }
    static QuadExt from_rational(const Rational& a, long long d) { return QuadExt(a, Rational(0), d); }
    static QuadExt zero(long long d) { return from_rational(Rational(0), d); }
    static QuadExt one(long long d) { return from_rational(Rational(1), d); }
    static QuadExt sqrt_d(long long d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& rat_part() const { return a_; }
    const Rational& root_part() const { return b_; }
    long long d() const { return d_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        x.require_same_field(y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.d_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        x.require_same_field(y);
        return QuadExt(x.a_ * y.a_ + Rational(x.d_) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    // Norm a^2 - d*b^2 vanishes only at zero since d is not a square.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadExt inverse() const {
        if (is_zero()) throw division_by_zero();
        Rational n = norm();
        return QuadExt(a_ / n, -b_ / n, d_);
    }

    QuadExt pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        QuadExt r = one(d_), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string root = "sqrt(" + std::to_string(d_) + ")";
        std::string rhs = b_.is_one() ? root : (b_ == Rational(-1) ? "-" + root : b_.str() + "*" + root);
        if (a_.is_zero()) return rhs;
        if (b_.sign() > 0) return a_.str() + "+" + rhs;
        return a_.str() + rhs;  // rhs carries its own minus sign
    }

private:
    void require_same_field(const QuadExt& o) const {
        if (d_ != o.d_) throw carrier_mismatch("operands from different quadratic extensions");
    }
    Rational a_, b_;
    long long d_;
};

inline QuadExt scale(int k, const QuadExt& x) {
    return QuadExt::from_rational(Rational(k), x.d()) * x;
}

}  // namespace symq
