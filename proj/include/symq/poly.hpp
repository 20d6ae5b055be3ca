// Dense univariate polynomials over the rationals, the carrier for Q(t).
#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "symq/errors.hpp"
#include "symq/rational.hpp"

namespace symq {

// Coefficients indexed by degree; the leading coefficient is nonzero unless
// the polynomial is zero (empty coefficient sequence).
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT: implicit constant lift
    Poly(long n) : Poly(Rational(n)) {}                             // NOLINT
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t() { return monomial(1, 1); }
    static Poly monomial(const Rational& c, int deg) {
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
        p.c_.back() = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& leading() const { return c_.back(); }
    Rational coeff(int deg) const {
        if (deg < 0 || deg >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(deg)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r = p;
        for (auto& x : r.c_) x *= c;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw division_by_zero();
        Poly q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational c = r.leading() / d.leading();
            Poly term = monomial(c, k);
            q = q + term;
            r = r - term * d;
        }
        return {q, r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return leading().inverse() * *this;
    }

    // Classical Euclidean algorithm over Q; remainders kept monic to curb
    // coefficient growth. Result is monic (or zero).
    static Poly gcd(Poly a, Poly b) {
        a = a.monic();
        b = b.monic();
        while (!b.is_zero()) {
            Poly r = a.divmod(b).second.monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    Poly derivative() const {
        Poly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        r.trim();
        return r;
    }

    // p(q(t)) by Horner recursion.
    Poly compose(const Poly& q) const {
        Poly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + Poly(*it);
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly pow(int e) const {
        Poly r(Rational(1)), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    // Descending-degree text form, e.g. "t^2+1", "2*t^3-t+5/3", "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            Rational c = coeff(d);
            if (c.is_zero()) continue;
            bool first = out.empty();
            if (c.sign() < 0) {
                out += first ? "-" : "-";
                c = -c;
            } else if (!first) {
                out += "+";
            }
            if (d == 0) {
                out += c.str();
            } else {
                if (!c.is_one()) out += c.str() + "*";
                out += d == 1 ? "t" : "t^" + std::to_string(d);
            }
        }
        return out;
    }

    // Parses the str() form (tolerates spaces). Used by test fixtures.
    static Poly parse(const std::string& text) {
        size_t i = 0;
        auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
        auto integer = [&]() -> mpz_class {
            skip();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw parse_error(1, static_cast<int>(i) + 1, "expected integer in polynomial");
            return mpz_class(text.substr(start, i - start));
        };
        Poly result;
        skip();
        bool expect_term = true;
        int sign = 1;
        while (i < text.size()) {
            skip();
            if (i >= text.size()) break;
            char ch = text[i];
            if (ch == '+' || ch == '-') {
                if (expect_term && ch == '-') { sign = -sign; ++i; continue; }
                sign = (ch == '-') ? -1 : 1;
                ++i;
                expect_term = true;
                continue;
            }
            // one term: [coeff ['/' den]] ['*'] ['t' ['^' exp]]
            Rational c(1);
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                mpz_class n = integer();
                mpz_class d = 1;
                skip();
                if (i < text.size() && text[i] == '/') { ++i; d = integer(); }
                c = Rational(n, d);
                have_coeff = true;
                skip();
                if (i < text.size() && text[i] == '*') { ++i; skip(); }
            }
            int deg = 0;
            if (i < text.size() && text[i] == 't') {
                ++i;
                deg = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    deg = static_cast<int>(integer().get_si());
                }
            } else if (!have_coeff) {
                throw parse_error(1, static_cast<int>(i) + 1, "expected term in polynomial");
            }
            result = result + monomial(Rational(sign) * c, deg);
            sign = 1;
            expect_term = false;
        }
        return result;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace symq
