// Deterministic seeded generation of random field elements.
//
// splitmix64 is used instead of <random> engines/distributions so that a
// given seed produces the same tuple stream on every platform; reports and
// CLI output stay byte-identical across toolchains.
#pragma once

#include <cstdint>

#include "symq/poly.hpp"
#include "symq/quadext.hpp"
#include "symq/ratfunc.hpp"

namespace symq {

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed = 0) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough in [0, n); n is tiny next to 2^64 so modulo bias is moot.
    uint64_t below(uint64_t n) { return next() % n; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

// Random elements of Q(t): polynomials of degree <= max_degree with integer
// coefficients of magnitude <= max_coeff, denominator forced nonzero. Small
// enough for fast exact arithmetic, rich enough that no tested identity can
// hold by accident.
class RatFuncSampler {
public:
    explicit RatFuncSampler(uint64_t seed, int max_degree = 4, long max_coeff = 10)
        : rng_(seed), max_degree_(max_degree), max_coeff_(max_coeff) {}

    Poly poly() {
        int deg = static_cast<int>(rng_.below(static_cast<uint64_t>(max_degree_ + 1)));
        std::vector<Rational> c(static_cast<size_t>(deg) + 1);
        for (auto& x : c) x = Rational(rng_.range(-max_coeff_, max_coeff_));
        return Poly(std::move(c));
    }

    Poly nonzero_poly() {
        for (;;) {
            Poly p = poly();
            if (!p.is_zero()) return p;
        }
    }

    RatFunc operator()() { return RatFunc(poly(), nonzero_poly()); }

    RatFunc nonzero() {
        for (;;) {
            RatFunc x = (*this)();
            if (!x.is_zero()) return x;
        }
    }

private:
    SplitMix64 rng_;
    int max_degree_;
    long max_coeff_;
};

// Random elements of Q(sqrt(d)) with small rational components.
class QuadExtSampler {
public:
    explicit QuadExtSampler(uint64_t seed, long long d = 2, long max_coeff = 10)
        : rng_(seed), d_(d), max_coeff_(max_coeff) {}

    QuadExt operator()() {
        return QuadExt(small_rational(), small_rational(), d_);
    }

    QuadExt nonzero() {
        for (;;) {
            QuadExt x = (*this)();
            if (!x.is_zero()) return x;
        }
    }

private:
    Rational small_rational() {
        long num = rng_.range(-max_coeff_, max_coeff_);
        long den = rng_.range(1, max_coeff_);
        return Rational(num, den);
    }
    SplitMix64 rng_;
    long long d_;
    long max_coeff_;
};

}  // namespace symq
