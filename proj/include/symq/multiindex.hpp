// Fixed-rank multi-indices with componentwise order and binomials.
#pragma once

#include <string>
#include <vector>

#include "symq/rational.hpp"

namespace symq {

class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> components) : c_(std::move(components)) {}
    static MultiIndex zeros(int rank) { return MultiIndex(std::vector<int>(static_cast<size_t>(rank), 0)); }
    static MultiIndex unit(int rank, int i) {
        MultiIndex e = zeros(rank);
        e.c_[static_cast<size_t>(i)] = 1;
        return e;
    }

    int rank() const { return static_cast<int>(c_.size()); }
    int at(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<int>& components() const { return c_; }

    int weight() const {  // |alpha|
        int w = 0;
        for (int x : c_) w += x;
        return w;
    }
    bool is_zero() const { return weight() == 0; }

    MultiIndex plus_unit(int i) const {
        MultiIndex r = *this;
        r.c_[static_cast<size_t>(i)] += 1;
        return r;
    }
    MultiIndex minus(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        return r;
    }
    MultiIndex plus(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }

    // componentwise partial order
    bool leq(const MultiIndex& o) const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] > o.c_[i]) return false;
        return true;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.c_ == b.c_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.c_ != b.c_; }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.c_ < b.c_; }  // container order

    // binomial(alpha, beta) = prod_i binomial(alpha_i, beta_i); beta <= alpha
    static Rational binom(const MultiIndex& alpha, const MultiIndex& beta) {
        mpz_class r = 1;
        for (int i = 0; i < alpha.rank(); ++i)
            r *= binomial(static_cast<unsigned>(alpha.at(i)), static_cast<unsigned>(beta.at(i)));
        return Rational(r);
    }

    // "2" for rank 1, "1_1" for rank 2: identifier-safe suffix
    std::string suffix() const {
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += "_";
            s += std::to_string(c_[i]);
        }
        return s;
    }

    // "[1,1]" display form
    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + "]";
    }

    // all beta with beta <= alpha, in lexicographic order
    std::vector<MultiIndex> lower_set() const {
        std::vector<MultiIndex> out;
        MultiIndex beta = zeros(rank());
        for (;;) {
            out.push_back(beta);
            int i = rank() - 1;
            while (i >= 0 && beta.c_[static_cast<size_t>(i)] == c_[static_cast<size_t>(i)]) {
                beta.c_[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            beta.c_[static_cast<size_t>(i)] += 1;
        }
        return out;
    }

private:
    std::vector<int> c_;
};

// All indices of the given rank with |alpha| <= bound, graded lexicographic.
inline std::vector<MultiIndex> indices_up_to(int rank, int bound) {
    std::vector<MultiIndex> by_weight;
    MultiIndex top(std::vector<int>(static_cast<size_t>(rank), bound));
    std::vector<MultiIndex> all = top.lower_set();
    std::vector<MultiIndex> out;
    for (int w = 0; w <= bound; ++w)
        for (const auto& a : all)
            if (a.weight() == w) out.push_back(a);
    return out;
}

}  // namespace symq
