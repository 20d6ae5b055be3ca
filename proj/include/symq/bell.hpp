// Multi-index Bell polynomials, defined operationally by the recurrence
//   B_{alpha+e_i} = sum_{beta <= alpha} binom(alpha, beta) B_beta a_{alpha-beta+e_i}
// over formal scalar variables a_beta, with B_0 = 1. The defining property of
// moment sequences is the acceptance oracle for this construction: any
// convention passing it is correct.
#pragma once

#include <map>
#include <string>

#include "symq/expr.hpp"
#include "symq/multiindex.hpp"

namespace symq {

inline std::string bell_scalar_name(const std::string& prefix, const MultiIndex& beta) {
    return prefix + beta.suffix();
}

inline Expr bell_scalar(const std::string& prefix, const MultiIndex& beta) {
    return Expr::atom(App(FuncSymbol::scalar(bell_scalar_name(prefix, beta)), {}));
}

class BellCache {
public:
    explicit BellCache(int rank, std::string prefix = "a") : rank_(rank), prefix_(std::move(prefix)) {}

    int rank() const { return rank_; }
    const std::string& prefix() const { return prefix_; }

    // Canonical route: recurse through the smallest coordinate with a
    // positive entry. Coordinate independence is a tested invariant.
    const Expr& bell(const MultiIndex& alpha) {
        auto it = memo_.find(alpha);
        if (it != memo_.end()) return it->second;
        Expr value;
        if (alpha.is_zero()) {
            value = Expr::constant(1);
        } else {
            int i = 0;
            while (alpha.at(i) == 0) ++i;
            value = bell_via(alpha, i);
        }
        return memo_.emplace(alpha, std::move(value)).first->second;
    }

    // The recurrence routed through coordinate i (alpha_i must be positive).
    Expr bell_via(const MultiIndex& alpha, int i) {
        if (alpha.at(i) <= 0) throw std::invalid_argument("bell_via: coordinate has no positive entry");
        std::vector<int> comps = alpha.components();
        comps[static_cast<size_t>(i)] -= 1;
        MultiIndex prev(comps);

        Expr sum;
        for (const MultiIndex& beta : prev.lower_set()) {
            MultiIndex idx = prev.minus(beta).plus_unit(i);
            sum += (bell(beta) * bell_scalar(prefix_, idx)).scaled(MultiIndex::binom(prev, beta));
        }
        return sum;
    }

private:
    int rank_;
    std::string prefix_;
    std::map<MultiIndex, Expr> memo_;
};

}  // namespace symq
