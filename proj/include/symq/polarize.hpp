// The difference operator, the polarization formula and the symmetrization
// method on normal-form expressions.
#pragma once

#include <string>
#include <vector>

#include "symq/expr.hpp"

namespace symq {

// Delta_inc e(var) = e[var -> var + inc] - e, renormalized.
inline Expr difference(const Expr& e, const std::string& var, const std::string& inc) {
    std::map<std::string, RawPtr> sub{{var, rsum({rvar(var), rvar(inc)})}};
    return subst_expand(e, sub) - e;
}

// Trace A(x, ..., x) of a symmetric multi-additive symbol.
inline Expr trace_expr(const FuncSymbol& A, const std::string& var = "x") {
    std::vector<RawPtr> args(static_cast<size_t>(A.arity()), rvar(var));
    return expand(rapply(A, std::move(args)));
}

inline std::vector<std::string> increment_names(int m, const std::string& prefix = "y") {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

// Iterated difference of the trace: Delta_{y1,...,ym} A*(x).
// Equals m! * A(y1,...,ym) when m = arity and 0 when m > arity.
inline Expr polarize(const FuncSymbol& A, int m, const std::string& var = "x") {
    Expr e = trace_expr(A, var);
    for (const auto& y : increment_names(m)) e = difference(e, var, y);
    return e;
}

inline std::vector<std::string> slot_names(int n, const std::string& prefix = "x") {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

// A(x1,...,xN) evaluated on the diagonal xi = var.
inline Expr diagonal(const Expr& a, const std::vector<std::string>& slots, const std::string& var = "x") {
    std::map<std::string, RawPtr> sub;
    for (const auto& s : slots) sub[s] = rvar(var);
    return subst_expand(a, sub);
}

// The symmetrization method: for a homogeneous degree-N generalized monomial
// E in one variable, substitute var -> x1 + ... + xN, expand by
// multi-additivity and keep the multilinear part, scaled by 1/N! so that
// diagonal(symmetrize(E, N)) = E. The result is symmetric in x1..xN.
//
// Homogeneity is verified first by scaling: E[var -> k*var] must equal
// k^N * E for k in {2, 3}; otherwise homogeneity_error carries the witness.
inline Expr symmetrize(const Expr& e, int n, const std::string& var) {
    for (long k : {2L, 3L}) {
        std::map<std::string, RawPtr> scale_sub{{var, rprod({rconst(Rational(k)), rvar(var)})}};
        if (subst_expand(e, scale_sub) != e.scaled(Rational(k).pow(n))) {
            std::string witness = "scaling " + var + " -> " + std::to_string(k) + "*" + var +
                                  " does not multiply the expression by " + std::to_string(k) + "^" +
                                  std::to_string(n);
            for (const auto& [t, c] : e.terms()) {
                if (t.degree_of(var) != n) {
                    Expr one_term;
                    one_term.add_term(t, c);
                    witness += "; term " + one_term.str() + " has degree " +
                               std::to_string(t.degree_of(var)) + " in " + var;
                    break;
                }
            }
            throw homogeneity_error(witness);
        }
    }

    std::vector<std::string> slots = slot_names(n);
    std::vector<RawPtr> sum_parts;
    for (const auto& s : slots) sum_parts.push_back(rvar(s));
    std::map<std::string, RawPtr> sub{{var, rsum(std::move(sum_parts))}};
    Expr full = subst_expand(e, sub);

    Expr multilinear;
    for (const auto& [t, c] : full.terms()) {
        bool keep = true;
        for (const auto& s : slots)
            if (t.degree_of(s) != 1) {
                keep = false;
                break;
            }
        if (keep) multilinear.add_term(t, c);
    }
    return multilinear.scaled(Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
}

// Convenience overload: the unique free variable of e is the symmetrization
// variable. Zero input symmetrizes to zero at every degree.
inline Expr symmetrize(const Expr& e, int n) {
    auto vars = e.free_vars();
    if (e.is_zero()) return Expr::zero();
    if (vars.size() != 1)
        throw homogeneity_error("expected exactly one free variable, found " + std::to_string(vars.size()));
    return symmetrize(e, n, *vars.begin());
}

}  // namespace symq
