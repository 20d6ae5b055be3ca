// Ground rewrite facts and proof-step specialization.
//
// A fact maps an application pattern like B(x, 1) to an expression over its
// pattern variables, e.g. a(x). Pattern arguments are either the literal 1
// (matching the empty monomial) or a variable binding one whole argument
// monomial. Facts are ordered; the first matching fact fires.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "symq/expr.hpp"

namespace symq {

struct ArgPat {
    bool is_one = false;
    std::string var;  // pattern variable when !is_one

    static ArgPat one() { return ArgPat{true, {}}; }
    static ArgPat bind(std::string v) { return ArgPat{false, std::move(v)}; }

    friend bool operator==(const ArgPat& a, const ArgPat& b) {
        return a.is_one == b.is_one && a.var == b.var;
    }
    std::string str() const { return is_one ? "1" : var; }
};

struct Fact {
    FuncSymbol sym;
    std::vector<ArgPat> pattern;
    Expr rhs;  // free variables must be pattern variables

    std::string str() const {
        std::string out = sym.name + "(";
        for (size_t i = 0; i < pattern.size(); ++i) {
            if (i) out += ", ";
            out += pattern[i].str();
        }
        return out + ") = " + rhs.str();
    }

    friend bool operator==(const Fact& a, const Fact& b) {
        return a.sym == b.sym && a.pattern == b.pattern && a.rhs == b.rhs;
    }
};

namespace detail {

// Well-founded complexity on symbols: (arity, name) lexicographically.
inline bool symbol_rank_less(const FuncSymbol& a, const FuncSymbol& b) {
    if (a.arity() != b.arity()) return a.arity() < b.arity();
    return a.name < b.name;
}

// Pattern shape with variables renamed by first occurrence; two facts with
// the same shape would shadow each other.
inline std::string pattern_shape(const Fact& f) {
    std::vector<ArgPat> pats = f.pattern;
    if (f.sym.kind == SymKind::MultiAdditive)
        std::sort(pats.begin(), pats.end(), [](const ArgPat& a, const ArgPat& b) {
            if (a.is_one != b.is_one) return a.is_one;
            return a.var < b.var;
        });
    std::map<std::string, std::string> rename;
    std::string shape = f.sym.name + "(";
    for (size_t i = 0; i < pats.size(); ++i) {
        if (i) shape += ",";
        if (pats[i].is_one) {
            shape += "1";
        } else {
            auto [it, fresh] = rename.emplace(pats[i].var, "$" + std::to_string(rename.size()));
            shape += it->second;
        }
    }
    return shape + ")";
}

}  // namespace detail

using Binding = std::map<std::string, Monomial>;

// Tries to match one application against a fact's left-hand side. Symmetric
// symbols are matched up to argument permutation, in lexicographic
// permutation order so results are deterministic.
inline std::optional<Binding> match_fact(const Fact& f, const App& app) {
    if (!(f.sym == app.sym) || f.pattern.size() != app.args.size()) return std::nullopt;
    const size_t n = f.pattern.size();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    const bool symmetric = f.sym.kind == SymKind::MultiAdditive && n > 1;
    do {
        Binding b;
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            const ArgPat& pat = f.pattern[i];
            const Monomial& arg = app.args[perm[i]];
            if (pat.is_one) {
                ok = arg.empty();
            } else {
                auto it = b.find(pat.var);
                if (it == b.end())
                    b.emplace(pat.var, arg);
                else
                    ok = it->second == arg;
            }
        }
        if (ok) return b;
        if (!symmetric) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Ordered fact list. Construction enforces termination: every application
// (or scalar) in a fact's right-hand side must use a symbol of strictly
// smaller (arity, name) rank than the left-hand symbol, so each rewrite
// strictly decreases the multiset of application symbols.
class FactSet {
public:
    FactSet() = default;

    void add(Fact f) {
        for (const auto& [t, c] : f.rhs.terms())
            for (const auto& [app, mult] : t.apps)
                if (!detail::symbol_rank_less(app.sym, f.sym))
                    throw fact_error("fact '" + f.str() + "' does not reduce symbol complexity: '" +
                                     app.sym.name + "' is not smaller than '" + f.sym.name + "'");
        // rhs may reference only pattern variables
        std::set<std::string> bound;
        for (const auto& p : f.pattern)
            if (!p.is_one) bound.insert(p.var);
        for (const auto& v : f.rhs.free_vars())
            if (!bound.count(v))
                throw fact_error("fact '" + f.str() + "' uses unbound variable '" + v + "'");
        std::string shape = detail::pattern_shape(f);
        for (const auto& existing : facts_)
            if (detail::pattern_shape(existing) == shape)
                throw fact_error("duplicate fact pattern '" + shape + "'");
        facts_.push_back(std::move(f));
    }

    const std::vector<Fact>& facts() const { return facts_; }
    bool empty() const { return facts_.empty(); }

    friend bool operator==(const FactSet& a, const FactSet& b) { return a.facts_ == b.facts_; }

private:
    std::vector<Fact> facts_;
};

// Applies facts to fixpoint. Terminates by the FactSet rank invariant.
inline Expr rewrite(Expr e, const FactSet& facts) {
    if (facts.empty()) return e;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [t, c] : e.terms()) {
            for (const auto& [app, mult] : t.apps) {
                for (const Fact& f : facts.facts()) {
                    auto binding = match_fact(f, app);
                    if (!binding) continue;
                    std::map<std::string, RawPtr> sub;
                    for (const auto& [v, m] : *binding) sub[v] = monomial_to_raw(m);
                    Expr replacement = subst_expand(f.rhs, sub);
                    Term rest = t;
                    if (--rest.apps[app] == 0) rest.apps.erase(app);
                    Expr rest_expr;
                    rest_expr.add_term(rest, c);
                    Expr removed;
                    removed.add_term(t, c);
                    e = e - removed + rest_expr * replacement;
                    changed = true;
                    break;
                }
                if (changed) break;
            }
            if (changed) break;
        }
    }
    return e;
}

// A specialization slot: the constant 1 or a (fresh) variable.
struct SlotVal {
    bool is_one = false;
    std::string var;
    static SlotVal one() { return SlotVal{true, {}}; }
    static SlotVal v(std::string name) { return SlotVal{false, std::move(name)}; }
    friend bool operator==(const SlotVal& a, const SlotVal& b) {
        return a.is_one == b.is_one && a.var == b.var;
    }
    std::string str() const { return is_one ? "1" : var; }
};

// Substitute, re-expand, then rewrite to fixpoint with the facts.
// The assignment must cover every free variable of the expression.
inline Expr specialize(const Expr& a, const std::map<std::string, SlotVal>& assignment,
                       const FactSet& facts = {}) {
    auto free = a.free_vars();
    for (const auto& v : free)
        if (!assignment.count(v))
            throw std::invalid_argument("specialize: no assignment for free variable '" + v + "'");
    std::map<std::string, RawPtr> sub;
    for (const auto& [v, s] : assignment) sub[v] = s.is_one ? rconst(Rational(1)) : rvar(s.var);
    return rewrite(subst_expand(a, sub), facts);
}

// Positional form: slot i of a symmetrized expression is the variable x{i+1}.
inline Expr specialize_at(const Expr& a, const std::vector<SlotVal>& slots, const FactSet& facts = {}) {
    std::map<std::string, SlotVal> assignment;
    for (size_t i = 0; i < slots.size(); ++i)
        assignment["x" + std::to_string(i + 1)] = slots[i];
    return specialize(a, assignment, facts);
}

}  // namespace symq
