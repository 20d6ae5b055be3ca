// Immutable symbolic terms over declared function symbols, kept in
// multilinear normal form: a sum of terms, each a rational coefficient times
// a commutative multiset of atoms. An atom is a plain variable or a symbol
// application whose arguments are pure variable monomials; multi-additive
// applications store their arguments as a sorted multiset.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symq/errors.hpp"
#include "symq/rational.hpp"
#include "symq/symbol.hpp"

namespace symq {

// Commutative product of variables; empty monomial is the unit 1.
using Monomial = std::map<std::string, int>;

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

inline int monomial_degree_of(const Monomial& m, const std::string& var) {
    auto it = m.find(var);
    return it == m.end() ? 0 : it->second;
}

inline std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : m) {
        if (!out.empty()) out += "*";
        out += v;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

// A function symbol applied to argument monomials.
struct App {
    FuncSymbol sym;
    std::vector<Monomial> args;

    App(FuncSymbol s, std::vector<Monomial> a) : sym(std::move(s)), args(std::move(a)) {
        if (sym.kind == SymKind::MultiAdditive) std::sort(args.begin(), args.end());
    }

    friend bool operator<(const App& a, const App& b) {
        if (a.sym.name != b.sym.name) return a.sym.name < b.sym.name;
        return a.args < b.args;
    }
    friend bool operator==(const App& a, const App& b) {
        return a.sym.name == b.sym.name && a.args == b.args;
    }

    std::string str() const {
        if (args.empty()) return sym.name;  // opaque scalar
        std::string out = sym.name + "(";
        for (size_t i = 0; i < args.size(); ++i) {
            if (i) out += ", ";
            out += monomial_str(args[i]);
        }
        return out + ")";
    }
};

// One normal-form term: multiset of applications times a variable monomial.
// The rational coefficient lives in the enclosing Expr map.
struct Term {
    std::map<App, int> apps;
    Monomial vars;

    friend bool operator<(const Term& a, const Term& b) {
        if (a.apps != b.apps) return a.apps < b.apps;
        return a.vars < b.vars;
    }
    friend bool operator==(const Term& a, const Term& b) {
        return a.apps == b.apps && a.vars == b.vars;
    }

    bool is_unit() const { return apps.empty() && vars.empty(); }

    int degree_of(const std::string& var) const {
        int d = monomial_degree_of(vars, var);
        for (const auto& [app, mult] : apps)
            for (const auto& arg : app.args) d += mult * monomial_degree_of(arg, var);
        return d;
    }

    int total_degree() const {
        int d = monomial_degree(vars);
        for (const auto& [app, mult] : apps)
            for (const auto& arg : app.args) d += mult * monomial_degree(arg);
        return d;
    }

    Term merged_with(const Term& o) const {
        Term r = *this;
        for (const auto& [app, mult] : o.apps) r.apps[app] += mult;
        for (const auto& [v, e] : o.vars) r.vars[v] += e;
        return r;
    }

    void collect_vars(std::set<std::string>& out) const {
        for (const auto& [v, e] : vars) out.insert(v);
        for (const auto& [app, mult] : apps)
            for (const auto& arg : app.args)
                for (const auto& [v, e] : arg) out.insert(v);
    }
};

class Expr {
public:
    Expr() = default;

    static Expr zero() { return Expr(); }
    static Expr constant(const Rational& c) {
        Expr e;
        if (!c.is_zero()) e.terms_[Term{}] = c;
        return e;
    }
    static Expr variable(const std::string& name) {
        Expr e;
        Term t;
        t.vars[name] = 1;
        e.terms_[t] = Rational(1);
        return e;
    }
    static Expr atom(App app) {
        Expr e;
        Term t;
        t.apps[std::move(app)] = 1;
        e.terms_[t] = Rational(1);
        return e;
    }
    static Expr monomial_term(const Monomial& m) {
        Expr e;
        Term t;
        t.vars = m;
        e.terms_[t] = Rational(1);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Term, Rational>& terms() const { return terms_; }

    friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    Expr operator-() const { return scaled(Rational(-1)); }

    Expr scaled(const Rational& c) const {
        Expr r;
        if (c.is_zero()) return r;
        for (const auto& [t, q] : terms_) r.terms_[t] = q * c;
        return r;
    }

    friend Expr operator+(const Expr& a, const Expr& b) {
        Expr r = a;
        for (const auto& [t, q] : b.terms_) {
            auto it = r.terms_.find(t);
            if (it == r.terms_.end()) {
                r.terms_[t] = q;
            } else {
                it->second += q;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }
    friend Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
    friend Expr operator*(const Expr& a, const Expr& b) {
        Expr r;
        for (const auto& [ta, qa] : a.terms_)
            for (const auto& [tb, qb] : b.terms_) {
                Term t = ta.merged_with(tb);
                auto it = r.terms_.find(t);
                if (it == r.terms_.end()) {
                    Rational q = qa * qb;
                    if (!q.is_zero()) r.terms_[std::move(t)] = q;
                } else {
                    it->second += qa * qb;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }
    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator-=(const Expr& o) { return *this = *this - o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }

    Expr pow(int e) const {
        Expr r = Expr::constant(1);
        Expr base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    std::set<std::string> free_vars() const {
        std::set<std::string> out;
        for (const auto& [t, q] : terms_) t.collect_vars(out);
        return out;
    }

    void add_term(const Term& t, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_[t] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Deterministic text form: terms in canonical order, explicit coefficients.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [t, q] : terms_) {
            Rational mag = q.abs();
            if (first) {
                if (q.sign() < 0) out += "-";
                first = false;
            } else {
                out += q.sign() < 0 ? " - " : " + ";
            }
            std::string body;
            for (const auto& [app, mult] : t.apps) {
                if (!body.empty()) body += "*";
                body += app.str();
                if (mult > 1) body += "^" + std::to_string(mult);
            }
            for (const auto& [v, e] : t.vars) {
                if (!body.empty()) body += "*";
                body += v;
                if (e > 1) body += "^" + std::to_string(e);
            }
            if (body.empty()) {
                out += mag.str();
            } else if (mag.is_one()) {
                out += body;
            } else {
                out += mag.str() + "*" + body;
            }
        }
        return out;
    }

private:
    std::map<Term, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Raw (unexpanded) expression trees and expansion to normal form.

struct Raw;
using RawPtr = std::shared_ptr<const Raw>;

struct Raw {
    enum class Tag { Const, Var, Sum, Prod, Pow, Apply };
    Tag tag = Tag::Const;
    Rational cval;
    std::string var;
    std::vector<RawPtr> kids;
    int exponent = 0;
    FuncSymbol sym;
};

inline RawPtr rconst(const Rational& c) {
    auto r = std::make_shared<Raw>();
    r->tag = Raw::Tag::Const;
    r->cval = c;
    return r;
}
inline RawPtr rvar(const std::string& name) {
    auto r = std::make_shared<Raw>();
    r->tag = Raw::Tag::Var;
    r->var = name;
    return r;
}
inline RawPtr rsum(std::vector<RawPtr> kids) {
    auto r = std::make_shared<Raw>();
    r->tag = Raw::Tag::Sum;
    r->kids = std::move(kids);
    return r;
}
inline RawPtr rprod(std::vector<RawPtr> kids) {
    auto r = std::make_shared<Raw>();
    r->tag = Raw::Tag::Prod;
    r->kids = std::move(kids);
    return r;
}
inline RawPtr rpow(RawPtr base, int e) {
    auto r = std::make_shared<Raw>();
    r->tag = Raw::Tag::Pow;
    r->kids = {std::move(base)};
    r->exponent = e;
    return r;
}
inline RawPtr rapply(FuncSymbol sym, std::vector<RawPtr> args) {
    auto r = std::make_shared<Raw>();
    r->tag = Raw::Tag::Apply;
    r->sym = std::move(sym);
    r->kids = std::move(args);
    return r;
}
inline RawPtr rneg(RawPtr a) { return rprod({rconst(Rational(-1)), std::move(a)}); }
inline RawPtr rsub(RawPtr a, RawPtr b) { return rsum({std::move(a), rneg(std::move(b))}); }

namespace detail {

// Distributes one expanded application argument by (multi-)additivity:
// every argument term must be a pure variable monomial with its rational
// coefficient pulled out front.
inline void require_monomial_terms(const FuncSymbol& sym, const Expr& arg) {
    for (const auto& [t, c] : arg.terms())
        if (!t.apps.empty())
            throw expand_error("argument of '" + sym.name +
                               "' contains a function application and cannot be expanded");
}

inline Expr apply_symbol(const FuncSymbol& sym, const std::vector<Expr>& args) {
    if (static_cast<int>(args.size()) != sym.arity())
        throw expand_error("'" + sym.name + "' expects " + std::to_string(sym.arity()) +
                           " argument(s), got " + std::to_string(args.size()));
    switch (sym.kind) {
        case SymKind::Power:
            return args[0].pow(sym.param);
        case SymKind::Scalar:
            return Expr::atom(App(sym, {}));
        case SymKind::Additive: {
            require_monomial_terms(sym, args[0]);
            Expr out;
            for (const auto& [t, c] : args[0].terms()) out += Expr::atom(App(sym, {t.vars})).scaled(c);
            return out;
        }
        case SymKind::Homomorphism: {
            // Additive over sums (rational scalars pull out by Q-linearity)
            // and multiplicative over the variables of each monomial.
            require_monomial_terms(sym, args[0]);
            Expr out;
            for (const auto& [t, c] : args[0].terms()) {
                Expr prod = Expr::constant(1);
                if (t.vars.empty()) {
                    prod = Expr::atom(App(sym, {Monomial{}}));
                } else {
                    for (const auto& [v, e] : t.vars)
                        prod *= Expr::atom(App(sym, {Monomial{{v, 1}}})).pow(e);
                }
                out += prod.scaled(c);
            }
            return out;
        }
        case SymKind::MultiAdditive: {
            for (const auto& a : args) require_monomial_terms(sym, a);
            // Distribute each slot over its argument terms.
            Expr out;
            std::vector<std::vector<std::pair<Term, Rational>>> slots;
            slots.reserve(args.size());
            for (const auto& a : args)
                slots.emplace_back(a.terms().begin(), a.terms().end());
            std::vector<size_t> idx(args.size(), 0);
            for (const auto& s : slots)
                if (s.empty()) return Expr::zero();
            for (;;) {
                Rational c(1);
                std::vector<Monomial> mono;
                mono.reserve(args.size());
                for (size_t i = 0; i < slots.size(); ++i) {
                    c *= slots[i][idx[i]].second;
                    mono.push_back(slots[i][idx[i]].first.vars);
                }
                out += Expr::atom(App(sym, std::move(mono))).scaled(c);
                size_t i = 0;
                for (; i < idx.size(); ++i) {
                    if (++idx[i] < slots[i].size()) break;
                    idx[i] = 0;
                }
                if (i == idx.size()) break;
            }
            return out;
        }
    }
    throw expand_error("unknown symbol kind for '" + sym.name + "'");
}

}  // namespace detail

// Normal form of a raw expression tree. Multi-additive and additive
// applications distribute over sums and pull rational scalars out;
// homomorphism applications additionally split over products; powers of sums
// expand multinomially.
inline Expr expand(const RawPtr& raw) {
    switch (raw->tag) {
        case Raw::Tag::Const: return Expr::constant(raw->cval);
        case Raw::Tag::Var: return Expr::variable(raw->var);
        case Raw::Tag::Sum: {
            Expr out;
            for (const auto& k : raw->kids) out += expand(k);
            return out;
        }
        case Raw::Tag::Prod: {
            Expr out = Expr::constant(1);
            for (const auto& k : raw->kids) out *= expand(k);
            return out;
        }
        case Raw::Tag::Pow: {
            if (raw->exponent < 0) throw expand_error("negative exponent");
            return expand(raw->kids[0]).pow(raw->exponent);
        }
        case Raw::Tag::Apply: {
            std::vector<Expr> args;
            args.reserve(raw->kids.size());
            for (const auto& k : raw->kids) args.push_back(expand(k));
            return detail::apply_symbol(raw->sym, args);
        }
    }
    throw expand_error("corrupt raw expression");
}

inline RawPtr monomial_to_raw(const Monomial& m) {
    if (m.empty()) return rconst(Rational(1));
    std::vector<RawPtr> parts;
    for (const auto& [v, e] : m) parts.push_back(e == 1 ? rvar(v) : rpow(rvar(v), e));
    return parts.size() == 1 ? parts[0] : rprod(std::move(parts));
}

inline RawPtr to_raw(const Expr& e) {
    std::vector<RawPtr> terms;
    for (const auto& [t, c] : e.terms()) {
        std::vector<RawPtr> factors;
        factors.push_back(rconst(c));
        for (const auto& [app, mult] : t.apps) {
            std::vector<RawPtr> args;
            for (const auto& arg : app.args) args.push_back(monomial_to_raw(arg));
            RawPtr a = rapply(app.sym, std::move(args));
            factors.push_back(mult == 1 ? a : rpow(a, mult));
        }
        if (!t.vars.empty()) factors.push_back(monomial_to_raw(t.vars));
        terms.push_back(rprod(std::move(factors)));
    }
    return rsum(std::move(terms));
}

// Simultaneous substitution of raw expressions for variables.
inline RawPtr subst(const RawPtr& raw, const std::map<std::string, RawPtr>& sub) {
    switch (raw->tag) {
        case Raw::Tag::Const: return raw;
        case Raw::Tag::Var: {
            auto it = sub.find(raw->var);
            return it == sub.end() ? raw : it->second;
        }
        default: {
            auto r = std::make_shared<Raw>(*raw);
            for (auto& k : r->kids) k = subst(k, sub);
            return r;
        }
    }
}

// Substitute-and-renormalize on normal forms.
inline Expr subst_expand(const Expr& e, const std::map<std::string, RawPtr>& sub) {
    return expand(subst(to_raw(e), sub));
}

// Replace an opaque scalar atom by an arbitrary expression.
inline Expr subst_scalar(const Expr& e, const std::string& scalar_name, const Expr& value) {
    Expr out;
    for (const auto& [t, c] : e.terms()) {
        Expr piece = Expr::constant(c);
        Term rest;
        rest.vars = t.vars;
        for (const auto& [app, mult] : t.apps) {
            if (app.sym.kind == SymKind::Scalar && app.sym.name == scalar_name)
                piece *= value.pow(mult);
            else
                rest.apps[app] = mult;
        }
        Expr rest_expr;
        rest_expr.add_term(rest, Rational(1));
        out += piece * rest_expr;
    }
    return out;
}

}  // namespace symq
