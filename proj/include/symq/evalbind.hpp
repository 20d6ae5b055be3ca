// Evaluation of symbolic normal forms under concrete bindings: the bridge
// between the term language and the exact model fields.
#pragma once

#include <functional>
#include <map>
#include <string>

#include "symq/expr.hpp"

namespace symq {

// Bindings for the symbols appearing in an expression. Unary symbols
// (additive, homomorphism) and binary symbols (bi-additive forms) are bound
// to callables; scalar symbols to field values.
template <class F>
struct SymBinding {
    std::map<std::string, std::function<F(const F&)>> unary;
    std::map<std::string, std::function<F(const F&, const F&)>> binary;
    std::map<std::string, F> scalars;
};

template <class F>
F eval_expr(const Expr& e, const SymBinding<F>& bind, const std::map<std::string, F>& vars) {
    auto eval_monomial = [&](const Monomial& m) {
        F r(1);
        for (const auto& [v, exp] : m) {
            auto it = vars.find(v);
            if (it == vars.end()) throw std::invalid_argument("no value bound for variable '" + v + "'");
            r = r * it->second.pow(exp);
        }
        return r;
    };
    F total(0);
    for (const auto& [t, c] : e.terms()) {
        F val = F(c);
        for (const auto& [app, mult] : t.apps) {
            F applied(0);
            switch (app.sym.arity()) {
                case 0: {
                    auto it = bind.scalars.find(app.sym.name);
                    if (it == bind.scalars.end())
                        throw std::invalid_argument("no value bound for scalar '" + app.sym.name + "'");
                    applied = it->second;
                    break;
                }
                case 1: {
                    auto it = bind.unary.find(app.sym.name);
                    if (it == bind.unary.end())
                        throw std::invalid_argument("no map bound for symbol '" + app.sym.name + "'");
                    applied = it->second(eval_monomial(app.args[0]));
                    break;
                }
                case 2: {
                    auto it = bind.binary.find(app.sym.name);
                    if (it == bind.binary.end())
                        throw std::invalid_argument("no form bound for symbol '" + app.sym.name + "'");
                    applied = it->second(eval_monomial(app.args[0]), eval_monomial(app.args[1]));
                    break;
                }
                default:
                    throw std::invalid_argument("evaluation of arity-" + std::to_string(app.sym.arity()) +
                                                " symbol '" + app.sym.name + "' is not supported");
            }
            val = val * applied.pow(mult);
        }
        val = val * eval_monomial(t.vars);
        total = total + val;
    }
    return total;
}

}  // namespace symq
