// Declared function symbols of the term language.
#pragma once

#include <string>

namespace symq {

// MultiAdditive   symmetric n-additive symbol, arity = param
// Additive        additive symbol (1-additive)
// Homomorphism    additive and multiplicative symbol, splits over products
// Power           the concrete map x -> x^param; disappears on expansion
// Scalar          opaque unknown scalar, arity 0
enum class SymKind { MultiAdditive, Additive, Homomorphism, Power, Scalar };

struct FuncSymbol {
    std::string name;
    SymKind kind = SymKind::Additive;
    int param = 0;  // arity for MultiAdditive, exponent for Power

    int arity() const {
        switch (kind) {
            case SymKind::MultiAdditive: return param;
            case SymKind::Additive:
            case SymKind::Homomorphism:
            case SymKind::Power: return 1;
            case SymKind::Scalar: return 0;
        }
        return 0;
    }

    static FuncSymbol multi_additive(std::string name, int arity) {
        return FuncSymbol{std::move(name), SymKind::MultiAdditive, arity};
    }
    static FuncSymbol bi_additive(std::string name) { return multi_additive(std::move(name), 2); }
    static FuncSymbol additive(std::string name) { return FuncSymbol{std::move(name), SymKind::Additive, 0}; }
    static FuncSymbol homomorphism(std::string name) { return FuncSymbol{std::move(name), SymKind::Homomorphism, 0}; }
    static FuncSymbol power(std::string name, int exponent) { return FuncSymbol{std::move(name), SymKind::Power, exponent}; }
    static FuncSymbol scalar(std::string name) { return FuncSymbol{std::move(name), SymKind::Scalar, 0}; }

    // Names are unique within a declaration context, so identity is the name.
    friend bool operator==(const FuncSymbol& a, const FuncSymbol& b) { return a.name == b.name; }
    friend bool operator!=(const FuncSymbol& a, const FuncSymbol& b) { return a.name != b.name; }
    friend bool operator<(const FuncSymbol& a, const FuncSymbol& b) { return a.name < b.name; }
};

}  // namespace symq
