// Declaration + equation language: the artifact's input format.
//
//   biadditive B;  multiadditive A arity 4;  additive a;  hom phi;
//   power pi2 2;   scalar c;
//   eq mult: B(x*y, x*y) = B(x,x) * B(y,y);
//   fact bx1: B(x, 1) = a(x);        (the name is optional)
//   degree mult 4;
//   specialize mult at (x, x, 1, 1) with b11, bx1;
//
// Expressions use + - * ^ with integer and rational literals p/q;
// precedence ^ > * > unary - > binary + -, left-associative.
#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symq/expr.hpp"
#include "symq/rewrite.hpp"

namespace symq {

struct Declaration {
    FuncSymbol sym;
    friend bool operator==(const Declaration& a, const Declaration& b) {
        return a.sym == b.sym && a.sym.kind == b.sym.kind && a.sym.param == b.sym.param;
    }
};

struct Equation {
    std::string name;
    Expr lhs, rhs;
    friend bool operator==(const Equation& a, const Equation& b) {
        return a.name == b.name && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

struct FactItem {
    std::string name;  // empty for anonymous facts
    Fact fact;
    friend bool operator==(const FactItem& a, const FactItem& b) {
        return a.name == b.name && a.fact == b.fact;
    }
};

struct DegreeDirective {
    std::string eq;
    int degree = 0;
    friend bool operator==(const DegreeDirective& a, const DegreeDirective& b) {
        return a.eq == b.eq && a.degree == b.degree;
    }
};

struct SpecializeDirective {
    std::string eq;
    std::vector<SlotVal> slots;
    bool has_with = false;
    std::vector<std::string> with;  // named facts; without a with-clause all script facts apply
    friend bool operator==(const SpecializeDirective& a, const SpecializeDirective& b) {
        return a.eq == b.eq && a.slots == b.slots && a.has_with == b.has_with && a.with == b.with;
    }
};

using ScriptItem = std::variant<Declaration, Equation, FactItem, DegreeDirective, SpecializeDirective>;

struct Script {
    std::vector<ScriptItem> items;

    friend bool operator==(const Script& a, const Script& b) { return a.items == b.items; }

    std::map<std::string, FuncSymbol> symbols() const {
        std::map<std::string, FuncSymbol> out;
        for (const auto& item : items)
            if (const auto* d = std::get_if<Declaration>(&item)) out.emplace(d->sym.name, d->sym);
        return out;
    }

    const Equation* find_equation(const std::string& name) const {
        for (const auto& item : items)
            if (const auto* e = std::get_if<Equation>(&item))
                if (e->name == name) return e;
        return nullptr;
    }

    std::optional<int> degree_of(const std::string& eq) const {
        for (const auto& item : items)
            if (const auto* d = std::get_if<DegreeDirective>(&item))
                if (d->eq == eq) return d->degree;
        return std::nullopt;
    }

    // Facts selected by name; an empty selection list means every fact.
    FactSet fact_set(const std::vector<std::string>* names = nullptr) const {
        FactSet out;
        for (const auto& item : items) {
            const auto* f = std::get_if<FactItem>(&item);
            if (!f) continue;
            if (names && std::find(names->begin(), names->end(), f->name) == names->end()) continue;
            out.add(f->fact);
        }
        return out;
    }

    std::vector<const SpecializeDirective*> specializations() const {
        std::vector<const SpecializeDirective*> out;
        for (const auto& item : items)
            if (const auto* s = std::get_if<SpecializeDirective>(&item)) out.push_back(s);
        return out;
    }

    std::vector<const Equation*> equations() const {
        std::vector<const Equation*> out;
        for (const auto& item : items)
            if (const auto* e = std::get_if<Equation>(&item)) out.push_back(e);
        return out;
    }
};

// ---------------------------------------------------------------------------
// Parsing

namespace dsl_detail {

struct Token {
    enum class Kind { Ident, Nat, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        tok_ = Token{Token::Kind::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        char c = src_[pos_];
        tok_.line = line_;
        tok_.col = col_;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                text += src_[pos_];
                bump();
            }
            tok_.kind = Token::Kind::Ident;
            tok_.text = std::move(text);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                text += src_[pos_];
                bump();
            }
            tok_.kind = Token::Kind::Nat;
            tok_.text = std::move(text);
        } else if (std::string(";:,()=+-*^/").find(c) != std::string::npos) {
            tok_.kind = Token::Kind::Punct;
            tok_.text = std::string(1, c);
            bump();
        } else {
            throw parse_error(line_, col_, std::string("unexpected character '") + c + "'");
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    Script parse_script() {
        Script script;
        while (lex_.peek().kind != Token::Kind::End) {
            script.items.push_back(parse_item(script));
        }
        return script;
    }

private:
    Lexer lex_;
    std::map<std::string, FuncSymbol> symbols_;

    [[noreturn]] void fail(const Token& at, const std::string& msg) {
        throw parse_error(at.line, at.col, msg);
    }

    Token expect_punct(const std::string& p) {
        Token t = lex_.take();
        if (t.kind != Token::Kind::Punct || t.text != p)
            fail(t, "expected '" + p + "', got '" + t.text + "'");
        return t;
    }

    Token expect_ident() {
        Token t = lex_.take();
        if (t.kind != Token::Kind::Ident) fail(t, "expected identifier, got '" + t.text + "'");
        return t;
    }

    int expect_nat() {
        Token t = lex_.take();
        if (t.kind != Token::Kind::Nat) fail(t, "expected number, got '" + t.text + "'");
        return std::stoi(t.text);
    }

    bool peek_punct(const std::string& p) const {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
    }

    void declare(const Token& at, FuncSymbol sym) {
        if (symbols_.count(sym.name)) fail(at, "symbol '" + sym.name + "' already declared");
        symbols_.emplace(sym.name, std::move(sym));
    }

    ScriptItem parse_item(const Script& script) {
        Token head = lex_.take();
        if (head.kind != Token::Kind::Ident) fail(head, "expected declaration, equation, fact or directive");
        const std::string& kw = head.text;
        if (kw == "biadditive" || kw == "additive" || kw == "hom" || kw == "scalar") {
            Token name = expect_ident();
            expect_punct(";");
            FuncSymbol sym = kw == "biadditive"   ? FuncSymbol::bi_additive(name.text)
                             : kw == "additive"   ? FuncSymbol::additive(name.text)
                             : kw == "hom"        ? FuncSymbol::homomorphism(name.text)
                                                  : FuncSymbol::scalar(name.text);
            declare(name, sym);
            return Declaration{sym};
        }
        if (kw == "multiadditive") {
            Token name = expect_ident();
            Token arity_kw = expect_ident();
            if (arity_kw.text != "arity") fail(arity_kw, "expected 'arity'");
            int n = expect_nat();
            if (n < 1) fail(arity_kw, "arity must be at least 1");
            expect_punct(";");
            FuncSymbol sym = FuncSymbol::multi_additive(name.text, n);
            declare(name, sym);
            return Declaration{sym};
        }
        if (kw == "power") {
            Token name = expect_ident();
            int n = expect_nat();
            if (n < 1) fail(name, "power exponent must be at least 1");
            expect_punct(";");
            FuncSymbol sym = FuncSymbol::power(name.text, n);
            declare(name, sym);
            return Declaration{sym};
        }
        if (kw == "eq") {
            Token name = expect_ident();
            expect_punct(":");
            Expr lhs = parse_expr_normal();
            expect_punct("=");
            Expr rhs = parse_expr_normal();
            expect_punct(";");
            return Equation{name.text, std::move(lhs), std::move(rhs)};
        }
        if (kw == "fact") {
            std::string name;
            if (lex_.peek().kind == Token::Kind::Ident) name = lex_.take().text;
            expect_punct(":");
            Fact fact = parse_fact_body(head);
            return FactItem{std::move(name), std::move(fact)};
        }
        if (kw == "degree") {
            Token name = expect_ident();
            if (!script.find_equation(name.text)) fail(name, "degree directive names unknown equation '" + name.text + "'");
            int n = expect_nat();
            if (n < 1) fail(name, "degree must be positive");
            expect_punct(";");
            return DegreeDirective{name.text, n};
        }
        if (kw == "specialize") {
            Token name = expect_ident();
            if (!script.find_equation(name.text))
                fail(name, "specialize directive names unknown equation '" + name.text + "'");
            Token at_kw = expect_ident();
            if (at_kw.text != "at") fail(at_kw, "expected 'at'");
            expect_punct("(");
            SpecializeDirective dir;
            dir.eq = name.text;
            for (;;) {
                Token slot = lex_.take();
                if (slot.kind == Token::Kind::Nat && slot.text == "1") {
                    dir.slots.push_back(SlotVal::one());
                } else if (slot.kind == Token::Kind::Ident) {
                    if (symbols_.count(slot.text)) fail(slot, "slot '" + slot.text + "' is a declared symbol");
                    dir.slots.push_back(SlotVal::v(slot.text));
                } else {
                    fail(slot, "expected 1 or a fresh variable");
                }
                if (peek_punct(",")) {
                    lex_.take();
                    continue;
                }
                break;
            }
            expect_punct(")");
            if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "with") {
                lex_.take();
                dir.has_with = true;
                for (;;) {
                    Token f = expect_ident();
                    bool known = false;
                    for (const auto& item : script.items)
                        if (const auto* fi = std::get_if<FactItem>(&item))
                            if (fi->name == f.text) known = true;
                    if (!known) fail(f, "specialize directive names unknown fact '" + f.text + "'");
                    dir.with.push_back(f.text);
                    if (peek_punct(",")) {
                        lex_.take();
                        continue;
                    }
                    break;
                }
            }
            expect_punct(";");
            return dir;
        }
        fail(head, "unknown item '" + kw + "'");
    }

    Fact parse_fact_body(const Token& at) {
        Token sym_tok = expect_ident();
        auto it = symbols_.find(sym_tok.text);
        if (it == symbols_.end()) fail(sym_tok, "undeclared symbol '" + sym_tok.text + "'");
        const FuncSymbol& sym = it->second;
        std::vector<ArgPat> pattern;
        if (sym.arity() > 0) {
            expect_punct("(");
            for (;;) {
                Token arg = lex_.take();
                if (arg.kind == Token::Kind::Nat && arg.text == "1") {
                    pattern.push_back(ArgPat::one());
                } else if (arg.kind == Token::Kind::Ident && !symbols_.count(arg.text)) {
                    pattern.push_back(ArgPat::bind(arg.text));
                } else {
                    fail(arg, "fact pattern arguments are 1 or pattern variables");
                }
                if (peek_punct(",")) {
                    lex_.take();
                    continue;
                }
                break;
            }
            expect_punct(")");
        }
        if (static_cast<int>(pattern.size()) != sym.arity())
            fail(sym_tok, "'" + sym.name + "' expects " + std::to_string(sym.arity()) + " argument(s)");
        expect_punct("=");
        Expr rhs = parse_expr_normal();
        expect_punct(";");
        Fact fact{sym, std::move(pattern), std::move(rhs)};
        try {
            FactSet probe;
            probe.add(fact);
        } catch (const fact_error& err) {
            fail(at, err.what());
        }
        return fact;
    }

    Expr parse_expr_normal() {
        Token at = lex_.peek();
        RawPtr raw = parse_sum();
        try {
            return expand(raw);
        } catch (const expand_error& err) {
            fail(at, err.what());
        }
    }

    RawPtr parse_sum() {
        RawPtr lhs = parse_addend();
        while (peek_punct("+") || peek_punct("-")) {
            bool plus = lex_.take().text == "+";
            RawPtr rhs = parse_addend();
            lhs = plus ? rsum({lhs, rhs}) : rsub(lhs, rhs);
        }
        return lhs;
    }

    RawPtr parse_addend() {
        if (peek_punct("-")) {
            lex_.take();
            return rneg(parse_addend());
        }
        return parse_product();
    }

    RawPtr parse_product() {
        RawPtr lhs = parse_power();
        while (peek_punct("*")) {
            lex_.take();
            lhs = rprod({lhs, parse_power()});
        }
        return lhs;
    }

    RawPtr parse_power() {
        RawPtr base = parse_primary();
        while (peek_punct("^")) {
            Token caret = lex_.take();
            int e = expect_nat();
            if (e < 1) fail(caret, "exponent must be at least 1");
            base = rpow(base, e);
        }
        return base;
    }

    RawPtr parse_primary() {
        Token t = lex_.take();
        if (t.kind == Token::Kind::Nat) {
            mpz_class num(t.text);
            if (peek_punct("/")) {
                lex_.take();
                Token den = lex_.take();
                if (den.kind != Token::Kind::Nat) fail(den, "expected denominator");
                mpz_class d(den.text);
                if (d == 0) fail(den, "zero denominator");
                return rconst(Rational(num, d));
            }
            return rconst(Rational(num, mpz_class(1)));
        }
        if (t.kind == Token::Kind::Punct && t.text == "(") {
            RawPtr inner = parse_sum();
            expect_punct(")");
            return inner;
        }
        if (t.kind == Token::Kind::Ident) {
            auto it = symbols_.find(t.text);
            if (peek_punct("(")) {
                if (it == symbols_.end()) fail(t, "undeclared symbol '" + t.text + "'");
                lex_.take();
                std::vector<RawPtr> args;
                if (!peek_punct(")")) {
                    for (;;) {
                        args.push_back(parse_sum());
                        if (peek_punct(",")) {
                            lex_.take();
                            continue;
                        }
                        break;
                    }
                }
                expect_punct(")");
                return rapply(it->second, std::move(args));
            }
            if (it != symbols_.end()) {
                if (it->second.kind == SymKind::Scalar) return rapply(it->second, {});
                fail(t, "symbol '" + t.text + "' needs arguments");
            }
            if (!std::islower(static_cast<unsigned char>(t.text[0])))
                fail(t, "undeclared symbol '" + t.text + "'");
            return rvar(t.text);
        }
        fail(t, "expected expression");
    }
};

}  // namespace dsl_detail

inline Script parse(const std::string& source) { return dsl_detail::Parser(source).parse_script(); }

// ---------------------------------------------------------------------------
// Printing: deterministic rendering with parse(print(s)) == s.

inline std::string print(const Script& script) {
    std::string out;
    for (const auto& item : script.items) {
        if (const auto* d = std::get_if<Declaration>(&item)) {
            const FuncSymbol& s = d->sym;
            switch (s.kind) {
                case SymKind::MultiAdditive:
                    if (s.param == 2)
                        out += "biadditive " + s.name + ";";
                    else
                        out += "multiadditive " + s.name + " arity " + std::to_string(s.param) + ";";
                    break;
                case SymKind::Additive: out += "additive " + s.name + ";"; break;
                case SymKind::Homomorphism: out += "hom " + s.name + ";"; break;
                case SymKind::Power: out += "power " + s.name + " " + std::to_string(s.param) + ";"; break;
                case SymKind::Scalar: out += "scalar " + s.name + ";"; break;
            }
        } else if (const auto* e = std::get_if<Equation>(&item)) {
            out += "eq " + e->name + ": " + e->lhs.str() + " = " + e->rhs.str() + ";";
        } else if (const auto* f = std::get_if<FactItem>(&item)) {
            out += f->name.empty() ? "fact" : "fact " + f->name;
            out += ": " + f->fact.sym.name;
            if (!f->fact.pattern.empty()) {
                out += "(";
                for (size_t i = 0; i < f->fact.pattern.size(); ++i) {
                    if (i) out += ", ";
                    out += f->fact.pattern[i].str();
                }
                out += ")";
            }
            out += " = " + f->fact.rhs.str() + ";";
        } else if (const auto* g = std::get_if<DegreeDirective>(&item)) {
            out += "degree " + g->eq + " " + std::to_string(g->degree) + ";";
        } else if (const auto* s = std::get_if<SpecializeDirective>(&item)) {
            out += "specialize " + s->eq + " at (";
            for (size_t i = 0; i < s->slots.size(); ++i) {
                if (i) out += ", ";
                out += s->slots[i].str();
            }
            out += ")";
            if (s->has_with) {
                out += " with ";
                for (size_t i = 0; i < s->with.size(); ++i) {
                    if (i) out += ", ";
                    out += s->with[i];
                }
            }
            out += ";";
        }
        out += "\n";
    }
    return out;
}

}  // namespace symq
