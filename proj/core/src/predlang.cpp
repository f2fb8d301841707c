#include "rkl/predlang.hpp"

#include <cctype>
#include <limits>

namespace rkl {

namespace {

std::string describe_expected(std::size_t offset, const std::vector<std::string>& expected) {
    std::string out = "syntax error at offset " + std::to_string(offset) + ": expected ";
    if (expected.size() > 1) out += "one of ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) out += ", ";
        out += expected[i];
    }
    return out;
}

} // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected)
    : Error(describe_expected(offset, expected)), offset_(offset), expected_(std::move(expected)) {}

} // namespace rkl

namespace rkl::pred {

const char* name(Var v) noexcept {
    switch (v) {
    case Var::x: return "x";
    case Var::m: return "m";
    case Var::n: return "n";
    case Var::y: return "y";
    case Var::z: return "z";
    case Var::len: return "len";
    }
    return "?";
}

namespace {

using NodePtr = std::shared_ptr<const Node>;

// ---------------------------------------------------------------- lexer

enum class Tok {
    number, ident, plus, minus, star, lparen, rparen,
    eq, ne, lt, le, gt, ge, end,
};

struct Token {
    Tok kind = Tok::end;
    std::size_t offset = 0;
    std::string_view text;
    Nat value = 0;
};

const std::vector<std::string> kOperandStart = {"number", "variable", "'bit'", "'true'",
                                                "'false'", "'not'", "'('"};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_ident_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.offset = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            Nat v = 0;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                Nat d = static_cast<Nat>(src[j] - '0');
                if (v > (std::numeric_limits<Nat>::max() - d) / 10)
                    throw SyntaxError(i, {"number that fits in 64 bits"});
                v = v * 10 + d;
                ++j;
            }
            t.kind = Tok::number;
            t.value = v;
            t.text = src.substr(i, j - i);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && is_ident_char(src[j])) ++j;
            t.kind = Tok::ident;
            t.text = src.substr(i, j - i);
            i = j;
        } else {
            auto two = src.substr(i, 2);
            std::size_t len = 1;
            if (two == "<=") t.kind = Tok::le, len = 2;
            else if (two == ">=") t.kind = Tok::ge, len = 2;
            else if (two == "!=") t.kind = Tok::ne, len = 2;
            else if (two == "==") t.kind = Tok::eq, len = 2;
            else if (c == '<') t.kind = Tok::lt;
            else if (c == '>') t.kind = Tok::gt;
            else if (c == '=') t.kind = Tok::eq;
            else if (c == '+') t.kind = Tok::plus;
            else if (c == '-') t.kind = Tok::minus;
            else if (c == '*') t.kind = Tok::star;
            else if (c == '(') t.kind = Tok::lparen;
            else if (c == ')') t.kind = Tok::rparen;
            else throw SyntaxError(i, {"operator", "operand"});
            t.text = src.substr(i, len);
            i += len;
        }
        out.push_back(t);
    }
    Token end;
    end.kind = Tok::end;
    end.offset = src.size();
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------- parser

NodePtr make(Op op, Type type, std::vector<NodePtr> kids = {}) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->type = type;
    n->kids = std::move(kids);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    NodePtr parse_all() {
        auto e = expr();
        if (peek().kind != Tok::end) throw SyntaxError(peek().offset, {"end of input", "operator"});
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool at_keyword(std::string_view kw) const {
        return peek().kind == Tok::ident && peek().text == kw;
    }

    struct Typed {
        NodePtr node;
        std::size_t offset;
    };

    static void require(const Typed& t, Type type) {
        if (t.node->type != type)
            throw SyntaxError(t.offset, {type == Type::boolean ? "boolean expression"
                                                               : "arithmetic expression"});
    }

    NodePtr expr() { return or_expr().node; }

    Typed or_expr() {
        Typed left = and_expr();
        while (at_keyword("or")) {
            advance();
            require(left, Type::boolean);
            Typed right = and_expr();
            require(right, Type::boolean);
            left = {make(Op::logical_or, Type::boolean, {left.node, right.node}), left.offset};
        }
        return left;
    }

    Typed and_expr() {
        Typed left = not_expr();
        while (at_keyword("and")) {
            advance();
            require(left, Type::boolean);
            Typed right = not_expr();
            require(right, Type::boolean);
            left = {make(Op::logical_and, Type::boolean, {left.node, right.node}), left.offset};
        }
        return left;
    }

    Typed not_expr() {
        if (at_keyword("not")) {
            std::size_t off = advance().offset;
            Typed inner = not_expr();
            require(inner, Type::boolean);
            return {make(Op::logical_not, Type::boolean, {inner.node}), off};
        }
        return comparison();
    }

    Typed comparison() {
        Typed left = sum();
        Op op;
        switch (peek().kind) {
        case Tok::eq: op = Op::eq; break;
        case Tok::ne: op = Op::ne; break;
        case Tok::lt: op = Op::lt; break;
        case Tok::le: op = Op::le; break;
        case Tok::gt: op = Op::gt; break;
        case Tok::ge: op = Op::ge; break;
        default: return left;
        }
        advance();
        require(left, Type::natural);
        Typed right = sum();
        require(right, Type::natural);
        return {make(op, Type::boolean, {left.node, right.node}), left.offset};
    }

    Typed sum() {
        Typed left = product();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            Op op = advance().kind == Tok::plus ? Op::add : Op::sub;
            require(left, Type::natural);
            Typed right = product();
            require(right, Type::natural);
            left = {make(op, Type::natural, {left.node, right.node}), left.offset};
        }
        return left;
    }

    Typed product() {
        Typed left = atom();
        while (peek().kind == Tok::star || at_keyword("mod")) {
            Op op = advance().kind == Tok::star ? Op::mul : Op::mod;
            require(left, Type::natural);
            Typed right = atom();
            require(right, Type::natural);
            left = {make(op, Type::natural, {left.node, right.node}), left.offset};
        }
        return left;
    }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) throw SyntaxError(peek().offset, {what});
        advance();
    }

    Typed atom() {
        const Token& t = peek();
        const std::size_t off = t.offset;
        switch (t.kind) {
        case Tok::number: {
            advance();
            auto n = std::make_shared<Node>();
            n->op = Op::literal;
            n->type = Type::natural;
            n->value = t.value;
            return {n, off};
        }
        case Tok::lparen: {
            advance();
            Typed inner = or_expr();
            expect(Tok::rparen, "')'");
            return {inner.node, off};
        }
        case Tok::ident: {
            if (t.text == "true" || t.text == "false") {
                advance();
                auto n = std::make_shared<Node>();
                n->op = Op::boolean;
                n->type = Type::boolean;
                n->value = t.text == "true" ? 1 : 0;
                return {n, off};
            }
            if (t.text == "bit") {
                advance();
                expect(Tok::lparen, "'('");
                Typed index = sum();
                require(index, Type::natural);
                expect(Tok::rparen, "')'");
                return {make(Op::bit, Type::natural, {index.node}), off};
            }
            for (std::size_t v = 0; v < kVarCount; ++v) {
                if (t.text == name(static_cast<Var>(v))) {
                    advance();
                    auto n = std::make_shared<Node>();
                    n->op = Op::variable;
                    n->type = Type::natural;
                    n->var = static_cast<Var>(v);
                    return {n, off};
                }
            }
            throw SyntaxError(off, {"variable (x, m, n, y, z, len)", "'bit'", "'true'", "'false'",
                                    "'not'"});
        }
        default: throw SyntaxError(off, kOperandStart);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- printer

int precedence(Op op) {
    switch (op) {
    case Op::logical_or: return 1;
    case Op::logical_and: return 2;
    case Op::logical_not: return 3;
    case Op::eq: case Op::ne: case Op::lt: case Op::le: case Op::gt: case Op::ge: return 4;
    case Op::add: case Op::sub: return 5;
    case Op::mul: case Op::mod: return 6;
    default: return 7;
    }
}

const char* spelling(Op op) {
    switch (op) {
    case Op::add: return " + ";
    case Op::sub: return " - ";
    case Op::mul: return " * ";
    case Op::mod: return " mod ";
    case Op::eq: return " = ";
    case Op::ne: return " != ";
    case Op::lt: return " < ";
    case Op::le: return " <= ";
    case Op::gt: return " > ";
    case Op::ge: return " >= ";
    case Op::logical_and: return " and ";
    case Op::logical_or: return " or ";
    default: return "";
    }
}

std::string print(const Node& n, int min_prec) {
    const int p = precedence(n.op);
    std::string s;
    switch (n.op) {
    case Op::literal: s = std::to_string(n.value); break;
    case Op::boolean: s = n.value ? "true" : "false"; break;
    case Op::variable: s = name(n.var); break;
    case Op::bit: s = "bit(" + print(*n.kids[0], 0) + ")"; break;
    case Op::logical_not: s = "not " + print(*n.kids[0], p); break;
    default:
        // Left-associative: a right operand of equal precedence needs parens.
        s = print(*n.kids[0], p) + spelling(n.op) + print(*n.kids[1], p + 1);
        break;
    }
    return p < min_prec ? "(" + s + ")" : s;
}

bool equal(const Node& a, const Node& b) {
    if (a.op != b.op || a.type != b.type || a.kids.size() != b.kids.size()) return false;
    if ((a.op == Op::literal || a.op == Op::boolean) && a.value != b.value) return false;
    if (a.op == Op::variable && a.var != b.var) return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!equal(*a.kids[i], *b.kids[i])) return false;
    return true;
}

// ---------------------------------------------------------------- evaluator

Nat saturating_add(Nat a, Nat b) {
    return a > std::numeric_limits<Nat>::max() - b ? std::numeric_limits<Nat>::max() : a + b;
}

Nat saturating_mul(Nat a, Nat b) {
    if (a == 0 || b == 0) return 0;
    return a > std::numeric_limits<Nat>::max() / b ? std::numeric_limits<Nat>::max() : a * b;
}

Nat eval_nat(const Node& n, const Env& env);

bool eval_bool(const Node& n, const Env& env) {
    switch (n.op) {
    case Op::boolean: return n.value != 0;
    case Op::logical_not: return !eval_bool(*n.kids[0], env);
    case Op::logical_and: return eval_bool(*n.kids[0], env) && eval_bool(*n.kids[1], env);
    case Op::logical_or: return eval_bool(*n.kids[0], env) || eval_bool(*n.kids[1], env);
    default: break;
    }
    const Nat a = eval_nat(*n.kids[0], env);
    const Nat b = eval_nat(*n.kids[1], env);
    switch (n.op) {
    case Op::eq: return a == b;
    case Op::ne: return a != b;
    case Op::lt: return a < b;
    case Op::le: return a <= b;
    case Op::gt: return a > b;
    case Op::ge: return a >= b;
    default: throw Error("internal: not a boolean node");
    }
}

Nat eval_nat(const Node& n, const Env& env) {
    switch (n.op) {
    case Op::literal: return n.value;
    case Op::variable: {
        const auto& bound = env.vars[static_cast<std::size_t>(n.var)];
        if (bound) return *bound;
        if (n.var == Var::len && env.tau) return env.tau->size();
        throw UnboundVariable(name(n.var));
    }
    case Op::bit: {
        const Nat i = eval_nat(*n.kids[0], env);
        if (!env.tau) throw UnboundVariable("tau");
        return i < env.tau->size() ? static_cast<Nat>(to_int((*env.tau)[i])) : 0;
    }
    case Op::add: return saturating_add(eval_nat(*n.kids[0], env), eval_nat(*n.kids[1], env));
    case Op::mul: return saturating_mul(eval_nat(*n.kids[0], env), eval_nat(*n.kids[1], env));
    case Op::sub: {
        const Nat a = eval_nat(*n.kids[0], env);
        const Nat b = eval_nat(*n.kids[1], env);
        return a > b ? a - b : 0;
    }
    case Op::mod: {
        const Nat a = eval_nat(*n.kids[0], env);
        const Nat b = eval_nat(*n.kids[1], env);
        return b == 0 ? 0 : a % b;
    }
    default: throw Error("internal: not a natural node");
    }
}

} // namespace

std::string Expr::str() const { return print(*root_, 0); }

bool Expr::operator==(const Expr& other) const { return equal(*root_, *other.root_); }

Expr parse(std::string_view text) { return Expr(Parser(text).parse_all()); }

Expr parse_predicate(std::string_view text) {
    Expr e = parse(text);
    if (e.type() != Type::boolean) throw SyntaxError(0, {"boolean expression"});
    return e;
}

Value eval(const Expr& expr, const Env& env) {
    if (expr.type() == Type::boolean) return eval_bool(expr.root(), env);
    return eval_nat(expr.root(), env);
}

TernaryPredicate as_theta(Expr expr) {
    if (expr.type() != Type::boolean) throw SyntaxError(0, {"boolean expression"});
    return [expr = std::move(expr)](Nat x, Nat m, Nat n) {
        Env env;
        env.bind(Var::x, x).bind(Var::m, m).bind(Var::n, n);
        return std::get<bool>(eval(expr, env));
    };
}

StringPredicate as_phi(Expr expr) {
    if (expr.type() != Type::boolean) throw SyntaxError(0, {"boolean expression"});
    return [expr = std::move(expr)](const BitString& tau, Nat y, Nat z) {
        Env env;
        env.bind(Var::y, y).bind(Var::z, z).bind_tau(tau);
        return std::get<bool>(eval(expr, env));
    };
}

} // namespace rkl::pred
