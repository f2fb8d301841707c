#pragma once

// A small total expression language for decidable matrices θ(x,m,n) and
// φ(τ,y,z).
//
//   expr       = disjunct { "or" disjunct } ;
//   disjunct   = negation { "and" negation } ;
//   negation   = "not" negation | comparison ;
//   comparison = sum [ ( "=" | "==" | "!=" | "<" | "<=" | ">" | ">=" ) sum ] ;
//   sum        = product { ( "+" | "-" ) product } ;
//   product    = atom { ( "*" | "mod" ) atom } ;
//   atom       = number | variable | "true" | "false"
//              | "bit" "(" sum ")" | "(" expr ")" ;
//   variable   = "x" | "m" | "n" | "y" | "z" | "len" ;
//
// Expressions are statically typed (natural or boolean); mixing the two is a
// syntax error. Evaluation is total: "-" truncates at 0, "mod 0" yields 0,
// bit(i) reads 0 at or beyond the end of τ, and "+"/"*" saturate.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rkl/bitstring.hpp"
#include "rkl/reductions.hpp"

namespace rkl::pred {

enum class Var : std::uint8_t { x, m, n, y, z, len };
inline constexpr std::size_t kVarCount = 6;

const char* name(Var v) noexcept;

enum class Op : std::uint8_t {
    literal, variable, bit, boolean,
    add, sub, mul, mod,
    eq, ne, lt, le, gt, ge,
    logical_and, logical_or, logical_not,
};

enum class Type : std::uint8_t { natural, boolean };

struct Node {
    Op op = Op::literal;
    Type type = Type::natural;
    Nat value = 0;  ///< literal value, or 0/1 for Op::boolean
    Var var = Var::x;
    std::vector<std::shared_ptr<const Node>> kids;
};

/// An immutable, shareable syntax tree.
class Expr {
public:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    const Node& root() const noexcept { return *root_; }
    Type type() const noexcept { return root_->type; }

    /// Canonical text with minimal parentheses; parses back to an equal tree.
    std::string str() const;

    /// Structural equality.
    bool operator==(const Expr& other) const;

private:
    std::shared_ptr<const Node> root_;
};

/// Throws SyntaxError with the byte offset of the offending token.
Expr parse(std::string_view text);

/// parse() plus a check that the result is boolean.
Expr parse_predicate(std::string_view text);

struct Env {
    std::array<std::optional<Nat>, kVarCount> vars{};
    std::optional<BitString> tau;

    Env& bind(Var v, Nat value) {
        vars[static_cast<std::size_t>(v)] = value;
        return *this;
    }
    Env& bind_tau(BitString s) {
        tau = std::move(s);
        return *this;
    }
};

using Value = std::variant<bool, Nat>;

/// Throws UnboundVariable if a variable is free in env (`len` falls back to
/// |τ| when τ is bound; bit() needs τ).
Value eval(const Expr& expr, const Env& env);

/// θ(x, m, n) from a boolean expression.
TernaryPredicate as_theta(Expr expr);

/// φ(τ, y, z) from a boolean expression; `len` is |τ|.
StringPredicate as_phi(Expr expr);

} // namespace rkl::pred
