#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "dendro/scalar.hpp"

namespace dendro {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Abstract syntax of the term language: generator atoms with a derivation
/// order, the unary derivation, the four products, sums/differences and
/// scalar prefixes.
struct Expr {
    enum class Kind { Atom, Der, Bin, Add, Sub, Scale };

    Kind kind = Kind::Atom;
    std::string name;   // Atom
    unsigned order = 0; // Atom
    char op = 0;        // Bin: '<' prec, '>' succ, '.' bullet, '*' star
    Scalar coeff;       // Scale
    ExprPtr lhs, rhs;   // Der/Scale use lhs only
};

ExprPtr atom(std::string name, unsigned order = 0);
ExprPtr der(ExprPtr e);
ExprPtr bin(char op, ExprPtr l, ExprPtr r);
ExprPtr add(ExprPtr l, ExprPtr r);
ExprPtr sub(ExprPtr l, ExprPtr r);
ExprPtr scale(Scalar s, ExprPtr e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Grammar: atoms `x`, `x^(2)`, `x''`; products `<:` `:>` `.` `*` associating
// left within a single operator (mixing two different products without
// parentheses is MixedOperatorAmbiguity); unary `d(...)`; `+`/`-` lowest;
// scalar prefix `[ poly ]` binds tightest with poly over lam, q and integer
// fractions.
ExprPtr parse_expr(std::string_view text);

/// Canonical printing; parse_expr(print_expr(e)) reproduces e.
std::string print_expr(const ExprPtr& e);

}  // namespace dendro
