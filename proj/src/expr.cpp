#include "dendro/expr.hpp"

#include <cctype>

#include "dendro/errors.hpp"

namespace dendro {

ExprPtr atom(std::string name, unsigned order) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Atom;
    e->name = std::move(name);
    e->order = order;
    return e;
}

ExprPtr der(ExprPtr x) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Der;
    e->lhs = std::move(x);
    return e;
}

ExprPtr bin(char op, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Bin;
    e->op = op;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr add(ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Add;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr sub(ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Sub;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr scale(Scalar s, ExprPtr x) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Scale;
    e->coeff = std::move(s);
    e->lhs = std::move(x);
    return e;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::Atom: return a->name == b->name && a->order == b->order;
        case Expr::Kind::Der: return expr_equal(a->lhs, b->lhs);
        case Expr::Kind::Bin:
            return a->op == b->op && expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
        case Expr::Kind::Scale:
            return a->coeff == b->coeff && expr_equal(a->lhs, b->lhs);
    }
    return false;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool at_str(std::string_view s) {
        skip_ws();
        return text.substr(pos, s.size()) == s;
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) throw ParseError(pos, what);
        ++pos;
    }

    bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    unsigned integer(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(pos, what);
        try {
            return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
        } catch (const std::out_of_range&) {
            throw ParseError(start, "number within range");
        }
    }

    // --- scalar prefix polynomial: sums of INT[/INT] and lam/q powers ---

    BigInt digits(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(pos, what);
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    Rational rational_factor() {
        BigInt num = digits("integer");
        if (at('/')) {
            ++pos;
            BigInt den = digits("denominator digits");
            if (den == 0) throw ParseError(pos, "nonzero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Scalar poly_factor() {
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            return Scalar(rational_factor());
        if (at_str("lam") && !(pos + 3 < text.size() && name_char(text[pos + 3]))) {
            pos += 3;
            unsigned e = 1;
            if (at('^')) {
                ++pos;
                e = integer("exponent digits");
            }
            return Scalar::lam().pow(e);
        }
        if (at('q') && !(pos + 1 < text.size() && name_char(text[pos + 1]))) {
            ++pos;
            unsigned e = 1;
            if (at('^')) {
                ++pos;
                e = integer("exponent digits");
            }
            return Scalar::q().pow(e);
        }
        throw ParseError(pos, "number, 'lam' or 'q'");
    }

    Scalar poly_term() {
        Scalar s = poly_factor();
        while (at('*')) {
            ++pos;
            s *= poly_factor();
        }
        return s;
    }

    Scalar poly() {
        bool neg = false;
        if (at('-')) {
            ++pos;
            neg = true;
        }
        Scalar s = poly_term();
        if (neg) s = -s;
        while (true) {
            if (at('+')) {
                ++pos;
                s += poly_term();
            } else if (at('-')) {
                ++pos;
                s -= poly_term();
            } else {
                break;
            }
        }
        return s;
    }

    // --- term language ---

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= text.size() || !name_start(text[pos]))
            throw ParseError(pos, "name, 'd(', '(', or '['");
        std::size_t start = pos;
        while (pos < text.size() && name_char(text[pos])) ++pos;
        std::string name(text.substr(start, pos - start));
        if (name == "d") {
            std::size_t save = pos;
            skip_ws();
            if (pos < text.size() && text[pos] == '(') {
                ++pos;
                ExprPtr inner = additive();
                expect(')', "')'");
                return der(std::move(inner));
            }
            pos = save;
        }
        unsigned order = 0;
        if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == '(') {
            pos += 2;
            order = integer("order digits");
            expect(')', "')'");
        } else {
            while (pos < text.size() && text[pos] == '\'') {
                ++order;
                ++pos;
            }
        }
        return atom(std::move(name), order);
    }

    ExprPtr unary() {
        skip_ws();
        if (at('[')) {
            ++pos;
            Scalar s = poly();
            expect(']', "']'");
            return scale(std::move(s), unary());
        }
        if (at('(')) {
            ++pos;
            ExprPtr inner = additive();
            expect(')', "')'");
            return inner;
        }
        return parse_atom();
    }

    // returns 0 when no product operator is next
    char peek_product_op() {
        skip_ws();
        if (at_str("<:")) return '<';
        if (at_str(":>")) return '>';
        if (at('.')) return '.';
        if (at('*')) return '*';
        return 0;
    }

    ExprPtr product() {
        ExprPtr e = unary();
        char first = peek_product_op();
        if (first == 0) return e;
        while (true) {
            char op = peek_product_op();
            if (op == 0) break;
            if (op != first)
                throw MixedOperatorAmbiguity(
                    pos, "parentheses (different product operators have no relative precedence)");
            pos += (op == '<' || op == '>') ? 2 : 1;
            e = bin(op, std::move(e), unary());
        }
        return e;
    }

    ExprPtr additive() {
        ExprPtr e = product();
        while (true) {
            skip_ws();
            if (at('+')) {
                ++pos;
                e = add(std::move(e), product());
            } else if (at('-')) {
                ++pos;
                e = sub(std::move(e), product());
            } else {
                break;
            }
        }
        return e;
    }
};

std::string op_token(char op) {
    switch (op) {
        case '<': return "<:";
        case '>': return ":>";
        case '.': return ".";
        case '*': return "*";
    }
    return "?";
}

// precedence levels: 0 additive, 1 product, 2 unary/atom
std::string print_at(const ExprPtr& e, int level) {
    switch (e->kind) {
        case Expr::Kind::Atom:
            return e->order == 0 ? e->name : e->name + "^(" + std::to_string(e->order) + ")";
        case Expr::Kind::Der:
            return "d(" + print_at(e->lhs, 0) + ")";
        case Expr::Kind::Scale: {
            std::string inner = print_at(e->lhs, 2);
            bool wrap = !(e->lhs->kind == Expr::Kind::Atom || e->lhs->kind == Expr::Kind::Der ||
                          e->lhs->kind == Expr::Kind::Scale);
            return "[" + e->coeff.str() + "] " + (wrap ? "(" + inner + ")" : inner);
        }
        case Expr::Kind::Bin: {
            // left chains of the same operator stay flat; everything else nests
            std::string l = e->lhs->kind == Expr::Kind::Bin && e->lhs->op == e->op
                                ? print_at(e->lhs, 1)
                                : print_at(e->lhs, 2);
            std::string r = print_at(e->rhs, 2);
            std::string s = l + " " + op_token(e->op) + " " + r;
            return level > 1 ? "(" + s + ")" : s;
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            std::string l = print_at(e->lhs, 0);
            std::string r = print_at(e->rhs, 1);
            std::string s = l + (e->kind == Expr::Kind::Add ? " + " : " - ") + r;
            return level > 0 ? "(" + s + ")" : s;
        }
    }
    return "?";
}

}  // namespace

ExprPtr parse_expr(std::string_view text) {
    Parser p{text};
    ExprPtr e = p.additive();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError(p.pos, "operator or end of input");
    return e;
}

std::string print_expr(const ExprPtr& e) { return print_at(e, 0); }

}  // namespace dendro
