#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "dendro/scalar.hpp"

namespace dendro {

/// Canonical formal Scalar-linear combination over an ordered basis family B.
/// No stored coefficient is zero; iteration follows the basis order, so equal
/// values have identical representations and operator== decides equality.
template <class B>
class LinComb {
public:
    using TermMap = std::map<B, Scalar>;

    LinComb() = default;

    static LinComb basis(B b) { return term(std::move(b), Scalar::one()); }
    static LinComb term(B b, Scalar c) {
        LinComb x;
        x.add_term(std::move(b), std::move(c));
        return x;
    }

    void add_term(B b, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(std::move(b), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Scalar coefficient(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Scalar::zero() : it->second;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(const LinComb& a) {
        LinComb r;
        for (const auto& [b, c] : a.terms_) r.terms_.emplace(b, -c);
        return r;
    }

    LinComb scaled(const Scalar& s) const {
        LinComb r;
        if (s.is_zero()) return r;
        for (const auto& [b, c] : terms_) r.add_term(b, c * s);
        return r;
    }

    /// Substitute lam/q in every coefficient, dropping terms that vanish.
    LinComb substitute(const std::optional<Rational>& lam_val,
                       const std::optional<Rational>& q_val) const {
        LinComb r;
        for (const auto& [b, c] : terms_) r.add_term(b, c.substitute(lam_val, q_val));
        return r;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

/// Linear extension of f : B -> LinComb<C> to LinComb<B>.
template <class B, class F>
auto linear_extend(F&& f, const LinComb<B>& x) {
    using R = std::invoke_result_t<F, const B&>;
    R out;
    for (const auto& [b, c] : x.terms()) out += f(b).scaled(c);
    return out;
}

/// Bilinear extension of f : B x B -> LinComb<C> applied pairwise with
/// coefficient products.
template <class B, class F>
auto bilinear_extend(F&& f, const LinComb<B>& x, const LinComb<B>& y) {
    using R = std::invoke_result_t<F, const B&, const B&>;
    R out;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) out += f(bx, by).scaled(cx * cy);
    return out;
}

/// Render "c1*b1 + c2*b2" with the basis printed by `basis_str`; multi-term
/// coefficients are parenthesized so the output reads back unambiguously.
template <class B, class F>
std::string render_lincomb(const LinComb<B>& x, F&& basis_str) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : x.terms()) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (first) {
            first = false;
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            if (neg) {
                out += " - ";
                cs = cs.substr(1);
            } else {
                out += " + ";
            }
        }
        if (cs == "1") {
            out += basis_str(b);
        } else if (cs.find(' ') != std::string::npos) {
            out += "(" + cs + ")*" + basis_str(b);
        } else {
            out += cs + "*" + basis_str(b);
        }
    }
    return out;
}

}  // namespace dendro
