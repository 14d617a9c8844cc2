#pragma once

#include <map>
#include <optional>
#include <string>

#include "dendro/rational.hpp"

namespace dendro {

/// Element of the coefficient ring Q[lam, q]: a sparse polynomial in the two
/// formal indeterminates with exact rational coefficients. The term map never
/// stores a zero coefficient, so equal values have identical representations.
class Scalar {
public:
    struct Exp {
        unsigned lam = 0;
        unsigned q = 0;
        friend bool operator==(const Exp&, const Exp&) = default;
    };

    // Printing order: graded lexicographic with lam > q, highest first.
    struct ExpCmp {
        bool operator()(const Exp& a, const Exp& b) const {
            unsigned da = a.lam + a.q, db = b.lam + b.q;
            if (da != db) return da > db;
            return a.lam > b.lam;
        }
    };

    using TermMap = std::map<Exp, Rational, ExpCmp>;

    Scalar() = default;
    explicit Scalar(const Rational& c) { add_term({0, 0}, c); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar from_int(long n) { return Scalar(Rational(n)); }
    static Scalar lam() { return monomial({1, 0}, Rational(1)); }
    static Scalar q() { return monomial({0, 1}, Rational(1)); }

    static Scalar monomial(Exp e, const Rational& c) {
        Scalar s;
        s.add_term(e, c);
        return s;
    }

    void add_term(Exp e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} &&
               terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }

    /// The value as a Rational, valid only when is_constant().
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }

    const TermMap& terms() const { return terms_; }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, Rational(-c));
        return r;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.lam + eb.lam, ea.q + eb.q}, Rational(ca * cb));
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar pow(unsigned n) const {
        Scalar r = one();
        for (unsigned i = 0; i < n; ++i) r *= *this;
        return r;
    }

    /// Replace lam and/or q by rational values; an absent value keeps the
    /// indeterminate formal.
    Scalar substitute(const std::optional<Rational>& lam_val,
                      const std::optional<Rational>& q_val) const {
        Scalar r;
        for (const auto& [e, c] : terms_) {
            Rational coeff = c;
            Exp rest = e;
            if (lam_val) {
                coeff *= pow_rational(*lam_val, e.lam);
                rest.lam = 0;
            }
            if (q_val) {
                coeff *= pow_rational(*q_val, e.q);
                rest.q = 0;
            }
            r.add_term(rest, coeff);
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    /// Canonical string, e.g. "5/6*lam*q + 1"; terms in printing order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            out += term_body(a, e);
        }
        return out;
    }

private:
    static Rational pow_rational(const Rational& v, unsigned n) {
        Rational r(1);
        for (unsigned i = 0; i < n; ++i) r *= v;
        return r;
    }

    static std::string term_body(const Rational& a, const Exp& e) {
        std::string mono;
        auto var = [&](const char* name, unsigned deg) {
            if (deg == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (deg > 1) mono += "^" + std::to_string(deg);
        };
        var("lam", e.lam);
        var("q", e.q);
        if (mono.empty()) return to_string(a);
        if (a == 1) return mono;
        return to_string(a) + "*" + mono;
    }

    TermMap terms_;
};

inline std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace dendro
