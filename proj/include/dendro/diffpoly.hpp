#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dendro/lincomb.hpp"

namespace dendro {

/// A differential variable y^(n): a base symbol with a derivation order.
struct DiffVar {
    std::string name;
    unsigned order = 0;

    friend auto operator<=>(const DiffVar& a, const DiffVar& b) {
        if (auto c = a.name <=> b.name; c != 0) return c;
        return a.order <=> b.order;
    }
    friend bool operator==(const DiffVar&, const DiffVar&) = default;
};

/// Commutative monomial in differential variables, stored as a sorted
/// multiset of factors; the empty multiset is the unit 1.
struct DiffMonomial {
    std::vector<DiffVar> factors;

    static DiffMonomial unit() { return {}; }
    static DiffMonomial var(std::string name, unsigned order = 0) {
        return DiffMonomial{{DiffVar{std::move(name), order}}};
    }
    static DiffMonomial of(std::vector<DiffVar> vars);

    DiffMonomial times(const DiffMonomial& o) const;
    unsigned degree() const { return static_cast<unsigned>(factors.size()); }
    bool is_unit() const { return factors.empty(); }

    std::string str() const;

    friend auto operator<=>(const DiffMonomial& a, const DiffMonomial& b) {
        return a.factors <=> b.factors;
    }
    friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
};

using DiffPoly = LinComb<DiffMonomial>;

inline constexpr unsigned kDefaultMaxOrder = 32;

DiffPoly poly_mul(const DiffPoly& p, const DiffPoly& r);

/// Weighted derivation on the free commutative differential algebra: on a
/// monomial v1...vk it is the sum over nonempty subsets S of the factor
/// positions of lam^(|S|-1) times the monomial with orders incremented on S;
/// d0(1) = 0. The weight defaults to the formal lam and may be specialized.
/// Throws DerivOrderOverflow past max_order.
DiffPoly d0_monomial(const DiffMonomial& m, unsigned max_order = kDefaultMaxOrder,
                     const Scalar& lam = Scalar::lam());
DiffPoly d0(const DiffPoly& p, unsigned max_order = kDefaultMaxOrder,
            const Scalar& lam = Scalar::lam());

DiffPoly one_poly();
DiffPoly var_poly(std::string name, unsigned order = 0);

std::string to_string(const DiffMonomial& m);
DiffMonomial parse_monomial(std::string_view text);

}  // namespace dendro
