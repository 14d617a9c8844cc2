#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dendro/diffpoly.hpp"
#include "dendro/errors.hpp"
#include "oracles.hpp"

using namespace dendro;

namespace {

DiffMonomial mono(std::initializer_list<std::pair<const char*, unsigned>> vars) {
    std::vector<DiffVar> fs;
    for (const auto& [n, o] : vars) fs.push_back(DiffVar{n, o});
    return DiffMonomial::of(std::move(fs));
}

}  // namespace

TEST_CASE("monomial product is the multiset union") {
    CHECK(mono({{"y", 0}}).times(mono({{"z", 0}})) == mono({{"y", 0}, {"z", 0}}));
    CHECK(poly_mul(var_poly("y", 1), var_poly("y", 1)) ==
          DiffPoly::basis(mono({{"y", 1}, {"y", 1}})));
    DiffPoly p = var_poly("y", 2) + var_poly("z", 0).scaled(Scalar::lam());
    CHECK(poly_mul(p, one_poly()) == p);
}

TEST_CASE("d0 on generators and the two-factor rule") {
    CHECK(d0(var_poly("y", 0)) == var_poly("y", 1));
    DiffPoly expected = DiffPoly::basis(mono({{"y", 1}, {"z", 0}})) +
                        DiffPoly::basis(mono({{"y", 0}, {"z", 1}})) +
                        DiffPoly::basis(mono({{"y", 1}, {"z", 1}})).scaled(Scalar::lam());
    CHECK(d0(DiffPoly::basis(mono({{"y", 0}, {"z", 0}}))) == expected);
    CHECK(d0(one_poly()).is_zero());
}

TEST_CASE("d0 on a cube matches the recursive Leibniz oracle") {
    DiffMonomial y3 = mono({{"y", 0}, {"y", 0}, {"y", 0}});
    DiffPoly got = d0_monomial(y3);
    CHECK(got == oracles::d0_recursive(y3));
    // frozen value computed by the oracle: 3 y' y^2 + 3 lam y'^2 y + lam^2 y'^3
    DiffPoly expected =
        DiffPoly::term(mono({{"y", 1}, {"y", 0}, {"y", 0}}), Scalar::from_int(3)) +
        DiffPoly::term(mono({{"y", 1}, {"y", 1}, {"y", 0}}), Scalar::from_int(3) * Scalar::lam()) +
        DiffPoly::term(mono({{"y", 1}, {"y", 1}, {"y", 1}}), Scalar::lam() * Scalar::lam());
    CHECK(got == expected);
}

TEST_CASE("subset formula agrees with the pairwise recursion on random monomials") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> nfac(1, 4), var(0, 2), ord(0, 2);
    const char* names[] = {"u", "v", "w"};
    for (int i = 0; i < 200; ++i) {
        std::vector<DiffVar> fs;
        int n = nfac(rng);
        for (int k = 0; k < n; ++k)
            fs.push_back(DiffVar{names[var(rng)], static_cast<unsigned>(ord(rng))});
        DiffMonomial m = DiffMonomial::of(std::move(fs));
        CHECK(d0_monomial(m) == oracles::d0_recursive(m));
    }
}

TEST_CASE("d0 is a weighted derivation and linear") {
    std::vector<DiffMonomial> monos = {
        mono({{"y", 0}}), mono({{"z", 1}}), mono({{"y", 0}, {"z", 0}}),
        mono({{"y", 1}, {"y", 0}}), mono({{"y", 0}, {"y", 0}, {"z", 1}})};
    for (const auto& u : monos) {
        for (const auto& v : monos) {
            DiffPoly pu = DiffPoly::basis(u), pv = DiffPoly::basis(v);
            DiffPoly lhs = d0(poly_mul(pu, pv));
            DiffPoly rhs = poly_mul(d0(pu), pv) + poly_mul(pu, d0(pv)) +
                           poly_mul(d0(pu), d0(pv)).scaled(Scalar::lam());
            CHECK(lhs == rhs);
        }
    }
    Scalar alpha = Scalar::monomial({1, 0}, Rational(2, 3)), beta = Scalar::from_int(-4);
    DiffPoly p = DiffPoly::basis(monos[2]), r = DiffPoly::basis(monos[3]);
    CHECK(d0(p.scaled(alpha) + r.scaled(beta)) == d0(p).scaled(alpha) + d0(r).scaled(beta));
}

TEST_CASE("lam = 0 specializes to the ordinary Leibniz rule") {
    DiffPoly d_yz = d0(DiffPoly::basis(mono({{"y", 0}, {"z", 0}})));
    DiffPoly plain = DiffPoly::basis(mono({{"y", 1}, {"z", 0}})) +
                     DiffPoly::basis(mono({{"y", 0}, {"z", 1}}));
    CHECK(d_yz.substitute(Rational(0), std::nullopt) == plain);
    CHECK(d0(var_poly("y", 0), kDefaultMaxOrder, Scalar::zero()) == var_poly("y", 1));
    CHECK(d0(DiffPoly::basis(mono({{"y", 0}, {"z", 0}})), kDefaultMaxOrder, Scalar::zero()) ==
          plain);
}

TEST_CASE("derivation order overflow is a checked error") {
    CHECK_THROWS_AS(d0(var_poly("y", 32)), DerivOrderOverflow);
    CHECK_NOTHROW(d0(var_poly("y", 31)));
    CHECK_THROWS_AS(d0(var_poly("y", 3), 3), DerivOrderOverflow);
}

TEST_CASE("monomial text form and parsing") {
    DiffMonomial m = mono({{"z", 0}, {"y", 2}});
    CHECK(m.str() == "y^(2)*z^(0)");
    CHECK(parse_monomial("y^(2)*z^(0)") == m);
    CHECK(parse_monomial("z^(0) * y^(2)") == m);
    CHECK(parse_monomial("y") == mono({{"y", 0}}));
    CHECK(parse_monomial("1") == DiffMonomial::unit());
    CHECK_THROWS_AS(parse_monomial("y^("), ParseError);
    CHECK_THROWS_AS(parse_monomial(""), ParseError);
}
