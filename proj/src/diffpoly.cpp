#include "dendro/diffpoly.hpp"

#include <algorithm>
#include <cctype>

#include "dendro/errors.hpp"

namespace dendro {

DiffMonomial DiffMonomial::of(std::vector<DiffVar> vars) {
    std::sort(vars.begin(), vars.end());
    return DiffMonomial{std::move(vars)};
}

DiffMonomial DiffMonomial::times(const DiffMonomial& o) const {
    DiffMonomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    std::merge(factors.begin(), factors.end(), o.factors.begin(), o.factors.end(),
               std::back_inserter(r.factors));
    return r;
}

std::string DiffMonomial::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i].name + "^(" + std::to_string(factors[i].order) + ")";
    }
    return out;
}

std::string to_string(const DiffMonomial& m) { return m.str(); }

DiffPoly poly_mul(const DiffPoly& p, const DiffPoly& r) {
    return bilinear_extend(
        [](const DiffMonomial& a, const DiffMonomial& b) { return DiffPoly::basis(a.times(b)); },
        p, r);
}

DiffPoly d0_monomial(const DiffMonomial& m, unsigned max_order, const Scalar& lam) {
    DiffPoly out;
    const std::size_t k = m.factors.size();
    if (k == 0) return out;  // d0(1) = 0
    if (k >= 63) throw Error("monomial with " + std::to_string(k) + " factors is too large to derive");
    for (const DiffVar& v : m.factors)
        if (v.order + 1 > max_order)
            throw DerivOrderOverflow("derivation order " + std::to_string(v.order + 1) +
                                     " exceeds maximum " + std::to_string(max_order));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        DiffMonomial t = m;
        unsigned picked = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                ++t.factors[i].order;
                ++picked;
            }
        }
        std::sort(t.factors.begin(), t.factors.end());
        out.add_term(std::move(t), lam.pow(picked - 1));
    }
    return out;
}

DiffPoly d0(const DiffPoly& p, unsigned max_order, const Scalar& lam) {
    return linear_extend([&](const DiffMonomial& m) { return d0_monomial(m, max_order, lam); }, p);
}

DiffPoly one_poly() { return DiffPoly::basis(DiffMonomial::unit()); }

DiffPoly var_poly(std::string name, unsigned order) {
    return DiffPoly::basis(DiffMonomial::var(std::move(name), order));
}

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

DiffMonomial parse_monomial(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skip_ws();
        if (i != text.size()) throw ParseError(i, "end of monomial");
        return DiffMonomial::unit();
    }
    std::vector<DiffVar> vars;
    while (true) {
        skip_ws();
        if (i >= text.size() || !name_start(text[i])) throw ParseError(i, "variable name");
        std::size_t start = i;
        while (i < text.size() && name_char(text[i])) ++i;
        DiffVar v{std::string(text.substr(start, i - start)), 0};
        if (i + 1 < text.size() && text[i] == '^' && text[i + 1] == '(') {
            i += 2;
            std::size_t dstart = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == dstart) throw ParseError(i, "order digits");
            try {
                v.order = static_cast<unsigned>(std::stoul(std::string(text.substr(dstart, i - dstart))));
            } catch (const std::out_of_range&) {
                throw ParseError(dstart, "order within range");
            }
            if (i >= text.size() || text[i] != ')') throw ParseError(i, "')'");
            ++i;
        }
        vars.push_back(std::move(v));
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            continue;
        }
        break;
    }
    if (i != text.size()) throw ParseError(i, "'*' or end of monomial");
    return DiffMonomial::of(std::move(vars));
}

}  // namespace dendro
