#include "dendro/identities.hpp"

namespace dendro {

nlohmann::ordered_json to_json(const CheckReport& report) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json o;
        o["name"] = r.name;
        o["status"] = r.passed ? "pass" : "fail";
        if (r.witness) o["witness"] = *r.witness;
        if (r.residual) o["residual"] = *r.residual;
        arr.push_back(std::move(o));
    }
    nlohmann::ordered_json out;
    out["identities"] = std::move(arr);
    if (report.vacuous) out["warning"] = report.warning;
    return out;
}

namespace detail {

std::vector<std::vector<std::size_t>> size_bounded_tuples(const std::vector<int>& sizes, int arity,
                                                          long max_total) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, int remaining, long budget) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (sizes[i] > budget) continue;
            cur.push_back(i);
            self(self, remaining - 1, budget - sizes[i]);
            cur.pop_back();
        }
    };
    rec(rec, arity, max_total);
    return out;
}

}  // namespace detail

namespace {

const IdExpr a = V(0);
const IdExpr b = V(1);
const IdExpr c = V(2);

IdTerm pos(IdExpr e) { return {Scalar::one(), std::move(e)}; }
IdTerm neg(IdExpr e) { return {-Scalar::one(), std::move(e)}; }
IdTerm with(Scalar s, IdExpr e) { return {std::move(s), std::move(e)}; }

Identity id3(std::string name, std::vector<IdTerm> terms) {
    return Identity{std::move(name), 3, std::move(terms)};
}
Identity id2(std::string name, std::vector<IdTerm> terms) {
    return Identity{std::move(name), 2, std::move(terms)};
}

}  // namespace

IdentityList dendriform_axioms() {
    return {
        id3("(a<:b)<:c = a<:(b<:c + b:>c)",
            {pos(B("prec", B("prec", a, b), c)), neg(B("prec", a, B("prec", b, c))),
             neg(B("prec", a, B("succ", b, c)))}),
        id3("(a:>b)<:c = a:>(b<:c)",
            {pos(B("prec", B("succ", a, b), c)), neg(B("succ", a, B("prec", b, c)))}),
        id3("(a<:b + a:>b):>c = a:>(b:>c)",
            {pos(B("succ", B("prec", a, b), c)), pos(B("succ", B("succ", a, b), c)),
             neg(B("succ", a, B("succ", b, c)))}),
    };
}

IdentityList qtridendriform_axioms(const Scalar& q) {
    return {
        id3("(a<:b)<:c = a<:(b*c)",
            {pos(B("prec", B("prec", a, b), c)), neg(B("prec", a, B("prec", b, c))),
             neg(B("prec", a, B("succ", b, c))), with(-q, B("prec", a, B("bullet", b, c)))}),
        id3("(a:>b)<:c = a:>(b<:c)",
            {pos(B("prec", B("succ", a, b), c)), neg(B("succ", a, B("prec", b, c)))}),
        id3("(a*b):>c = a:>(b:>c)",
            {pos(B("succ", B("prec", a, b), c)), pos(B("succ", B("succ", a, b), c)),
             with(q, B("succ", B("bullet", a, b), c)), neg(B("succ", a, B("succ", b, c)))}),
        id3("(a:>b).c = a:>(b.c)",
            {pos(B("bullet", B("succ", a, b), c)), neg(B("succ", a, B("bullet", b, c)))}),
        id3("(a<:b).c = a.(b:>c)",
            {pos(B("bullet", B("prec", a, b), c)), neg(B("bullet", a, B("succ", b, c)))}),
        id3("(a.b)<:c = a.(b<:c)",
            {pos(B("prec", B("bullet", a, b), c)), neg(B("bullet", a, B("prec", b, c)))}),
        id3("(a.b).c = a.(b.c)",
            {pos(B("bullet", B("bullet", a, b), c)), neg(B("bullet", a, B("bullet", b, c)))}),
    };
}

IdentityList novikov_axioms() {
    return {
        id3("(a o b) o c = (a o c) o b",
            {pos(B("circ", B("circ", a, b), c)), neg(B("circ", B("circ", a, c), b))}),
        id3("(a o b) o c - a o (b o c) = (b o a) o c - b o (a o c)",
            {pos(B("circ", B("circ", a, b), c)), neg(B("circ", a, B("circ", b, c))),
             neg(B("circ", B("circ", b, a), c)), pos(B("circ", b, B("circ", a, c)))}),
    };
}

IdentityList novikov_associative_axioms() {
    return {
        id3("(a |- b) -| c = a |- (b -| c)",
            {pos(B("dashv", B("vdash", a, b), c)), neg(B("vdash", a, B("dashv", b, c)))}),
        id3("(a -| b) -| c - a -| (b |- c) = a |- (b |- c) - (a -| b) |- c",
            {pos(B("dashv", B("dashv", a, b), c)), neg(B("dashv", a, B("vdash", b, c))),
             neg(B("vdash", a, B("vdash", b, c))), pos(B("vdash", B("dashv", a, b), c))}),
    };
}

IdentityList novikov_dendriform_axioms() {
    return {
        id3("(a sw b) nw c = a sw (b ne c + b nw c)",
            {pos(B("nw", B("sw", a, b), c)), neg(B("sw", a, B("ne", b, c))),
             neg(B("sw", a, B("nw", b, c)))}),
        id3("(a se b) nw c = a se (b nw c)",
            {pos(B("nw", B("se", a, b), c)), neg(B("se", a, B("nw", b, c)))}),
        id3("(a se b + a sw b) ne c = a se (b ne c)",
            {pos(B("ne", B("se", a, b), c)), pos(B("ne", B("sw", a, b), c)),
             neg(B("se", a, B("ne", b, c)))}),
        id3("(a nw b) nw c - a nw (b se c + b sw c) = a sw (b se c + b sw c) - (a nw b) sw c",
            {pos(B("nw", B("nw", a, b), c)), neg(B("nw", a, B("se", b, c))),
             neg(B("nw", a, B("sw", b, c))), neg(B("sw", a, B("se", b, c))),
             neg(B("sw", a, B("sw", b, c))), pos(B("sw", B("nw", a, b), c))}),
        id3("(a ne b) nw c - a ne (b sw c) = a se (b sw c) - (a ne b) sw c",
            {pos(B("nw", B("ne", a, b), c)), neg(B("ne", a, B("sw", b, c))),
             neg(B("se", a, B("sw", b, c))), pos(B("sw", B("ne", a, b), c))}),
        id3("(a ne b + a nw b) ne c - a ne (b se c) = a se (b se c) - (a ne b + a nw b) se c",
            {pos(B("ne", B("ne", a, b), c)), pos(B("ne", B("nw", a, b), c)),
             neg(B("ne", a, B("se", b, c))), neg(B("se", a, B("se", b, c))),
             pos(B("se", B("ne", a, b), c)), pos(B("se", B("nw", a, b), c))}),
    };
}

IdentityList pre_novikov_axioms() {
    return {
        id3("(a lhd b) lhd c - a lhd (b rhd c + b lhd c) = (b rhd a) lhd c - b rhd (a lhd c)",
            {pos(B("lhd", B("lhd", a, b), c)), neg(B("lhd", a, B("rhd", b, c))),
             neg(B("lhd", a, B("lhd", b, c))), neg(B("lhd", B("rhd", b, a), c)),
             pos(B("rhd", b, B("lhd", a, c)))}),
        id3("(a rhd b + a lhd b) rhd c - a rhd (b rhd c) = (b rhd a + b lhd a) rhd c - b rhd (a rhd c)",
            {pos(B("rhd", B("rhd", a, b), c)), pos(B("rhd", B("lhd", a, b), c)),
             neg(B("rhd", a, B("rhd", b, c))), neg(B("rhd", B("rhd", b, a), c)),
             neg(B("rhd", B("lhd", b, a), c)), pos(B("rhd", b, B("rhd", a, c)))}),
        id3("(a lhd b) lhd c = (a lhd c) lhd b",
            {pos(B("lhd", B("lhd", a, b), c)), neg(B("lhd", B("lhd", a, c), b))}),
        id3("(a rhd b + a lhd b) rhd c = (a rhd c) lhd b",
            {pos(B("rhd", B("rhd", a, b), c)), pos(B("rhd", B("lhd", a, b), c)),
             neg(B("lhd", B("rhd", a, c), b))}),
    };
}

IdentityList novikov_tridendriform_axioms() {
    return {
        id3("(a sw b) nw c = a sw (b ne c + b nw c + b wedge c)",
            {pos(B("nw", B("sw", a, b), c)), neg(B("sw", a, B("ne", b, c))),
             neg(B("sw", a, B("nw", b, c))), neg(B("sw", a, B("wedge", b, c)))}),
        id3("(a se b) nw c = a se (b nw c)",
            {pos(B("nw", B("se", a, b), c)), neg(B("se", a, B("nw", b, c)))}),
        id3("(a se b + a sw b + a vee b) ne c = a se (b ne c)",
            {pos(B("ne", B("se", a, b), c)), pos(B("ne", B("sw", a, b), c)),
             pos(B("ne", B("vee", a, b), c)), neg(B("se", a, B("ne", b, c)))}),
        id3("(a nw b) nw c - a nw (b se c + b sw c + b vee c) = a sw (b se c + b sw c + b vee c) - (a nw b) sw c",
            {pos(B("nw", B("nw", a, b), c)), neg(B("nw", a, B("se", b, c))),
             neg(B("nw", a, B("sw", b, c))), neg(B("nw", a, B("vee", b, c))),
             neg(B("sw", a, B("se", b, c))), neg(B("sw", a, B("sw", b, c))),
             neg(B("sw", a, B("vee", b, c))), pos(B("sw", B("nw", a, b), c))}),
        id3("(a ne b) nw c - a ne (b sw c) = a se (b sw c) - (a ne b) sw c",
            {pos(B("nw", B("ne", a, b), c)), neg(B("ne", a, B("sw", b, c))),
             neg(B("se", a, B("sw", b, c))), pos(B("sw", B("ne", a, b), c))}),
        id3("(a ne b + a nw b + a wedge b) ne c - a ne (b se c) = a se (b se c) - (a ne b + a nw b + a wedge b) se c",
            {pos(B("ne", B("ne", a, b), c)), pos(B("ne", B("nw", a, b), c)),
             pos(B("ne", B("wedge", a, b), c)), neg(B("ne", a, B("se", b, c))),
             neg(B("se", a, B("se", b, c))), pos(B("se", B("ne", a, b), c)),
             pos(B("se", B("nw", a, b), c)), pos(B("se", B("wedge", a, b), c))}),
        id3("(a vee b) nw c = a vee (b nw c)",
            {pos(B("nw", B("vee", a, b), c)), neg(B("vee", a, B("nw", b, c)))}),
        id3("(a wedge b) nw c - a wedge (b sw c) = a vee (b sw c) - (a wedge b) sw c",
            {pos(B("nw", B("wedge", a, b), c)), neg(B("wedge", a, B("sw", b, c))),
             neg(B("vee", a, B("sw", b, c))), pos(B("sw", B("wedge", a, b), c))}),
        id3("(a sw b) wedge c = a vee (b ne c)",
            {pos(B("wedge", B("sw", a, b), c)), neg(B("vee", a, B("ne", b, c)))}),
        id3("(a nw b) wedge c - a wedge (b se c) = a vee (b se c) - (a nw b) vee c",
            {pos(B("wedge", B("nw", a, b), c)), neg(B("wedge", a, B("se", b, c))),
             neg(B("vee", a, B("se", b, c))), pos(B("vee", B("nw", a, b), c))}),
        id3("(a se b) wedge c = a se (b wedge c)",
            {pos(B("wedge", B("se", a, b), c)), neg(B("se", a, B("wedge", b, c)))}),
        id3("(a ne b) wedge c - a ne (b vee c) = a se (b vee c) - (a ne b) vee c",
            {pos(B("wedge", B("ne", a, b), c)), neg(B("ne", a, B("vee", b, c))),
             neg(B("se", a, B("vee", b, c))), pos(B("vee", B("ne", a, b), c))}),
        id3("(a vee b) wedge c = a vee (b wedge c)",
            {pos(B("wedge", B("vee", a, b), c)), neg(B("vee", a, B("wedge", b, c)))}),
        id3("(a wedge b) wedge c - a wedge (b vee c) = a vee (b vee c) - (a wedge b) vee c",
            {pos(B("wedge", B("wedge", a, b), c)), neg(B("wedge", a, B("vee", b, c))),
             neg(B("vee", a, B("vee", b, c))), pos(B("vee", B("wedge", a, b), c))}),
    };
}

IdentityList post_novikov_axioms() {
    return {
        id3("(a rhd b) lhd c = (a rhd c + a lhd c + a vw c) rhd b",
            {pos(B("lhd", B("rhd", a, b), c)), neg(B("rhd", B("rhd", a, c), b)),
             neg(B("rhd", B("lhd", a, c), b)), neg(B("rhd", B("vw", a, c), b))}),
        id3("(a lhd b) lhd c = (a lhd c) lhd b",
            {pos(B("lhd", B("lhd", a, b), c)), neg(B("lhd", B("lhd", a, c), b))}),
        id3("(a lhd b) lhd c - a lhd (b lhd c + b rhd c + b vw c) = (b rhd a) lhd c - b rhd (a lhd c)",
            {pos(B("lhd", B("lhd", a, b), c)), neg(B("lhd", a, B("lhd", b, c))),
             neg(B("lhd", a, B("rhd", b, c))), neg(B("lhd", a, B("vw", b, c))),
             neg(B("lhd", B("rhd", b, a), c)), pos(B("rhd", b, B("lhd", a, c)))}),
        id3("(a rhd b) lhd c - a rhd (c rhd b) = (c rhd b) lhd a - c rhd (a rhd b)",
            {pos(B("lhd", B("rhd", a, b), c)), neg(B("rhd", a, B("rhd", c, b))),
             neg(B("lhd", B("rhd", c, b), a)), pos(B("rhd", c, B("rhd", a, b)))}),
        id3("(a vw b) lhd c = (a lhd c) vw b",
            {pos(B("lhd", B("vw", a, b), c)), neg(B("vw", B("lhd", a, c), b))}),
        // the two mixed twists follow the commutative dictionary applied to
        // the six-operation axioms, which pins the variable roles
        id3("(a vw b) lhd c - a vw (c rhd b) = (c rhd b) vw a - c rhd (a vw b)",
            {pos(B("lhd", B("vw", a, b), c)), neg(B("vw", a, B("rhd", c, b))),
             neg(B("vw", B("rhd", c, b), a)), pos(B("rhd", c, B("vw", a, b)))}),
        id3("(a rhd b) vw c = (a rhd c) vw b",
            {pos(B("vw", B("rhd", a, b), c)), neg(B("vw", B("rhd", a, c), b))}),
        id3("(a lhd b) vw c - a vw (c lhd b) = (c lhd b) vw a - c vw (a lhd b)",
            {pos(B("vw", B("lhd", a, b), c)), neg(B("vw", a, B("lhd", c, b))),
             neg(B("vw", B("lhd", c, b), a)), pos(B("vw", c, B("lhd", a, b)))}),
        id3("(a vw b) vw c = (a vw c) vw b",
            {pos(B("vw", B("vw", a, b), c)), neg(B("vw", B("vw", a, c), b))}),
        id3("(a vw b) vw c - a vw (b vw c) = (b vw a) vw c - b vw (a vw c)",
            {pos(B("vw", B("vw", a, b), c)), neg(B("vw", a, B("vw", b, c))),
             neg(B("vw", B("vw", b, a), c)), pos(B("vw", b, B("vw", a, c)))}),
    };
}

IdentityList commutative_qshuffle_identities() {
    return {
        id2("a:>b = b<:a", {pos(B("succ", a, b)), neg(B("prec", b, a))}),
        id2("a.b = b.a", {pos(B("bullet", a, b)), neg(B("bullet", b, a))}),
    };
}

IdentityList commutative_dendriform_identities() {
    return {id2("a:>b = b<:a", {pos(B("succ", a, b)), neg(B("prec", b, a))})};
}

IdentityList comm_novikov_dendriform_identities() {
    return {
        id2("a nw b = b se a", {pos(B("nw", a, b)), neg(B("se", b, a))}),
        id2("a ne b = b sw a", {pos(B("ne", a, b)), neg(B("sw", b, a))}),
    };
}

IdentityList comm_novikov_tridendriform_identities() {
    IdentityList out = comm_novikov_dendriform_identities();
    out.push_back(id2("a wedge b = b vee a", {pos(B("wedge", a, b)), neg(B("vee", b, a))}));
    return out;
}

IdentityList comm_novikov_associative_identities() {
    return {id2("a -| b = b |- a", {pos(B("dashv", a, b)), neg(B("vdash", b, a))})};
}

IdentityList leibniz_identities(const std::vector<std::string>& ops, const Scalar& lam) {
    IdentityList out;
    for (const auto& op : ops) {
        out.push_back(id2(
            "d(a " + op + " b) = d(a) " + op + " b + a " + op + " d(b) + lam d(a) " + op + " d(b)",
            {pos(D(B(op, a, b))), neg(B(op, D(a), b)), neg(B(op, a, D(b))),
             with(-lam, B(op, D(a), D(b)))}));
    }
    return out;
}

IdentityList star_sum_identity(const Scalar& q) {
    return {id2("a*b = a<:b + a:>b + q a.b",
                {pos(B("star", a, b)), neg(B("prec", a, b)), neg(B("succ", a, b)),
                 with(-q, B("bullet", a, b))})};
}

IdentityList star_associativity() {
    return {id3("(a*b)*c = a*(b*c)",
                {pos(B("star", B("star", a, b), c)), neg(B("star", a, B("star", b, c)))})};
}

}  // namespace dendro
