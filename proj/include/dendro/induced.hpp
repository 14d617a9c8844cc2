#pragma once

#include "dendro/identities.hpp"

namespace dendro {

// The weight-zero inductions only make sense when the derivation has weight
// zero; builders refuse anything else.
inline void require_weight_zero(const Scalar& weight) {
    if (!weight.is_zero())
        throw WeightNotZero(
            "induction requires a weight-zero derivation; substitute lam = 0 first (got lam = " +
            weight.str() + ")");
}

namespace detail {

template <class B>
void spot_check(const OpTable<B>& table, const IdentityList& ids,
                const std::vector<LinComb<B>>& elems, const char* what) {
    CheckReport rep = check_identities(table, ids, elems);
    for (const auto& r : rep.results) {
        if (!r.passed) {
            std::string msg = std::string(what) + ": identity '" + r.name + "' fails";
            if (r.witness) msg += " at " + *r.witness;
            if (r.residual) msg += " with residual " + *r.residual;
            if (std::string(what).find("commut") != std::string::npos)
                throw CommutativityViolation(msg);
            throw AxiomViolation(msg);
        }
    }
}

}  // namespace detail

/// From a differential dendriform algebra of weight zero: the four derived
/// operations a se b = d(a):>b, a ne b = a:>d(b), a sw b = d(a)<:b,
/// a nw b = a<:d(b), plus their Novikov-associative sums.
template <class B>
OpTable<B> induce_novikov_dendriform(const OpTable<B>& D, const Scalar& weight,
                                     const std::vector<LinComb<B>>& spot = {}) {
    require_weight_zero(weight);
    if (!spot.empty())
        detail::spot_check(D, leibniz_identities({"prec", "succ"}, Scalar::zero()), spot,
                           "weight-zero Leibniz spot check");
    using Elem = LinComb<B>;
    auto prec = D.binary.at("prec");
    auto succ = D.binary.at("succ");
    auto d = D.derivation;
    OpTable<B> out;
    out.render = D.render;
    out.binary["se"] = [=](const Elem& x, const Elem& y) { return succ(d(x), y); };
    out.binary["ne"] = [=](const Elem& x, const Elem& y) { return succ(x, d(y)); };
    out.binary["sw"] = [=](const Elem& x, const Elem& y) { return prec(d(x), y); };
    out.binary["nw"] = [=](const Elem& x, const Elem& y) { return prec(x, d(y)); };
    out.binary["vdash"] = [=](const Elem& x, const Elem& y) { return succ(d(x), y) + prec(d(x), y); };
    out.binary["dashv"] = [=](const Elem& x, const Elem& y) { return succ(x, d(y)) + prec(x, d(y)); };
    return out;
}

/// Commutative case: a lhd b = a<:d(b), a rhd b = d(b)<:a, and the Novikov
/// product circ = lhd + rhd. Requires a:>b = b<:a on the spot set.
template <class B>
OpTable<B> induce_pre_novikov(const OpTable<B>& D, const Scalar& weight,
                              const std::vector<LinComb<B>>& spot) {
    require_weight_zero(weight);
    detail::spot_check(D, commutative_dendriform_identities(), spot, "commutativity spot check");
    using Elem = LinComb<B>;
    auto prec = D.binary.at("prec");
    auto d = D.derivation;
    OpTable<B> out;
    out.render = D.render;
    out.binary["lhd"] = [=](const Elem& x, const Elem& y) { return prec(x, d(y)); };
    out.binary["rhd"] = [=](const Elem& x, const Elem& y) { return prec(d(y), x); };
    out.binary["circ"] = [=](const Elem& x, const Elem& y) { return prec(x, d(y)) + prec(d(y), x); };
    return out;
}

/// Tridendriform case: adds a vee b = d(a).b and a wedge b = a.d(b); the
/// Novikov-associative sums pick up the middle terms.
template <class B>
OpTable<B> induce_novikov_tridendriform(const OpTable<B>& T, const Scalar& weight,
                                        const std::vector<LinComb<B>>& spot = {}) {
    require_weight_zero(weight);
    if (!spot.empty())
        detail::spot_check(T, leibniz_identities({"prec", "succ", "bullet"}, Scalar::zero()), spot,
                           "weight-zero Leibniz spot check");
    using Elem = LinComb<B>;
    auto prec = T.binary.at("prec");
    auto succ = T.binary.at("succ");
    auto bullet = T.binary.at("bullet");
    auto d = T.derivation;
    OpTable<B> out;
    out.render = T.render;
    out.binary["se"] = [=](const Elem& x, const Elem& y) { return succ(d(x), y); };
    out.binary["ne"] = [=](const Elem& x, const Elem& y) { return succ(x, d(y)); };
    out.binary["sw"] = [=](const Elem& x, const Elem& y) { return prec(d(x), y); };
    out.binary["nw"] = [=](const Elem& x, const Elem& y) { return prec(x, d(y)); };
    out.binary["vee"] = [=](const Elem& x, const Elem& y) { return bullet(d(x), y); };
    out.binary["wedge"] = [=](const Elem& x, const Elem& y) { return bullet(x, d(y)); };
    out.binary["vdash"] = [=](const Elem& x, const Elem& y) {
        return succ(d(x), y) + prec(d(x), y) + bullet(d(x), y);
    };
    out.binary["dashv"] = [=](const Elem& x, const Elem& y) {
        return succ(x, d(y)) + prec(x, d(y)) + bullet(x, d(y));
    };
    return out;
}

/// Commutative tridendriform case: lhd/rhd as in the pre-Novikov induction
/// plus a vw b = a.d(b); circ = lhd + rhd + vw.
template <class B>
OpTable<B> induce_post_novikov(const OpTable<B>& T, const Scalar& weight,
                               const std::vector<LinComb<B>>& spot) {
    require_weight_zero(weight);
    detail::spot_check(T, commutative_qshuffle_identities(), spot, "commutativity spot check");
    using Elem = LinComb<B>;
    auto prec = T.binary.at("prec");
    auto succ = T.binary.at("succ");
    auto bullet = T.binary.at("bullet");
    auto d = T.derivation;
    OpTable<B> out;
    out.render = T.render;
    out.binary["lhd"] = [=](const Elem& x, const Elem& y) { return prec(x, d(y)); };
    out.binary["rhd"] = [=](const Elem& x, const Elem& y) { return succ(x, d(y)); };
    out.binary["vw"] = [=](const Elem& x, const Elem& y) { return bullet(x, d(y)); };
    out.binary["circ"] = [=](const Elem& x, const Elem& y) {
        return prec(x, d(y)) + succ(x, d(y)) + bullet(x, d(y));
    };
    return out;
}

enum class StructureKind {
    Novikov,
    CommNovikovAssociative,
    PreNovikov,
    CommNovikovDendriform,
    PostNovikov,
    CommNovikovTridendriform,
};

inline IdentityList axioms_for(StructureKind kind) {
    switch (kind) {
        case StructureKind::Novikov:
            return novikov_axioms();
        case StructureKind::CommNovikovAssociative: {
            IdentityList ids = novikov_associative_axioms();
            for (auto& i : comm_novikov_associative_identities()) ids.push_back(i);
            return ids;
        }
        case StructureKind::PreNovikov:
            return pre_novikov_axioms();
        case StructureKind::CommNovikovDendriform: {
            IdentityList ids = novikov_dendriform_axioms();
            for (auto& i : comm_novikov_dendriform_identities()) ids.push_back(i);
            return ids;
        }
        case StructureKind::PostNovikov:
            return post_novikov_axioms();
        case StructureKind::CommNovikovTridendriform: {
            IdentityList ids = novikov_tridendriform_axioms();
            for (auto& i : comm_novikov_tridendriform_identities()) ids.push_back(i);
            return ids;
        }
    }
    throw ConfigError("unknown structure kind");
}

/// The mutually inverse passages between the commutative Novikov-type
/// structures and their one-sided forms. The source table must pass its own
/// axiom list on the spot set first.
template <class B>
OpTable<B> convert(StructureKind from, const OpTable<B>& table,
                   const std::vector<LinComb<B>>& spot) {
    detail::spot_check(table, axioms_for(from), spot, "conversion precondition");
    using Elem = LinComb<B>;
    OpTable<B> out;
    out.render = table.render;
    auto swap2 = [](const typename OpTable<B>::BinOp& f) {
        return [f](const Elem& x, const Elem& y) { return f(y, x); };
    };
    switch (from) {
        case StructureKind::Novikov: {
            auto circ = table.binary.at("circ");
            out.binary["dashv"] = circ;
            out.binary["vdash"] = swap2(circ);
            return out;
        }
        case StructureKind::CommNovikovAssociative: {
            out.binary["circ"] = table.binary.at("dashv");
            return out;
        }
        case StructureKind::PreNovikov: {
            auto lhd = table.binary.at("lhd");
            auto rhd = table.binary.at("rhd");
            out.binary["nw"] = lhd;
            out.binary["se"] = swap2(lhd);
            out.binary["ne"] = rhd;
            out.binary["sw"] = swap2(rhd);
            return out;
        }
        case StructureKind::CommNovikovDendriform: {
            out.binary["lhd"] = table.binary.at("nw");
            out.binary["rhd"] = table.binary.at("ne");
            return out;
        }
        case StructureKind::PostNovikov: {
            auto lhd = table.binary.at("lhd");
            auto rhd = table.binary.at("rhd");
            auto vw = table.binary.at("vw");
            out.binary["nw"] = lhd;
            out.binary["se"] = swap2(lhd);
            out.binary["ne"] = rhd;
            out.binary["sw"] = swap2(rhd);
            out.binary["wedge"] = vw;
            out.binary["vee"] = swap2(vw);
            return out;
        }
        case StructureKind::CommNovikovTridendriform: {
            out.binary["lhd"] = table.binary.at("nw");
            out.binary["rhd"] = table.binary.at("ne");
            out.binary["vw"] = table.binary.at("wedge");
            return out;
        }
    }
    throw ConfigError("unknown structure kind");
}

}  // namespace dendro
