#pragma once

#include "dendro/identities.hpp"

namespace dendro {

/// A differential algebra of weight lam carrying a Rota-Baxter operator P of
/// weight q, with d P = P d. Both hypothesis laws are verified on a caller
/// supplied test set before any structure is lifted.
template <class B>
struct RBDiffAlgebra {
    using Elem = LinComb<B>;

    std::function<Elem(const Elem&, const Elem&)> mul;
    std::function<Elem(const Elem&)> d;
    std::function<Elem(const Elem&)> P;
    Scalar lam = Scalar::lam();
    Scalar q = Scalar::q();
    std::function<std::string(const Elem&)> render;
};

template <class B>
void verify_rb_hypotheses(const RBDiffAlgebra<B>& A, const std::vector<LinComb<B>>& test) {
    for (const auto& x : test) {
        for (const auto& y : test) {
            // P(a)P(b) = P(P(a)b + aP(b) + q ab)
            auto lhs = A.mul(A.P(x), A.P(y));
            auto inner = A.mul(A.P(x), y) + A.mul(x, A.P(y)) + A.mul(x, y).scaled(A.q);
            auto rhs = A.P(inner);
            if (!(lhs == rhs))
                throw RBLawViolation("Rota-Baxter law of weight " + A.q.str() + " fails at a = " +
                                     A.render(x) + ", b = " + A.render(y) + "; residual " +
                                     A.render(lhs - rhs));
        }
        auto com = A.d(A.P(x)) - A.P(A.d(x));
        if (!com.is_zero())
            throw CommutationViolation("dP = Pd fails at a = " + A.render(x) + "; residual " +
                                       A.render(com));
    }
}

/// Weight-zero lift: a prec b = a P(b), a succ b = P(a) b.
template <class B>
OpTable<B> lift_dendriform_weight0(const RBDiffAlgebra<B>& A, const std::vector<LinComb<B>>& test) {
    if (!A.q.is_zero()) throw RBLawViolation("weight-0 lift requires q = 0, got q = " + A.q.str());
    verify_rb_hypotheses(A, test);
    using Elem = LinComb<B>;
    auto mul = A.mul;
    auto P = A.P;
    OpTable<B> out;
    out.render = A.render;
    out.binary["prec"] = [=](const Elem& x, const Elem& y) { return mul(x, P(y)); };
    out.binary["succ"] = [=](const Elem& x, const Elem& y) { return mul(P(x), y); };
    out.derivation = A.d;
    return out;
}

/// Weight-q lift to a differential q-tridendriform structure with the middle
/// product the algebra multiplication itself.
template <class B>
OpTable<B> lift_tridendriform(const RBDiffAlgebra<B>& A, const std::vector<LinComb<B>>& test) {
    verify_rb_hypotheses(A, test);
    using Elem = LinComb<B>;
    auto mul = A.mul;
    auto P = A.P;
    Scalar q = A.q;
    OpTable<B> out;
    out.render = A.render;
    out.binary["prec"] = [=](const Elem& x, const Elem& y) { return mul(x, P(y)); };
    out.binary["succ"] = [=](const Elem& x, const Elem& y) { return mul(P(x), y); };
    out.binary["bullet"] = mul;
    out.binary["star"] = [=](const Elem& x, const Elem& y) {
        return mul(x, P(y)) + mul(P(x), y) + mul(x, y).scaled(q);
    };
    out.derivation = A.d;
    return out;
}

enum class DendLiftVariant { Left, Right };

/// Weight-q lift folded into two dendriform operations: the q ab term joins
/// prec (Left) or succ (Right).
template <class B>
OpTable<B> lift_dendriform_weightq(const RBDiffAlgebra<B>& A, const std::vector<LinComb<B>>& test,
                                   DendLiftVariant variant) {
    verify_rb_hypotheses(A, test);
    using Elem = LinComb<B>;
    auto mul = A.mul;
    auto P = A.P;
    Scalar q = A.q;
    OpTable<B> out;
    out.render = A.render;
    if (variant == DendLiftVariant::Left) {
        out.binary["prec"] = [=](const Elem& x, const Elem& y) {
            return mul(x, P(y)) + mul(x, y).scaled(q);
        };
        out.binary["succ"] = [=](const Elem& x, const Elem& y) { return mul(P(x), y); };
    } else {
        out.binary["prec"] = [=](const Elem& x, const Elem& y) { return mul(x, P(y)); };
        out.binary["succ"] = [=](const Elem& x, const Elem& y) {
            return mul(P(x), y) + mul(x, y).scaled(q);
        };
    }
    out.derivation = A.d;
    return out;
}

/// The built-in desk-scale operator family P = c id; it commutes with every
/// derivation, and P = -q id is a Rota-Baxter operator of weight q.
template <class B>
RBDiffAlgebra<B> scalar_rb_algebra(std::function<LinComb<B>(const LinComb<B>&, const LinComb<B>&)> mul,
                                   std::function<LinComb<B>(const LinComb<B>&)> d, const Scalar& lam,
                                   const Scalar& q, const Scalar& c,
                                   std::function<std::string(const LinComb<B>&)> render) {
    RBDiffAlgebra<B> A;
    A.mul = std::move(mul);
    A.d = std::move(d);
    A.P = [c](const LinComb<B>& x) { return x.scaled(c); };
    A.lam = lam;
    A.q = q;
    A.render = std::move(render);
    return A;
}

}  // namespace dendro
