#pragma once

#include <string>

#include "dendro/trees.hpp"

namespace dendro {

/// Element of DD(ΔX): a linear combination of non-leaf planar binary trees.
using DDElement = LinComb<BinaryTree>;

std::string render(const DDElement& x);

/// The free differential dendriform algebra of weight lam on decorated planar
/// binary trees. Implemented independently of the Schröder-tree model; the
/// embedding of one into the other at q = 0 is a cross-check in the tests.
struct DendAlgebra {
    Scalar lam = Scalar::lam();
    unsigned max_order = kDefaultMaxOrder;

    DDElement prec(const DDElement& x, const DDElement& y) const;
    DDElement succ(const DDElement& x, const DDElement& y) const;
    DDElement star(const DDElement& x, const DDElement& y) const;  // prec + succ
    DDElement d(const DDElement& x) const;

    static DDElement gen(const std::string& name, unsigned order = 0) {
        return DDElement::basis(BinaryTree::vertex(Generator{name, order}));
    }

    LinComb<BinaryTree> prec_trees(const BinaryTree& a, const BinaryTree& b) const;
    LinComb<BinaryTree> succ_trees(const BinaryTree& a, const BinaryTree& b) const;
};

/// Universal evaluation: a node l ∨_x r goes to (f̄(l) ≻ f̃(x)) ≺ f̄(r) with
/// leaf factors collapsing to the surviving operand.
template <class Target>
typename Target::Element eval_tree(const Target& target, const BinaryTree& t) {
    using Elem = typename Target::Element;
    Elem head = target.gen_image(t.decoration());
    if (!t.left().is_leaf()) head = target.succ(eval_tree(target, t.left()), head);
    if (!t.right().is_leaf()) head = target.prec(head, eval_tree(target, t.right()));
    return head;
}

template <class Target>
typename Target::Element f_bar(const Target& target, const DDElement& x) {
    typename Target::Element out;
    for (const auto& [t, c] : x.terms()) out += eval_tree(target, t).scaled(c);
    return out;
}

struct DendSelfTarget {
    using Element = DDElement;
    const DendAlgebra* alg;

    Element prec(const Element& a, const Element& b) const { return alg->prec(a, b); }
    Element succ(const Element& a, const Element& b) const { return alg->succ(a, b); }
    Element d(const Element& a) const { return alg->d(a); }
    Element gen_image(const Generator& g) const {
        Element base = DendAlgebra::gen(g.name, 0);
        for (unsigned i = 0; i < g.order; ++i) base = alg->d(base);
        return base;
    }
};

/// Injection DD -> DT sending a binary vertex to a two-child Schröder vertex.
SchroederTree to_schroeder(const BinaryTree& t);
LinComb<SchroederTree> to_schroeder(const DDElement& x);

}  // namespace dendro
