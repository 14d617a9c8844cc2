#pragma once

#include <functional>
#include <map>
#include <string>

#include "dendro/trees.hpp"

namespace dendro {

/// Element of DT(ΔX): a linear combination of non-leaf Schröder trees.
using DTElement = LinComb<SchroederTree>;

std::string render(const DTElement& x);

/// The free differential q-tridendriform algebra of weight lam on decorated
/// Schröder trees: the recursive products, their associative sum, and the
/// derivation acting by decoration-order increments.
struct TridendAlgebra {
    Scalar lam = Scalar::lam();
    Scalar q = Scalar::q();
    unsigned max_order = kDefaultMaxOrder;

    DTElement prec(const DTElement& x, const DTElement& y) const;
    DTElement succ(const DTElement& x, const DTElement& y) const;
    DTElement bullet(const DTElement& x, const DTElement& y) const;
    DTElement star(const DTElement& x, const DTElement& y) const;
    DTElement d(const DTElement& x) const;

    static DTElement gen(const std::string& name, unsigned order = 0) {
        return DTElement::basis(SchroederTree::vertex(Generator{name, order}));
    }

    // Tree-level products; results may not contain the leaf (the middle-slot
    // helper alone may produce it, and grafting always consumes it).
    LinComb<SchroederTree> prec_trees(const SchroederTree& a, const SchroederTree& b) const;
    LinComb<SchroederTree> succ_trees(const SchroederTree& a, const SchroederTree& b) const;
    LinComb<SchroederTree> bullet_trees(const SchroederTree& a, const SchroederTree& b) const;
    // a ⋆ b for the middle slot, with the convention leaf ⋆ leaf = leaf.
    LinComb<SchroederTree> middle_trees(const SchroederTree& a, const SchroederTree& b) const;
};

/// Universal evaluation into any differential q-tridendriform target: f maps
/// generator names to target elements, decorated generators go to iterated
/// derivatives, and trees are peeled corolla-by-corolla.
template <class Target>
typename Target::Element eval_tree(const Target& target, const SchroederTree& t) {
    using Elem = typename Target::Element;
    const auto& decs = t.decorations();
    const auto& kids = t.children();
    Elem head = target.gen_image(decs[0]);
    if (!kids[0].is_leaf()) head = target.succ(eval_tree(target, kids[0]), head);
    if (!kids[1].is_leaf()) head = target.prec(head, eval_tree(target, kids[1]));
    if (decs.size() == 1) return head;
    // remainder corolla (|, kids[2..]) under decorations decs[1..]
    std::vector<SchroederTree> rest_kids;
    rest_kids.push_back(SchroederTree::leaf());
    rest_kids.insert(rest_kids.end(), kids.begin() + 2, kids.end());
    std::vector<Generator> rest_decs(decs.begin() + 1, decs.end());
    return target.bullet(head, eval_tree(target, graft(std::move(rest_kids), std::move(rest_decs))));
}

template <class Target>
typename Target::Element f_bar(const Target& target, const DTElement& x) {
    typename Target::Element out;
    for (const auto& [t, c] : x.terms()) out += eval_tree(target, t).scaled(c);
    return out;
}

/// DT(ΔX) as its own universal target with f = the single-vertex embedding.
struct TridendSelfTarget {
    using Element = DTElement;
    const TridendAlgebra* alg;

    Element prec(const Element& a, const Element& b) const { return alg->prec(a, b); }
    Element succ(const Element& a, const Element& b) const { return alg->succ(a, b); }
    Element bullet(const Element& a, const Element& b) const { return alg->bullet(a, b); }
    Element d(const Element& a) const { return alg->d(a); }
    Element gen_image(const Generator& g) const {
        Element base = TridendAlgebra::gen(g.name, 0);
        for (unsigned i = 0; i < g.order; ++i) base = alg->d(base);
        return base;
    }
};

}  // namespace dendro
