#include "dendro/dend.hpp"

namespace dendro {

std::string render(const DDElement& x) {
    return render_lincomb(x, [](const BinaryTree& t) { return serialize(t); });
}

namespace {

using TreeComb = LinComb<BinaryTree>;

TreeComb graft_left_over(const TreeComb& slot, const Generator& g, const BinaryTree& right) {
    TreeComb out;
    for (const auto& [t, c] : slot.terms()) out.add_term(BinaryTree::graft(t, g, right), c);
    return out;
}

TreeComb graft_right_over(const BinaryTree& left, const Generator& g, const TreeComb& slot) {
    TreeComb out;
    for (const auto& [t, c] : slot.terms()) out.add_term(BinaryTree::graft(left, g, t), c);
    return out;
}

}  // namespace

TreeComb DendAlgebra::prec_trees(const BinaryTree& a, const BinaryTree& b) const {
    if (a.is_leaf()) return {};
    if (b.is_leaf()) return TreeComb::basis(a);
    // a^l ∨_x (a^r ≺ b + a^r ≻ b); a leaf right subtree contributes b itself
    TreeComb slot;
    if (a.right().is_leaf()) {
        slot = TreeComb::basis(b);
    } else {
        slot = prec_trees(a.right(), b);
        slot += succ_trees(a.right(), b);
    }
    return graft_right_over(a.left(), a.decoration(), slot);
}

TreeComb DendAlgebra::succ_trees(const BinaryTree& a, const BinaryTree& b) const {
    if (b.is_leaf()) return {};
    if (a.is_leaf()) return TreeComb::basis(b);
    TreeComb slot;
    if (b.left().is_leaf()) {
        slot = TreeComb::basis(a);
    } else {
        slot = prec_trees(a, b.left());
        slot += succ_trees(a, b.left());
    }
    return graft_left_over(slot, b.decoration(), b.right());
}

DDElement DendAlgebra::prec(const DDElement& x, const DDElement& y) const {
    return bilinear_extend(
        [&](const BinaryTree& a, const BinaryTree& b) { return prec_trees(a, b); }, x, y);
}

DDElement DendAlgebra::succ(const DDElement& x, const DDElement& y) const {
    return bilinear_extend(
        [&](const BinaryTree& a, const BinaryTree& b) { return succ_trees(a, b); }, x, y);
}

DDElement DendAlgebra::star(const DDElement& x, const DDElement& y) const {
    DDElement out = prec(x, y);
    out += succ(x, y);
    return out;
}

DDElement DendAlgebra::d(const DDElement& x) const {
    auto d_tree = [&](const BinaryTree& t) {
        DDElement out;
        const int n = t.degree();
        if (n >= 63) throw Error("tree with " + std::to_string(n) + " decorations is too large to derive");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::set<int> positions;
            for (int i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i)) positions.insert(i + 1);
            out.add_term(with_decorations_incremented(t, positions, max_order),
                         lam.pow(static_cast<unsigned>(positions.size()) - 1));
        }
        return out;
    };
    return linear_extend(d_tree, x);
}

SchroederTree to_schroeder(const BinaryTree& t) {
    if (t.is_leaf()) return SchroederTree::leaf();
    return graft({to_schroeder(t.left()), to_schroeder(t.right())}, {t.decoration()});
}

LinComb<SchroederTree> to_schroeder(const DDElement& x) {
    LinComb<SchroederTree> out;
    for (const auto& [t, c] : x.terms()) out.add_term(to_schroeder(t), c);
    return out;
}

}  // namespace dendro
