#include "dendro/tridend.hpp"

namespace dendro {

std::string render(const DTElement& x) {
    return render_lincomb(x, [](const SchroederTree& t) { return serialize(t); });
}

namespace {

using TreeComb = LinComb<SchroederTree>;

// Graft with one child slot holding a linear combination; extends
// multilinearly in that slot.
TreeComb graft_over(const std::vector<Generator>& decs, const std::vector<SchroederTree>& prefix,
                    const TreeComb& slot, const std::vector<SchroederTree>& suffix) {
    TreeComb out;
    for (const auto& [t, c] : slot.terms()) {
        std::vector<SchroederTree> kids;
        kids.reserve(prefix.size() + 1 + suffix.size());
        kids.insert(kids.end(), prefix.begin(), prefix.end());
        kids.push_back(t);
        kids.insert(kids.end(), suffix.begin(), suffix.end());
        out.add_term(graft(std::move(kids), decs), c);
    }
    return out;
}

}  // namespace

TreeComb TridendAlgebra::middle_trees(const SchroederTree& a, const SchroederTree& b) const {
    if (a.is_leaf() && b.is_leaf()) return TreeComb::basis(SchroederTree::leaf());
    TreeComb out = prec_trees(a, b);
    out += succ_trees(a, b);
    out += bullet_trees(a, b).scaled(q);
    return out;
}

TreeComb TridendAlgebra::prec_trees(const SchroederTree& a, const SchroederTree& b) const {
    if (a.is_leaf()) return {};
    if (b.is_leaf()) return TreeComb::basis(a);
    const auto& kids = a.children();
    std::vector<SchroederTree> prefix(kids.begin(), kids.end() - 1);
    return graft_over(a.decorations(), prefix, middle_trees(kids.back(), b), {});
}

TreeComb TridendAlgebra::succ_trees(const SchroederTree& a, const SchroederTree& b) const {
    if (b.is_leaf()) return {};
    if (a.is_leaf()) return TreeComb::basis(b);
    const auto& kids = b.children();
    std::vector<SchroederTree> suffix(kids.begin() + 1, kids.end());
    return graft_over(b.decorations(), {}, middle_trees(a, kids.front()), suffix);
}

TreeComb TridendAlgebra::bullet_trees(const SchroederTree& a, const SchroederTree& b) const {
    if (a.is_leaf() || b.is_leaf()) return {};
    const auto& ak = a.children();
    const auto& bk = b.children();
    std::vector<Generator> decs = a.decorations();
    decs.insert(decs.end(), b.decorations().begin(), b.decorations().end());
    std::vector<SchroederTree> prefix(ak.begin(), ak.end() - 1);
    std::vector<SchroederTree> suffix(bk.begin() + 1, bk.end());
    return graft_over(decs, prefix, middle_trees(ak.back(), bk.front()), suffix);
}

DTElement TridendAlgebra::prec(const DTElement& x, const DTElement& y) const {
    return bilinear_extend(
        [&](const SchroederTree& a, const SchroederTree& b) { return prec_trees(a, b); }, x, y);
}

DTElement TridendAlgebra::succ(const DTElement& x, const DTElement& y) const {
    return bilinear_extend(
        [&](const SchroederTree& a, const SchroederTree& b) { return succ_trees(a, b); }, x, y);
}

DTElement TridendAlgebra::bullet(const DTElement& x, const DTElement& y) const {
    return bilinear_extend(
        [&](const SchroederTree& a, const SchroederTree& b) { return bullet_trees(a, b); }, x, y);
}

DTElement TridendAlgebra::star(const DTElement& x, const DTElement& y) const {
    DTElement out = prec(x, y);
    out += succ(x, y);
    out += bullet(x, y).scaled(q);
    return out;
}

DTElement TridendAlgebra::d(const DTElement& x) const {
    auto d_tree = [&](const SchroederTree& t) {
        DTElement out;
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

}  // namespace dendro
