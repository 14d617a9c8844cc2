#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dendro/diffpoly.hpp"

#include "json.hpp"

namespace dendro {

/// Decoration symbol x^(n) drawn from a generator alphabet.
struct Generator {
    std::string name;
    unsigned order = 0;

    std::string str() const { return name + "^(" + std::to_string(order) + ")"; }

    friend auto operator<=>(const Generator& a, const Generator& b) {
        if (auto c = a.name <=> b.name; c != 0) return c;
        return a.order <=> b.order;
    }
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Valently decorated Schröder tree: a leaf, or a node carrying m >= 1
/// decorations and exactly m+1 children. Values are immutable and share
/// subtrees, so copies are cheap.
class SchroederTree {
public:
    SchroederTree() = default;  // leaf

    static SchroederTree leaf() { return {}; }
    static SchroederTree vertex(Generator g);  // single decorated vertex with two leaves

    bool is_leaf() const { return node_ == nullptr; }
    int leaf_count() const;
    int degree() const { return leaf_count() - 1; }  // = total number of decorations

    const std::vector<Generator>& decorations() const;
    const std::vector<SchroederTree>& children() const;

    friend bool operator==(const SchroederTree& a, const SchroederTree& b);
    friend bool operator<(const SchroederTree& a, const SchroederTree& b);

private:
    struct Node {
        std::vector<Generator> decorations;
        std::vector<SchroederTree> children;
        int leaves = 0;
    };
    std::shared_ptr<const Node> node_;

    friend SchroederTree graft(std::vector<SchroederTree> children, std::vector<Generator> decorations);
};

/// Planar binary tree with one decoration per internal vertex.
class BinaryTree {
public:
    BinaryTree() = default;  // leaf

    static BinaryTree leaf() { return {}; }
    static BinaryTree vertex(Generator g) { return graft(leaf(), std::move(g), leaf()); }
    static BinaryTree graft(BinaryTree left, Generator g, BinaryTree right);

    bool is_leaf() const { return node_ == nullptr; }
    int leaf_count() const;
    int degree() const { return leaf_count() - 1; }

    const BinaryTree& left() const;
    const Generator& decoration() const;
    const BinaryTree& right() const;

    friend bool operator==(const BinaryTree& a, const BinaryTree& b);
    friend bool operator<(const BinaryTree& a, const BinaryTree& b);

private:
    struct Node;  // holds left/right subtrees; defined out of line
    std::shared_ptr<const Node> node_;
};

/// Graft m+1 subtrees under a new root decorated by m >= 1 generators.
/// Throws ArityMismatch unless |children| == |decorations| + 1.
SchroederTree graft(std::vector<SchroederTree> children, std::vector<Generator> decorations);

int depth(const SchroederTree& t);
int depth(const BinaryTree& t);

/// Number of children of the root; throws LeafHasNoBreadth on a leaf.
int breadth(const SchroederTree& t);

// Decorations listed in planar left-to-right order (in-order traversal:
// child0, x1, child1, ..., xm, childm).
std::vector<Generator> decorations_in_planar_order(const SchroederTree& t);
std::vector<Generator> decorations_in_planar_order(const BinaryTree& t);

// `positions` are 1-based planar decoration indices; each selected order is
// incremented by one.
SchroederTree with_decorations_incremented(const SchroederTree& t, const std::set<int>& positions,
                                           unsigned max_order = kDefaultMaxOrder);
BinaryTree with_decorations_incremented(const BinaryTree& t, const std::set<int>& positions,
                                        unsigned max_order = kDefaultMaxOrder);

std::vector<Generator> make_alphabet(const std::vector<std::string>& names, unsigned max_order);

/// All trees with exactly n_leaves leaves and decorations drawn from the
/// alphabet, duplicate-free in canonical order.
std::vector<SchroederTree> enumerate_schroeder(const std::vector<Generator>& alphabet, int n_leaves);
std::vector<BinaryTree> enumerate_binary(const std::vector<Generator>& alphabet, int n_leaves);

// Serialization grammar: leaf "|"; Schröder node "(V x^(0),y^(1); | | |)";
// binary node "[left x^(0) right]". One space between children on output,
// arbitrary whitespace on input.
std::string serialize(const SchroederTree& t);
std::string serialize(const BinaryTree& t);
SchroederTree parse_schroeder(std::string_view text);
BinaryTree parse_binary(std::string_view text);

nlohmann::ordered_json to_json(const SchroederTree& t);
nlohmann::ordered_json to_json(const BinaryTree& t);

}  // namespace dendro
