#include "dendro/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "dendro/errors.hpp"

namespace dendro {

// ---------------------------------------------------------------------------
// SchroederTree

SchroederTree SchroederTree::vertex(Generator g) {
    return graft({leaf(), leaf()}, {std::move(g)});
}

int SchroederTree::leaf_count() const { return node_ ? node_->leaves : 1; }

const std::vector<Generator>& SchroederTree::decorations() const { return node_->decorations; }
const std::vector<SchroederTree>& SchroederTree::children() const { return node_->children; }

SchroederTree graft(std::vector<SchroederTree> children, std::vector<Generator> decorations) {
    if (decorations.empty() || children.size() != decorations.size() + 1)
        throw ArityMismatch("graft needs m >= 1 decorations and m+1 children, got " +
                            std::to_string(decorations.size()) + " and " +
                            std::to_string(children.size()));
    auto node = std::make_shared<SchroederTree::Node>();
    node->leaves = 0;
    for (const auto& c : children) node->leaves += c.leaf_count();
    node->decorations = std::move(decorations);
    node->children = std::move(children);
    SchroederTree t;
    t.node_ = std::move(node);
    return t;
}

bool operator==(const SchroederTree& a, const SchroederTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() || b.is_leaf()) return false;
    return a.node_->decorations == b.node_->decorations && a.node_->children == b.node_->children;
}

// Canonical order: leaf count, then breadth, then (decorations, children)
// lexicographically.
bool operator<(const SchroederTree& a, const SchroederTree& b) {
    if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count();
    if (a.is_leaf()) return false;  // both leaves: equal
    if (a.node_->children.size() != b.node_->children.size())
        return a.node_->children.size() < b.node_->children.size();
    if (a.node_->decorations != b.node_->decorations)
        return a.node_->decorations < b.node_->decorations;
    return a.node_->children < b.node_->children;
}

// ---------------------------------------------------------------------------
// BinaryTree

struct BinaryTree::Node {
    BinaryTree left, right;
    Generator decoration;
    int leaves = 0;
};

BinaryTree BinaryTree::graft(BinaryTree left, Generator g, BinaryTree right) {
    auto node = std::make_shared<Node>();
    node->leaves = left.leaf_count() + right.leaf_count();
    node->left = std::move(left);
    node->right = std::move(right);
    node->decoration = std::move(g);
    BinaryTree t;
    t.node_ = std::move(node);
    return t;
}

int BinaryTree::leaf_count() const { return node_ ? node_->leaves : 1; }
const BinaryTree& BinaryTree::left() const { return node_->left; }
const Generator& BinaryTree::decoration() const { return node_->decoration; }
const BinaryTree& BinaryTree::right() const { return node_->right; }

bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() || b.is_leaf()) return false;
    return a.node_->decoration == b.node_->decoration && a.node_->left == b.node_->left &&
           a.node_->right == b.node_->right;
}

bool operator<(const BinaryTree& a, const BinaryTree& b) {
    if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count();
    if (a.is_leaf()) return false;
    if (a.node_->decoration != b.node_->decoration) return a.node_->decoration < b.node_->decoration;
    if (a.node_->left == b.node_->left) return a.node_->right < b.node_->right;
    return a.node_->left < b.node_->left;
}

// ---------------------------------------------------------------------------
// Structure queries

int depth(const SchroederTree& t) {
    if (t.is_leaf()) return 0;
    int m = 0;
    for (const auto& c : t.children()) m = std::max(m, depth(c));
    return m + 1;
}

int depth(const BinaryTree& t) {
    if (t.is_leaf()) return 0;
    return 1 + std::max(depth(t.left()), depth(t.right()));
}

int breadth(const SchroederTree& t) {
    if (t.is_leaf()) throw LeafHasNoBreadth("breadth of the leaf tree is undefined");
    return static_cast<int>(t.children().size());
}

std::vector<Generator> decorations_in_planar_order(const SchroederTree& t) {
    std::vector<Generator> out;
    auto walk = [&](auto&& self, const SchroederTree& s) -> void {
        if (s.is_leaf()) return;
        for (std::size_t i = 0; i < s.decorations().size(); ++i) {
            self(self, s.children()[i]);
            out.push_back(s.decorations()[i]);
        }
        self(self, s.children().back());
    };
    walk(walk, t);
    return out;
}

std::vector<Generator> decorations_in_planar_order(const BinaryTree& t) {
    std::vector<Generator> out;
    auto walk = [&](auto&& self, const BinaryTree& s) -> void {
        if (s.is_leaf()) return;
        self(self, s.left());
        out.push_back(s.decoration());
        self(self, s.right());
    };
    walk(walk, t);
    return out;
}

namespace {

Generator bumped(const Generator& g, unsigned max_order) {
    if (g.order + 1 > max_order)
        throw DerivOrderOverflow("decoration order " + std::to_string(g.order + 1) +
                                 " exceeds maximum " + std::to_string(max_order));
    return Generator{g.name, g.order + 1};
}

}  // namespace

SchroederTree with_decorations_incremented(const SchroederTree& t, const std::set<int>& positions,
                                           unsigned max_order) {
    int total = t.degree();
    for (int p : positions)
        if (p < 1 || p > total)
            throw IndexOutOfRange("decoration position " + std::to_string(p) + " not in 1.." +
                                  std::to_string(total));
    int next = 0;  // 0-based planar index of the next decoration visited
    auto walk = [&](auto&& self, const SchroederTree& s) -> SchroederTree {
        if (s.is_leaf()) return s;
        std::vector<SchroederTree> kids;
        std::vector<Generator> decs;
        kids.reserve(s.children().size());
        decs.reserve(s.decorations().size());
        for (std::size_t i = 0; i < s.decorations().size(); ++i) {
            kids.push_back(self(self, s.children()[i]));
            const Generator& g = s.decorations()[i];
            decs.push_back(positions.count(++next) ? bumped(g, max_order) : g);
        }
        kids.push_back(self(self, s.children().back()));
        return graft(std::move(kids), std::move(decs));
    };
    return walk(walk, t);
}

BinaryTree with_decorations_incremented(const BinaryTree& t, const std::set<int>& positions,
                                        unsigned max_order) {
    int total = t.degree();
    for (int p : positions)
        if (p < 1 || p > total)
            throw IndexOutOfRange("decoration position " + std::to_string(p) + " not in 1.." +
                                  std::to_string(total));
    int next = 0;
    auto walk = [&](auto&& self, const BinaryTree& s) -> BinaryTree {
        if (s.is_leaf()) return s;
        BinaryTree l = self(self, s.left());
        const Generator& g = s.decoration();
        Generator d = positions.count(++next) ? bumped(g, max_order) : g;
        BinaryTree r = self(self, s.right());
        return BinaryTree::graft(std::move(l), std::move(d), std::move(r));
    };
    return walk(walk, t);
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Generator> make_alphabet(const std::vector<std::string>& names, unsigned max_order) {
    std::vector<Generator> out;
    for (const auto& n : names)
        for (unsigned k = 0; k <= max_order; ++k) out.push_back(Generator{n, k});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// All compositions of n into `parts` positive summands.
void compositions(int n, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        if (n >= 1) {
            cur.push_back(n);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = 1; first <= n - (parts - 1); ++first) {
        cur.push_back(first);
        compositions(n - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

template <class T>
void decoration_tuples(const std::vector<Generator>& alphabet, int m, std::vector<Generator>& cur,
                       T&& emit) {
    if (m == 0) {
        emit(cur);
        return;
    }
    for (const auto& g : alphabet) {
        cur.push_back(g);
        decoration_tuples(alphabet, m - 1, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SchroederTree> enumerate_schroeder(const std::vector<Generator>& alphabet, int n_leaves) {
    std::map<int, std::vector<SchroederTree>> memo;
    auto gen = [&](auto&& self, int n) -> const std::vector<SchroederTree>& {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        std::vector<SchroederTree> out;
        if (n == 1) {
            out.push_back(SchroederTree::leaf());
        } else {
            for (int m = 1; m <= n - 1; ++m) {
                std::vector<std::vector<int>> comps;
                std::vector<int> cur;
                compositions(n, m + 1, cur, comps);
                for (const auto& comp : comps) {
                    // materialize child choices per slot
                    std::vector<std::size_t> idx(comp.size(), 0);
                    std::vector<const std::vector<SchroederTree>*> pools;
                    for (int leaves : comp) pools.push_back(&self(self, leaves));
                    while (true) {
                        std::vector<SchroederTree> kids;
                        for (std::size_t s = 0; s < pools.size(); ++s) kids.push_back((*pools[s])[idx[s]]);
                        std::vector<Generator> dcur;
                        decoration_tuples(alphabet, m, dcur, [&](const std::vector<Generator>& decs) {
                            out.push_back(graft(kids, decs));
                        });
                        std::size_t s = pools.size();
                        while (s > 0) {
                            --s;
                            if (++idx[s] < pools[s]->size()) break;
                            idx[s] = 0;
                            if (s == 0) goto done_comp;
                        }
                    }
                done_comp:;
                }
            }
        }
        std::sort(out.begin(), out.end());
        return memo.emplace(n, std::move(out)).first->second;
    };
    return gen(gen, n_leaves);
}

std::vector<BinaryTree> enumerate_binary(const std::vector<Generator>& alphabet, int n_leaves) {
    std::map<int, std::vector<BinaryTree>> memo;
    auto gen = [&](auto&& self, int n) -> const std::vector<BinaryTree>& {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        std::vector<BinaryTree> out;
        if (n == 1) {
            out.push_back(BinaryTree::leaf());
        } else {
            for (int lv = 1; lv <= n - 1; ++lv) {
                for (const auto& l : self(self, lv))
                    for (const auto& g : alphabet)
                        for (const auto& r : self(self, n - lv))
                            out.push_back(BinaryTree::graft(l, g, r));
            }
        }
        std::sort(out.begin(), out.end());
        return memo.emplace(n, std::move(out)).first->second;
    };
    return gen(gen, n_leaves);
}

// ---------------------------------------------------------------------------
// Serialization

std::string serialize(const SchroederTree& t) {
    if (t.is_leaf()) return "|";
    std::string out = "(V ";
    const auto& decs = t.decorations();
    for (std::size_t i = 0; i < decs.size(); ++i) {
        if (i) out += ",";
        out += decs[i].str();
    }
    out += ";";
    for (const auto& c : t.children()) {
        out += " ";
        out += serialize(c);
    }
    out += ")";
    return out;
}

std::string serialize(const BinaryTree& t) {
    if (t.is_leaf()) return "|";
    return "[" + serialize(t.left()) + " " + t.decoration().str() + " " + serialize(t.right()) + "]";
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) throw ParseError(pos, what);
        ++pos;
    }
    Generator generator() {
        skip_ws();
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            throw ParseError(pos, "generator name");
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        Generator g{std::string(text.substr(start, pos - start)), 0};
        if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == '(') {
            pos += 2;
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) throw ParseError(pos, "order digits");
            try {
                g.order = static_cast<unsigned>(std::stoul(std::string(text.substr(dstart, pos - dstart))));
            } catch (const std::out_of_range&) {
                throw ParseError(dstart, "order within range");
            }
            expect(')', "')'");
        }
        return g;
    }
    void done() {
        skip_ws();
        if (pos != text.size()) throw ParseError(pos, "end of input");
    }
};

SchroederTree schroeder_at(Cursor& c) {
    c.skip_ws();
    if (c.peek('|')) {
        ++c.pos;
        return SchroederTree::leaf();
    }
    c.expect('(', "'|' or '(V'");
    c.expect('V', "'V'");
    std::vector<Generator> decs;
    decs.push_back(c.generator());
    while (c.peek(',')) {
        ++c.pos;
        decs.push_back(c.generator());
    }
    c.expect(';', "',' or ';'");
    std::vector<SchroederTree> kids;
    while (!c.peek(')')) {
        if (c.pos >= c.text.size()) throw ParseError(c.pos, "child tree or ')'");
        kids.push_back(schroeder_at(c));
    }
    ++c.pos;  // ')'
    return graft(std::move(kids), std::move(decs));
}

BinaryTree binary_at(Cursor& c) {
    c.skip_ws();
    if (c.peek('|')) {
        ++c.pos;
        return BinaryTree::leaf();
    }
    c.expect('[', "'|' or '['");
    BinaryTree l = binary_at(c);
    Generator g = c.generator();
    BinaryTree r = binary_at(c);
    c.expect(']', "']'");
    return BinaryTree::graft(std::move(l), std::move(g), std::move(r));
}

}  // namespace

SchroederTree parse_schroeder(std::string_view text) {
    Cursor c{text};
    SchroederTree t = schroeder_at(c);
    c.done();
    return t;
}

BinaryTree parse_binary(std::string_view text) {
    Cursor c{text};
    BinaryTree t = binary_at(c);
    c.done();
    return t;
}

nlohmann::ordered_json to_json(const SchroederTree& t) {
    if (t.is_leaf()) return "|";
    nlohmann::ordered_json decs = nlohmann::ordered_json::array();
    for (const auto& g : t.decorations()) decs.push_back(g.str());
    nlohmann::ordered_json kids = nlohmann::ordered_json::array();
    for (const auto& c : t.children()) kids.push_back(to_json(c));
    return nlohmann::ordered_json::array({"V", decs, kids});
}

nlohmann::ordered_json to_json(const BinaryTree& t) {
    if (t.is_leaf()) return "|";
    return nlohmann::ordered_json::array(
        {to_json(t.left()), t.decoration().str(), to_json(t.right())});
}

}  // namespace dendro
