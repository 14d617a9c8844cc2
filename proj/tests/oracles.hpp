#pragma once

// Independent oracles for the test suites: every expected value asserted in
// the tests either comes from one of these or is read off a worked instance.
// Nothing here may call the implementation path it is used to check.

#include <set>
#include <string>
#include <vector>

#include "dendro/dend.hpp"
#include "dendro/tridend.hpp"
#include "dendro/words.hpp"

namespace oracles {

using namespace dendro;

// Two-factor weighted Leibniz recursion: d(v * rest) = d(v) rest + v d(rest)
// + lam d(v) d(rest), with d on a single variable bumping its order. This is
// the rule the subset formula must reproduce.
inline DiffPoly d0_recursive(const DiffMonomial& m, const Scalar& lam = Scalar::lam()) {
    if (m.factors.empty()) return {};
    if (m.factors.size() == 1) {
        DiffVar v = m.factors[0];
        ++v.order;
        return DiffPoly::basis(DiffMonomial{{v}});
    }
    DiffMonomial head{{m.factors[0]}};
    DiffMonomial rest{{m.factors.begin() + 1, m.factors.end()}};
    DiffPoly dh = d0_recursive(head, lam);
    DiffPoly dr = d0_recursive(rest, lam);
    DiffPoly out = poly_mul(dh, DiffPoly::basis(rest));
    out += poly_mul(DiffPoly::basis(head), dr);
    out += poly_mul(dh, dr).scaled(lam);
    return out;
}

// Quasi-shuffle as lattice paths: steps right (letter of a), up (letter of
// b) and diagonal (product letter, weight q). Enumerates every path from
// (0,0) to (|a|,|b|) instead of unrolling the product recursion.
inline TElement quasi_shuffle_paths(const TensorWord& a, const TensorWord& b, const Scalar& q) {
    TElement out;
    const std::size_t m = a.letters.size(), n = b.letters.size();
    struct Frame {
        std::size_t i, j;
        unsigned diagonals;
        std::vector<DiffMonomial> word;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, 0, {}});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.i == m && f.j == n) {
            out.add_term(TensorWord::of(f.word), q.pow(f.diagonals));
            continue;
        }
        if (f.i < m) {
            Frame g = f;
            g.word.push_back(a.letters[f.i]);
            ++g.i;
            stack.push_back(std::move(g));
        }
        if (f.j < n) {
            Frame g = f;
            g.word.push_back(b.letters[f.j]);
            ++g.j;
            stack.push_back(std::move(g));
        }
        if (f.i < m && f.j < n) {
            Frame g = f;
            g.word.push_back(a.letters[f.i].times(b.letters[f.j]));
            ++g.i;
            ++g.j;
            ++g.diagonals;
            stack.push_back(std::move(g));
        }
    }
    return out;
}

// Little Schröder numbers via the three-term recurrence; counts Schröder
// tree shapes with n+1 leaves.
inline long little_schroeder(int n) {
    if (n <= 1) return 1;
    long prev = 1, cur = 1;  // s_0, s_1
    for (int k = 1; k < n; ++k) {
        long next = (3 * (2L * k + 1) * cur - (k - 1) * prev) / (k + 2);
        prev = cur;
        cur = next;
    }
    return cur;
}

inline long catalan(int n) {
    long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

// Binary trees with n internal vertices built from balanced parenthesis
// strings (first-return decomposition), decorated in every possible way.
inline std::set<BinaryTree> binary_trees_via_dyck(const std::vector<Generator>& alphabet,
                                                  int internal) {
    std::set<BinaryTree> out;
    if (internal == 0) {
        out.insert(BinaryTree::leaf());
        return out;
    }
    std::vector<std::string> dycks;
    const int len = 2 * internal;
    for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
        int bal = 0;
        bool ok = true;
        std::string s;
        for (int i = 0; i < len; ++i) {
            bool open = bits & (1UL << i);
            bal += open ? 1 : -1;
            if (bal < 0) {
                ok = false;
                break;
            }
            s += open ? '(' : ')';
        }
        if (ok && bal == 0) dycks.push_back(s);
    }
    // shape from a Dyck word: "(" inner ")" rest -> node(tree(inner), tree(rest))
    auto shape = [&](auto&& self, std::string_view w) -> BinaryTree {
        if (w.empty()) return BinaryTree::leaf();
        int bal = 0;
        std::size_t close = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            bal += w[i] == '(' ? 1 : -1;
            if (bal == 0) {
                close = i;
                break;
            }
        }
        BinaryTree inner = self(self, w.substr(1, close - 1));
        BinaryTree rest = self(self, w.substr(close + 1));
        return BinaryTree::graft(inner, Generator{"?", 0}, rest);
    };
    // decorate every internal vertex in every possible way
    for (const auto& w : dycks) {
        BinaryTree sh = shape(shape, w);
        std::vector<std::vector<Generator>> choices(static_cast<std::size_t>(internal), alphabet);
        std::vector<std::size_t> idx(static_cast<std::size_t>(internal), 0);
        while (true) {
            std::size_t next = 0;
            auto decorate = [&](auto&& self, const BinaryTree& t) -> BinaryTree {
                if (t.is_leaf()) return t;
                BinaryTree l = self(self, t.left());
                Generator g = choices[next][idx[next]];
                ++next;
                BinaryTree r = self(self, t.right());
                return BinaryTree::graft(l, g, r);
            };
            out.insert(decorate(decorate, sh));
            std::size_t k = idx.size();
            while (k > 0) {
                --k;
                if (++idx[k] < choices[k].size()) break;
                idx[k] = 0;
                if (k == 0) goto next_dyck;
            }
        }
    next_dyck:;
    }
    return out;
}

// Schröder trees with at most max_leaves leaves as a grafting closure with
// set-based deduplication: keep grafting tuples of already-found trees under
// every decoration tuple until nothing new appears.
inline std::set<SchroederTree> schroeder_closure(const std::vector<Generator>& alphabet,
                                                 int max_leaves) {
    std::set<SchroederTree> found;
    found.insert(SchroederTree::leaf());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<SchroederTree> snapshot(found.begin(), found.end());
        // all child tuples of length 2..max_leaves with total leaves in budget
        std::vector<std::vector<SchroederTree>> tuples;
        std::vector<SchroederTree> cur;
        auto build = [&](auto&& self, int budget) -> void {
            if (cur.size() >= 2) tuples.push_back(cur);
            if (static_cast<int>(cur.size()) >= max_leaves) return;
            for (const auto& t : snapshot) {
                if (t.leaf_count() > budget) continue;
                cur.push_back(t);
                self(self, budget - t.leaf_count());
                cur.pop_back();
            }
        };
        build(build, max_leaves);
        for (const auto& kids : tuples) {
            int total = 0;
            for (const auto& k : kids) total += k.leaf_count();
            if (total > max_leaves) continue;
            const int m = static_cast<int>(kids.size()) - 1;
            std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
            while (true) {
                std::vector<Generator> decs;
                for (std::size_t s = 0; s < idx.size(); ++s) decs.push_back(alphabet[idx[s]]);
                if (found.insert(graft(kids, decs)).second) grew = true;
                std::size_t k = idx.size();
                while (k > 0) {
                    --k;
                    if (++idx[k] < alphabet.size()) break;
                    idx[k] = 0;
                    if (k == 0) goto tuple_done;
                }
            }
        tuple_done:;
        }
    }
    return found;
}

}  // namespace oracles
