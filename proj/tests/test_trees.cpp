#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dendro/errors.hpp"
#include "dendro/trees.hpp"
#include "oracles.hpp"

using namespace dendro;

namespace {

Generator g(const char* name, unsigned order = 0) { return Generator{name, order}; }
SchroederTree leaf() { return SchroederTree::leaf(); }

}  // namespace

TEST_CASE("grafting") {
    SchroederTree v = graft({leaf(), leaf()}, {g("x")});
    CHECK(v == SchroederTree::vertex(g("x")));
    CHECK(v.leaf_count() == 2);

    SchroederTree corolla = graft({leaf(), leaf(), leaf()}, {g("x"), g("y")});
    CHECK(corolla.leaf_count() == 3);
    CHECK(breadth(corolla) == 3);

    CHECK_THROWS_AS(graft({leaf()}, {g("x")}), ArityMismatch);
    CHECK_THROWS_AS(graft({leaf(), leaf()}, {}), ArityMismatch);
}

TEST_CASE("depth and breadth") {
    SchroederTree v = SchroederTree::vertex(g("x"));
    CHECK(depth(v) == 1);
    CHECK(depth(graft({SchroederTree::vertex(g("y")), leaf()}, {g("x")})) == 2);
    CHECK(depth(leaf()) == 0);
    CHECK(breadth(graft({leaf(), leaf(), leaf()}, {g("x"), g("y")})) == 3);
    CHECK_THROWS_AS(breadth(leaf()), LeafHasNoBreadth);
    CHECK(depth(BinaryTree::vertex(g("x"))) == 1);
}

TEST_CASE("enumeration counts for small leaf numbers") {
    auto one = make_alphabet({"x"}, 0);
    CHECK(enumerate_schroeder(one, 1).size() == 1);
    CHECK(enumerate_schroeder(one, 1)[0] == leaf());
    CHECK(enumerate_schroeder(one, 2).size() == 1);
    CHECK(enumerate_schroeder(one, 3).size() == 3);
    CHECK(enumerate_schroeder(one, 4).size() == 11);
    CHECK(enumerate_binary(one, 3).size() == 2);
    CHECK(enumerate_binary(one, 4).size() == 5);
    CHECK(enumerate_binary(make_alphabet({"x", "y"}, 0), 3).size() == 8);
}

TEST_CASE("enumeration against brute-force oracles") {
    auto one = make_alphabet({"x"}, 0);
    long schroeder_expect[] = {1, 1, 3, 11, 45};
    long binary_expect[] = {1, 1, 2, 5, 14};
    for (int n = 1; n <= 5; ++n) {
        CHECK(static_cast<long>(enumerate_schroeder(one, n).size()) ==
              oracles::little_schroeder(n - 1));
        CHECK(static_cast<long>(enumerate_schroeder(one, n).size()) == schroeder_expect[n - 1]);
        CHECK(static_cast<long>(enumerate_binary(one, n).size()) == oracles::catalan(n - 1));
        CHECK(static_cast<long>(enumerate_binary(one, n).size()) == binary_expect[n - 1]);
    }
    // element-by-element cross-check against the independent generators
    auto closure = oracles::schroeder_closure(one, 5);
    for (int n = 1; n <= 5; ++n) {
        auto ours = enumerate_schroeder(one, n);
        std::set<SchroederTree> expected;
        for (const auto& t : closure)
            if (t.leaf_count() == n) expected.insert(t);
        CHECK(std::set<SchroederTree>(ours.begin(), ours.end()) == expected);
        CHECK(std::is_sorted(ours.begin(), ours.end()));
        CHECK(std::adjacent_find(ours.begin(), ours.end()) == ours.end());
    }
    auto two = make_alphabet({"x", "y"}, 0);
    for (int n = 1; n <= 4; ++n) {
        auto ours = enumerate_binary(two, n);
        auto expected = oracles::binary_trees_via_dyck(two, n - 1);
        CHECK(std::set<BinaryTree>(ours.begin(), ours.end()) == expected);
        CHECK(std::is_sorted(ours.begin(), ours.end()));
    }
}

TEST_CASE("graft then decomposition is the identity") {
    auto one = make_alphabet({"x"}, 1);
    for (const auto& t : enumerate_schroeder(one, 4)) {
        auto kids = t.children();
        auto decs = t.decorations();
        CHECK(graft(kids, decs) == t);
    }
}

TEST_CASE("planar decoration order and increments") {
    SchroederTree corolla = graft({leaf(), leaf(), leaf()}, {g("x", 0), g("y", 0)});
    auto decs = decorations_in_planar_order(corolla);
    REQUIRE(decs.size() == 2);
    CHECK(decs[0] == g("x", 0));
    CHECK(decs[1] == g("y", 0));

    CHECK(with_decorations_incremented(corolla, {1}) ==
          graft({leaf(), leaf(), leaf()}, {g("x", 1), g("y", 0)}));
    CHECK(with_decorations_incremented(SchroederTree::vertex(g("x", 2)), {1}) ==
          SchroederTree::vertex(g("x", 3)));
    CHECK(with_decorations_incremented(corolla, {}) == corolla);
    CHECK_THROWS_AS(with_decorations_incremented(corolla, {3}), IndexOutOfRange);
    CHECK_THROWS_AS(with_decorations_incremented(SchroederTree::vertex(g("x", 32)), {1}),
                    DerivOrderOverflow);

    // planar order on a nested tree: left subtree decorations come first
    SchroederTree nested = graft({SchroederTree::vertex(g("a")), leaf()}, {g("b")});
    auto nd = decorations_in_planar_order(nested);
    REQUIRE(nd.size() == 2);
    CHECK(nd[0] == g("a"));
    CHECK(nd[1] == g("b"));

    BinaryTree bn = BinaryTree::graft(BinaryTree::vertex(g("l")), g("m"), BinaryTree::vertex(g("r")));
    auto bd = decorations_in_planar_order(bn);
    REQUIRE(bd.size() == 3);
    CHECK(bd[0] == g("l"));
    CHECK(bd[1] == g("m"));
    CHECK(bd[2] == g("r"));
    CHECK(with_decorations_incremented(bn, {2}) ==
          BinaryTree::graft(BinaryTree::vertex(g("l")), g("m", 1), BinaryTree::vertex(g("r"))));
}

TEST_CASE("serialization grammar") {
    CHECK(serialize(leaf()) == "|");
    SchroederTree corolla = graft({leaf(), leaf(), leaf()}, {g("x", 0), g("y", 1)});
    CHECK(serialize(corolla) == "(V x^(0),y^(1); | | |)");
    CHECK(parse_schroeder("(V x^(0),y^(1); | | |)") == corolla);
    CHECK(parse_schroeder("(V  x^(0) , y^(1) ;  |   |  | )") == corolla);
    CHECK(parse_schroeder("(V x,y; | | |)") ==
          graft({leaf(), leaf(), leaf()}, {g("x", 0), g("y", 0)}));
    CHECK_THROWS_AS(parse_schroeder("(V x; |)"), ArityMismatch);
    CHECK_THROWS_AS(parse_schroeder("(V ; | |)"), ParseError);
    CHECK_THROWS_AS(parse_schroeder("(V x; | |"), ParseError);
    CHECK_THROWS_AS(parse_schroeder("nonsense"), ParseError);

    BinaryTree bt = BinaryTree::graft(BinaryTree::vertex(g("y", 0)), g("x", 0), BinaryTree::leaf());
    CHECK(serialize(bt) == "[[| y^(0) |] x^(0) |]");
    CHECK(parse_binary("[[| y^(0) |] x^(0) |]") == bt);
    CHECK_THROWS_AS(parse_binary("[| x |"), ParseError);
}

TEST_CASE("round trip over every enumerated tree with up to 5 leaves") {
    auto one = make_alphabet({"x"}, 1);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& t : enumerate_schroeder(make_alphabet({"x"}, 0), n))
            CHECK(parse_schroeder(serialize(t)) == t);
        for (const auto& t : enumerate_binary(one, std::min(n, 4)))
            CHECK(parse_binary(serialize(t)) == t);
    }
}

TEST_CASE("canonical order sorts by leaves then breadth then content") {
    auto one = make_alphabet({"x"}, 0);
    auto trees = enumerate_schroeder(one, 4);
    for (std::size_t i = 0; i + 1 < trees.size(); ++i) {
        CHECK(trees[i] < trees[i + 1]);
        CHECK(trees[i].leaf_count() <= trees[i + 1].leaf_count());
    }
    CHECK(leaf() < SchroederTree::vertex(g("x")));
}

TEST_CASE("tree json mirrors the grammar structurally") {
    SchroederTree corolla = graft({leaf(), leaf(), leaf()}, {g("x", 0), g("y", 1)});
    auto j = to_json(corolla);
    CHECK(j[0] == "V");
    CHECK(j[1].size() == 2);
    CHECK(j[2].size() == 3);
    CHECK(j[2][0] == "|");
    auto bj = to_json(BinaryTree::vertex(g("x")));
    CHECK(bj[0] == "|");
    CHECK(bj[1] == "x^(0)");
    CHECK(bj[2] == "|");
}
