#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pbt/labelling.hpp"
#include "pbt/tree.hpp"

using namespace pbt;

namespace {

Labelling make(const char* tree, LabelKind kind, std::vector<int> values, int bound) {
    return Labelling(Tree::parse(tree), kind, std::move(values), bound);
}

// The 9-node running example tree.
const char* big_tree = "{0,1,2,11,21,22,211,221,2211}";

}  // namespace

TEST_CASE("labelling construction rejects malformed maps") {
    CHECK_THROWS_AS(make("{0,1}", LabelKind::right_strict, {1}, 2), invalid_labelling);
    CHECK_THROWS_AS(make("{0,1}", LabelKind::right_strict, {1, 3}, 2), invalid_labelling);
    CHECK_THROWS_AS(make("{0,1}", LabelKind::right_strict, {0, 1}, 2), invalid_labelling);
}

TEST_CASE("kind conditions use full-subtree scope") {
    // right-strict: labels weakly increase into left subtrees, strictly into
    // right subtrees
    CHECK(validate_labelling(make("{0,1}", LabelKind::right_strict, {1, 1}, 2)));
    CHECK_FALSE(validate_labelling(make("{0,2}", LabelKind::right_strict, {1, 1}, 2)));
    CHECK(validate_labelling(make("{0,2}", LabelKind::left_strict, {1, 1}, 2)));
    CHECK_FALSE(validate_labelling(make("{0,1}", LabelKind::left_strict, {1, 1}, 2)));
    // binary-searching witness: every parent-child pair is fine but the
    // grandchild 12 exceeds the root's bound over the whole left subtree
    CHECK_FALSE(validate_labelling(make("{0,1,12}", LabelKind::binary_search, {2, 1, 3}, 3)));
    CHECK(validate_labelling(make("{0,1,12}", LabelKind::binary_search, {3, 1, 2}, 3)));
}

TEST_CASE("nine-node examples of all three kinds") {
    // shortlex node order: 0, 1, 2, 11, 21, 22, 211, 221, 2211
    Labelling rs = make(big_tree, LabelKind::right_strict, {1, 1, 2, 2, 3, 3, 4, 3, 3}, 4);
    CHECK(validate_labelling(rs));
    CHECK(weight(rs, 4) == std::vector<int>{2, 2, 4, 1});
    CHECK(validate_labelling(
        make(big_tree, LabelKind::left_strict, {1, 2, 1, 4, 2, 2, 3, 3, 4}, 4)));
    CHECK(validate_labelling(
        make(big_tree, LabelKind::binary_search, {2, 1, 4, 1, 3, 5, 3, 5, 5}, 5)));
}

TEST_CASE("labelling enumeration") {
    CHECK(enumerate_labellings(Tree(), LabelKind::right_strict, 3).size() == 1);
    auto rs = enumerate_labellings(Tree::parse("{0,1}"), LabelKind::right_strict, 2);
    REQUIRE(rs.size() == 3);
    CHECK(rs[0].values() == std::vector<int>{1, 1});
    CHECK(rs[1].values() == std::vector<int>{1, 2});
    CHECK(rs[2].values() == std::vector<int>{2, 2});
    CHECK(enumerate_labellings(Tree::parse("{0,2}"), LabelKind::right_strict, 2).size() == 1);
    // enumeration agrees with filtering all value maps
    for (std::size_t n = 0; n <= 4; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (LabelKind kind :
                 {LabelKind::right_strict, LabelKind::left_strict, LabelKind::binary_search}) {
                std::size_t brute = 0;
                std::vector<int> vals(t.size(), 1);
                for (;;) {
                    try {
                        if (validate_labelling(Labelling(t, kind, vals, 3))) ++brute;
                    } catch (const invalid_labelling&) {
                    }
                    std::size_t pos = 0;
                    while (pos < vals.size() && vals[pos] == 3) vals[pos++] = 1;
                    if (pos == vals.size()) break;
                    ++vals[pos];
                }
                if (t.empty()) brute = 1;
                CHECK(enumerate_labellings(t, kind, 3).size() == brute);
            }
}

TEST_CASE("labellings and paths identify") {
    Labelling l = make("{0,1}", LabelKind::right_strict, {1, 2}, 2);
    Path p = labelling_to_path(l);
    REQUIRE(p.trees == std::vector<Tree>{Tree(), Tree::parse("{0}"), Tree::parse("{0,1}")});
    CHECK(path_to_labelling(p).values() == std::vector<int>{1, 2});

    Path down{PathKind::down, {Tree(), Tree::parse("{0}"), Tree::parse("{0,2}")}};
    Labelling ld = path_to_labelling(down);
    CHECK(ld.kind() == LabelKind::binary_search);
    CHECK(ld.values() == std::vector<int>{1, 2});

    CHECK(labelling_to_path(make("{0}", LabelKind::binary_search, {1}, 1)).trees ==
          std::vector<Tree>{Tree(), Tree::parse("{0}")});
    CHECK_THROWS_AS(path_to_labelling(Path{PathKind::up, {Tree::parse("{0}")}}), malformed_path);
}

TEST_CASE("path round trip on all small labellings") {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (LabelKind kind :
                 {LabelKind::right_strict, LabelKind::left_strict, LabelKind::binary_search})
                for (const Labelling& l : enumerate_labellings(t, kind, 4)) {
                    Path p = labelling_to_path(l);
                    CHECK(p.steps() == 4);
                    CHECK(p.trees.back() == t);
                    Labelling back = path_to_labelling(p);
                    CHECK(back.kind() == kind);
                    CHECK(back.values() == l.values());
                }
}

TEST_CASE("weight monomials") {
    CHECK(weight(make("{0,1}", LabelKind::right_strict, {1, 2}, 2), 2) ==
          std::vector<int>{1, 1});
    CHECK(weight(make("{0,1}", LabelKind::right_strict, {1, 1}, 2), 2) ==
          std::vector<int>{2, 0});
}
