#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "pbt/tree.hpp"
#include "pbt/word.hpp"

using namespace pbt;

namespace {

// Independent oracle: C_0 = 1, C_n = sum C_k C_{n-1-k}.
std::vector<std::size_t> catalan(std::size_t top) {
    std::vector<std::size_t> c{1};
    for (std::size_t n = 1; n <= top; ++n) {
        std::size_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += c[k] * c[n - 1 - k];
        c.push_back(s);
    }
    return c;
}

std::vector<Word> words(std::initializer_list<const char*> ws) {
    std::vector<Word> out;
    for (const char* w : ws) out.push_back(Word::parse(w));
    return out;
}

}  // namespace

TEST_CASE("word parsing, order and arithmetic") {
    CHECK(Word::parse("0") == Word::root());
    CHECK(Word::parse("12").to_string() == "12");
    CHECK_THROWS_AS(Word::parse("3"), std::invalid_argument);
    CHECK(Word::root().is_prefix_of(Word::parse("21")));
    CHECK(Word::parse("2").is_prefix_of(Word::parse("21")));
    CHECK_FALSE(Word::parse("1").is_prefix_of(Word::parse("21")));
    CHECK(Word::parse("21").parent() == Word::parse("2"));
    CHECK(Word::parse("2").left() == Word::parse("21"));
    CHECK(Word::parse("2").right() == Word::parse("22"));
    // shortlex: length first, then lexicographic
    CHECK(Word::parse("2") < Word::parse("11"));
    CHECK(Word::parse("11") < Word::parse("12"));
}

TEST_CASE("tree validation") {
    CHECK(Tree::validate({}).empty());
    CHECK(Tree::validate(words({"0", "1", "12"})).size() == 3);
    CHECK_THROWS_AS(Tree::validate(words({"12"})), not_prefix_closed);
    CHECK_THROWS_AS(Tree::parse("{0,12}"), not_prefix_closed);
}

TEST_CASE("serialization round trip and canonical form") {
    CHECK(Tree().to_string() == "{}");
    CHECK(Tree::parse("{}") == Tree());
    CHECK(Tree::parse("{0,1,12}").to_string() == "{0,1,12}");
    for (std::size_t n = 0; n <= 7; ++n)
        for (const Tree& t : enumerate_trees(n)) CHECK(Tree::parse(t.to_string()) == t);
}

TEST_CASE("enumeration matches the Catalan recurrence") {
    auto c = catalan(10);
    CHECK(enumerate_trees(0).size() == 1);
    CHECK(enumerate_trees(2) == std::vector<Tree>{Tree::parse("{0,1}"), Tree::parse("{0,2}")});
    for (std::size_t n = 0; n <= 10; ++n) CHECK(enumerate_trees(n).size() == c[n]);
}

TEST_CASE("subtree extraction") {
    Tree t = Tree::parse("{0,1,12}");
    CHECK(subtree(t, Word::parse("1")) == words({"1", "12"}));
    CHECK(subtree(t, Word::root()) == t.nodes());
    CHECK(subtree(t, Word::parse("2")).empty());
}

TEST_CASE("right-childless set, spine set and removal chain") {
    Tree t = Tree::parse("{0,1,12}");
    CHECK(right_childless(t) == words({"0", "12"}));
    CHECK(spine_set(t) == words({"0", "1", "12"}));
    CHECK(removal_chain(t) == words({"0", "12"}));
    CHECK(right_childless(Tree::parse("{0}")) == words({"0"}));
    CHECK(spine_set(Tree::parse("{0}")) == words({"0"}));
    CHECK(removal_chain(Tree::parse("{0}")) == words({"0"}));
}

TEST_CASE("chain sets on a raw word set") {
    // An 8-word running example (not prefix-closed, hence the raw overloads).
    auto t = words({"0", "11", "2", "21", "211", "22", "221", "2211"});
    CHECK(right_childless(t) == words({"11", "21", "22", "211", "221", "2211"}));
    CHECK(spine_set(t) == words({"0", "2", "22", "221", "2211"}));
    CHECK(removal_chain(t) == words({"22", "221", "2211"}));
}

TEST_CASE("removal chain is a chain under prefix order") {
    for (std::size_t n = 0; n <= 7; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            auto chain = removal_chain(t);
            for (std::size_t c = 1; c < chain.size(); ++c)
                CHECK(chain[c - 1].is_proper_prefix_of(chain[c]));
        }
}

TEST_CASE("single detachment") {
    Tree t = Tree::parse("{0,1,12}");
    CHECK(detach_one(t, Word::root()) == Tree::parse("{0,2}"));
    CHECK(detach_one(t, Word::parse("12")) == Tree::parse("{0,1}"));
    CHECK(detach_one(Tree::parse("{0}"), Word::root()) == Tree());
    CHECK_THROWS_AS(detach_one(t, Word::parse("1")), not_right_childless);
}

TEST_CASE("detachment is valid and order-preserving on all small trees") {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (const Word& w : right_childless(t)) {
                Tree d = detach_one(t, w);
                REQUIRE(d.size() == t.size() - 1);
                // the inclusion of the detached tree covers T minus {w}
                std::vector<Word> image;
                for (const Word& v : d.nodes()) {
                    Word u = detail::promote_at(w, v);
                    CHECK(t.contains(u));
                    CHECK(u != w);
                    image.push_back(u);
                }
                CHECK(detail::sorted_unique(std::move(image)).size() == d.size());
            }
}

TEST_CASE("chain detachment") {
    Tree t = Tree::parse("{0,1,12}");
    CHECK(detach_chain(t, 0) == t);
    CHECK(detach_chain(t, 1) == Tree::parse("{0,2}"));
    CHECK(detach_chain(t, 2) == Tree::parse("{0}"));
    CHECK_THROWS_AS(detach_chain(t, 3), chain_too_short);
}

TEST_CASE("chain inclusion maps") {
    Tree t = Tree::parse("{0,1,12}");
    CHECK(include_chain(t, 1, Word::root()) == Word::parse("1"));
    CHECK(include_chain(t, 1, Word::parse("2")) == Word::parse("12"));
    CHECK(include_chain(t, 0, Word::parse("12")) == Word::parse("12"));
    CHECK_THROWS_AS(include_chain(t, 1, Word::parse("22")), not_in_detached_tree);
    for (std::size_t n = 0; n <= 7; ++n)
        for (const Tree& t2 : enumerate_trees(n)) {
            auto chain = removal_chain(t2);
            for (std::size_t i = 0; i <= chain.size(); ++i) {
                Tree d = detach_chain(t2, i);
                std::vector<Word> image;
                for (const Word& w : d.nodes()) image.push_back(include_chain(t2, i, w));
                image = detail::sorted_unique(std::move(image));
                // injective with image exactly T minus r_{T,i}
                REQUIRE(image.size() == d.size());
                std::vector<Word> expect;
                for (const Word& w : t2.nodes())
                    if (std::find(chain.begin(), chain.begin() + static_cast<long>(i), w) ==
                        chain.begin() + static_cast<long>(i))
                        expect.push_back(w);
                CHECK(image == expect);
            }
        }
}

TEST_CASE("extended inclusion") {
    Tree t = Tree::parse("{0,1,12}");
    CHECK(extended_include(t, 1, Word::parse("21")) == Word::parse("121"));
    // restriction to the detached tree agrees with include_chain
    Tree detached = detach_chain(t, 1);
    for (const Word& w : detached.nodes())
        CHECK(extended_include(t, 1, w) == include_chain(t, 1, w));
    // degenerate case (detached tree empty): prepend a 1
    Tree single = Tree::parse("{0}");
    CHECK(extended_include(single, 1, Word::root()) == Word::parse("1"));
    CHECK(extended_include(single, 1, Word::parse("2")) == Word::parse("12"));
    CHECK(extended_include(single, 1, Word::parse("21")) == Word::parse("121"));
}

TEST_CASE("extended inclusion is injective and avoids the removed chain") {
    // all words of length <= 6 over {1,2}
    std::vector<Word> all{Word::root()};
    for (std::size_t l = 0; l < 6; ++l) {
        std::vector<Word> next;
        for (const Word& w : all)
            if (w.length() == l) {
                next.push_back(w.left());
                next.push_back(w.right());
            }
        all.insert(all.end(), next.begin(), next.end());
    }
    for (std::size_t n = 0; n <= 5; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            auto chain = removal_chain(t);
            for (std::size_t i = 0; i <= chain.size(); ++i) {
                std::vector<Word> image;
                for (const Word& w : all) {
                    Word u = extended_include(t, i, w);
                    for (std::size_t c = 0; c < i; ++c) CHECK(u != chain[c]);
                    image.push_back(u);
                }
                CHECK(detail::sorted_unique(std::move(image)).size() == all.size());
            }
        }
}
