#include <catch2/catch_amalgamated.hpp>

#include "pbt/correspondence.hpp"
#include "pbt/graded_graph.hpp"
#include "pbt/operators.hpp"
#include "pbt/tree.hpp"

using namespace pbt;

TEST_CASE("forward map on worked instances") {
    Tree single = Tree::parse("{0}");
    // Up-then-down paths from {0} back to {0} at degree (1,1).
    NPathPair via_left{single, Tree::parse("{0,1}"), single, 1, 1};
    auto [k0, s0] = forward(UpFamily::U, via_left);
    CHECK(k0 == 0);
    CHECK(s0.mid == Tree());
    CHECK(s0.start == single);
    CHECK(s0.end == single);
    CHECK(s0.down_degree == 1);
    CHECK(s0.up_degree == 1);

    NPathPair via_right{single, Tree::parse("{0,2}"), single, 1, 1};
    auto [k1, s1] = forward(UpFamily::U, via_right);
    CHECK(k1 == 1);
    CHECK(s1.mid == single);
    CHECK(s1.down_degree == 0);
    CHECK(s1.up_degree == 0);

    // Degree (0,0): the stationary path maps to itself with k = 0.
    NPathPair stay{single, single, single, 0, 0};
    auto [ks, ss] = forward(UpFamily::U, stay);
    CHECK(ks == 0);
    CHECK(ss.mid == single);
}

TEST_CASE("inverse maps on worked instances") {
    Tree single = Tree::parse("{0}");
    SPathPair identity_pair{single, single, single, 0, 0};
    NPathPair n1 = inverse_oracle(UpFamily::U, 1, identity_pair);
    CHECK(n1.mid == Tree::parse("{0,2}"));
    CHECK(inverse_constructive(UpFamily::U, 1, identity_pair) == n1);
    // The k-formula does not depend on the family, so the tagged image of
    // the right-growth path is k = 1 for U' as well; only the constructive
    // ray letter differs.
    NPathPair n1p = inverse_oracle(UpFamily::Uprime, 1, identity_pair);
    CHECK(n1p.mid == Tree::parse("{0,2}"));
    CHECK(inverse_constructive(UpFamily::Uprime, 1, identity_pair) == n1p);

    // Pure up-step from the empty tree, transported unchanged at k = 0.
    SPathPair grow{Tree(), Tree(), single, 0, 1};
    NPathPair n0 = inverse_oracle(UpFamily::U, 0, grow);
    CHECK(n0.mid == single);
    CHECK(inverse_constructive(UpFamily::U, 0, grow) == n0);

    // A mid tree that no N-element maps to at this tag.
    SPathPair impossible{Tree::parse("{0,1}"), single, single, 0, 0};
    CHECK_THROWS_AS(inverse_oracle(UpFamily::U, 0, impossible), no_preimage);
}

TEST_CASE("path-set bijection at unit-test scale") {
    BijectionReport ru = check_bijection(UpFamily::U, 4, 2);
    CHECK(ru.ok);
    CHECK(ru.failures.empty());
    CHECK(ru.elements > 0);
    BijectionReport rp = check_bijection(UpFamily::Uprime, 4, 2);
    CHECK(rp.ok);
    BijectionReport r0 = check_bijection(UpFamily::U, 0, 0);
    CHECK(r0.ok);
}

TEST_CASE("path counts match operator pairings") {
    for (UpFamily f : {UpFamily::U, UpFamily::Uprime}) {
        OpSymbol up = f == UpFamily::U ? OpSymbol::U : OpSymbol::Uprime;
        for (std::size_t n = 0; n <= 4; ++n)
            for (const Tree& t : enumerate_trees(n))
                for (std::size_t i = 0; i <= 2; ++i)
                    for (std::size_t j = 0; j <= 2; ++j) {
                        if (n + i < j) continue;
                        for (const Tree& tp : enumerate_trees(n + i - j)) {
                            auto paths = paths_N(t, tp, i, j, f);
                            CHECK(pairing(apply(OpSymbol::D, j,
                                                apply(up, i, LinComb(t))),
                                          LinComb(tp)) ==
                                  static_cast<std::int64_t>(paths.size()));
                            CHECK(paths_S_tilde(t, tp, j, i, f).size() ==
                                  paths.size());
                        }
                    }
    }
}

namespace {

// After adding nodes along an up-edge, the removal chain of the larger tree
// agrees with the old chain up to some position l, and past that point it is
// a chain of left children started from one of: the right child of the old
// l-th entry, the old l-th entry itself, the left child of the old last
// entry, or the root (when the old chain was empty).
bool chain_structure_ok(const Tree& t, const Tree& tpp) {
    auto r = removal_chain(t), rp = removal_chain(tpp);
    if (r == rp) return true;
    std::size_t l = 0;
    while (l < r.size() && l < rp.size() && r[l] == rp[l]) ++l;
    if (rp.size() <= l) return false;
    auto one_chain_from = [&](Word expect) {
        for (std::size_t s = l; s < rp.size(); ++s, expect = expect.left())
            if (rp[s] != expect) return false;
        return true;
    };
    if (l < r.size())
        return one_chain_from(r[l].right()) || one_chain_from(r[l]);
    return one_chain_from(r.empty() ? Word::root() : r.back().left());
}

}  // namespace

TEST_CASE("removal chain structure along up-edges") {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (std::size_t i = 0; i + n <= 6; ++i)
                for (const Tree& tpp : up_successors(t, i, UpFamily::U))
                    CHECK(chain_structure_ok(t, tpp));
}
