#include <catch2/catch_amalgamated.hpp>

#include "pbt/operators.hpp"
#include "pbt/tree.hpp"

using namespace pbt;

TEST_CASE("linear combinations") {
    LinComb v(Tree::parse("{0,1}"));
    v.add(Tree::parse("{0,2}"), 2);
    CHECK(v.to_string() == "{0,1} + 2 {0,2}");
    v.add(Tree::parse("{0,1}"), -1);
    CHECK(v.to_string() == "2 {0,2}");
    CHECK(LinComb().to_string() == "0");
    CHECK(LinComb(Tree()).to_string() == "{}");
    CHECK_FALSE(LinComb(Tree()).is_zero());  // the empty tree is a basis vector
}

TEST_CASE("basis action of the six operators") {
    Tree single = Tree::parse("{0}");
    CHECK(apply(OpSymbol::U, 1, LinComb(single)) ==
          LinComb(Tree::parse("{0,1}")) + LinComb(Tree::parse("{0,2}")));
    CHECK(apply(OpSymbol::U, 3, LinComb(single)).terms().size() == 4);
    CHECK(apply(OpSymbol::D, 1, LinComb(Tree::parse("{0,1,12}"))) ==
          LinComb(Tree::parse("{0,2}")));
    CHECK(apply(OpSymbol::D, 2, LinComb(single)).is_zero());
    CHECK(apply(OpSymbol::Dstar, 1, LinComb(single)) ==
          LinComb(Tree::parse("{0,1}")) + LinComb(Tree::parse("{0,2}")));
    CHECK(apply(OpSymbol::Ustar, 1, LinComb(Tree::parse("{0,1}"))) == LinComb(single));
    // degree 0 of everything is the identity
    for (OpSymbol s : {OpSymbol::U, OpSymbol::Uprime, OpSymbol::D, OpSymbol::Ustar,
                       OpSymbol::Uprimestar, OpSymbol::Dstar})
        CHECK(apply(s, 0, LinComb(single)) == LinComb(single));
}

TEST_CASE("pairing and adjointness") {
    LinComb a(Tree::parse("{0,1}"));
    a.add(Tree::parse("{0,2}"), 2);
    CHECK(pairing(a, LinComb(Tree::parse("{0,2}"))) == 2);
    CHECK(pairing(LinComb(Tree()), LinComb(Tree())) == 1);
    CHECK(pairing(apply(OpSymbol::U, 1, LinComb(Tree::parse("{0}"))),
                  LinComb(Tree::parse("{0,1}"))) == 1);
    CHECK(pairing(apply(OpSymbol::Ustar, 1, LinComb(Tree::parse("{0,1}"))),
                  LinComb(Tree::parse("{0}"))) == 1);
    // adjointness on all small basis pairs
    auto star = [](OpSymbol s) {
        return s == OpSymbol::U ? OpSymbol::Ustar
               : s == OpSymbol::Uprime ? OpSymbol::Uprimestar
                                       : OpSymbol::Dstar;
    };
    for (OpSymbol s : {OpSymbol::U, OpSymbol::Uprime, OpSymbol::D})
        for (std::size_t i = 0; i <= 3; ++i)
            for (std::size_t n = 0; n <= 5; ++n)
                for (const Tree& a2 : enumerate_trees(n)) {
                    std::size_t m = s == OpSymbol::D ? (n >= i ? n - i : 0) : n + i;
                    if (m > 6) continue;
                    for (const Tree& b2 : enumerate_trees(m))
                        CHECK(pairing(apply(s, i, LinComb(a2)), LinComb(b2)) ==
                              pairing(LinComb(a2), apply(star(s), i, LinComb(b2))));
                }
}

TEST_CASE("grading") {
    for (std::size_t n = 0; n <= 5; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (std::size_t i = 0; i <= 3; ++i) {
                LinComb up = apply(OpSymbol::U, i, LinComb(t));
                for (const auto& [tp, c] : up.terms()) CHECK(tp.size() == n + i);
                LinComb down = apply(OpSymbol::D, i, LinComb(t));
                for (const auto& [tp, c] : down.terms()) CHECK(tp.size() == n - i);
            }
}

TEST_CASE("generating-function application") {
    // D(t2) on the three-node tree, then D(t1); coefficient of {} is t1 t2^2
    PolyLinComb v = PolyLinComb::basis(2, Tree::parse("{0,1,12}"));
    v = apply_gen(OpSymbol::D, 2, v, 3);
    CHECK(v.coefficient(Tree::parse("{0,1,12}")) == Polynomial::constant(2, 1));
    CHECK(v.coefficient(Tree::parse("{0,2}")) == Polynomial::monomial(2, {0, 1}, 1));
    CHECK(v.coefficient(Tree::parse("{0}")) == Polynomial::monomial(2, {0, 2}, 1));
    v = apply_gen(OpSymbol::D, 1, v, 3);
    CHECK(v.coefficient(Tree()) == Polynomial::monomial(2, {1, 2}, 1));
    // U(t) on the empty tree, capped at 2: {} + t {0} + t^2 {0,1}
    PolyLinComb u = apply_gen(OpSymbol::U, 1, PolyLinComb::basis(1, Tree()), 2);
    CHECK(u.coefficient(Tree()) == Polynomial::constant(1, 1));
    CHECK(u.coefficient(Tree::parse("{0}")) == Polynomial::monomial(1, {1}, 1));
    CHECK(u.coefficient(Tree::parse("{0,1}")) == Polynomial::monomial(1, {2}, 1));
    CHECK(u.coefficient(Tree::parse("{0,2}")) == Polynomial::monomial(1, {2}, 0));
}

TEST_CASE("commutation identities at unit-test scale") {
    // worked instance: D1 U1 {0} = 2 {0}
    Tree single = Tree::parse("{0}");
    CHECK(apply(OpSymbol::D, 1, apply(OpSymbol::U, 1, LinComb(single))) ==
          LinComb(single, 2));
    auto ru = check_commutation(UpFamily::U, 5, 3, 3);
    CHECK(ru.ok);
    CHECK(ru.counterexamples.empty());
    auto rp = check_commutation(UpFamily::Uprime, 5, 3, 3);
    CHECK(rp.ok);
    auto rt = check_transposed_commutation(UpFamily::U, 5, 3, 3);
    CHECK(rt.ok);
    auto rtp = check_transposed_commutation(UpFamily::Uprime, 5, 3, 3);
    CHECK(rtp.ok);
}

TEST_CASE("one-dual-graph corollaries at unit-test scale") {
    CHECK(check_one_dual_graph(6).ok);
    CHECK(check_full_down_relation(6).ok);
    CHECK(check_star_dual_relation(5).ok);
}
