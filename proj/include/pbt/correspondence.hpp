#pragma once

// The bijections N_{i,j}(T,T') <-> S-tilde_{j,i}(T,T') behind the
// commutation identities. The forward map reads k off the removal chains; the
// inverse exists in two implementations: an exhaustive search oracle
// (normative) and the constructive recipe (fast path), which check_bijection
// compares on every instance.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pbt/graded_graph.hpp"
#include "pbt/tree.hpp"

namespace pbt {

struct no_preimage : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ambiguous_preimage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// N-element ((T,T''),(T',T'')) with degrees (i,j) maps to the S-tilde
// element tagged k = j - |r_{T'',j} intersect r_T|; the shared chain part is
// exactly r_{T,j-k}, so the mid tree of the image is T detached j-k steps.
inline std::pair<std::size_t, SPathPair> forward(UpFamily family, const NPathPair& n) {
    (void)family;  // same k formula for both families
    auto chain_mid = removal_chain(n.mid);
    auto chain_start = removal_chain(n.start);
    if (chain_mid.size() < n.down_degree)
        throw std::invalid_argument("forward: mid tree's chain is shorter than the down degree");
    std::size_t shared = 0;
    for (std::size_t c = 0; c < n.down_degree; ++c)
        if (std::find(chain_start.begin(), chain_start.end(), chain_mid[c]) != chain_start.end())
            ++shared;
    std::size_t k = n.down_degree - shared;
    Tree mid = detach_chain(n.start, n.down_degree - k);
    return {k, SPathPair{mid, n.start, n.end, n.down_degree - k, n.up_degree - k}};
}

// Normative inverse: exhaustive forward-preimage search over N_{i,j}(T,T').
inline NPathPair inverse_oracle(UpFamily family, std::size_t k, const SPathPair& s) {
    std::size_t i = s.up_degree + k, j = s.down_degree + k;
    std::vector<NPathPair> hits;
    for (const NPathPair& n : paths_N(s.start, s.end, i, j, family))
        if (forward(family, n) == std::make_pair(k, s)) hits.push_back(n);
    if (hits.empty()) throw no_preimage("no N-element maps to the given (k, S-element)");
    if (hits.size() > 1) throw ambiguous_preimage("multiple N-elements map to the same image");
    return hits.front();
}

// Constructive inverse. T'' is the extended-inclusion transport of T' into
// T-coordinates, plus the restored chain r_{T,j-k}, plus a ray of chain
// nodes: from the next chain entry's right child when the chain of T is
// longer than j-k, otherwise continuing above the removed chain top. The ray
// runs along 1s for family U and 2s for family U'; it overlaps the n
// transported nodes already on it and extends them by k fresh ones.
inline NPathPair inverse_constructive(UpFamily family, std::size_t k, const SPathPair& s) {
    const Tree& t = s.start;
    std::size_t d = s.down_degree;
    auto chain = removal_chain(t);
    if (chain.size() < d) throw no_preimage("start tree's chain is shorter than the down degree");

    std::vector<Word> nodes;
    for (const Word& w : s.end.nodes()) nodes.push_back(extended_include(t, d, w));
    for (std::size_t c = 0; c < d; ++c) nodes.push_back(chain[c]);
    Tree base = Tree(detail::sorted_unique(std::move(nodes)), Tree::unchecked{});

    Word ray_head;
    if (chain.size() > d) ray_head = chain[d].right();
    else if (d > 0) ray_head = chain[d - 1].left();
    else ray_head = Word::root();  // T is empty

    int step = family == UpFamily::U ? 1 : 2;
    std::size_t on_ray = 0;
    for (Word w = ray_head; base.contains(w); w = w.child(step)) ++on_ray;

    std::vector<Word> full(base.nodes());
    Word w = ray_head;
    for (std::size_t c = 0; c < on_ray + k; ++c, w = w.child(step)) full.push_back(w);
    Tree mid = Tree(detail::sorted_unique(std::move(full)), Tree::unchecked{});

    return NPathPair{t, mid, s.end, s.up_degree + k, s.down_degree + k};
}

struct BijectionReport {
    UpFamily family = UpFamily::U;
    std::size_t max_nodes = 0, max_degree = 0;
    bool ok = true;
    std::size_t cells = 0, elements = 0;
    std::vector<std::string> failures;
};

// Exhaustive verification: |N| = |S-tilde|, forward is injective into
// S-tilde, both composites are identities, and the constructive inverse
// agrees with the oracle on every element.
inline BijectionReport check_bijection(UpFamily family, std::size_t max_nodes,
                                       std::size_t max_degree) {
    BijectionReport report;
    report.family = family;
    report.max_nodes = max_nodes;
    report.max_degree = max_degree;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };
    for (std::size_t n = 0; n <= max_nodes; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (std::size_t i = 0; i <= max_degree; ++i)
                for (std::size_t j = 0; j <= max_degree; ++j) {
                    if (n + i < j) continue;
                    std::size_t np = n + i - j;
                    if (np > max_nodes) continue;
                    for (const Tree& tp : enumerate_trees(np)) {
                        auto n_set = paths_N(t, tp, i, j, family);
                        auto s_set = paths_S_tilde(t, tp, j, i, family);
                        ++report.cells;
                        report.elements += n_set.size();
                        std::string cell = "N_{" + std::to_string(i) + "," + std::to_string(j) +
                                           "}(" + t.to_string() + "," + tp.to_string() + ")";
                        if (n_set.size() != s_set.size())
                            fail(cell + ": |N|=" + std::to_string(n_set.size()) +
                                 " but |S~|=" + std::to_string(s_set.size()));
                        std::vector<std::pair<std::size_t, SPathPair>> images;
                        for (const NPathPair& elem : n_set) {
                            auto image = forward(family, elem);
                            if (std::find(s_set.begin(), s_set.end(), image) == s_set.end())
                                fail(cell + ": forward image not in S~ (mid " +
                                     elem.mid.to_string() + ")");
                            if (std::find(images.begin(), images.end(), image) != images.end())
                                fail(cell + ": forward not injective (mid " +
                                     elem.mid.to_string() + ")");
                            images.push_back(image);
                        }
                        for (const auto& [k, s] : s_set) {
                            try {
                                NPathPair back = inverse_oracle(family, k, s);
                                if (forward(family, back) != std::make_pair(k, s))
                                    fail(cell + ": forward(inverse) != id at k=" +
                                         std::to_string(k));
                                NPathPair built = inverse_constructive(family, k, s);
                                if (built != back)
                                    fail(cell + ": constructive inverse disagrees with oracle" +
                                         " at k=" + std::to_string(k) + " (built mid " +
                                         built.mid.to_string() + ", oracle mid " +
                                         back.mid.to_string() + ")");
                            } catch (const std::runtime_error& e) {
                                fail(cell + ": " + e.what());
                            }
                        }
                    }
                }
    return report;
}

}  // namespace pbt
