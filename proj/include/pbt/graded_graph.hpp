#pragma once

// Edge predicates and neighbor generators for the three graded graphs on
// trees: G_U (nodes added right-strictly), G_U' (added left-strictly) and
// G_D (chain detachment), plus the two-step path sets N and S-tilde whose
// equinumerosity encodes the commutation relations, and DOT/JSON export.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pbt/tree.hpp"

namespace pbt {

enum class UpFamily { U, Uprime };

inline const char* name(UpFamily f) { return f == UpFamily::U ? "U" : "U'"; }

// Degree of the up-edge (T, T'), or nullopt when it is not an edge.
// For G_U every added node must be v 1^n or v 2 1^n with v already in T
// (1^n from the empty tree); G_U' swaps the roles of 1 and 2.
inline std::optional<std::size_t> up_edge_degree(UpFamily family, const Tree& t, const Tree& tp) {
    if (t.size() > tp.size()) return std::nullopt;
    const char chain = family == UpFamily::U ? '1' : '2';
    const char anchor = family == UpFamily::U ? '2' : '1';
    std::size_t added = 0;
    for (const Word& w : tp.nodes()) {
        if (t.contains(w)) continue;
        ++added;
        if (t.empty()) {
            // w must be a pure chain letter word.
            bool pure = true;
            for (std::size_t l = 0; l < w.length(); ++l)
                if (w.letter(l) != chain - '0') pure = false;
            if (!pure) return std::nullopt;
            continue;
        }
        // Strip trailing chain letters; each intermediate strip point is a
        // candidate v, and the fully stripped word may end with the anchor
        // letter whose parent is a candidate v.
        Word u = w;
        bool ok = false;
        while (!ok && !u.empty() && u.last() == chain) {
            u = u.parent();
            if (t.contains(u)) ok = true;
        }
        if (!ok && !u.empty() && u.last() == anchor && t.contains(u.parent())) ok = true;
        if (!ok) return std::nullopt;
    }
    if (added != tp.size() - t.size()) return std::nullopt;  // t not a subset of tp
    return added;
}

// All T' with (T, T') an up-edge of degree i, canonically ordered.
// Enumerate-and-filter over the full rank; memoized, since the operator and
// verification layers revisit the same sources many times.
inline const std::vector<Tree>& up_successors(const Tree& t, std::size_t i, UpFamily family) {
    static std::mutex mu;
    static std::map<std::tuple<int, std::size_t, Tree>, std::vector<Tree>> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_tuple(static_cast<int>(family), i, t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Tree> out;
    for (const Tree& tp : enumerate_trees(t.size() + i))
        if (up_edge_degree(family, t, tp) == i) out.push_back(tp);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

// The unique T' with (T', T) in G_{D_i}, when the chain is long enough.
inline std::optional<Tree> down_image(const Tree& t, std::size_t i) {
    if (removal_chain(t).size() < i) return std::nullopt;
    return detach_chain(t, i);
}

// All T'' with (T, T'') in G_{D_i}, i.e. trees that detach to T in i steps.
inline const std::vector<Tree>& down_preimages(const Tree& t, std::size_t i) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, Tree>, std::vector<Tree>> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(i, t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Tree> out;
    for (const Tree& big : enumerate_trees(t.size() + i))
        if (down_image(big, i) == t) out.push_back(big);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

// Element of N_{i,j}(start, end): up-edge (start, mid) of degree up_degree,
// then mid detaches to end in down_degree steps.
struct NPathPair {
    Tree start, mid, end;
    std::size_t up_degree = 0, down_degree = 0;
    friend bool operator==(const NPathPair&, const NPathPair&) = default;
    friend auto operator<=>(const NPathPair&, const NPathPair&) = default;
};

// Element of S_{j,i}(start, end): mid detach-includes into start via a
// D-edge of degree down_degree, and (mid, end) is an up-edge of degree
// up_degree.
struct SPathPair {
    Tree mid, start, end;
    std::size_t down_degree = 0, up_degree = 0;
    friend bool operator==(const SPathPair&, const SPathPair&) = default;
    friend auto operator<=>(const SPathPair&, const SPathPair&) = default;
};

inline std::vector<NPathPair> paths_N(const Tree& t, const Tree& tp, std::size_t i, std::size_t j,
                                      UpFamily family) {
    std::vector<NPathPair> out;
    for (const Tree& mid : up_successors(t, i, family))
        if (down_image(mid, j) == tp) out.push_back({t, mid, tp, i, j});
    return out;
}

// S-tilde_{j,i}(T, T'): disjoint union over k of S_{j-k,i-k}(T, T'). The mid
// tree of each summand is forced (detachment is deterministic), so every k
// contributes at most one element. k is capped at min(i,j) for family U and
// at min(1,i,j) for family U'.
inline std::vector<std::pair<std::size_t, SPathPair>> paths_S_tilde(const Tree& t, const Tree& tp,
                                                                    std::size_t j, std::size_t i,
                                                                    UpFamily family) {
    std::size_t kmax = std::min(i, j);
    if (family == UpFamily::Uprime) kmax = std::min<std::size_t>(kmax, 1);
    std::vector<std::pair<std::size_t, SPathPair>> out;
    for (std::size_t k = 0; k <= kmax; ++k) {
        auto mid = down_image(t, j - k);
        if (!mid) continue;
        if (up_edge_degree(family, *mid, tp) != i - k) continue;
        out.push_back({k, SPathPair{*mid, t, tp, j - k, i - k}});
    }
    return out;
}

enum class GraphFamily { U, Uprime, D };

inline const char* name(GraphFamily f) {
    switch (f) {
        case GraphFamily::U: return "U";
        case GraphFamily::Uprime: return "U'";
        default: return "D";
    }
}

struct limit_exceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GraphEdge {
    Tree from, to;
};

// Edges of the chosen graph restricted to trees of at most max_nodes nodes.
// D-edges are oriented (smaller, larger).
inline std::vector<GraphEdge> graph_edges(GraphFamily family, std::size_t degree,
                                          std::size_t max_nodes) {
    if (max_nodes > 8) throw limit_exceeded("graph export limited to trees of <= 8 nodes");
    std::vector<GraphEdge> edges;
    for (std::size_t n = 0; n <= max_nodes; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            if (family == GraphFamily::D) {
                if (auto lower = down_image(t, degree)) edges.push_back({*lower, t});
            } else if (n + degree <= max_nodes) {
                UpFamily fam = family == GraphFamily::U ? UpFamily::U : UpFamily::Uprime;
                for (const Tree& tp : up_successors(t, degree, fam)) edges.push_back({t, tp});
            }
        }
    }
    return edges;
}

inline std::string export_dot(GraphFamily family, std::size_t degree, std::size_t max_nodes) {
    std::string out = "digraph \"G_" + std::string(name(family)) + "_" + std::to_string(degree) +
                      "\" {\n";
    for (std::size_t n = 0; n <= max_nodes; ++n)
        for (const Tree& t : enumerate_trees(n)) out += "  \"" + t.to_string() + "\";\n";
    for (const GraphEdge& e : graph_edges(family, degree, max_nodes))
        out += "  \"" + e.from.to_string() + "\" -> \"" + e.to.to_string() + "\" [label=\"" +
               std::to_string(degree) + "\"];\n";
    out += "}\n";
    return out;
}

// One JSON object per line, e.g.
// {"from":"{}","to":"{0}","family":"U","degree":1}
inline std::string export_json_lines(GraphFamily family, std::size_t degree,
                                     std::size_t max_nodes) {
    std::string out;
    for (const GraphEdge& e : graph_edges(family, degree, max_nodes))
        out += "{\"from\":\"" + e.from.to_string() + "\",\"to\":\"" + e.to.to_string() +
               "\",\"family\":\"" + name(family) + "\",\"degree\":" + std::to_string(degree) +
               "}\n";
    return out;
}

}  // namespace pbt
