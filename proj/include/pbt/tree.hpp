#pragma once

// Rooted planar binary trees as prefix-closed finite sets of words over
// {1,2}, together with the detachment calculus: the right-childless set R_T,
// the spine E_T, the removal chain r_T, detachment T (-) w, and the natural
// inclusion maps that undo a detachment.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pbt/word.hpp"

namespace pbt {

struct not_prefix_closed : std::invalid_argument {
    Word word;
    explicit not_prefix_closed(const Word& w)
        : std::invalid_argument("set is not prefix-closed at " + w.to_string()), word(w) {}
};

struct not_right_childless : std::invalid_argument {
    Word word;
    explicit not_right_childless(const Word& w)
        : std::invalid_argument(w.to_string() + " has a right child (or is absent)"), word(w) {}
};

struct chain_too_short : std::invalid_argument {
    explicit chain_too_short(std::size_t want, std::size_t have)
        : std::invalid_argument("removal chain has " + std::to_string(have) +
                                " entries, need " + std::to_string(want)) {}
};

struct not_in_detached_tree : std::invalid_argument {
    Word word;
    explicit not_in_detached_tree(const Word& w)
        : std::invalid_argument(w.to_string() + " is not a node of the detached tree"), word(w) {}
};

namespace detail {
inline std::vector<Word> sorted_unique(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}
inline bool contains(const std::vector<Word>& sorted, const Word& w) {
    return std::binary_search(sorted.begin(), sorted.end(), w);
}
}  // namespace detail

class Tree {
public:
    Tree() = default;

    // Checks prefix-closure; the node set is kept as given.
    static Tree validate(std::vector<Word> words) {
        auto nodes = detail::sorted_unique(std::move(words));
        for (const Word& w : nodes)
            if (!w.empty() && !detail::contains(nodes, w.parent())) throw not_prefix_closed(w);
        return Tree(std::move(nodes));
    }

    // Joins a left and a right subtree under a fresh root.
    static Tree graft(const Tree& left, const Tree& right) {
        std::vector<Word> nodes;
        nodes.reserve(1 + left.size() + right.size());
        nodes.push_back(Word::root());
        for (const Word& w : left.nodes_) nodes.push_back(Word::root().left().append(w));
        for (const Word& w : right.nodes_) nodes.push_back(Word::root().right().append(w));
        std::sort(nodes.begin(), nodes.end());
        return Tree(std::move(nodes), unchecked{});
    }

    static Tree parse(std::string_view text);

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    bool contains(const Word& w) const { return detail::contains(nodes_, w); }

    // Nodes in shortlex order.
    const std::vector<Word>& nodes() const { return nodes_; }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (i) out += ',';
            out += nodes_[i].to_string();
        }
        out += '}';
        return out;
    }

    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
        return a.nodes_ <=> b.nodes_;
    }
    friend bool operator==(const Tree& a, const Tree& b) = default;

    struct unchecked {};
    // Caller guarantees the vector is sorted and prefix-closed.
    Tree(std::vector<Word> nodes, unchecked) : nodes_(std::move(nodes)) {}

private:
    explicit Tree(std::vector<Word> nodes) : nodes_(std::move(nodes)) {}

    std::vector<Word> nodes_;
};

inline Tree Tree::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("Tree::parse: expected {...} in \"" + std::string(text) + "\"");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<Word> words;
    while (!body.empty()) {
        std::size_t comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        words.push_back(Word::parse(item));
        body = (comma == std::string_view::npos) ? std::string_view{} : body.substr(comma + 1);
    }
    return Tree::validate(std::move(words));
}

// T_v: the nodes of T with prefix v, as absolute words.
inline std::vector<Word> subtree(const Tree& t, const Word& v) {
    std::vector<Word> out;
    for (const Word& w : t.nodes())
        if (v.is_prefix_of(w)) out.push_back(w);
    return out;
}

// R_T = {w in T | w2 not in T}, computed on a raw node set. The overload on
// Tree is the common entry point; the raw form exists because R, E and r are
// plain set formulas that do not themselves need prefix-closure.
inline std::vector<Word> right_childless(const std::vector<Word>& words) {
    auto nodes = detail::sorted_unique(words);
    std::vector<Word> out;
    for (const Word& w : nodes)
        if (!detail::contains(nodes, w.right())) out.push_back(w);
    return out;
}
inline std::vector<Word> right_childless(const Tree& t) { return right_childless(t.nodes()); }

// E_T: the nodes w such that every decomposition w = v 1 w' has v2 outside T.
inline std::vector<Word> spine_set(const std::vector<Word>& words) {
    auto nodes = detail::sorted_unique(words);
    std::vector<Word> out;
    for (const Word& w : nodes) {
        bool ok = true;
        Word prefix;
        for (std::size_t i = 0; ok && i < w.length(); ++i) {
            if (w.letter(i) == 1 && detail::contains(nodes, prefix.right())) ok = false;
            prefix = prefix.child(w.letter(i));
        }
        if (ok) out.push_back(w);
    }
    return out;
}
inline std::vector<Word> spine_set(const Tree& t) { return spine_set(t.nodes()); }

// r_T = E_T  intersect  R_T, sorted by prefix order (it is a chain, so shortlex
// order coincides with prefix order on it).
inline std::vector<Word> removal_chain(const std::vector<Word>& words) {
    auto r = right_childless(words);
    auto e = spine_set(words);
    std::vector<Word> out;
    std::set_intersection(e.begin(), e.end(), r.begin(), r.end(), std::back_inserter(out));
    return out;
}
inline std::vector<Word> removal_chain(const Tree& t) { return removal_chain(t.nodes()); }

// T (-) w: removes w (which must have no right child) and promotes its left
// subtree into its place.
inline Tree detach_one(const Tree& t, const Word& w) {
    if (!t.contains(w) || t.contains(w.right())) throw not_right_childless(w);
    Word w1 = w.left();
    std::vector<Word> nodes;
    nodes.reserve(t.size() - 1);
    for (const Word& v : t.nodes()) {
        if (w.is_prefix_of(v)) {
            if (w1.is_prefix_of(v)) nodes.push_back(w.append(v.suffix_after(w1)));
        } else {
            nodes.push_back(v);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    return Tree(std::move(nodes), Tree::unchecked{});
}

// T (-) r_{T,i}: removes the top chain entry first, then recurses on the rest
// of the original chain. Higher removals happen inside the cone of lower
// entries' left extensions, so the lower entries stay removable.
inline Tree detach_chain(const Tree& t, std::size_t i) {
    auto chain = removal_chain(t);
    if (chain.size() < i) throw chain_too_short(i, chain.size());
    Tree out = t;
    for (std::size_t step = i; step-- > 0;) out = detach_one(out, chain[step]);
    return out;
}

namespace detail {
// One inclusion step for a removed node u: words in the u-cone shift into the
// u1-cone, everything else is fixed.
inline Word promote_at(const Word& removed, const Word& w) {
    if (!removed.is_prefix_of(w)) return w;
    return removed.left().append(w.suffix_after(removed));
}
}  // namespace detail

// The natural inclusion of T (-) r_{T,i} into T; image is T minus r_{T,i}.
inline Word include_chain(const Tree& t, std::size_t i, const Word& w) {
    auto chain = removal_chain(t);
    if (chain.size() < i) throw chain_too_short(i, chain.size());
    if (!detach_chain(t, i).contains(w)) throw not_in_detached_tree(w);
    Word out = w;
    for (std::size_t step = 0; step < i; ++step) out = detail::promote_at(chain[step], out);
    return out;
}

// Extension of include_chain to all words: the same promotion steps applied
// unconditionally. Injective, never hits r_{T,i}, and restricts to
// include_chain on the detached tree.
inline Word extended_include(const Tree& t, std::size_t i, const Word& w) {
    auto chain = removal_chain(t);
    if (chain.size() < i) throw chain_too_short(i, chain.size());
    Word out = w;
    for (std::size_t step = 0; step < i; ++step) out = detail::promote_at(chain[step], out);
    return out;
}

// All trees with exactly n nodes, in canonical order (lexicographic on the
// shortlex-sorted node list, which matches serialized order).
inline const std::vector<Tree>& enumerate_trees(std::size_t n) {
    static std::mutex mu;
    static std::deque<std::vector<Tree>> cache{{Tree{}}};
    std::scoped_lock lock(mu);
    while (cache.size() <= n) {
        std::size_t m = cache.size();
        std::vector<Tree> level;
        for (std::size_t k = 0; k + 1 <= m; ++k)
            for (const Tree& left : cache[k])
                for (const Tree& right : cache[m - 1 - k]) level.push_back(Tree::graft(left, right));
        std::sort(level.begin(), level.end());
        cache.push_back(std::move(level));
    }
    return cache[n];
}

}  // namespace pbt
