#pragma once

// The three monotone labelling families on trees and their identification
// with paths in the graded graphs: right-strict labellings with G_U paths,
// left-strict with G_U', binary-searching with G_D.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbt/graded_graph.hpp"
#include "pbt/tree.hpp"

namespace pbt {

enum class LabelKind { right_strict, left_strict, binary_search };

inline const char* name(LabelKind k) {
    switch (k) {
        case LabelKind::right_strict: return "right-strict";
        case LabelKind::left_strict: return "left-strict";
        default: return "binary-searching";
    }
}

struct invalid_labelling : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct malformed_path : std::invalid_argument {
    std::size_t step;
    explicit malformed_path(std::size_t s)
        : std::invalid_argument("path is not an edge sequence at step " + std::to_string(s)),
          step(s) {}
};

class Labelling {
public:
    // values[k] labels tree.nodes()[k]; all values must lie in {1..m}.
    Labelling(Tree tree, LabelKind kind, std::vector<int> values, int bound)
        : tree_(std::move(tree)), kind_(kind), values_(std::move(values)), bound_(bound) {
        if (values_.size() != tree_.size())
            throw invalid_labelling("value map is not total on the tree");
        for (int v : values_)
            if (v < 1 || v > bound_) throw invalid_labelling("label out of range");
    }

    const Tree& tree() const { return tree_; }
    LabelKind kind() const { return kind_; }
    const std::vector<int>& values() const { return values_; }
    int bound() const { return bound_; }

    int value_at(const Word& w) const {
        const auto& nodes = tree_.nodes();
        auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
        if (it == nodes.end() || *it != w) throw invalid_labelling("no such node " + w.to_string());
        return values_[static_cast<std::size_t>(it - nodes.begin())];
    }

    std::string to_string() const {
        std::string out = std::string(name(kind_)) + "; {";
        for (std::size_t k = 0; k < tree_.size(); ++k) {
            if (k) out += ", ";
            out += tree_.nodes()[k].to_string() + ":" + std::to_string(values_[k]);
        }
        return out + "}";
    }

    friend bool operator==(const Labelling&, const Labelling&) = default;

private:
    Tree tree_;
    LabelKind kind_;
    std::vector<int> values_;
    int bound_;
};

// Full-subtree validity check, quantified exactly as the definitions state:
// the bound at w applies to every node of the left (resp. right) subtree,
// not just the child. For the strict kinds the parent-child check would be
// equivalent; for binary-searching it would not.
inline bool validate_labelling(const Labelling& l) {
    const auto& nodes = l.tree().nodes();
    const auto& vals = l.values();
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        Word left = nodes[a].left(), right = nodes[a].right();
        for (std::size_t b = 0; b < nodes.size(); ++b) {
            bool in_left = left.is_prefix_of(nodes[b]);
            bool in_right = right.is_prefix_of(nodes[b]);
            if (!in_left && !in_right) continue;
            switch (l.kind()) {
                case LabelKind::right_strict:
                    if (in_left && !(vals[a] <= vals[b])) return false;
                    if (in_right && !(vals[a] < vals[b])) return false;
                    break;
                case LabelKind::left_strict:
                    if (in_left && !(vals[a] < vals[b])) return false;
                    if (in_right && !(vals[a] <= vals[b])) return false;
                    break;
                case LabelKind::binary_search:
                    if (in_left && !(vals[a] >= vals[b])) return false;
                    if (in_right && !(vals[a] < vals[b])) return false;
                    break;
            }
        }
    }
    return true;
}

// All valid labellings of T by {1..m}, in lexicographic order of the value
// vector (nodes in shortlex order).
inline std::vector<Labelling> enumerate_labellings(const Tree& t, LabelKind kind, int m) {
    std::vector<Labelling> out;
    if (m < 0) return out;
    const auto& nodes = t.nodes();
    std::vector<int> vals(nodes.size(), 0);

    // Incremental constraint check for the node at position `idx` against all
    // earlier nodes. Subtree members are longer words, hence later in
    // shortlex order, so checking new-vs-earlier pairs covers everything.
    auto consistent = [&](std::size_t idx) {
        for (std::size_t a = 0; a < idx; ++a) {
            bool in_left = nodes[a].left().is_prefix_of(nodes[idx]);
            bool in_right = nodes[a].right().is_prefix_of(nodes[idx]);
            if (!in_left && !in_right) continue;
            switch (kind) {
                case LabelKind::right_strict:
                    if (in_left && !(vals[a] <= vals[idx])) return false;
                    if (in_right && !(vals[a] < vals[idx])) return false;
                    break;
                case LabelKind::left_strict:
                    if (in_left && !(vals[a] < vals[idx])) return false;
                    if (in_right && !(vals[a] <= vals[idx])) return false;
                    break;
                case LabelKind::binary_search:
                    if (in_left && !(vals[a] >= vals[idx])) return false;
                    if (in_right && !(vals[a] < vals[idx])) return false;
                    break;
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == nodes.size()) {
            out.emplace_back(t, kind, vals, m);
            return;
        }
        for (int v = 1; v <= m; ++v) {
            vals[idx] = v;
            if (consistent(idx)) self(self, idx + 1);
        }
        vals[idx] = 0;
    };
    if (t.empty()) {
        out.emplace_back(t, kind, std::vector<int>{}, m);
        return out;
    }
    rec(rec, 0);
    return out;
}

enum class PathKind { up, up_prime, down };

// A path (empty tree = T^0, T^1, ..., T^m) in G_U, G_U' or G_D; degree-0
// steps (repeated trees) are allowed.
struct Path {
    PathKind kind;
    std::vector<Tree> trees;
    friend bool operator==(const Path&, const Path&) = default;

    std::size_t steps() const { return trees.empty() ? 0 : trees.size() - 1; }
};

inline LabelKind label_kind(PathKind k) {
    switch (k) {
        case PathKind::up: return LabelKind::right_strict;
        case PathKind::up_prime: return LabelKind::left_strict;
        default: return LabelKind::binary_search;
    }
}

inline PathKind path_kind(LabelKind k) {
    switch (k) {
        case LabelKind::right_strict: return PathKind::up;
        case LabelKind::left_strict: return PathKind::up_prime;
        default: return PathKind::down;
    }
}

// Checks each consecutive pair is an edge of the matching graph.
inline void validate_path(const Path& p) {
    if (p.trees.empty() || !p.trees.front().empty()) throw malformed_path(0);
    for (std::size_t s = 1; s < p.trees.size(); ++s) {
        const Tree& lo = p.trees[s - 1];
        const Tree& hi = p.trees[s];
        if (p.kind == PathKind::down) {
            if (lo.size() > hi.size() || down_image(hi, hi.size() - lo.size()) != lo)
                throw malformed_path(s);
        } else {
            UpFamily fam = p.kind == PathKind::up ? UpFamily::U : UpFamily::Uprime;
            if (!up_edge_degree(fam, lo, hi)) throw malformed_path(s);
        }
    }
}

// For the up kinds, T^i is the set of nodes labelled <= i. For the
// binary-searching kind, the top label class is a removal chain prefix and
// the path descends by detaching it, transporting labels along the natural
// inclusion.
inline Path labelling_to_path(const Labelling& l) {
    if (!validate_labelling(l)) throw invalid_labelling("labelling violates its kind");
    Path p{path_kind(l.kind()), {}};
    int m = l.bound();
    if (l.kind() != LabelKind::binary_search) {
        for (int i = 0; i <= m; ++i) {
            std::vector<Word> words;
            for (std::size_t a = 0; a < l.tree().size(); ++a)
                if (l.values()[a] <= i) words.push_back(l.tree().nodes()[a]);
            p.trees.push_back(Tree::validate(std::move(words)));
        }
    } else {
        Tree cur = l.tree();
        std::vector<int> vals = l.values();
        p.trees.assign(static_cast<std::size_t>(m) + 1, Tree{});
        p.trees[static_cast<std::size_t>(m)] = cur;
        for (int i = m; i >= 1; --i) {
            std::size_t level = 0;
            for (int v : vals)
                if (v == i) ++level;
            auto chain = removal_chain(cur);
            if (chain.size() < level) throw invalid_labelling("top label class not a chain prefix");
            for (std::size_t c = 0; c < level; ++c) {
                // psi^{-1}({i}) must be exactly r_{cur, level}
                auto it = std::lower_bound(cur.nodes().begin(), cur.nodes().end(), chain[c]);
                if (vals[static_cast<std::size_t>(it - cur.nodes().begin())] != i)
                    throw invalid_labelling("top label class not a chain prefix");
            }
            Tree next = detach_chain(cur, level);
            std::vector<int> next_vals(next.size());
            for (std::size_t a = 0; a < next.size(); ++a) {
                Word up = include_chain(cur, level, next.nodes()[a]);
                auto it = std::lower_bound(cur.nodes().begin(), cur.nodes().end(), up);
                next_vals[a] = vals[static_cast<std::size_t>(it - cur.nodes().begin())];
            }
            cur = std::move(next);
            vals = std::move(next_vals);
            p.trees[static_cast<std::size_t>(i) - 1] = cur;
        }
        if (!cur.empty()) throw invalid_labelling("path does not reach the empty tree");
    }
    validate_path(p);
    return p;
}

// Inverse of labelling_to_path.
inline Labelling path_to_labelling(const Path& p) {
    validate_path(p);
    const Tree& top = p.trees.back();
    int m = static_cast<int>(p.steps());
    if (p.kind != PathKind::down) {
        std::vector<int> vals(top.size(), 0);
        for (std::size_t s = 1; s < p.trees.size(); ++s)
            for (const Word& w : p.trees[s].nodes())
                if (!p.trees[s - 1].contains(w)) {
                    auto it = std::lower_bound(top.nodes().begin(), top.nodes().end(), w);
                    vals[static_cast<std::size_t>(it - top.nodes().begin())] = static_cast<int>(s);
                }
        return Labelling(top, label_kind(p.kind), std::move(vals), m);
    }
    // Down kind: rebuild labels from the bottom, pushing them up through the
    // inclusion at each step and labelling the restored chain with the step.
    std::map<Word, int> labels;
    for (std::size_t s = 1; s < p.trees.size(); ++s) {
        const Tree& lo = p.trees[s - 1];
        const Tree& hi = p.trees[s];
        std::size_t k = hi.size() - lo.size();
        std::map<Word, int> next;
        for (const auto& [w, v] : labels) next[include_chain(hi, k, w)] = v;
        auto chain = removal_chain(hi);
        for (std::size_t c = 0; c < k; ++c) next[chain[c]] = static_cast<int>(s);
        labels = std::move(next);
    }
    std::vector<int> vals;
    vals.reserve(top.size());
    for (const Word& w : top.nodes()) vals.push_back(labels.at(w));
    return Labelling(top, LabelKind::binary_search, std::move(vals), m);
}

// Exponent vector of the weight monomial: entry i-1 counts nodes labelled i.
inline std::vector<int> weight(const Labelling& l, int n) {
    if (l.bound() > n) throw std::invalid_argument("weight: label bound exceeds variable count");
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int v : l.values()) ++exps[static_cast<std::size_t>(v) - 1];
    return exps;
}

}  // namespace pbt
