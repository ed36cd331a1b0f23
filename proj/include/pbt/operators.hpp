#pragma once

// Formal integer linear combinations of trees, the up/down operators and
// their adjoints, generating-function application, and exhaustive
// verification of the commutation identities.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbt/graded_graph.hpp"
#include "pbt/polynomial.hpp"
#include "pbt/tree.hpp"

namespace pbt {

// Finite map tree -> nonzero integer. The empty tree is an ordinary basis
// element; the zero combination has no terms.
class LinComb {
public:
    LinComb() = default;
    explicit LinComb(const Tree& t, std::int64_t c = 1) { add(t, c); }

    void add(const Tree& t, std::int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(t, c);
        if (!fresh && (it->second += c) == 0) terms_.erase(it);
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Tree, std::int64_t>& terms() const { return terms_; }

    std::int64_t coefficient(const Tree& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? 0 : it->second;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [t, c] : o.terms_) add(t, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    friend bool operator==(const LinComb&, const LinComb&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [t, c] : terms_) {
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            std::int64_t mag = c < 0 ? -c : c;
            if (mag != 1) out += std::to_string(mag) + " ";
            out += t.to_string();
        }
        return out;
    }

private:
    std::map<Tree, std::int64_t> terms_;
};

enum class OpSymbol { U, Uprime, D, Ustar, Uprimestar, Dstar };

inline const char* name(OpSymbol s) {
    switch (s) {
        case OpSymbol::U: return "U";
        case OpSymbol::Uprime: return "U'";
        case OpSymbol::D: return "D";
        case OpSymbol::Ustar: return "U*";
        case OpSymbol::Uprimestar: return "U'*";
        default: return "D*";
    }
}

inline std::optional<OpSymbol> parse_op_symbol(const std::string& s) {
    if (s == "U") return OpSymbol::U;
    if (s == "U'") return OpSymbol::Uprime;
    if (s == "D") return OpSymbol::D;
    if (s == "U*") return OpSymbol::Ustar;
    if (s == "U'*") return OpSymbol::Uprimestar;
    if (s == "D*") return OpSymbol::Dstar;
    return std::nullopt;
}

inline LinComb apply_to_tree(OpSymbol symbol, std::size_t i, const Tree& t) {
    LinComb out;
    switch (symbol) {
        case OpSymbol::U:
        case OpSymbol::Uprime: {
            UpFamily fam = symbol == OpSymbol::U ? UpFamily::U : UpFamily::Uprime;
            for (const Tree& tp : up_successors(t, i, fam)) out.add(tp, 1);
            break;
        }
        case OpSymbol::D: {
            if (auto lower = down_image(t, i)) out.add(*lower, 1);
            break;
        }
        case OpSymbol::Ustar:
        case OpSymbol::Uprimestar: {
            // Transpose on the tree basis: all T'' below T by an up-edge of
            // degree i.
            if (i > t.size()) break;
            UpFamily fam = symbol == OpSymbol::Ustar ? UpFamily::U : UpFamily::Uprime;
            for (const Tree& lower : enumerate_trees(t.size() - i))
                if (up_edge_degree(fam, lower, t) == i) out.add(lower, 1);
            break;
        }
        case OpSymbol::Dstar: {
            for (const Tree& big : down_preimages(t, i)) out.add(big, 1);
            break;
        }
    }
    return out;
}

// Linear extension of the basis action.
inline LinComb apply(OpSymbol symbol, std::size_t i, const LinComb& v) {
    LinComb out;
    for (const auto& [t, c] : v.terms()) {
        LinComb image = apply_to_tree(symbol, i, t);
        for (const auto& [tp, c2] : image.terms()) out.add(tp, c * c2);
    }
    return out;
}

inline std::int64_t pairing(const LinComb& a, const LinComb& b) {
    std::int64_t out = 0;
    for (const auto& [t, c] : a.terms()) out += c * b.coefficient(t);
    return out;
}

// Linear combination of trees with polynomial coefficients; the working
// state for generating-function products like D(t1)...D(tn) T.
class PolyLinComb {
public:
    explicit PolyLinComb(int nvars = 0) : nvars_(nvars) {}

    static PolyLinComb basis(int nvars, const Tree& t) {
        PolyLinComb out(nvars);
        out.add(t, Polynomial::constant(nvars, 1));
        return out;
    }

    int nvars() const { return nvars_; }
    const std::map<Tree, Polynomial>& terms() const { return terms_; }

    void add(const Tree& t, const Polynomial& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = terms_.emplace(t, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial coefficient(const Tree& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Polynomial(nvars_) : it->second;
    }

    friend bool operator==(const PolyLinComb&, const PolyLinComb&) = default;

private:
    int nvars_;
    std::map<Tree, Polynomial> terms_;
};

// Applies A(t_var) = sum_i A_i t_var^i, truncated at `cap`. For D the sum is
// intrinsically finite; for the up operators the caller bounds the degree
// (every downstream use is degree-bounded by grading).
inline PolyLinComb apply_gen(OpSymbol symbol, int var, const PolyLinComb& v, std::size_t cap) {
    PolyLinComb out(v.nvars());
    bool raises = symbol == OpSymbol::U || symbol == OpSymbol::Uprime || symbol == OpSymbol::Dstar;
    for (const auto& [t, poly] : v.terms()) {
        for (std::size_t i = 0; i <= cap; ++i) {
            // D and the up-star transposes lower the grade, so their series
            // terminate on their own; for the grade-raising operators, cap
            // bounds the size of the resulting trees.
            if (!raises && i > t.size()) break;
            if (raises && t.size() + i > cap) break;
            LinComb image = apply_to_tree(symbol, i, t);
            if (image.is_zero()) continue;
            Polynomial weighted = poly.times_power(var, static_cast<int>(i));
            for (const auto& [tp, c] : image.terms())
                out.add(tp, weighted.times_power(var, 0, c));
        }
    }
    return out;
}

struct CommutationCounterexample {
    Tree tree;
    std::size_t i = 0, j = 0;
    LinComb lhs, rhs;
};

struct CommutationReport {
    std::string identity;
    bool ok = true;
    std::vector<CommutationCounterexample> counterexamples;
};

// D_j U_i = sum_{k<=min(i,j)} U_{i-k} D_{j-k} for family U, with the extra
// bound k <= 1 for family U', checked exactly on every tree of at most
// max_nodes nodes.
inline CommutationReport check_commutation(UpFamily family, std::size_t max_nodes,
                                           std::size_t max_i, std::size_t max_j) {
    OpSymbol up = family == UpFamily::U ? OpSymbol::U : OpSymbol::Uprime;
    CommutationReport report;
    report.identity = std::string("D_j ") + name(up) + "_i = sum_k " + name(up) +
                      "_{i-k} D_{j-k}";
    for (std::size_t n = 0; n <= max_nodes; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (std::size_t i = 0; i <= max_i; ++i)
                for (std::size_t j = 0; j <= max_j; ++j) {
                    LinComb lhs = apply(OpSymbol::D, j, apply(up, i, LinComb(t)));
                    LinComb rhs;
                    std::size_t kmax = std::min(i, j);
                    if (family == UpFamily::Uprime) kmax = std::min<std::size_t>(kmax, 1);
                    for (std::size_t k = 0; k <= kmax; ++k)
                        rhs += apply(up, i - k, apply(OpSymbol::D, j - k, LinComb(t)));
                    if (lhs != rhs) {
                        report.ok = false;
                        report.counterexamples.push_back({t, i, j, lhs, rhs});
                    }
                }
    return report;
}

// Transposed relation U*_a D*_b = sum_k D*_{b-k} U*_{a-k} (same k bounds).
inline CommutationReport check_transposed_commutation(UpFamily family, std::size_t max_nodes,
                                                      std::size_t max_i, std::size_t max_j) {
    OpSymbol up = family == UpFamily::U ? OpSymbol::Ustar : OpSymbol::Uprimestar;
    CommutationReport report;
    report.identity = std::string(name(up)) + "_a D*_b = sum_k D*_{b-k} " + name(up) + "_{a-k}";
    for (std::size_t n = 0; n <= max_nodes; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (std::size_t a = 0; a <= max_i; ++a)
                for (std::size_t b = 0; b <= max_j; ++b) {
                    LinComb lhs = apply(up, a, apply(OpSymbol::Dstar, b, LinComb(t)));
                    LinComb rhs;
                    std::size_t kmax = std::min(a, b);
                    if (family == UpFamily::Uprime) kmax = std::min<std::size_t>(kmax, 1);
                    for (std::size_t k = 0; k <= kmax; ++k)
                        rhs += apply(OpSymbol::Dstar, b - k, apply(up, a - k, LinComb(t)));
                    if (lhs != rhs) {
                        report.ok = false;
                        report.counterexamples.push_back({t, a, b, lhs, rhs});
                    }
                }
    return report;
}

// D = sum_j D_j restricted to a basis tree (finite: j <= |r_T|).
inline LinComb apply_full_down(const LinComb& v) {
    LinComb out;
    for (const auto& [t, c] : v.terms())
        for (std::size_t j = 0; j <= removal_chain(t).size(); ++j) {
            LinComb image = apply_to_tree(OpSymbol::D, j, t);
            for (const auto& [tp, c2] : image.terms()) out.add(tp, c * c2);
        }
    return out;
}

// U* = sum_i U*_i restricted to a basis tree (finite: i <= |T|).
inline LinComb apply_full_up_star(const LinComb& v) {
    LinComb out;
    for (const auto& [t, c] : v.terms())
        for (std::size_t i = 0; i <= t.size(); ++i) {
            LinComb image = apply_to_tree(OpSymbol::Ustar, i, t);
            for (const auto& [tp, c2] : image.terms()) out.add(tp, c * c2);
        }
    return out;
}

// The three 1-dual-graph corollaries, checked exhaustively.
inline CommutationReport check_one_dual_graph(std::size_t max_nodes) {
    CommutationReport report;
    report.identity = "D_1 U_1 - U_1 D_1 = I";
    for (std::size_t n = 0; n <= max_nodes; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            LinComb v(t);
            LinComb lhs = apply(OpSymbol::D, 1, apply(OpSymbol::U, 1, v)) -
                          apply(OpSymbol::U, 1, apply(OpSymbol::D, 1, v));
            if (lhs != v) {
                report.ok = false;
                report.counterexamples.push_back({t, 1, 1, lhs, v});
            }
        }
    return report;
}

inline CommutationReport check_full_down_relation(std::size_t max_nodes) {
    CommutationReport report;
    report.identity = "D U_1 - U_1 D = D";
    for (std::size_t n = 0; n <= max_nodes; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            LinComb v(t);
            LinComb lhs = apply_full_down(apply(OpSymbol::U, 1, v)) -
                          apply(OpSymbol::U, 1, apply_full_down(v));
            LinComb rhs = apply_full_down(v);
            if (lhs != rhs) {
                report.ok = false;
                report.counterexamples.push_back({t, 1, 0, lhs, rhs});
            }
        }
    return report;
}

inline CommutationReport check_star_dual_relation(std::size_t max_nodes) {
    CommutationReport report;
    report.identity = "U* D_1* - D_1* U* = U*";
    for (std::size_t n = 0; n <= max_nodes; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            LinComb v(t);
            LinComb lhs = apply_full_up_star(apply(OpSymbol::Dstar, 1, v)) -
                          apply(OpSymbol::Dstar, 1, apply_full_up_star(v));
            LinComb rhs = apply_full_up_star(v);
            if (lhs != rhs) {
                report.ok = false;
                report.counterexamples.push_back({t, 1, 0, lhs, rhs});
            }
        }
    return report;
}

}  // namespace pbt
