#pragma once

// Sparse multivariate polynomials over the integers, with exponent vectors
// as keys. Used for the quasi-symmetric generating polynomials and the
// generating-function form of the operators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbt {

using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Term order used for printing: by total degree, then lexicographically
// descending on the exponent vector (so t1^2 + t1 t2 + t2^2).
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        if (int c = total_degree(a) - total_degree(b); c != 0) return c < 0;
        return a > b;
    }
};

class Polynomial {
public:
    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, std::int64_t c) {
        Polynomial p(nvars);
        p.add_term(ExpVec(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    static Polynomial monomial(int nvars, const ExpVec& e, std::int64_t c) {
        Polynomial p(nvars);
        p.add_term(e, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, std::int64_t, GrlexLess>& terms() const { return terms_; }

    std::int64_t coefficient(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const ExpVec& e, std::int64_t c) {
        if (e.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("Polynomial: exponent vector arity mismatch");
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh && (it->second += c) == 0) terms_.erase(it);
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
        Polynomial out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e = ea;
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    // Multiply by c * t_var^power (var is 1-based).
    Polynomial times_power(int var, int power, std::int64_t c = 1) const {
        Polynomial out(nvars_);
        for (const auto& [e, coeff] : terms_) {
            ExpVec shifted = e;
            shifted[static_cast<std::size_t>(var) - 1] += power;
            out.add_term(shifted, coeff * c);
        }
        return out;
    }

    // Drop every term of total degree above the bound.
    Polynomial truncated(int max_total_degree) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) <= max_total_degree) out.add_term(e, c);
        return out;
    }

    // Re-embed into a wider variable set, placing variable t_k at position
    // offset + k.
    Polynomial shifted_into(int nvars, int offset) const {
        if (offset + nvars_ > nvars)
            throw std::invalid_argument("Polynomial: shift target too narrow");
        Polynomial out(nvars);
        for (const auto& [e, c] : terms_) {
            ExpVec wide(static_cast<std::size_t>(nvars), 0);
            std::copy(e.begin(), e.end(), wide.begin() + offset);
            out.add_term(wide, c);
        }
        return out;
    }

    // True when every stored term has the given total degree.
    bool homogeneous_of_degree(int d) const {
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ &&
               std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            std::int64_t mag = c < 0 ? -c : c;
            std::string mono;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!mono.empty()) mono += ' ';
                mono += "t" + std::to_string(k + 1);
                if (e[k] > 1) mono += "^" + std::to_string(e[k]);
            }
            if (mono.empty()) out += std::to_string(mag);
            else if (mag == 1) out += mono;
            else out += std::to_string(mag) + " " + mono;
        }
        return out;
    }

private:
    int nvars_;
    std::map<ExpVec, std::int64_t, GrlexLess> terms_;
};

// Quasi-symmetry: the coefficient of t_{i1}^{a1} ... t_{ik}^{ak} depends only
// on the composition (a1..ak), for every increasing choice of variables.
inline bool is_quasisymmetric(const Polynomial& p) {
    auto binomial = [](int n, int k) {
        std::int64_t r = 1;
        for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
        return r;
    };
    std::map<std::vector<int>, std::pair<std::int64_t, std::int64_t>> per_comp;  // coeff, count
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> comp;
        for (int x : e)
            if (x != 0) comp.push_back(x);
        auto [it, fresh] = per_comp.emplace(std::move(comp), std::make_pair(c, 1));
        if (!fresh) {
            if (it->second.first != c) return false;
            ++it->second.second;
        }
    }
    for (const auto& [comp, cc] : per_comp)
        if (cc.second != binomial(p.nvars(), static_cast<int>(comp.size()))) return false;
    return true;
}

}  // namespace pbt
