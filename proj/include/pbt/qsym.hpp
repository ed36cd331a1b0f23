#pragma once

// Generating polynomials of paths in the graded graphs, their expression as
// sums over labellings, and the Cauchy-style kernel identities that pair the
// up and down generating functions.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pbt/labelling.hpp"
#include "pbt/operators.hpp"
#include "pbt/polynomial.hpp"
#include "pbt/tree.hpp"

namespace pbt {

// <D(t_1)...D(t_n) T, T'> for symbol D, and <X(t_n)...X(t_1) T', T> for the
// up symbols X in {U, U'}; the innermost operator carries the variable
// applied first (t_n for D, t_1 for U and U'). Degrees are capped because
// the pairing only sees the graded piece connecting T and T'.
inline Polynomial schur_poly(OpSymbol symbol, const Tree& t, const Tree& tp, std::size_t nvars) {
    if (symbol != OpSymbol::D && symbol != OpSymbol::U && symbol != OpSymbol::Uprime)
        throw std::invalid_argument("schur_poly expects symbol U, U' or D");
    int nv = static_cast<int>(nvars);
    if (nvars == 0) {
        Polynomial delta(0);
        if (t == tp) delta += Polynomial::constant(0, 1);
        return delta;
    }
    if (symbol == OpSymbol::D) {
        if (tp.size() > t.size()) return Polynomial(nv);
        std::size_t cap = t.size() - tp.size();
        PolyLinComb v(nv);
        v.add(t, Polynomial::constant(nv, 1));
        for (std::size_t step = nvars; step >= 1; --step)
            v = apply_gen(OpSymbol::D, step, v, cap);
        return v.coefficient(tp);
    }
    if (t.size() < tp.size()) return Polynomial(nv);
    std::size_t cap = t.size();  // bound on the intermediate tree sizes
    PolyLinComb v(nv);
    v.add(tp, Polynomial::constant(nv, 1));
    for (std::size_t step = 1; step <= nvars; ++step) v = apply_gen(symbol, step, v, cap);
    return v.coefficient(t);
}

// Sum of monomial weights over all valid labellings of T with labels in
// {1..n}. Equals schur_poly for the matching symbol: binary-searching
// labellings give D, right-strict give U, left-strict give U'.
inline Polynomial labelling_sum(const Tree& t, LabelKind kind, std::size_t nvars) {
    Polynomial sum(static_cast<int>(nvars));
    for (const Labelling& l : enumerate_labellings(t, kind, nvars)) {
        ExpVec e = weight(l, nvars);
        sum += Polynomial::monomial(static_cast<int>(nvars), e, 1);
    }
    return sum;
}

struct CauchyReport {
    UpFamily family;
    std::size_t p = 0, q = 0, max_degree = 0;
    bool ok = true;
    std::vector<std::string> failures;
    Polynomial lhs, rhs;  // truncated to total degree <= max_degree
    CauchyReport(UpFamily f, std::size_t p_, std::size_t q_, std::size_t d)
        : family(f),
          p(p_),
          q(q_),
          max_degree(d),
          lhs(static_cast<int>(p_ + q_)),
          rhs(static_cast<int>(p_ + q_)) {}
};

namespace detail {

// Kernel in variables x_1..x_p, y_1..y_q truncated to total degree <= cap:
// product over all (a,b) of 1/(1 - x_a y_b) for family U (geometric series)
// and of (1 + x_a y_b) for family U'.
inline Polynomial cauchy_kernel(UpFamily family, std::size_t p, std::size_t q, std::size_t cap) {
    int nvars = static_cast<int>(p + q);
    Polynomial prod = Polynomial::constant(nvars, 1);
    for (std::size_t a = 1; a <= p; ++a)
        for (std::size_t b = 1; b <= q; ++b) {
            Polynomial factor = Polynomial::constant(nvars, 1);
            std::size_t top = family == UpFamily::U ? cap / 2 : 1;
            for (std::size_t m = 1; m <= top; ++m) {
                ExpVec e(static_cast<std::size_t>(nvars), 0);
                e[a - 1] = static_cast<int>(m);
                e[p + b - 1] = static_cast<int>(m);
                factor += Polynomial::monomial(nvars, e, 1);
            }
            prod = (prod * factor).truncated(static_cast<int>(cap));
        }
    return prod;
}

}  // namespace detail

// Verifies sum over trees T of schur_up(T; x_1..x_p) * schur_down(T; y_1..y_q)
// against the Cauchy kernel, truncated to total degree <= max_degree. The
// sum over T is finite at each truncation order since schur_up(T) has
// degree |T|.
inline CauchyReport cauchy_check(UpFamily family, std::size_t p, std::size_t q,
                                 std::size_t max_degree) {
    CauchyReport report(family, p, q, max_degree);
    int nvars = static_cast<int>(p + q);
    OpSymbol up = family == UpFamily::U ? OpSymbol::U : OpSymbol::Uprime;
    Polynomial lhs(nvars);
    // x-degree of a term for tree T is |T| and y-degree is also |T|, so only
    // trees with 2|T| <= max_degree contribute to the truncation.
    for (std::size_t n = 0; 2 * n <= max_degree; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            Polynomial fx = schur_poly(up, t, Tree(), p);
            Polynomial fy = schur_poly(OpSymbol::D, t, Tree(), q);
            if (fx.is_zero() || fy.is_zero()) continue;
            lhs += fx.shifted_into(nvars, 0) * fy.shifted_into(nvars, static_cast<int>(p));
        }
    lhs = lhs.truncated(static_cast<int>(max_degree));
    Polynomial rhs = detail::cauchy_kernel(family, p, q, max_degree);
    report.lhs = lhs;
    report.rhs = rhs;
    if (lhs != rhs) {
        report.ok = false;
        report.failures.push_back("kernel mismatch: sum = " + lhs.to_string() +
                                  ", product = " + rhs.to_string());
    }
    return report;
}

}  // namespace pbt
