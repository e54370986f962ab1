#pragma once

#include <numeric>

#include "adeq/laurent.hpp"
#include "adeq/polytope.hpp"
#include "adeq/series.hpp"

namespace adeq {

// MacMahon's Omega_= : keep exactly the terms whose exponent of `var` is
// zero. The result no longer depends on that variable.
inline MultiLaurent omega_eq(const MultiLaurent& expr, int var) {
    MultiLaurent out(expr.window());
    for (const auto& [e, c] : expr.terms())
        if (e[size_t(var)] == 0) out.add_term(e, c);
    return out;
}

// MacMahon's Omega_>= : keep terms with nonnegative exponent of `var`,
// then set the variable to one (exponents collapse to zero).
inline MultiLaurent omega_geq(const MultiLaurent& expr, int var) {
    MultiLaurent out(expr.window());
    std::vector<int> e;
    for (const auto& [exps, c] : expr.terms()) {
        if (exps[size_t(var)] < 0) continue;
        e = exps;
        e[size_t(var)] = 0;
        out.add_term(e, c);
    }
    return out;
}

// One geometric factor 1/(1 - coeff * monomial) of an Omega expression.
// Factors with zero z-degree must move some lambda variable.
struct OmegaFactor {
    std::vector<int> exponents;  // lambda_1..lambda_r, then z
    Rat coeff = Rat(1);
    long max_picks = -1;
};

struct OmegaExpr {
    std::vector<VarWindow> window;   // arity r+1; the z window is last
    std::vector<OmegaFactor> factors;
};

// Builds the factor product for the level polytope in slack form:
// column j of the (r+1) x (2r+1) system contributes the factor
// 1/(1 - z_1^{A_{1j}} ... z_r^{A_{rj}} z^{A_{r+1,j}}).
//
// Windows and pick caps are sized so that no term of a final solution
// (all lambda exponents zero, z-degree <= trunc) can be truncated away:
// picks of an x-column are bounded by the polytope box bound, slack picks
// by trunc, so every partial lambda_i exponent lies within
// sum_j box_j * |C_ij| + trunc.
inline OmegaExpr omega_expr_for(const AlgebraId& alg, int trunc) {
    require_valid(alg);
    if (trunc < 1) throw std::invalid_argument("truncation must be at least 1");
    const int r = alg.rank;
    ConstraintSystem sys = build_constraints(alg, 1);
    auto box = root_box_bounds(alg, trunc);
    IntMatrix cm = cartan_matrix(alg);

    OmegaExpr expr;
    expr.window.resize(size_t(r) + 1);
    for (int i = 0; i < r; ++i) {
        long w = trunc;
        for (int j = 0; j < r; ++j) {
            long cij = cm(i, j).convert_to<long>();
            w += box[size_t(j)] * (cij < 0 ? -cij : cij);
        }
        expr.window[size_t(i)] = {-w, w};
    }
    expr.window[size_t(r)] = {0, trunc};

    for (int col = 0; col < 2 * r + 1; ++col) {
        OmegaFactor f;
        f.exponents.resize(size_t(r) + 1);
        for (int i = 0; i <= r; ++i) f.exponents[size_t(i)] = int(sys.a(i, col));
        if (col < r) f.max_picks = box[size_t(col)];
        else f.max_picks = trunc;
        expr.factors.push_back(std::move(f));
    }
    return expr;
}

// Ehrhart series via the Omega calculus: expand the factor product and
// apply Omega_= for each z_i in turn. Factors are multiplied in lazily --
// a variable is only eliminated once every factor that moves it has been
// absorbed, which keeps the intermediate support small.
inline IntSeries ehrhart_series_omega(const AlgebraId& alg, int trunc,
                                      const std::vector<int>& elim_order) {
    const int r = alg.rank;
    if (int(elim_order.size()) != r)
        throw std::invalid_argument("elimination order must name every z_i once");
    OmegaExpr expr = omega_expr_for(alg, trunc);

    MultiLaurent acc = MultiLaurent::constant(expr.window, Rat(1));
    std::vector<bool> used(expr.factors.size(), false);

    auto absorb = [&](int var) {
        for (size_t j = 0; j < expr.factors.size(); ++j) {
            if (used[j] || expr.factors[j].exponents[size_t(var)] == 0) continue;
            acc = acc * geometric_expand(expr.window, expr.factors[j].exponents,
                                         expr.factors[j].coeff, expr.factors[j].max_picks);
            used[j] = true;
        }
    };

    for (int var : elim_order) {
        if (var < 0 || var >= r) throw std::invalid_argument("elimination order out of range");
        absorb(var);
        acc = omega_eq(acc, var);
    }
    for (size_t j = 0; j < expr.factors.size(); ++j)
        if (!used[j])
            acc = acc * geometric_expand(expr.window, expr.factors[j].exponents,
                                         expr.factors[j].coeff, expr.factors[j].max_picks);

    for (int i = 0; i < r; ++i)
        if (acc.depends_on(i)) throw internal_error("omega pipeline left a live z_i variable");

    std::vector<Int> coeffs(size_t(trunc) + 1, Int(0));
    for (const auto& [e, c] : acc.terms()) coeffs[size_t(e[size_t(r)])] = to_int(c);
    return IntSeries(std::move(coeffs));
}

inline IntSeries ehrhart_series_omega(const AlgebraId& alg, int trunc) {
    std::vector<int> order(static_cast<size_t>(alg.rank));
    std::iota(order.begin(), order.end(), 0);
    return ehrhart_series_omega(alg, trunc, order);
}

} // namespace adeq
