#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "adeq/algebra.hpp"
#include "adeq/series.hpp"

namespace adeq {

// The level-q state polytope in slack form A x' = b: the first r rows are
// (C | -I | 0), the last row is (marks.C | 0 | 1), and b = (0,...,0,q).
struct ConstraintSystem {
    IntMatrix a;          // (r+1) x (2r+1)
    std::vector<Int> b;   // length r+1
};

inline ConstraintSystem build_constraints(const AlgebraId& alg, const Int& q) {
    require_valid(alg);
    if (q < 0) throw std::invalid_argument("level must be nonnegative");
    const int r = alg.rank;
    IntMatrix c = cartan_matrix(alg);
    auto s = theta_labels(alg);

    IntMatrix a(r + 1, 2 * r + 1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) a(i, j) = c(i, j);
        a(i, r + i) = -1;
    }
    for (int j = 0; j < r; ++j) a(r, j) = s[j];
    a(r, 2 * r) = 1;

    std::vector<Int> b(size_t(r) + 1, Int(0));
    b.back() = q;
    return {std::move(a), std::move(b)};
}

namespace detail {

// A congruence sum_j coeff_j * y_j == 0 (mod modulus) on Dynkin labels.
struct Congruence {
    std::vector<long long> coeff;
    long long modulus;
};

// Integrality of C^{-1} y, expressed as congruences mod det C via the
// adjugate matrix (which is integral).
inline std::vector<Congruence> integrality_congruences(const AlgebraId& alg) {
    const int r = alg.rank;
    Int d = det_cartan(alg);
    RatMatrix ci = inverse_cartan(alg);
    std::vector<Congruence> rows;
    for (int i = 0; i < r; ++i) {
        Congruence c;
        c.modulus = d.convert_to<long long>();
        for (int j = 0; j < r; ++j) {
            Rat e = ci(i, j) * Rat(d);
            c.coeff.push_back(to_int(e).convert_to<long long>() % c.modulus);
        }
        rows.push_back(std::move(c));
    }
    return rows;
}

// Converts mod-1 rational rows to integer congruences.
inline std::vector<Congruence> rows_to_congruences(const std::vector<std::vector<Rat>>& rows) {
    std::vector<Congruence> out;
    for (const auto& row : rows) {
        Int lcm = 1;
        for (const auto& e : row) {
            Int d = denominator(e);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        Congruence c;
        c.modulus = lcm.convert_to<long long>();
        for (const auto& e : row) c.coeff.push_back(to_int(e * Rat(lcm)).convert_to<long long>() % c.modulus);
        out.push_back(std::move(c));
    }
    return out;
}

// Counts dominant Dynkin labels y >= 0 with marks.y <= q satisfying all
// congruences, by prefix-pruned box enumeration.
inline Int count_dominant(const AlgebraId& alg, long long q, const std::vector<Congruence>& congruences) {
    const int r = alg.rank;
    auto marks = highest_root_marks(alg);
    Int count = 0;
    std::vector<long long> y(size_t(r), 0);
    std::function<void(int, long long)> rec = [&](int idx, long long budget) {
        if (idx == r) {
            for (const auto& c : congruences) {
                long long s = 0;
                for (int j = 0; j < r; ++j) s += c.coeff[size_t(j)] * y[size_t(j)];
                if (s % c.modulus != 0) return;
            }
            ++count;
            return;
        }
        for (long long v = 0; v <= budget / marks[size_t(idx)]; ++v) {
            y[size_t(idx)] = v;
            rec(idx + 1, budget - v * marks[size_t(idx)]);
        }
        y[size_t(idx)] = 0;
    };
    rec(0, q);
    return count;
}

} // namespace detail

// Per-coordinate bound for the root-space enumeration: a solution x of
// C x >= 0, marks.Cx <= q satisfies x_i <= q * max_j (C^{-1}_{ij} / c_j),
// because x = C^{-1} y with y >= 0 and marks.y <= q.
inline std::vector<long long> root_box_bounds(const AlgebraId& alg, long long q) {
    const int r = alg.rank;
    RatMatrix ci = inverse_cartan(alg);
    auto marks = highest_root_marks(alg);
    std::vector<long long> bounds;
    for (int i = 0; i < r; ++i) {
        Rat best = 0;
        for (int j = 0; j < r; ++j) {
            Rat ratio = Rat(ci(i, j)) / marks[size_t(j)];
            if (ratio > best) best = ratio;
        }
        Rat b = best * q;
        bounds.push_back(floor_div(numerator(b), denominator(b)).convert_to<long long>());
    }
    return bounds;
}

// Weight-space route: dominant labels on the root lattice,
//   #{y in Z^r_{>=0} : marks.y <= q, C^{-1} y integral}.
inline Int count_root_states_weight(const AlgebraId& alg, long long q) {
    require_valid(alg);
    if (q < 0) throw std::invalid_argument("level must be nonnegative");
    return detail::count_dominant(alg, q, detail::integrality_congruences(alg));
}

// Weight-space count under a caller-supplied set of mod-1 congruence rows
// instead of full integrality (used by the constraint-reduction checks).
inline Int count_dominant_with_congruences(const AlgebraId& alg, long long q,
                                           const std::vector<std::vector<Rat>>& rows) {
    require_valid(alg);
    if (q < 0) throw std::invalid_argument("level must be nonnegative");
    return detail::count_dominant(alg, q, detail::rows_to_congruences(rows));
}

// Root-space route: #{x in Z^r_{>=0} : C x >= 0, marks.Cx <= q}.
//
// Nodes are placed along the diagram. Once all neighbours of a node are
// fixed its constraint row (Cx)_u >= 0 and its contribution c_u * (Cx)_u
// to the level are known, which prunes the search to a sliver of the box.
inline Int count_root_states_rootspace(const AlgebraId& alg, long long q) {
    require_valid(alg);
    if (q < 0) throw std::invalid_argument("level must be nonnegative");
    const int r = alg.rank;
    auto marks = highest_root_marks(alg);
    auto box = root_box_bounds(alg, q);

    std::vector<std::vector<int>> nbr(static_cast<size_t>(r));
    for (auto [u, v] : dynkin_edges(alg)) {
        nbr[size_t(u - 1)].push_back(v - 1);
        nbr[size_t(v - 1)].push_back(u - 1);
    }

    // Connected placement order: walk the diagram from node 1.
    std::vector<int> order;
    std::vector<bool> seen(size_t(r), false);
    std::function<void(int)> dfs = [&](int u) {
        seen[size_t(u)] = true;
        order.push_back(u);
        for (int v : nbr[size_t(u)])
            if (!seen[size_t(v)]) dfs(v);
    };
    dfs(0);

    std::vector<bool> placed(size_t(r), false);
    std::vector<long long> x(size_t(r), 0);
    Int count = 0;

    auto determined = [&](int u) {
        if (!placed[size_t(u)]) return false;
        for (int w : nbr[size_t(u)])
            if (!placed[size_t(w)]) return false;
        return true;
    };
    auto row_value = [&](int u) {
        long long s = 2 * x[size_t(u)];
        for (int w : nbr[size_t(u)]) s -= x[size_t(w)];
        return s;
    };

    std::function<void(int)> rec = [&](int pos) {
        if (pos == r) {
            ++count;
            return;
        }
        int v = order[size_t(pos)];
        placed[size_t(v)] = true;
        for (long long val = 0; val <= box[size_t(v)]; ++val) {
            x[size_t(v)] = val;
            bool ok = true;
            long long level = 0;
            for (int u = 0; u < r && ok; ++u) {
                if (!determined(u)) continue;
                long long yu = row_value(u);
                if (yu < 0) ok = false;
                else level += marks[size_t(u)] * yu;
            }
            if (ok && level <= q) rec(pos + 1);
        }
        placed[size_t(v)] = false;
        x[size_t(v)] = 0;
    };
    rec(0);
    return count;
}

// |Q_q|, computed by both the root-space and the weight-space enumeration;
// the two routes are independent and must agree.
inline Int count_root_states(const AlgebraId& alg, long long q) {
    Int weight = count_root_states_weight(alg, q);
    Int root = count_root_states_rootspace(alg, q);
    if (weight != root)
        throw internal_error("count mismatch for " + label(alg) + " at q=" + std::to_string(q) +
                             ": weight-space " + weight.str() + " vs root-space " + root.str());
    return weight;
}

// Number of all level-q states: #{y >= 0 : marks.y <= q}, no lattice
// condition. The innermost coordinate is summed in closed form.
inline Int count_all_states(const AlgebraId& alg, long long q) {
    require_valid(alg);
    if (q < 0) throw std::invalid_argument("level must be nonnegative");
    const int r = alg.rank;
    auto marks = highest_root_marks(alg);
    Int count = 0;
    std::function<void(int, long long)> rec = [&](int idx, long long budget) {
        if (idx == r - 1) {
            count += budget / marks[size_t(idx)] + 1;
            return;
        }
        for (long long v = 0; v <= budget / marks[size_t(idx)]; ++v)
            rec(idx + 1, budget - v * marks[size_t(idx)]);
    };
    if (r == 0) return Int(1);
    rec(0, q);
    return count;
}

// Ehr_{Q_g}(z) truncated at order trunc, by per-level counting.
inline IntSeries ehrhart_series_bruteforce(const AlgebraId& alg, int trunc) {
    if (trunc < 1) throw std::invalid_argument("truncation must be at least 1");
    std::vector<Int> coeffs;
    coeffs.reserve(size_t(trunc) + 1);
    for (int q = 0; q <= trunc; ++q) coeffs.push_back(count_root_states(alg, q));
    return IntSeries(std::move(coeffs));
}

} // namespace adeq
