#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "adeq/algebra.hpp"
#include "adeq/genfun.hpp"
#include "adeq/polytope.hpp"
#include "adeq/series.hpp"

namespace adeq {

// Finite abelian group Z_{m_1} x ... x Z_{m_k} housing representation
// determinants. An empty modulus list is the trivial group.
struct DetGroup {
    std::vector<int> moduli;

    using Element = std::vector<int>;

    Element zero() const { return Element(moduli.size(), 0); }

    Element add(const Element& a, const Element& b) const {
        Element out(moduli.size());
        for (size_t i = 0; i < moduli.size(); ++i) out[i] = (a[i] + b[i]) % moduli[i];
        return out;
    }

    Element scale(long k, const Element& a) const {
        Element out(moduli.size());
        for (size_t i = 0; i < moduli.size(); ++i) {
            long v = (k * a[i]) % moduli[i];
            if (v < 0) v += moduli[i];
            out[i] = int(v);
        }
        return out;
    }

    long size() const {
        long s = 1;
        for (int m : moduli) s *= m;
        return s;
    }

    long index_of(const Element& a) const {
        long idx = 0;
        for (size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + a[i];
        return idx;
    }
};

struct Irrep {
    int dim;
    DetGroup::Element det;
};

// The McKay-dual group of an algebra: its order, its determinant group,
// and one irrep per affine Dynkin node (the trivial irrep first, then
// nodes 1..r). Irrep dimensions equal the affine marks.
struct GroupData {
    AlgebraId algebra;
    std::string name;
    Int order;
    DetGroup det_group;
    std::vector<Irrep> irreps;
};

// The rows of [C^{-1}] with redundant rows removed: scanning from the last
// row up, a row is kept only if it is not already in the subgroup of
// (Q/Z)^r generated by the kept rows. For A_{N-1} exactly the last row
// survives; for D with even N exactly the two fork-row constraints do.
inline std::vector<std::vector<Rat>> congruence_constraints(const AlgebraId& alg) {
    require_valid(alg);
    RatMatrix m = mod1(inverse_cartan(alg));
    const int r = alg.rank;

    auto reduce = [](std::vector<Rat> v) {
        for (auto& x : v) x = mod1(x);
        return v;
    };
    auto is_zero = [](const std::vector<Rat>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
    };

    std::vector<std::vector<Rat>> kept;
    for (int i = r - 1; i >= 0; --i) {
        std::vector<Rat> row = m.row(i);
        if (is_zero(row)) continue;
        // closure of the subgroup generated by kept rows
        std::vector<std::vector<Rat>> subgroup{std::vector<Rat>(size_t(r), Rat(0))};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& g : kept)
                for (size_t s = 0; s < subgroup.size(); ++s) {
                    std::vector<Rat> sum(static_cast<size_t>(r));
                    for (int j = 0; j < r; ++j) sum[size_t(j)] = mod1(subgroup[s][size_t(j)] + g[size_t(j)]);
                    if (std::find(subgroup.begin(), subgroup.end(), sum) == subgroup.end()) {
                        subgroup.push_back(std::move(sum));
                        grew = true;
                    }
                }
        }
        if (std::find(subgroup.begin(), subgroup.end(), reduce(row)) == subgroup.end())
            kept.push_back(reduce(row));
    }
    std::reverse(kept.begin(), kept.end());
    return kept;
}

// The fold operator on rationals mod 1:
//   a v b = a + b          if a = 0 or b = 0,
//   a v b = a              if b is a nonzero integer multiple of a (mod 1),
//   a v b = b              if a is a nonzero integer multiple of b (mod 1),
// with the cases tried in that order. Anything else is an error; the
// construction promises it never happens for inverse-Cartan rows.
inline Rat vee(const Rat& a, const Rat& b) {
    Rat am = mod1(a), bm = mod1(b);
    if (am == 0 || bm == 0) return mod1(am + bm);
    auto is_multiple = [](const Rat& x, const Rat& base) {
        // multiples k*base mod 1, k = 1..order(base)
        Int order = denominator(base);
        for (Int k = 1; k <= order; ++k)
            if (mod1(Rat(k) * base) == x) return true;
        return false;
    };
    if (is_multiple(bm, am)) return am;
    if (is_multiple(am, bm)) return bm;
    throw std::domain_error("vee: " + am.str() + " and " + bm.str() + " satisfy no case");
}

// Element-wise vee-fold of the rows of [C^{-1}]: the exponent vector X of
// determinant predictions D_j = exp(2 pi i X_j) for the dual
// group's nontrivial irreps, indexed by Dynkin node.
inline std::vector<Rat> determinant_prediction(const AlgebraId& alg) {
    require_valid(alg);
    RatMatrix m = mod1(inverse_cartan(alg));
    const int r = alg.rank;
    std::vector<Rat> x = m.row(0);
    for (int i = 1; i < r; ++i)
        for (int j = 0; j < r; ++j) x[size_t(j)] = vee(x[size_t(j)], m(i, j));
    return x;
}

// Display form of exp(2 pi i x) for x in [0, 1).
inline std::string root_of_unity_label(const Rat& x) {
    Rat v = mod1(x);
    if (v == 0) return "1";
    if (v == Rat(1, 2)) return "-1";
    if (v == Rat(1, 4)) return "i";
    if (v == Rat(3, 4)) return "-i";
    if (v == Rat(1, 3)) return "w";
    if (v == Rat(2, 3)) return "w^2";
    return "exp(2*pi*i*" + v.str() + ")";
}

namespace detail {

inline GroupData group_of_a(const AlgebraId& alg) {
    const int n = alg.rank + 1;  // Z_N for A_{N-1}
    GroupData g;
    g.algebra = alg;
    g.name = "Z_" + std::to_string(n);
    g.order = n;
    g.det_group = DetGroup{{n}};
    g.irreps.push_back({1, {0}});  // trivial
    for (int k = 1; k < n; ++k) g.irreps.push_back({1, {k}});
    return g;
}

// Dic_N for even N: determinant group Z_2 x Z_2, components tracking the
// two reflection-class parities. From the character table: the four
// 1-dimensional irreps get (0,0), (1,1), (0,1), (1,0); the 2-dimensional
// irrep at node j has determinant -1 exactly for even m = j-1, which in
// node numbering means odd j.
inline GroupData group_of_d_even(const AlgebraId& alg) {
    const int n = alg.rank - 2;
    GroupData g;
    g.algebra = alg;
    g.name = "Dic_" + std::to_string(n);
    g.order = 4 * n;
    g.det_group = DetGroup{{2, 2}};
    g.irreps.push_back({1, {0, 0}});                      // trivial (affine node)
    g.irreps.push_back({1, {1, 1}});                      // node 1
    for (int j = 2; j <= n; ++j)                          // nodes 2..N, dims 2
        g.irreps.push_back({2, j % 2 == 1 ? DetGroup::Element{1, 1} : DetGroup::Element{0, 0}});
    g.irreps.push_back({1, {0, 1}});                      // node N+1
    g.irreps.push_back({1, {1, 0}});                      // node N+2
    return g;
}

// Dic_N for odd N: the character-table route is not tabulated here, so the
// determinant data is generated rather than tabulated: exactly one
// congruence row survives, of order 4, and its entries are the irrep
// determinants in Z_4.
inline GroupData group_of_d_odd(const AlgebraId& alg) {
    const int n = alg.rank - 2;
    auto rows = congruence_constraints(alg);
    if (rows.size() != 1)
        throw internal_error("odd Dic_N should reduce to a single congruence row");
    GroupData g;
    g.algebra = alg;
    g.name = "Dic_" + std::to_string(n);
    g.order = 4 * n;
    g.det_group = DetGroup{{4}};
    g.irreps.push_back({1, {0}});
    auto marks = highest_root_marks(alg);
    for (int j = 0; j < alg.rank; ++j) {
        Rat e = rows[0][size_t(j)] * 4;
        g.irreps.push_back({marks[size_t(j)], {int(to_int(e) % 4)}});
    }
    return g;
}

// E-series: dimensions are the affine marks, determinants come from the
// vee-fold prediction.
inline GroupData group_of_e(const AlgebraId& alg) {
    GroupData g;
    g.algebra = alg;
    g.name = alg.rank == 6 ? "2T" : alg.rank == 7 ? "2O" : "2I";
    g.order = alg.rank == 6 ? 24 : alg.rank == 7 ? 48 : 120;

    auto x = determinant_prediction(alg);
    Int lcm = 1;
    for (const auto& e : x) {
        Int d = denominator(e);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    int m = int(lcm);
    g.det_group = m == 1 ? DetGroup{} : DetGroup{{m}};

    auto marks = highest_root_marks(alg);
    g.irreps.push_back({1, g.det_group.zero()});
    for (int j = 0; j < alg.rank; ++j) {
        DetGroup::Element det = g.det_group.zero();
        if (m > 1) det[0] = int(to_int(x[size_t(j)] * m) % m);
        g.irreps.push_back({marks[size_t(j)], det});
    }
    return g;
}

} // namespace detail

inline GroupData group_of(const AlgebraId& alg) {
    require_valid(alg);
    switch (alg.family) {
        case Family::A: return detail::group_of_a(alg);
        case Family::D:
            return (alg.rank - 2) % 2 == 0 ? detail::group_of_d_even(alg) : detail::group_of_d_odd(alg);
        case Family::E: return detail::group_of_e(alg);
    }
    throw std::invalid_argument("unreachable");
}

// Number of multiplicity vectors m >= 0 with sum m_i dim_i = q and
// sum m_i det_i = 0, i.e. Weyl-inequivalent unit-determinant
// q-dimensional representations of the dual group.
inline Int rep_count(const GroupData& g, long q) {
    if (q < 0) throw std::invalid_argument("dimension must be nonnegative");
    const long gs = g.det_group.size();
    auto element_of = [&](long idx) {
        DetGroup::Element e(g.det_group.moduli.size());
        for (size_t i = g.det_group.moduli.size(); i-- > 0;) {
            e[i] = int(idx % g.det_group.moduli[i]);
            idx /= g.det_group.moduli[i];
        }
        return e;
    };
    // tab[d * gs + e] = #multisets of total dim d and total det e; irreps
    // are folded in one at a time with unlimited multiplicity
    std::vector<Int> tab(size_t(q + 1) * size_t(gs), Int(0));
    tab[0] = 1;
    for (const auto& irrep : g.irreps) {
        std::vector<long> src(static_cast<size_t>(gs));
        for (long e = 0; e < gs; ++e) {
            DetGroup::Element t = element_of(e);
            for (size_t i = 0; i < t.size(); ++i)
                t[i] = (t[i] - irrep.det[i] % g.det_group.moduli[i] + g.det_group.moduli[i]) % g.det_group.moduli[i];
            src[size_t(e)] = g.det_group.index_of(t);
        }
        for (long d = irrep.dim; d <= q; ++d)
            for (long e = 0; e < gs; ++e)
                tab[size_t(d) * size_t(gs) + size_t(e)] +=
                    tab[size_t(d - irrep.dim) * size_t(gs) + size_t(src[size_t(e)])];
    }
    return tab[size_t(q) * size_t(gs)];
}

// Phi_g(z): representation-counting series. Where a closed form exists
// (A series, D series with even N) the coefficients are checked against it.
inline IntSeries rep_series(const AlgebraId& alg, int trunc) {
    if (trunc < 1) throw std::invalid_argument("truncation must be at least 1");
    GroupData g = group_of(alg);
    std::vector<Int> coeffs;
    coeffs.reserve(size_t(trunc) + 1);
    for (long q = 0; q <= trunc; ++q) coeffs.push_back(rep_count(g, q));
    IntSeries out(std::move(coeffs));

    if (alg.family == Family::A) {
        if (!(out == phi_su_series(alg.rank + 1, trunc)))
            throw internal_error("rep_series disagrees with the cyclotomic closed form for " + label(alg));
    } else if (alg.family == Family::D && (alg.rank - 2) % 2 == 0) {
        if (!(out == phi_dic_even_series(alg.rank - 2, trunc)))
            throw internal_error("rep_series disagrees with the Dic closed form for " + label(alg));
    }
    return out;
}

} // namespace adeq
