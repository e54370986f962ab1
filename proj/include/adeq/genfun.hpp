#pragma once

#include "adeq/cyclotomic.hpp"
#include "adeq/series.hpp"

namespace adeq {

// Counting series for unit-determinant q-dimensional representations of
// Z_N: the average over i of 1/((1-z)(1-w^i z)...(1-w^{(N-1)i} z)).
//
// Exactly one group-ring product is expanded: the i-th product is the
// Galois twist w -> w^i of the first, so the sum of all N evaluations of a
// coefficient P equals sum_i P(w^i) = N * a_0(P). The averaged coefficient
// is therefore a_0 on the nose; the division asserts it is an integer.
inline IntSeries phi_su_series(int n, int trunc) {
    if (n < 1) throw std::invalid_argument("phi_su_series: N must be positive");
    CycloSeries prod = cyclo_series_product(n, n == 1 ? 0 : 1, trunc);
    std::vector<Int> coeffs;
    coeffs.reserve(size_t(trunc) + 1);
    for (int q = 0; q <= trunc; ++q) {
        Rat averaged = prod.coeff(q).sum_over_roots() / n;
        if (!is_integer(averaged) || averaged < 0)
            throw internal_error("phi_su_series: projected coefficient is not a nonnegative integer");
        coeffs.push_back(to_int(averaged));
    }
    return IntSeries(std::move(coeffs));
}

// Counting series for unit-determinant SU(q) representations of Dic_N,
// N even:
//
//   (1/4) [ 1/((1-z)^4 (1-z^2)^{N-1})
//         + 2/((1-z^2)^2 (1-z^2)^{N/2} (1+z^2)^{N/2-1})
//         + 1/((1-z^2)^2 (1-z^2)^{N-1}) ]
inline IntSeries phi_dic_even_series(int n, int trunc) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("phi_dic_even_series: N must be even and >= 2");

    std::vector<Int> c(size_t(trunc) + 1, Int(0));
    c[0] = 1;
    if (trunc >= 2) c[2] = 1;
    const IntSeries one_plus_z2(std::move(c));

    IntSeries term1 = reciprocal_of_binomials({{1, 4}, {2, n - 1}}, trunc);

    IntSeries term2 = reciprocal_of_binomials({{2, 2 + n / 2}}, trunc);
    for (int i = 0; i < n / 2 - 1; ++i) term2 = term2 * one_plus_z2.reciprocal();

    IntSeries term3 = reciprocal_of_binomials({{2, 2 + (n - 1)}}, trunc);

    IntSeries total = term1 + term2 + term2 + term3;
    return div_exact(total, Int(4));
}

} // namespace adeq
