#include <catch2/catch_amalgamated.hpp>

#include <adeq/genfun.hpp>

#include "golden_data.hpp"

using namespace adeq;

TEST_CASE("phi for su(2) is 1/((1-z)(1-z^2))") {
    IntSeries phi = phi_su_series(2, 20);
    for (int q = 0; q <= 20; ++q) CHECK(phi.coeff(q) == q / 2 + 1);
}

TEST_CASE("phi for su(1) and su(3)") {
    IntSeries one = phi_su_series(1, 6);
    for (int q = 0; q <= 6; ++q) CHECK(one.coeff(q) == 1);

    IntSeries su3 = phi_su_series(3, 6);
    CHECK(su3.coeff(0) == 1);
    CHECK(su3.coeff(1) == 1);
    CHECK(su3.coeff(2) == 2);
}

TEST_CASE("phi for su(N) against the frozen polytope counts") {
    auto golden = load_golden_counts();
    for (int n : {4, 5, 6}) {
        IntSeries phi = phi_su_series(n, 10);
        for (long q = 0; q <= 10; ++q)
            CHECK(phi.coeff(int(q)) == golden.at({"A" + std::to_string(n - 1), q}));
    }
}

TEST_CASE("level-rank symmetry of the su coefficients") {
    std::vector<IntSeries> phi;
    for (int n = 1; n <= 10; ++n) phi.push_back(phi_su_series(n, 10));
    for (int k = 1; k <= 10; ++k)
        for (int q = 1; q <= 10; ++q)
            CHECK(phi[size_t(k - 1)].coeff(q) == phi[size_t(q - 1)].coeff(k));
}

TEST_CASE("phi for Dic_N, N even") {
    IntSeries d4 = phi_dic_even_series(2, 12);
    CHECK(d4.coeff(0) == 1);
    CHECK(d4.coeff(1) == 1);
    CHECK(d4.coeff(2) == 5);

    auto golden = load_golden_counts();
    for (long q = 0; q <= 12; ++q) CHECK(d4.coeff(int(q)) == golden.at({"D4", q}));

    IntSeries d6 = phi_dic_even_series(4, 12);
    for (long q = 0; q <= 12; ++q) CHECK(d6.coeff(int(q)) == golden.at({"D6", q}));
}

TEST_CASE("phi for Dic_N rejects odd N") {
    CHECK_THROWS_AS(phi_dic_even_series(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(phi_dic_even_series(0, 8), std::invalid_argument);
}
