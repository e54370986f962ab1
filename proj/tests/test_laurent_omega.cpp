#include <algorithm>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include <adeq/omega.hpp>

using namespace adeq;

namespace {

// substitute lambda_var = 1: collapse the exponent and merge terms
MultiLaurent subst_one(const MultiLaurent& f, int var) {
    MultiLaurent out(f.window());
    std::vector<int> e;
    for (const auto& [exps, c] : f.terms()) {
        e = exps;
        e[size_t(var)] = 0;
        out.add_term(e, c);
    }
    return out;
}

MultiLaurent invert_var(const MultiLaurent& f, int var) {
    MultiLaurent out(f.window());
    std::vector<int> e;
    for (const auto& [exps, c] : f.terms()) {
        e = exps;
        e[size_t(var)] = -e[size_t(var)];
        out.add_term(e, c);
    }
    return out;
}

struct Lcg {
    unsigned long long s = 88172645463325252ull;
    int next(int lo, int hi) {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return lo + int(s % (unsigned long long)(hi - lo + 1));
    }
};

} // namespace

TEST_CASE("geometric expansion basics") {
    // 1/(1-z) to order 3, vars (z)
    std::vector<VarWindow> wz{{0, 3}};
    MultiLaurent geo = geometric_expand(wz, {1});
    CHECK(geo.term_count() == 4);
    for (int k = 0; k <= 3; ++k) CHECK(geo.coefficient({k}) == 1);

    // 1/(1-l^2 z^2) with z-window 4, vars (l, z)
    std::vector<VarWindow> wlz{{-10, 10}, {0, 4}};
    MultiLaurent g2 = geometric_expand(wlz, {2, 2});
    CHECK(g2.term_count() == 3);
    CHECK(g2.coefficient({4, 4}) == 1);

    // pure lambda^{-1} expands to the window depth
    std::vector<VarWindow> wl{{-5, 0}, {0, 4}};
    MultiLaurent neg = geometric_expand(wl, {-1, 0});
    CHECK(neg.term_count() == 6);
    CHECK(neg.coefficient({-5, 0}) == 1);

    // 1/(1-1) is rejected, and a pure-lambda factor needs a finite window
    CHECK_THROWS_AS(geometric_expand(wz, {0}), std::invalid_argument);
    CHECK_THROWS_AS(geometric_expand(wlz, {0, 0}), std::invalid_argument);
    std::vector<VarWindow> open{{kNoLowerBound, 0}, {0, 4}};
    CHECK_THROWS_AS(geometric_expand(open, {-1, 0}), std::invalid_argument);
}

TEST_CASE("omega_eq reproduces the two-factor elimination identity") {
    // Omega_= 1/((1-l^2 x)(1-y l^-1)) = 1/(1-x y^2), to order 12 in x and y
    const int t = 12;
    std::vector<VarWindow> w{{-t, 2 * t}, {0, t}, {0, t}};
    MultiLaurent lhs = geometric_expand(w, {2, 1, 0}) * geometric_expand(w, {-1, 0, 1});
    lhs = omega_eq(lhs, 0);
    MultiLaurent rhs = geometric_expand(w, {0, 1, 2});
    CHECK(lhs == rhs);
}

TEST_CASE("omega_eq is the identity on lambda-free input and kills stray powers") {
    std::vector<VarWindow> w{{-4, 4}, {0, 4}};
    MultiLaurent f(w);
    f.add_term({0, 1}, Rat(3));
    f.add_term({0, 2}, Rat(-1));
    CHECK(omega_eq(f, 0) == f);

    MultiLaurent g(w);
    g.add_term({1, 0}, Rat(1));
    g.add_term({-1, 0}, Rat(1));
    CHECK(omega_eq(g, 0).term_count() == 0);
}

TEST_CASE("omega_eq is idempotent per variable") {
    std::vector<VarWindow> w{{-6, 6}, {0, 6}};
    MultiLaurent f = geometric_expand(w, {2, 1}) * geometric_expand(w, {-1, 1});
    MultiLaurent once = omega_eq(f, 0);
    CHECK(omega_eq(once, 0) == once);
}

TEST_CASE("omega_geq identities") {
    // Omega_>= 1/((1-l x)(1-x/l)) = 1/((1-x)(1-x^2)) to order 6
    const int t = 6;
    std::vector<VarWindow> w{{-t, t}, {0, t}};
    MultiLaurent lhs = geometric_expand(w, {1, 1}) * geometric_expand(w, {-1, 1});
    lhs = omega_geq(lhs, 0);
    MultiLaurent rhs = geometric_expand(w, {0, 1}) * geometric_expand(w, {0, 2});
    CHECK(lhs == rhs);

    // Omega_>= of the single term x/l is zero
    MultiLaurent f(w);
    f.add_term({-1, 1}, Rat(1));
    CHECK(omega_geq(f, 0).term_count() == 0);
}

TEST_CASE("the ordered-partition chain collapses to the partition generating function") {
    const int t = 8;
    std::vector<VarWindow> w{{-t, t}, {-t, t}, {-t, t}, {0, t}};
    MultiLaurent prod = geometric_expand(w, {1, 0, 0, 1}) *
                        geometric_expand(w, {-1, 1, 0, 1}) *
                        geometric_expand(w, {0, -1, 1, 1});
    for (int v : {0, 1, 2}) prod = omega_geq(prod, v);
    MultiLaurent expect = geometric_expand(w, {0, 0, 0, 1}) *
                          geometric_expand(w, {0, 0, 0, 2}) *
                          geometric_expand(w, {0, 0, 0, 3});
    CHECK(prod == expect);
}

TEST_CASE("omega_eq decomposes through omega_geq on polynomials") {
    // Omega_= F = Omega_>= F(l) + Omega_>= F(1/l) - F(1)
    Lcg rng;
    std::vector<VarWindow> w{{-5, 5}, {0, 5}};
    for (int round = 0; round < 25; ++round) {
        MultiLaurent f(w);
        for (int k = 0; k < 8; ++k)
            f.add_term({rng.next(-5, 5), rng.next(0, 5)}, Rat(rng.next(-2, 2)));
        MultiLaurent lhs = subst_one(omega_eq(f, 0), 0);
        MultiLaurent rhs = omega_geq(f, 0) + omega_geq(invert_var(f, 0), 0) - subst_one(f, 0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("omega ehrhart series for su(2)") {
    IntSeries s = ehrhart_series_omega(algebra(Family::A, 1), 8);
    CHECK(s.coefficients() == std::vector<Int>{1, 1, 2, 2, 3, 3, 4, 4, 5});
}

TEST_CASE("omega elimination order does not matter") {
    auto a2 = algebra(Family::A, 2);
    IntSeries base2 = ehrhart_series_omega(a2, 6, {0, 1});
    CHECK(ehrhart_series_omega(a2, 6, {1, 0}) == base2);

    auto a3 = algebra(Family::A, 3);
    std::vector<int> order{0, 1, 2};
    IntSeries base3 = ehrhart_series_omega(a3, 4, order);
    while (std::next_permutation(order.begin(), order.end()))
        CHECK(ehrhart_series_omega(a3, 4, order) == base3);
}

TEST_CASE("omega pipeline guards") {
    CHECK_THROWS_AS(ehrhart_series_omega(algebra(Family::A, 1), 0), std::invalid_argument);
    CHECK_THROWS_AS(ehrhart_series_omega(algebra(Family::A, 2), 4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(ehrhart_series_omega(algebra(Family::A, 2), 4, {0, 7}), std::invalid_argument);
}
