#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adeq/matrix.hpp"

namespace adeq {

enum class Family { A, D, E };

// A simply-laced Lie algebra, identified by family and rank.
// A_n requires n >= 1, D_n requires n >= 3, E_n requires n in {6,7,8}.
struct AlgebraId {
    Family family;
    int rank;

    bool operator==(const AlgebraId&) const = default;
};

inline bool is_valid(const AlgebraId& a) {
    switch (a.family) {
        case Family::A: return a.rank >= 1;
        case Family::D: return a.rank >= 3;
        case Family::E: return a.rank >= 6 && a.rank <= 8;
    }
    return false;
}

inline void require_valid(const AlgebraId& a) {
    if (!is_valid(a)) {
        char f = a.family == Family::A ? 'A' : a.family == Family::D ? 'D' : 'E';
        throw std::invalid_argument(std::string("invalid algebra ") + f + std::to_string(a.rank));
    }
}

inline AlgebraId algebra(Family f, int rank) {
    AlgebraId a{f, rank};
    require_valid(a);
    return a;
}

// su(N) has type A_{N-1}; so(2n) has type D_n.
inline AlgebraId su(int n) {
    if (n < 2) throw std::invalid_argument("su(N) requires N >= 2");
    return algebra(Family::A, n - 1);
}

inline AlgebraId so(int m) {
    if (m < 6 || m % 2 != 0) throw std::invalid_argument("so(M) requires even M >= 6");
    return algebra(Family::D, m / 2);
}

inline std::string label(const AlgebraId& a) {
    char f = a.family == Family::A ? 'A' : a.family == Family::D ? 'D' : 'E';
    return std::string(1, f) + std::to_string(a.rank);
}

// Parses labels of the form A<n>, D<n>, E6|E7|E8 (case-insensitive family letter).
inline AlgebraId parse_algebra(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad algebra label: " + s);
    char f = char(std::toupper(static_cast<unsigned char>(s[0])));
    Family family;
    if (f == 'A') family = Family::A;
    else if (f == 'D') family = Family::D;
    else if (f == 'E') family = Family::E;
    else throw std::invalid_argument("bad algebra label: " + s);
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad algebra label: " + s);
        rank = rank * 10 + (s[i] - '0');
    }
    return algebra(family, rank);
}

// Edges of the Dynkin diagram, 1-based node indices.
//
// Node conventions:
//   A_n : path 1 - 2 - ... - n.
//   D_n : with N = n-2, path 1 - ... - N and fork tips N+1, N+2 both
//         attached to node N (so node N carries mark 2 for N >= 2).
//   E_n : Bourbaki numbering; 2 is the short-leg node attached to 4.
inline std::vector<std::pair<int, int>> dynkin_edges(const AlgebraId& a) {
    require_valid(a);
    std::vector<std::pair<int, int>> edges;
    switch (a.family) {
        case Family::A:
            for (int i = 1; i < a.rank; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::D: {
            int N = a.rank - 2;
            for (int i = 1; i < N; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(N, N + 1);
            edges.emplace_back(N, N + 2);
            break;
        }
        case Family::E:
            edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            if (a.rank >= 7) edges.emplace_back(6, 7);
            if (a.rank == 8) edges.emplace_back(7, 8);
            break;
    }
    return edges;
}

// Cartan matrix generated from the diagram: 2 on the diagonal, -1 across
// each edge. Symmetric and positive definite for all supported algebras.
inline IntMatrix cartan_matrix(const AlgebraId& a) {
    require_valid(a);
    IntMatrix c(a.rank, a.rank);
    for (int i = 0; i < a.rank; ++i) c(i, i) = 2;
    for (auto [u, v] : dynkin_edges(a)) {
        c(u - 1, v - 1) = -1;
        c(v - 1, u - 1) = -1;
    }
    return c;
}

inline RatMatrix inverse_cartan(const AlgebraId& a) {
    return inverse(to_rational(cartan_matrix(a)));
}

inline Int det_cartan(const AlgebraId& a) {
    return to_int(determinant(to_rational(cartan_matrix(a))));
}

// Coefficients of the highest root theta in the simple-root basis,
// computed by generating the full root system (closure of the simple
// roots under simple reflections) and selecting the unique dominant root.
inline std::vector<int> highest_root_marks(const AlgebraId& a) {
    require_valid(a);
    const int r = a.rank;
    IntMatrix c = cartan_matrix(a);
    auto dynkin_labels = [&](const std::vector<int>& u) {
        std::vector<long long> y(r, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) y[i] += (long long)(int)c(i, j) * u[j];
        return y;
    };

    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& u : frontier) {
            auto y = dynkin_labels(u);
            for (int i = 0; i < r; ++i) {
                std::vector<int> v = u;
                v[i] -= int(y[i]);
                if (roots.insert(v).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }

    std::vector<int> theta;
    for (const auto& u : roots) {
        auto y = dynkin_labels(u);
        bool dominant = true, nonzero = false;
        for (int i = 0; i < r; ++i) {
            if (y[i] < 0) dominant = false;
            if (u[i] != 0) nonzero = true;
        }
        if (dominant && nonzero) {
            if (!theta.empty()) throw internal_error("more than one dominant root");
            theta = u;
        }
    }
    if (theta.empty()) throw internal_error("no dominant root found");
    return theta;
}

// Dynkin labels of the highest root, i.e. C * marks. Entry j is also the
// coefficient of x_j in the level constraint written in root coordinates.
inline std::vector<int> theta_labels(const AlgebraId& a) {
    IntMatrix c = cartan_matrix(a);
    auto marks = highest_root_marks(a);
    std::vector<int> s(a.rank, 0);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) s[i] += int(c(i, j)) * marks[j];
    return s;
}

// Extended (affine) Cartan matrix: node 0 corresponds to -theta, so
// row 0 is (2, -theta_labels) and the extended marks (1, marks) span
// its kernel.
inline IntMatrix affine_cartan(const AlgebraId& a) {
    const int r = a.rank;
    IntMatrix c = cartan_matrix(a);
    auto s = theta_labels(a);
    IntMatrix ac(r + 1, r + 1);
    ac(0, 0) = 2;
    for (int j = 0; j < r; ++j) {
        ac(0, j + 1) = -s[j];
        ac(j + 1, 0) = -s[j];
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ac(i + 1, j + 1) = c(i, j);
    return ac;
}

// Weyl group orders from the standard closed forms.
inline Int weyl_order(const AlgebraId& a) {
    require_valid(a);
    auto factorial = [](int n) {
        Int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (a.family) {
        case Family::A: return factorial(a.rank + 1);
        case Family::D: {
            Int f = factorial(a.rank);
            return f << (a.rank - 1);
        }
        case Family::E:
            if (a.rank == 6) return Int(51840);
            if (a.rank == 7) return Int(2903040);
            return Int(696729600);
    }
    return Int(0);
}

} // namespace adeq
