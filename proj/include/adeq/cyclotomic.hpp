#pragma once

#include <vector>

#include "adeq/exact.hpp"
#include "adeq/series.hpp"

namespace adeq {

// An element of Q[x]/(x^N - 1), written sum_k a_k w^k with w the N-th root
// of unity. Multiplication is cyclic convolution. Scalars are carried as
// modulus-1 elements and promote on contact, so PowerSeries<CycloElement>
// can build its ring constants.
//
// The class deliberately does not reduce modulo cyclotomic polynomials:
// evaluation identities are only ever used through the projection
// sum_{i=0}^{N-1} P(w^i) = N * a_0, which holds termwise.
class CycloElement {
public:
    CycloElement() : c_(1) {}
    CycloElement(int v) : c_(1, Rat(v)) {}
    explicit CycloElement(const Rat& v) : c_(1, v) {}

    // w^k in Z[x]/(x^N - 1)
    static CycloElement root_power(int modulus, long k) {
        CycloElement e;
        e.c_.assign(size_t(modulus), Rat(0));
        long m = k % modulus;
        if (m < 0) m += modulus;
        e.c_[size_t(m)] = Rat(1);
        return e;
    }

    int modulus() const { return int(c_.size()); }
    const Rat& component(int k) const { return c_[size_t(k)]; }

    // Coefficient of w^0, i.e. the image under the "average over all N-th
    // roots divided by N" projection.
    const Rat& trivial_component() const { return c_[0]; }

    // Sum of the element's values over all N-th roots of unity; equals
    // N * a_0 because sum_i w^{mi} is N for m = 0 mod N and 0 otherwise.
    Rat sum_over_roots() const { return Rat(int(c_.size())) * c_[0]; }

    bool is_rational() const {
        for (size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != 0) return false;
        return true;
    }

    // Ring endomorphism w -> w^i.
    CycloElement galois_twist(long i) const {
        const int n = modulus();
        CycloElement out;
        out.c_.assign(size_t(n), Rat(0));
        for (int k = 0; k < n; ++k) {
            long m = (i * k) % n;
            if (m < 0) m += n;
            out.c_[size_t(m)] += c_[size_t(k)];
        }
        return out;
    }

    friend CycloElement operator+(const CycloElement& a, const CycloElement& b) {
        auto [x, y] = promoted(a, b);
        for (size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
        return x;
    }

    friend CycloElement operator-(const CycloElement& a, const CycloElement& b) {
        auto [x, y] = promoted(a, b);
        for (size_t k = 0; k < x.c_.size(); ++k) x.c_[k] -= y.c_[k];
        return x;
    }

    CycloElement operator-() const {
        CycloElement out = *this;
        for (auto& v : out.c_) v = -v;
        return out;
    }

    friend CycloElement operator*(const CycloElement& a, const CycloElement& b) {
        auto [x, y] = promoted(a, b);
        const int n = int(x.c_.size());
        CycloElement out;
        out.c_.assign(size_t(n), Rat(0));
        for (int i = 0; i < n; ++i) {
            if (x.c_[size_t(i)] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (y.c_[size_t(j)] == 0) continue;
                out.c_[size_t((i + j) % n)] += x.c_[size_t(i)] * y.c_[size_t(j)];
            }
        }
        return out;
    }

    friend bool operator==(const CycloElement& a, const CycloElement& b) {
        auto [x, y] = promoted(a, b);
        return x.c_ == y.c_;
    }

private:
    static std::pair<CycloElement, CycloElement> promoted(const CycloElement& a, const CycloElement& b) {
        if (a.modulus() == b.modulus()) return {a, b};
        if (a.modulus() == 1) {
            CycloElement x;
            x.c_.assign(size_t(b.modulus()), Rat(0));
            x.c_[0] = a.c_[0];
            return {x, b};
        }
        if (b.modulus() == 1) {
            CycloElement y;
            y.c_.assign(size_t(a.modulus()), Rat(0));
            y.c_[0] = b.c_[0];
            return {a, y};
        }
        throw std::invalid_argument("cyclotomic modulus mismatch");
    }

    std::vector<Rat> c_;
};

using CycloSeries = PowerSeries<CycloElement>;

// 1 / ((1-z)(1-w^i z)(1-w^{2i} z)...(1-w^{(N-1)i} z)) expanded to order
// trunc with exact coefficients in Z[x]/(x^N - 1).
inline CycloSeries cyclo_series_product(int modulus, int twist, int trunc) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (twist < 0 || twist >= modulus) throw std::invalid_argument("twist must lie in [0, N)");
    CycloSeries out = CycloSeries::one(trunc);
    for (int k = 0; k < modulus; ++k) {
        // 1/(1 - w^{ik} z) is the geometric series sum_m w^{ikm} z^m
        std::vector<CycloElement> geo;
        geo.reserve(size_t(trunc) + 1);
        for (int m = 0; m <= trunc; ++m)
            geo.push_back(CycloElement::root_power(modulus, long(twist) * k * m));
        out = out * CycloSeries(std::move(geo));
    }
    return out;
}

} // namespace adeq
