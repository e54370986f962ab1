#pragma once

#include <vector>

#include "adeq/exact.hpp"

namespace adeq {

// Formal power series truncated at a fixed order T, with exact coefficients.
// Multiplication truncates; it never rounds. The coefficient type only needs
// ring operations (+, -, *, ==); reciprocal() additionally requires the
// constant term to be the ring identity.
template <typename C>
class PowerSeries {
public:
    PowerSeries() = default;

    explicit PowerSeries(std::vector<C> coeffs)
        : coeff_(std::move(coeffs)) {
        if (coeff_.empty()) throw std::invalid_argument("series needs at least the constant term");
    }

    static PowerSeries one(int trunc) {
        check_trunc(trunc);
        std::vector<C> c(size_t(trunc) + 1, C(0));
        c[0] = C(1);
        return PowerSeries(std::move(c));
    }

    // 1 - z^k, truncated.
    static PowerSeries one_minus_pow(int k, int trunc) {
        PowerSeries s = one(trunc);
        if (k <= 0) throw std::invalid_argument("one_minus_pow: k must be positive");
        if (k <= trunc) s.coeff_[k] = C(-1);
        return s;
    }

    int truncation() const { return int(coeff_.size()) - 1; }
    const C& coeff(int i) const { return coeff_[i]; }
    const std::vector<C>& coefficients() const { return coeff_; }

    bool operator==(const PowerSeries& o) const { return coeff_ == o.coeff_; }

    PowerSeries operator+(const PowerSeries& o) const {
        auto [a, b] = aligned(*this, o);
        for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] = a.coeff_[i] + b.coeff_[i];
        return a;
    }

    PowerSeries operator-(const PowerSeries& o) const {
        auto [a, b] = aligned(*this, o);
        for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] = a.coeff_[i] - b.coeff_[i];
        return a;
    }

    PowerSeries operator*(const PowerSeries& o) const {
        auto [a, b] = aligned(*this, o);
        const int t = a.truncation();
        std::vector<C> out;
        out.reserve(size_t(t) + 1);
        for (int n = 0; n <= t; ++n) {
            C s = a.coeff_[0] * b.coeff_[n];
            for (int k = 1; k <= n; ++k) s = s + a.coeff_[k] * b.coeff_[n - k];
            out.push_back(std::move(s));
        }
        return PowerSeries(std::move(out));
    }

    PowerSeries pow(int e) const {
        PowerSeries out = one(truncation());
        for (int i = 0; i < e; ++i) out = out * (*this);
        return out;
    }

    // Multiplicative inverse; the constant term must be a unit (+1 or -1).
    PowerSeries reciprocal() const {
        const C& c0 = coeff_[0];
        if (c0 == C(-1)) return -((-*this).reciprocal());
        if (!(c0 == C(1)))
            throw std::invalid_argument("reciprocal: constant term is not a unit");
        const int t = truncation();
        std::vector<C> h;
        h.reserve(size_t(t) + 1);
        h.push_back(c0);
        for (int n = 1; n <= t; ++n) {
            C s = coeff_[1] * h[n - 1];
            for (int k = 2; k <= n; ++k) s = s + coeff_[k] * h[n - k];
            h.push_back(-s);
        }
        return PowerSeries(std::move(h));
    }

    PowerSeries operator-() const {
        std::vector<C> c = coeff_;
        for (auto& x : c) x = -x;
        return PowerSeries(std::move(c));
    }

    PowerSeries truncate(int tnew) const {
        check_trunc(tnew);
        std::vector<C> c(coeff_.begin(), coeff_.begin() + std::min<size_t>(coeff_.size(), size_t(tnew) + 1));
        while (int(c.size()) <= tnew) c.push_back(C(0));
        return PowerSeries(std::move(c));
    }

private:
    static void check_trunc(int t) {
        if (t < 0) throw std::invalid_argument("truncation must be nonnegative");
    }
    static std::pair<PowerSeries, PowerSeries> aligned(const PowerSeries& a, const PowerSeries& b) {
        int t = std::min(a.truncation(), b.truncation());
        return {a.truncate(t), b.truncate(t)};
    }

    std::vector<C> coeff_;
};

using IntSeries = PowerSeries<Int>;
using RatSeries = PowerSeries<Rat>;

// 1 / ((1 - z^{k_1})^{e_1} ... ), a common building block.
inline IntSeries reciprocal_of_binomials(const std::vector<std::pair<int, int>>& pow_exp, int trunc) {
    IntSeries denom = IntSeries::one(trunc);
    for (auto [k, e] : pow_exp)
        for (int i = 0; i < e; ++i) denom = denom * IntSeries::one_minus_pow(k, trunc);
    return denom.reciprocal();
}

// Exact coefficient-wise division by a scalar; throws internal_error on
// a non-divisible coefficient.
inline IntSeries div_exact(const IntSeries& s, const Int& d) {
    std::vector<Int> out;
    out.reserve(size_t(s.truncation()) + 1);
    for (int i = 0; i <= s.truncation(); ++i) {
        Int q = s.coeff(i) / d;
        if (q * d != s.coeff(i))
            throw internal_error("series coefficient " + s.coeff(i).str() + " not divisible by " + d.str());
        out.push_back(q);
    }
    return IntSeries(std::move(out));
}

} // namespace adeq
