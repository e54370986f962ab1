#pragma once

#include <limits>
#include <map>
#include <vector>

#include "adeq/exact.hpp"

namespace adeq {

// Inclusive exponent bounds for one variable of a MultiLaurent. The
// sentinels mark a direction as unbounded; a geometric expansion that is
// only "bounded" by a sentinel is an error rather than a silent overflow.
inline constexpr long kNoLowerBound = std::numeric_limits<long>::min();
inline constexpr long kNoUpperBound = std::numeric_limits<long>::max();

struct VarWindow {
    long lo = 0;
    long hi = 0;
};

// Truncated multivariate Laurent series: a sparse map from exponent tuples
// to rational coefficients. Every operation respects the declared window;
// products that leave it are dropped. Callers are responsible for choosing
// windows wide enough that dropped terms cannot matter for what they
// extract (the Omega pipeline derives provably sufficient ones).
class MultiLaurent {
public:
    explicit MultiLaurent(std::vector<VarWindow> window) : window_(std::move(window)) {}

    static MultiLaurent constant(std::vector<VarWindow> window, const Rat& value) {
        MultiLaurent m(std::move(window));
        if (value != 0) m.terms_[std::vector<int>(m.window_.size(), 0)] = value;
        return m;
    }

    int var_count() const { return int(window_.size()); }
    const std::vector<VarWindow>& window() const { return window_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool in_window(const std::vector<int>& exps) const {
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] < window_[i].lo || exps[i] > window_[i].hi) return false;
        return true;
    }

    void add_term(const std::vector<int>& exps, const Rat& coeff) {
        if (coeff == 0 || !in_window(exps)) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiLaurent operator+(const MultiLaurent& o) const {
        MultiLaurent out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    MultiLaurent operator-(const MultiLaurent& o) const {
        MultiLaurent out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
        return out;
    }

    MultiLaurent operator*(const MultiLaurent& o) const {
        MultiLaurent out(window_);
        std::vector<int> e(window_.size());
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                bool ok = true;
                for (size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] < window_[i].lo || e[i] > window_[i].hi) { ok = false; break; }
                }
                if (ok) out.add_term(e, ca * cb);
            }
        return out;
    }

    bool operator==(const MultiLaurent& o) const { return terms_ == o.terms_; }

    bool depends_on(int var) const {
        for (const auto& [e, c] : terms_)
            if (e[size_t(var)] != 0) return true;
        return false;
    }

    Rat coefficient(const std::vector<int>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Rat(0) : it->second;
    }

private:
    std::vector<VarWindow> window_;
    std::map<std::vector<int>, Rat> terms_;
};

// Expands 1/(1 - coeff * m) = sum_k coeff^k m^k for the monomial m with the
// given exponent tuple, truncated to the window (and to max_picks when
// nonnegative). A monomial with all exponents zero has no geometric series;
// a pure-lambda monomial needs a finite window on some variable it moves.
inline MultiLaurent geometric_expand(const std::vector<VarWindow>& window,
                                     const std::vector<int>& exponents,
                                     const Rat& coeff = Rat(1),
                                     long max_picks = -1) {
    if (window.size() != exponents.size())
        throw std::invalid_argument("geometric_expand: exponent arity mismatch");
    bool all_zero = true;
    long pick_bound = -1;
    for (size_t i = 0; i < exponents.size(); ++i) {
        int d = exponents[i];
        if (d == 0) continue;
        all_zero = false;
        long cap = -1;
        if (d > 0 && window[i].hi != kNoUpperBound && window[i].hi >= 0) cap = window[i].hi / d;
        if (d < 0 && window[i].lo != kNoLowerBound && window[i].lo <= 0) cap = window[i].lo / d;
        if (cap < 0) continue;  // this variable does not bound the expansion
        pick_bound = pick_bound < 0 ? cap : std::min(pick_bound, cap);
    }
    if (all_zero)
        throw std::invalid_argument("geometric_expand: 1/(1-1) is not a series");
    if (pick_bound < 0 && max_picks < 0)
        throw std::invalid_argument("geometric_expand: monomial unbounded in every window");
    long picks = pick_bound < 0 ? max_picks
               : max_picks < 0 ? pick_bound
                               : std::min(pick_bound, max_picks);

    MultiLaurent out(window);
    std::vector<int> e(window.size(), 0);
    Rat c(1);
    for (long k = 0; k <= picks; ++k) {
        out.add_term(e, c);
        for (size_t i = 0; i < e.size(); ++i) e[i] += exponents[i];
        c *= coeff;
    }
    return out;
}

} // namespace adeq
