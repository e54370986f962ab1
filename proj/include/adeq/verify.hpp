#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "adeq/genfun.hpp"
#include "adeq/mckay.hpp"
#include "adeq/omega.hpp"
#include "adeq/polytope.hpp"

namespace adeq {

enum class Method { Brute, Omega, Genfun, Reps };

inline std::string method_name(Method m) {
    switch (m) {
        case Method::Brute: return "brute";
        case Method::Omega: return "omega";
        case Method::Genfun: return "genfun";
        case Method::Reps: return "reps";
    }
    return "?";
}

inline Method parse_method(const std::string& s) {
    if (s == "brute") return Method::Brute;
    if (s == "omega") return Method::Omega;
    if (s == "genfun") return Method::Genfun;
    if (s == "reps") return Method::Reps;
    throw std::invalid_argument("unknown method: " + s);
}

inline bool has_closed_form(const AlgebraId& a) {
    return a.family == Family::A || (a.family == Family::D && (a.rank - 2) % 2 == 0);
}

// Computes the counting series by the requested method. The omega method
// refuses ranks above the guard unless forced.
inline IntSeries series_by_method(const AlgebraId& a, Method m, int trunc, bool force_omega = false) {
    switch (m) {
        case Method::Brute:
            return ehrhart_series_bruteforce(a, trunc);
        case Method::Omega:
            if (a.rank > 6 && !force_omega)
                throw std::invalid_argument("omega method is guarded to rank <= 6 (pass the force flag to override)");
            return ehrhart_series_omega(a, trunc);
        case Method::Genfun:
            if (a.family == Family::A) return phi_su_series(a.rank + 1, trunc);
            if (a.family == Family::D && (a.rank - 2) % 2 == 0) return phi_dic_even_series(a.rank - 2, trunc);
            throw std::invalid_argument("no closed-form series for " + label(a) + "; use brute or reps");
        case Method::Reps:
            return rep_series(a, trunc);
    }
    throw std::invalid_argument("unreachable");
}

inline Int count_by_method(const AlgebraId& a, Method m, long q, bool force_omega = false) {
    switch (m) {
        case Method::Brute: return count_root_states(a, q);
        case Method::Reps: return rep_count(group_of(a), q);
        default: break;
    }
    int trunc = int(std::max<long>(q, 1));
    return series_by_method(a, m, trunc, force_omega).coeff(int(q));
}

struct CoefficientRow {
    int power;
    std::vector<Int> values;  // one per compared method
    bool agree;
};

struct VerificationReport {
    std::string check;
    std::string subject;
    std::vector<std::string> methods;
    std::vector<CoefficientRow> table;
    std::vector<std::string> notes;
    bool pass = true;
    long long millis = 0;
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start).count();
    }
};

} // namespace detail

// Coefficient-wise agreement of every applicable method up to `trunc`.
// The omega column is computed up to omega_trunc (it grows fastest).
inline VerificationReport verify_duality(const AlgebraId& a, int trunc,
                                         std::optional<int> omega_trunc = std::nullopt) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.check = "duality";
    rep.subject = label(a);

    int ot = omega_trunc.value_or(a.rank >= 4 ? std::min(trunc, 8) : trunc);
    std::vector<std::pair<Method, IntSeries>> columns;
    columns.emplace_back(Method::Brute, ehrhart_series_bruteforce(a, trunc));
    columns.emplace_back(Method::Reps, rep_series(a, trunc));
    if (has_closed_form(a))
        columns.emplace_back(Method::Genfun, series_by_method(a, Method::Genfun, trunc));
    if (a.rank <= 6)
        columns.emplace_back(Method::Omega, ehrhart_series_omega(a, ot));

    for (const auto& [m, s] : columns) rep.methods.push_back(method_name(m));
    for (int t = 0; t <= trunc; ++t) {
        CoefficientRow row;
        row.power = t;
        for (const auto& [m, s] : columns)
            if (t <= s.truncation()) row.values.push_back(s.coeff(t));
        row.agree = std::all_of(row.values.begin(), row.values.end(),
                                [&](const Int& v) { return v == row.values.front(); });
        if (!row.agree) rep.pass = false;
        rep.table.push_back(std::move(row));
    }
    rep.millis = clock.millis();
    return rep;
}

// Level-rank symmetry of the A-series coefficients:
// [z^q] Ehr_{su(k)} = [z^k] Ehr_{su(q)} for 1 <= k, q <= bound.
inline VerificationReport verify_levelrank(int bound) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.check = "levelrank";
    rep.subject = "su(1).." + std::string("su(") + std::to_string(bound) + ")";
    rep.methods = {"genfun"};
    std::vector<IntSeries> phi;
    for (int n = 1; n <= bound; ++n) phi.push_back(phi_su_series(n, bound));
    for (int k = 1; k <= bound; ++k)
        for (int q = 1; q <= bound; ++q)
            if (phi[size_t(k - 1)].coeff(q) != phi[size_t(q - 1)].coeff(k)) {
                rep.pass = false;
                rep.notes.push_back("mismatch at (k=" + std::to_string(k) + ", q=" + std::to_string(q) + ")");
            }
    rep.millis = clock.millis();
    return rep;
}

// Large-level total-state asymptotics: count_all_states(q) * |W| / (q^r det C)
// must land within `tolerance` of 1. Everything stays rational.
inline VerificationReport verify_asymptotic(const AlgebraId& a, long q, const Rat& tolerance) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.check = "asymptotic";
    rep.subject = label(a);
    Int n = count_all_states(a, q);
    Int qr = 1;
    for (int i = 0; i < a.rank; ++i) qr *= q;
    Rat ratio = Rat(n * weyl_order(a)) / Rat(qr * det_cartan(a));
    Rat err = ratio - 1;
    if (err < 0) err = -err;
    rep.pass = err <= tolerance;
    rep.notes.push_back("ratio = " + ratio.str() + " at q = " + std::to_string(q));
    rep.millis = clock.millis();
    return rep;
}

// The two Omega identities used to set up the pipeline, checked as
// truncated series.
inline VerificationReport verify_omega_identities(int order) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.check = "omega-identities";
    rep.subject = "Omega_= elimination / partition chain";
    // Omega_= 1/((1-l^2 x)(1-y/l)) = 1/(1-x y^2), vars (l, x, y)
    {
        std::vector<VarWindow> w{{-order, 2 * order}, {0, order}, {0, order}};
        MultiLaurent lhs = geometric_expand(w, {2, 1, 0}) * geometric_expand(w, {-1, 0, 1});
        lhs = omega_eq(lhs, 0);
        MultiLaurent rhs = geometric_expand(w, {0, 1, 2});
        if (!(lhs == rhs)) {
            rep.pass = false;
            rep.notes.push_back("Omega_= two-factor identity failed");
        }
    }
    // Omega_>= over l1,l2,l3 of the ordered-partition product equals
    // 1/((1-x)(1-x^2)(1-x^3)), vars (l1, l2, l3, x)
    {
        const int t = order;
        std::vector<VarWindow> w{{-t, t}, {-t, t}, {-t, t}, {0, t}};
        MultiLaurent prod = geometric_expand(w, {1, 0, 0, 1}) *
                            geometric_expand(w, {-1, 1, 0, 1}) *
                            geometric_expand(w, {0, -1, 1, 1});
        for (int v : {0, 1, 2}) prod = omega_geq(prod, v);
        MultiLaurent expect = geometric_expand(w, {0, 0, 0, 1}) *
                              geometric_expand(w, {0, 0, 0, 2}) *
                              geometric_expand(w, {0, 0, 0, 3});
        if (!(prod == expect)) {
            rep.pass = false;
            rep.notes.push_back("partition-chain identity failed");
        }
    }
    rep.millis = clock.millis();
    return rep;
}

// Vee-fold predictions against the tabulated/derived group data, compared
// as root-of-unity multisets per node set.
inline VerificationReport verify_determinants(const AlgebraId& a) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.check = "determinants";
    rep.subject = label(a);

    auto x = determinant_prediction(a);
    GroupData g = group_of(a);

    auto exponent_of = [&](const Irrep& ir) -> Rat {
        // the angle of the irrep's determinant as a root of unity
        if (g.det_group.moduli.empty()) return Rat(0);
        if (g.det_group.moduli.size() == 1)
            return mod1(Rat(ir.det[0], g.det_group.moduli[0]));
        // Z_2 x Z_2 (even Dic): any nontrivial determinant displays as -1
        return (ir.det[0] == 0 && ir.det[1] == 0) ? Rat(0) : Rat(1, 2);
    };

    std::vector<Rat> predicted = x;
    std::vector<Rat> tabulated;
    for (size_t i = 1; i < g.irreps.size(); ++i) tabulated.push_back(exponent_of(g.irreps[i]));
    std::sort(predicted.begin(), predicted.end());
    std::sort(tabulated.begin(), tabulated.end());
    if (predicted != tabulated) {
        rep.pass = false;
        rep.notes.push_back("prediction / group-data determinant multisets differ");
    }
    std::string shown;
    for (const auto& e : x) shown += (shown.empty() ? "" : ", ") + root_of_unity_label(e);
    rep.notes.push_back("D = (" + shown + ")");
    rep.millis = clock.millis();
    return rep;
}

} // namespace adeq
