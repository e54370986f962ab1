// Command-line front end: counts and series by any method, plus the
// cross-method verification modes. Exit codes: 0 pass, 1 verification
// mismatch, 2 usage error, 3 internal assertion failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <adeq/adeq.hpp>

namespace {

using namespace adeq;

struct AlgebraFlags {
    std::string algebra;
    int su_n = 0;
    int so_m = 0;

    AlgebraId resolve() const {
        int given = int(!algebra.empty()) + int(su_n > 0) + int(so_m > 0);
        if (given != 1)
            throw std::invalid_argument("specify exactly one of --algebra, --su, --so");
        if (su_n > 0) return su(su_n);
        if (so_m > 0) return so(so_m);
        return parse_algebra(algebra);
    }
};

void add_algebra_flags(CLI::App* cmd, AlgebraFlags& flags) {
    auto* a = cmd->add_option("--algebra", flags.algebra, "algebra label: A<n>, D<n>, E6|E7|E8");
    cmd->add_option("--su", flags.su_n, "alias: su(N) = A_{N-1}")->excludes(a);
    cmd->add_option("--so", flags.so_m, "alias: so(M) = D_{M/2}, M even")->excludes(a);
}

Rat parse_tolerance(const std::string& s) {
    if (s.find('/') != std::string::npos) {
        auto slash = s.find('/');
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }
    if (s.find('.') != std::string::npos) {
        auto dot = s.find('.');
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        Int den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        return Rat(Int(head.empty() ? "0" : head) * den + Int(tail), den);
    }
    return Rat(Int(s));
}

std::string series_text(const AlgebraId& a, const IntSeries& s) {
    std::ostringstream out;
    out << "Ehr_{" << label(a) << "}(z) = ";
    for (int t = 0; t <= s.truncation(); ++t) {
        if (t) out << " + ";
        out << s.coeff(t).str();
        if (t == 1) out << " z";
        else if (t > 1) out << " z^" << t;
    }
    return out.str();
}

void print_report(const VerificationReport& rep) {
    for (const auto& note : rep.notes) std::cout << "  " << note << "\n";
    if (!rep.pass)
        for (const auto& row : rep.table)
            if (!row.agree) {
                std::cout << "  mismatch at z^" << row.power << ":";
                for (size_t i = 0; i < row.values.size(); ++i)
                    std::cout << " " << rep.methods[i] << "=" << row.values[i].str();
                std::cout << "\n";
            }
    std::cout << (rep.pass ? "PASS" : "FAIL") << " " << rep.check << " " << rep.subject
              << " (" << rep.millis << " ms)\n";
}

// The standard golden battery: the cells frozen in tests/golden/counts.csv.
std::vector<std::pair<AlgebraId, int>> golden_battery() {
    return {
        {algebra(Family::A, 1), 20}, {algebra(Family::A, 2), 15}, {algebra(Family::A, 3), 12},
        {algebra(Family::A, 4), 10}, {algebra(Family::A, 5), 10},
        {algebra(Family::D, 3), 10}, {algebra(Family::D, 4), 12}, {algebra(Family::D, 5), 10},
        {algebra(Family::D, 6), 12},
        {algebra(Family::E, 6), 10}, {algebra(Family::E, 7), 10}, {algebra(Family::E, 8), 8},
    };
}

int run(int argc, char** argv) {
    CLI::App app{"exact counting of root-lattice Chern-Simons states on the torus"};
    app.require_subcommand(1);

    // ---- count ----
    auto* cmd_count = app.add_subcommand("count", "count |Q_q| for one level");
    AlgebraFlags count_alg;
    add_algebra_flags(cmd_count, count_alg);
    long count_level = 0;
    std::string count_method = "brute";
    cmd_count->add_option("--level", count_level, "level q >= 0")->required();
    cmd_count->add_option("--method", count_method, "brute | omega | genfun | reps");

    // ---- series ----
    auto* cmd_series = app.add_subcommand("series", "counting series up to a truncation");
    AlgebraFlags series_alg;
    add_algebra_flags(cmd_series, series_alg);
    int series_terms = 16;
    std::string series_method = "brute";
    std::string series_format = "json";
    bool series_force = false;
    cmd_series->add_option("--terms", series_terms, "truncation order (default 16)");
    cmd_series->add_option("--method", series_method, "brute | omega | genfun | reps");
    cmd_series->add_option("--format", series_format, "json | csv | text");
    cmd_series->add_flag("--force", series_force, "lift the omega rank guard");

    // ---- table ----
    auto* cmd_table = app.add_subcommand("table", "algebra,q,count rows for several algebras");
    std::vector<std::string> table_algebras;
    int table_terms = 16;
    std::string table_method = "brute";
    std::string table_format = "csv";
    cmd_table->add_option("--algebra", table_algebras, "algebra label (repeatable)")->required();
    cmd_table->add_option("--terms", table_terms, "maximum level");
    cmd_table->add_option("--method", table_method, "brute | omega | genfun | reps");
    cmd_table->add_option("--format", table_format, "csv | text");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "cross-method and duality checks");
    cmd_verify->require_subcommand(1);

    auto* v_duality = cmd_verify->add_subcommand("duality", "all methods agree coefficient-wise");
    AlgebraFlags dual_alg;
    add_algebra_flags(v_duality, dual_alg);
    int dual_terms = 16;
    v_duality->add_option("--terms", dual_terms, "truncation order");

    auto* v_levelrank = cmd_verify->add_subcommand("levelrank", "A-series level-rank symmetry");
    int lr_max = 8;
    v_levelrank->add_option("--max", lr_max, "check all 1 <= k,q <= max");

    auto* v_asym = cmd_verify->add_subcommand("asymptotic", "total state count asymptotics");
    AlgebraFlags asym_alg;
    add_algebra_flags(v_asym, asym_alg);
    long asym_level = 200;
    std::string asym_tol = "1/10";
    v_asym->add_option("--level", asym_level, "level q (default 200)");
    v_asym->add_option("--tolerance", asym_tol, "allowed |ratio - 1|, rational (default 1/10)");

    auto* v_omega = cmd_verify->add_subcommand("omega-identities", "Omega operator identities");
    int omega_order = 12;
    v_omega->add_option("--terms", omega_order, "series order for the identity checks");

    auto* v_det = cmd_verify->add_subcommand("determinants", "vee-fold determinant predictions");
    AlgebraFlags det_alg;
    add_algebra_flags(v_det, det_alg);

    auto* v_golden = cmd_verify->add_subcommand("golden", "compare counts against a golden CSV");
    std::string golden_file = "tests/golden/counts.csv";
    bool golden_bless = false;
    v_golden->add_option("--file", golden_file, "golden CSV path");
    v_golden->add_flag("--bless", golden_bless, "regenerate the file from the standard battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*cmd_count) {
        if (count_level < 0) throw std::invalid_argument("level must be nonnegative");
        Int n = count_by_method(count_alg.resolve(), parse_method(count_method), count_level);
        std::cout << n.str() << "\n";
        return 0;
    }

    if (*cmd_series) {
        AlgebraId a = series_alg.resolve();
        Method m = parse_method(series_method);
        if (m == Method::Omega && a.rank >= 4 && !cmd_series->count("--terms"))
            series_terms = 8;  // runtime guard: the omega state grows with rank
        IntSeries s = series_by_method(a, m, series_terms, series_force);
        if (series_format == "json") {
            std::cout << emit_series_json({label(a), method_name(m), series_terms,
                                           s.coefficients()}) << "\n";
        } else if (series_format == "csv") {
            std::vector<std::tuple<std::string, long, Int>> rows;
            for (int t = 0; t <= s.truncation(); ++t) rows.emplace_back(label(a), t, s.coeff(t));
            std::cout << emit_counts_csv(rows);
        } else if (series_format == "text") {
            std::cout << series_text(a, s) << "\n";
        } else {
            throw std::invalid_argument("unknown format: " + series_format);
        }
        return 0;
    }

    if (*cmd_table) {
        std::vector<std::tuple<std::string, long, Int>> rows;
        for (const auto& name : table_algebras) {
            AlgebraId a = parse_algebra(name);
            IntSeries s = series_by_method(a, parse_method(table_method), table_terms);
            for (int t = 0; t <= s.truncation(); ++t) rows.emplace_back(label(a), t, s.coeff(t));
        }
        if (table_format == "csv") {
            std::cout << emit_counts_csv(rows);
        } else if (table_format == "text") {
            for (const auto& [alg, q, n] : rows)
                std::cout << alg << "  q=" << q << "  " << n.str() << "\n";
        } else {
            throw std::invalid_argument("unknown format: " + table_format);
        }
        return 0;
    }

    // verify sub-modes
    if (*v_duality) {
        auto rep = verify_duality(dual_alg.resolve(), dual_terms);
        print_report(rep);
        return rep.pass ? 0 : 1;
    }
    if (*v_levelrank) {
        auto rep = verify_levelrank(lr_max);
        print_report(rep);
        return rep.pass ? 0 : 1;
    }
    if (*v_asym) {
        auto rep = verify_asymptotic(asym_alg.resolve(), asym_level, parse_tolerance(asym_tol));
        print_report(rep);
        return rep.pass ? 0 : 1;
    }
    if (*v_omega) {
        auto rep = verify_omega_identities(omega_order);
        print_report(rep);
        return rep.pass ? 0 : 1;
    }
    if (*v_det) {
        auto rep = verify_determinants(det_alg.resolve());
        print_report(rep);
        return rep.pass ? 0 : 1;
    }
    if (*v_golden) {
        if (golden_bless) {
            std::ofstream out(golden_file, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot write " + golden_file);
            std::vector<std::tuple<std::string, long, Int>> rows;
            for (const auto& [a, qmax] : golden_battery())
                for (long q = 0; q <= qmax; ++q) rows.emplace_back(label(a), q, count_root_states(a, q));
            out << emit_counts_csv(rows);
            std::cout << "blessed " << rows.size() << " cells into " << golden_file << "\n";
            return 0;
        }
        std::ifstream in(golden_file);
        if (!in) throw std::invalid_argument("cannot read " + golden_file);
        std::string line;
        std::getline(in, line);  // header
        bool pass = true;
        long cells = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::stringstream row(line);
            std::string alg, qs, ns;
            std::getline(row, alg, ',');
            std::getline(row, qs, ',');
            std::getline(row, ns, ',');
            Int got = count_root_states(parse_algebra(alg), std::stol(qs));
            ++cells;
            if (got != Int(ns)) {
                pass = false;
                std::cout << "  mismatch " << alg << " q=" << qs << ": golden " << ns
                          << ", computed " << got.str() << "\n";
            }
        }
        std::cout << (pass ? "PASS" : "FAIL") << " golden (" << cells << " cells)\n";
        return pass ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const adeq::internal_error& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}
