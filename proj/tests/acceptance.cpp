// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <path-to-ztriv-binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "ztriv/oracle.hpp"
#include "ztriv/zeta.hpp"

using namespace ztriv;
using enum FiberLabel;

namespace {

// Runtime limits in seconds, per criterion.
constexpr double kTableSeconds = 1.0;
constexpr double kKapranovSeconds = 10.0;
constexpr double kResummationSeconds = 10.0;
constexpr double kOracleSeconds = 60.0;

constexpr int kKapranovSamples = 50;
constexpr int kKapranovOrder = 20;
constexpr int kResummationOrder = 20;
constexpr int kResummationMaxM = 3;
constexpr int kOracleOrder = 24;
constexpr int kLadderOrder = 18;
constexpr int kCensusDegree = 24;
constexpr int kPositivityOrder = 24;

LefschetzPoly L(int e) { return lefschetz_monomial(e); }
LatticePoly U(int u, const LefschetzPoly& a) { return lattice_monomial(u, a); }

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

// One catalog row written out by hand: class, exponents of u and s, and
// whether the row carries the 1/(1 - us) cusp denominator.
struct TableRow {
    FiberLabel label;
    LefschetzPoly a_class;
    int u_exp;
    int s_exp;
    bool cusp_denominator;
};

std::vector<TableRow> expected_rows(CatalogName name) {
    switch (name) {
        case CatalogName::full:
            return {{ICusp, L(16), 0, 1, true},           {II, L(15), 0, 2, false},
                    {III, L(14), 1, 3, false},            {IV, L(13), 2, 4, false},
                    {IStarCusp, L(12) - L(11), 5, 7, true}, {I0StarGenericJ, L(12) - L(11), 4, 6, false},
                    {I0StarSpecialJ, L(11), 4, 6, false}, {IVStar, L(10), 6, 8, false},
                    {IIIStar, L(9), 7, 9, false},         {IIStar, L(8), 8, 10, false}};
        case CatalogName::gamma1_2:
            return {{ICusp, L(8), 0, 1, true},           {III, L(7), 1, 3, false},
                    {IStarCusp, L(6) - L(5), 5, 7, true}, {I0StarGenericJ, L(6) - L(5), 4, 6, false},
                    {I0StarSpecialJ, L(5), 4, 6, false}, {IIIStar, L(4), 7, 9, false}};
        case CatalogName::gamma1_3:
            return {{ICusp, L(4), 0, 1, true}, {IV, L(3), 2, 4, false}, {IVStar, L(2), 6, 8, false}};
        case CatalogName::gamma1_4:
            return {{ICusp, L(2), 0, 1, true}, {I0StarSpecialJ, L(1), 4, 6, false}};
    }
    return {};
}

Check table_fidelity() {
    Check c;
    const int order = 30;
    for (CatalogName name : kAllCatalogs) {
        const Catalog cat = catalog(name);
        const auto rows = expected_rows(name);
        const std::string tag = std::string(catalog_name(name));
        c.require(cat.types.size() == rows.size(), tag + ": row count");
        for (std::size_t i = 0; i < rows.size() && i < cat.types.size(); ++i) {
            const TableRow& row = rows[i];
            const std::string where = tag + " row " + std::to_string(i + 1);
            c.require(cat.types[i].label == row.label, where + ": label");
            const FactorSpec f = build_factor(cat.types[i], order);
            c.require(f.a_class == row.a_class, where + ": class");
            c.require(f.u_exponent == row.u_exp, where + ": u exponent");
            c.require(f.s_exponent == row.s_exp, where + ": s exponent");
            c.require((f.cusp_multiplicity == 1) == row.cusp_denominator && f.cusp_multiplicity <= 1,
                      where + ": cusp denominator");
            DiscSeries expected(order);
            for (int j = 0; row.s_exp + j <= order; ++j) {
                expected.set(row.s_exp + j, U(row.u_exp + j, row.a_class));
                if (!row.cusp_denominator) break;
            }
            c.require(f.y == expected, where + ": local monomial");
        }
    }
    return c;
}

Check constant_term() {
    Check c;
    for (int order : {0, 1, 5, 12, 24}) {
        const ZetaResult z = z_triv(catalog(CatalogName::full), order);
        c.require(z.series[0] == U(2, L(1)), "s^0 at order " + std::to_string(order));
    }
    return c;
}

Check kapranov_identity() {
    Check c;
    ztriv::testing::Rng rng(20240601);
    const LatticePoly l_class = lattice_constant(L(1));
    for (int trial = 0; trial < kKapranovSamples; ++trial) {
        DiscSeries y = ztriv::testing::random_series(rng, kKapranovOrder, true, 3);
        if (y.is_zero()) y.set(1, LatticePoly::one());
        DiscSeries lhs(kKapranovOrder), y_power = DiscSeries::one(kKapranovOrder);
        for (int n = 0; n <= kKapranovOrder; ++n) {
            lhs += y_power.scaled(lattice_constant(motive_sym_p1(n)));
            y_power *= y;
        }
        const DiscSeries rhs = series_one_minus_inverse(y) * series_one_minus_inverse(y.scaled(l_class));
        c.require(lhs == rhs, "sample " + std::to_string(trial));
    }
    return c;
}

Check resummation_identities() {
    Check c;
    const LefschetzPoly a_class = L(12) - L(11);
    const int order = kResummationOrder;
    for (int a = 1; a <= 3; ++a) {
        for (int cc = 1; cc <= 3; ++cc) {
            for (int b = 0; b <= 7; ++b) {
                for (int d = 0; d <= 7; ++d) {
                    // explicit sum over k >= 1 of a_class u^{ak+b} s^{ck+d}
                    DiscSeries single(order);
                    for (int k = 1; cc * k + d <= order; ++k) single.set(cc * k + d, U(a * k + b, a_class));
                    const std::string where = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                              " c=" + std::to_string(cc) + " d=" + std::to_string(d);
                    c.require(geometric_resummation(a_class, a, b, cc, d, order) == single, where);

                    // M-fold: sum over (k_1..k_M) of a_class prod u^{ak_i+b} s^{ck_i+d}
                    DiscSeries bare(order);
                    for (int k = 1; cc * k + d <= order; ++k) bare.set(cc * k + d, U(a * k + b, LefschetzPoly::one()));
                    DiscSeries product = DiscSeries::one(order);
                    for (int m = 1; m <= kResummationMaxM; ++m) {
                        product *= bare;
                        c.require(geometric_resummation_power(a_class, a, b, cc, d, m, order) ==
                                      product.scaled(lattice_constant(a_class)),
                                  where + " M=" + std::to_string(m));
                    }
                    // every lower order is a truncation
                    for (int lower : {0, 7, 13}) {
                        c.require(geometric_resummation(a_class, a, b, cc, d, lower) == single.truncated(lower),
                                  where + " D=" + std::to_string(lower));
                    }
                }
            }
        }
    }
    return c;
}

Check oracle_equivalence() {
    Check c;
    for (CatalogName name : kAllCatalogs) {
        const Catalog cat = catalog(name);
        const ZetaResult z = z_triv(cat, kOracleOrder);
        const DiscSeries reference = oracle::oracle_z_triv(cat, kOracleOrder, z.prefactor);
        c.require(reference == z.series, std::string(catalog_name(name)));
    }
    return c;
}

Check specialization_ladder() {
    Check c;
    for (CatalogName name : kAllCatalogs) {
        const Catalog cat = catalog(name);
        const DiscSeries h = multivariate_H(cat, kLadderOrder).substitute(marking_substitution(kLadderOrder));
        const ZetaResult z = z_triv(cat, kLadderOrder);
        c.require(h.scaled(z.prefactor) == z.series, std::string(catalog_name(name)));
    }
    return c;
}

Check census_invariants() {
    Check c;
    for (CatalogName name : kAllCatalogs) {
        const Catalog cat = catalog(name);
        const std::string tag = std::string(catalog_name(name));
        for (int d = 0; d <= kCensusDegree; ++d) {
            const auto configs = enumerate_configurations(cat, d);
            c.require(!configs.empty() || d > 0, tag + ": degree 0 is empty");
            for (const auto& config : configs) {
                int euler = 0;
                for (const auto& e : config.entries()) {
                    euler += euler_number(e);
                    if (is_cusp_label(e.label)) c.require(e.k >= 1 && e.k <= d, tag + ": k out of range " + config.to_string());
                }
                c.require(euler == d, tag + ": euler sum " + config.to_string());
                if (config.empty()) c.require(d == 0 && trivial_lattice_rank(config) == 2, tag + ": empty configuration");
            }
        }
    }
    const auto row = oracle::census_row(catalog(CatalogName::full), 12);
    bool i12 = false;
    for (const auto& f : row.flagged) i12 = i12 || (f.configuration == "I12" && f.trivial_lattice_rank == 13);
    c.require(i12, "I12 not flagged at degree 12");
    c.require(exceeds_lefschetz_bound(FiberConfiguration({{ICusp, 12}})), "I12 bound");
    return c;
}

Check positivity() {
    Check c;
    const DiscSeriesQ q = specialize(z_triv(catalog(CatalogName::full), kPositivityOrder).series, BigRational(1),
                                     BigRational(2));
    for (int d = 0; d <= kPositivityOrder; ++d) {
        const BigRational v = scalar_value(q[d]);
        c.require(denominator(v) == 1 && v >= 0, "s^" + std::to_string(d) + " = " + to_decimal(v));
    }
    return c;
}

bool capture(const std::string& command, std::string& output) {
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return false;
    char buffer[4096];
    std::size_t n = 0;
    output.clear();
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    return pclose(pipe) == 0;
}

Check cli_determinism(const std::string& binary) {
    Check c;
    if (binary.empty()) {
        c.require(false, "no CLI binary given");
        return c;
    }
    const std::string command = "'" + binary + "' compute --catalog full --order 24 --format json";
    std::string first, second;
    c.require(capture(command, first), "first run failed");
    c.require(capture(command, second), "second run failed");
    c.require(!first.empty(), "empty output");
    c.require(first == second, "outputs differ");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    struct Criterion {
        const char* name;
        double limit_seconds;  // 0 = no limit
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {"table_fidelity", kTableSeconds, table_fidelity},
        {"constant_term", 0, constant_term},
        {"kapranov_identity", kKapranovSeconds, kapranov_identity},
        {"resummation_identities", kResummationSeconds, resummation_identities},
        {"oracle_equivalence", kOracleSeconds, oracle_equivalence},
        {"specialization_ladder", 0, specialization_ladder},
        {"census_invariants", 0, census_invariants},
        {"positivity", 0, positivity},
        {"cli_determinism", 0, [&] { return cli_determinism(binary); }},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.ok && criterion.limit_seconds > 0 && seconds > criterion.limit_seconds) {
            result.require(false, "runtime above " + std::to_string(criterion.limit_seconds) + " s");
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", seconds);
        std::cout << (result.ok ? "PASS " : "FAIL ") << criterion.name << " (" << timing << ")";
        if (!result.ok) std::cout << ": " << result.detail;
        std::cout << std::endl;
        if (!result.ok) ++failures;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
