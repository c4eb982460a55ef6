#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ztriv/format.hpp"
#include "ztriv/io.hpp"
#include "ztriv/kodaira.hpp"
#include "ztriv/oracle.hpp"
#include "ztriv/prefactor.hpp"
#include "ztriv/zeta.hpp"

namespace ztriv::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kOracleMismatch = 2 };

inline constexpr const char* kOrderEnv = "ZTRIV_DEFAULT_ORDER";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int default_order() {
    const char* env = std::getenv(kOrderEnv);
    if (env == nullptr || *env == '\0') return kDefaultOrder;
    try {
        std::size_t used = 0;
        const int value = std::stoi(env, &used);
        if (used != std::string(env).size() || value < 0) throw std::invalid_argument(env);
        return value;
    } catch (const std::exception&) {
        throw UsageError(std::string(kOrderEnv) + " must be a non-negative integer, got \"" + env + "\"");
    }
}

struct ComputeOptions {
    std::string catalog = "full";
    int order = kDefaultOrder;
    std::optional<std::string> prefactor;
    std::string format = "table";
    bool check_oracle = false;
};

struct SpecializeOptions {
    std::string catalog = "full";
    int order = kDefaultOrder;
    std::optional<std::string> prefactor;
    std::optional<std::string> u_value;
    std::optional<std::string> l_value;
    std::string format = "json";
};

struct CensusOptions {
    std::string catalog = "full";
    int max_degree = kDefaultOrder;
    std::string format = "json";
};

inline std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

inline ZetaResult compute_zeta(const std::string& catalog_name, int order, const std::optional<std::string>& prefactor) {
    if (order < 0) throw UsageError("--order must be >= 0");
    const Catalog cat = catalog(catalog_name);
    std::optional<LatticePoly> pre;
    if (prefactor) pre = parse_prefactor(*prefactor);
    return z_triv(cat, order, pre);
}

inline int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    const ZetaResult z = compute_zeta(opt.catalog, opt.order, opt.prefactor);
    if (opt.check_oracle) {
        const DiscSeries reference = oracle::oracle_z_triv(catalog(opt.catalog), opt.order, z.prefactor);
        if (reference != z.series) {
            for (int d = 0; d <= opt.order; ++d) {
                if (reference[d] != z.series[d]) {
                    err << "oracle mismatch at s^" << d << ": euler product " << format_lattice(z.series[d])
                        << ", oracle " << format_lattice(reference[d]) << "\n";
                    break;
                }
            }
            return kOracleMismatch;
        }
    }
    if (opt.format == "json") {
        io::json j = io::to_json(z);
        j["order"] = opt.order;
        if (opt.check_oracle) j["oracle_check"] = "passed";
        out << dump(j);
    } else if (opt.format == "csv") {
        out << "s_degree,u,L,coef\n";
        for (int d = 0; d <= z.series.order(); ++d) {
            for (const auto& [u, lef] : z.series[d].terms()) {
                for (const auto& [l, c] : lef.terms()) out << d << ',' << u << ',' << l << ',' << to_decimal(c) << '\n';
            }
        }
    } else {
        out << "catalog: " << opt.catalog << "\norder: " << opt.order << "\nprefactor: " << format_lattice(z.prefactor)
            << "\n";
        for (int d = 0; d <= z.series.order(); ++d) {
            if (!z.series[d].is_zero()) out << "s^" << d << ": " << format_lattice(z.series[d]) << "\n";
        }
        for (std::size_t n = 0; n < z.t_series.size(); ++n) {
            out << "t^" << n << ": " << format_lattice(z.t_series[n]) << "\n";
        }
        out << "residual degrees:";
        for (int d : z.residual_degrees) out << ' ' << d;
        out << "\n";
        if (opt.check_oracle) out << "oracle check: passed\n";
    }
    return kSuccess;
}

inline int cmd_specialize(const SpecializeOptions& opt, std::ostream& out, std::ostream&) {
    std::optional<BigRational> u;
    std::optional<BigRational> l;
    try {
        if (opt.u_value) u = parse_rational(*opt.u_value);
        if (opt.l_value) l = parse_rational(*opt.l_value);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (l && *l == 0) throw UsageError("--L 0 is not allowed: negative powers of L would divide by zero");
    const ZetaResult z = compute_zeta(opt.catalog, opt.order, opt.prefactor);
    const DiscSeriesQ s = specialize(z.series, u, l);
    const bool scalar = u.has_value() && l.has_value();
    if (opt.format == "json") {
        io::json j = io::to_json(s, scalar);
        j["catalog"] = opt.catalog;
        j["u"] = u ? io::json(to_decimal(*u)) : io::json(nullptr);
        j["L"] = l ? io::json(to_decimal(*l)) : io::json(nullptr);
        out << dump(j);
    } else if (opt.format == "csv") {
        out << "s_degree,u,L,coef\n";
        for (int d = 0; d <= s.order(); ++d) {
            for (const auto& [ue, lef] : s[d].terms()) {
                for (const auto& [le, c] : lef.terms()) out << d << ',' << ue << ',' << le << ',' << to_decimal(c) << '\n';
            }
        }
    } else {
        for (int d = 0; d <= s.order(); ++d) out << "s^" << d << ": " << format_lattice(s[d]) << "\n";
    }
    return kSuccess;
}

inline int cmd_census(const CensusOptions& opt, std::ostream& out, std::ostream&) {
    if (opt.max_degree < 0) throw UsageError("--max-degree must be >= 0");
    const oracle::CensusReport report = oracle::configuration_census(catalog(opt.catalog), opt.max_degree);
    if (opt.format == "json") {
        out << dump(io::to_json(report));
        return kSuccess;
    }
    out << "degree count max_k flagged T-distribution\n";
    for (const auto& row : report.rows) {
        out << row.degree << ' ' << row.count << ' ' << (row.max_contact_order ? std::to_string(*row.max_contact_order) : "-")
            << ' ' << row.flagged.size();
        for (const auto& [t, n] : row.t_values) out << ' ' << t << ':' << n;
        out << "\n";
    }
    return kSuccess;
}

inline int cmd_export(const std::optional<std::string>& catalog_name, std::ostream& out) {
    if (catalog_name) {
        out << dump(io::to_json(catalog(*catalog_name)));
        return kSuccess;
    }
    io::json all = io::json::array();
    for (CatalogName c : kAllCatalogs) all.push_back(io::to_json(catalog(c)));
    out << dump(all);
    return kSuccess;
}

/// Runs the command line `args` (without the program name). Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact trivial-lattice-rank-weighted motivic height zeta function of elliptic surfaces"};
    app.require_subcommand(1);

    const std::vector<std::string> catalogs = {"full", "gamma1_2", "gamma1_3", "gamma1_4"};
    int order_default = kDefaultOrder;
    try {
        order_default = default_order();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    ComputeOptions compute;
    compute.order = order_default;
    auto* c = app.add_subcommand("compute", "Expand Z_Triv(u; s) as an Euler product");
    c->add_option("--catalog", compute.catalog, "Fiber-type catalog")->check(CLI::IsMember(catalogs));
    c->add_option("--order", compute.order, "Truncation order in s");
    c->add_option("--prefactor", compute.prefactor, "Prefactor, e.g. u^2*L");
    c->add_option("--format", compute.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    c->add_flag("--check-oracle", compute.check_oracle, "Cross-check against the symmetric-power oracle");

    SpecializeOptions spec;
    spec.order = order_default;
    auto* s = app.add_subcommand("specialize", "Substitute values for u and/or L");
    s->add_option("--catalog", spec.catalog, "Fiber-type catalog")->check(CLI::IsMember(catalogs));
    s->add_option("--order", spec.order, "Truncation order in s");
    s->add_option("--prefactor", spec.prefactor, "Prefactor, e.g. u^2*L");
    s->add_option("--u", spec.u_value, "Rational value for u");
    s->add_option("--L", spec.l_value, "Nonzero rational value for L");
    s->add_option("--format", spec.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));

    CensusOptions census;
    census.max_degree = order_default;
    auto* n = app.add_subcommand("census", "Enumerate fiber configurations by discriminant degree");
    n->add_option("--catalog", census.catalog, "Fiber-type catalog")->check(CLI::IsMember(catalogs));
    n->add_option("--max-degree,--order", census.max_degree, "Largest discriminant degree");
    n->add_option("--format", census.format, "Output format")->check(CLI::IsMember({"table", "json"}));

    std::optional<std::string> export_catalog;
    auto* x = app.add_subcommand("export", "Export catalog data as JSON");
    x->add_option("--catalog", export_catalog, "Fiber-type catalog (all if omitted)")->check(CLI::IsMember(catalogs));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, out, err);
        if (s->parsed()) return cmd_specialize(spec, out, err);
        if (n->parsed()) return cmd_census(census, out, err);
        return cmd_export(export_catalog, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace ztriv::cli
