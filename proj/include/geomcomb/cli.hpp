#pragma once

#include "geomcomb/asymptotics.hpp"
#include "geomcomb/audit_json.hpp"
#include "geomcomb/bpa.hpp"
#include "geomcomb/errors.hpp"
#include "geomcomb/geometric.hpp"
#include "geomcomb/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace geomcomb {

// Exit codes: 0 ok, 1 audit failure, 2 usage, 3 beta=0 on the explicit
// route, 4 route disagreement, 5 enumeration cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAuditFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBetaZero = 3;
inline constexpr int kExitRouteDisagreement = 4;
inline constexpr int kExitCapExceeded = 5;

namespace cli_detail {

using json = nlohmann::ordered_json;

struct StirlingArgs {
    std::string alpha = "0", beta = "0", gamma = "0";
    unsigned n_max = 0;
    std::string route = "recurrence";
    std::string format = "json";
};

struct TArgs {
    unsigned n = 0, lambda = 1;
    std::string alpha = "0", beta = "0", gamma = "0";
    std::string x;  // empty means symbolic
    std::string route = "transform";
    std::string format = "json";
};

struct EnumArgs {
    unsigned n = 0, lambda = 1, beta = 1, gamma = 0, x = 1;
    bool list = false;
    unsigned cap = kDefaultEnumerationCap;
    bool cap_given = false;
};

struct AuditArgs {
    std::string preset = "default";
    std::string format = "json";
};

struct AsymArgs {
    unsigned n = 0, s = 0;
    std::string lambda_list;
    std::string alpha = "0", beta = "0", gamma = "0", x = "1";
    std::string format = "json";
};

inline json params_json(const StirlingParams& p) {
    json j;
    j["alpha"] = rat_to_string(p.alpha);
    j["beta"] = rat_to_string(p.beta);
    j["gamma"] = rat_to_string(p.gamma);
    return j;
}

inline json poly_json(const PolyX& p) {
    auto arr = json::array();
    for (const auto& s : p.coeff_strings()) arr.push_back(s);
    return arr;
}

inline int cmd_stirling(const StirlingArgs& a, std::ostream& out, std::ostream& err) {
    const StirlingParams p{parse_rat(a.alpha), parse_rat(a.beta), parse_rat(a.gamma)};
    StirlingTriangle tri(p, a.n_max);
    std::vector<std::vector<BigRat>> rows(a.n_max + 1);
    if (a.route == "explicit") {
        if (p.beta == 0) {
            err << "error: beta = 0 has no explicit route; use --route recurrence\n";
            return kExitBetaZero;
        }
        for (unsigned n = 0; n <= a.n_max; ++n) {
            rows[n].resize(n + 1);
            for (unsigned k = 0; k <= n; ++k) rows[n][k] = stirling_explicit(n, k, p);
        }
    } else {
        for (unsigned n = 0; n <= a.n_max; ++n) rows[n] = tri.row(n);
    }

    if (a.format == "csv") {
        out << "n,k,value\n";
        for (unsigned n = 0; n <= a.n_max; ++n)
            for (unsigned k = 0; k <= n; ++k)
                out << n << ',' << k << ',' << rat_to_string(rows[n][k]) << '\n';
        return kExitOk;
    }
    json j;
    j["command"] = "stirling";
    j["params"] = params_json(p);
    j["n_max"] = a.n_max;
    j["route"] = a.route;
    auto jrows = json::array();
    for (unsigned n = 0; n <= a.n_max; ++n) {
        auto row = json::array();
        for (unsigned k = 0; k <= n; ++k) row.push_back(rat_to_string(rows[n][k]));
        jrows.push_back(row);
    }
    j["rows"] = jrows;
    out << j.dump(2) << '\n';
    return kExitOk;
}

inline PolyX t_by_route(const std::string& route, unsigned n, unsigned lambda,
                        const StirlingParams& p) {
    if (route == "transform") return t_poly(n, lambda, p);
    if (route == "conv")
        return lambda == 1 ? t_conv_binomial(n, p) : t_conv_multinomial(n, lambda, p);
    return oracle_t(n, lambda, p);
}

inline int cmd_t(const TArgs& a, std::ostream& out, std::ostream& err) {
    const StirlingParams p{parse_rat(a.alpha), parse_rat(a.beta), parse_rat(a.gamma)};
    const bool numeric = !a.x.empty();
    const BigRat x0 = numeric ? parse_rat(a.x) : BigRat(0);

    std::vector<std::string> routes;
    if (a.route == "all")
        routes = {"transform", "conv", "oracle"};
    else
        routes = {a.route};

    std::vector<PolyX> values;
    values.reserve(routes.size());
    for (const auto& r : routes) values.push_back(t_by_route(r, a.n, a.lambda, p));

    if (a.route == "all") {
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i] != values[0]) {
                err << "error: route disagreement: " << routes[0] << " gives "
                    << values[0].to_string() << " but " << routes[i] << " gives "
                    << values[i].to_string() << '\n';
                return kExitRouteDisagreement;
            }
        }
    }

    if (a.format == "csv") {
        if (numeric) {
            out << "route,value\n";
            for (std::size_t i = 0; i < routes.size(); ++i)
                out << routes[i] << ',' << rat_to_string(values[i].eval(x0)) << '\n';
        } else {
            out << "route,k,coefficient\n";
            for (std::size_t i = 0; i < routes.size(); ++i) {
                const auto cs = values[i].coeff_strings();
                for (std::size_t k = 0; k < cs.size(); ++k)
                    out << routes[i] << ',' << k << ',' << cs[k] << '\n';
            }
        }
        return kExitOk;
    }

    json j;
    j["command"] = "t";
    j["n"] = a.n;
    j["lambda"] = a.lambda;
    j["params"] = params_json(p);
    j["x"] = numeric ? json(rat_to_string(x0)) : json(nullptr);
    auto route_payload = [&](std::size_t i) {
        json r;
        r["poly"] = poly_json(values[i]);
        if (numeric) r["value"] = rat_to_string(values[i].eval(x0));
        return r;
    };
    if (a.route == "all") {
        json routes_obj;
        for (std::size_t i = 0; i < routes.size(); ++i) routes_obj[routes[i]] = route_payload(i);
        j["routes"] = routes_obj;
        j["agreement"] = true;
    } else {
        j["route"] = a.route;
        const json payload = route_payload(0);
        for (const auto& [key, val] : payload.items()) j[key] = val;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

inline int cmd_enumerate(const EnumArgs& a, std::ostream& out, std::ostream& err) {
    BpaConfig cfg{a.n, a.lambda, a.beta, a.gamma, a.x, a.cap};
    if (a.list && a.n > 4) {
        err << "error: --list is limited to n <= 4\n";
        return kExitUsage;
    }
    BigInt count;
    try {
        count = count_bpa(cfg);
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    }
    json j;
    j["command"] = "enumerate";
    j["n"] = a.n;
    j["lambda"] = a.lambda;
    j["beta"] = a.beta;
    j["gamma"] = a.gamma;
    j["x"] = a.x;
    j["count"] = count.str();
    if (a.list) {
        auto structures = json::array();
        for (const auto& s : list_bpa(cfg)) {
            json js;
            js["special"] = s.special;
            js["blocks"] = s.blocks;
            js["section_sizes"] = s.section_sizes;
            js["weight"] = s.weight.str();
            structures.push_back(js);
        }
        j["structures"] = structures;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

inline int cmd_audit(const AuditArgs& a, std::ostream& out, std::ostream&) {
    const AuditReport report = run_audit(GridSpec::preset(a.preset));
    if (a.format == "text") {
        for (const auto& c : report.checks) {
            out << to_string(c.status) << "\t" << c.id;
            if (!c.note.empty()) out << "\t" << c.note;
            out << '\n';
        }
    } else {
        out << audit_to_json(report).dump(2) << '\n';
    }
    return report.all_ok() ? kExitOk : kExitAuditFailure;
}

inline std::vector<BigRat> parse_lambda_list(const std::string& text) {
    std::vector<BigRat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        if (comma > start) out.push_back(parse_rat(text.substr(start, comma - start)));
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty --lambda-list");
    return out;
}

inline int cmd_asym(const AsymArgs& a, std::ostream& out, std::ostream& err) {
    const StirlingParams p{parse_rat(a.alpha), parse_rat(a.beta), parse_rat(a.gamma)};
    const BigRat x0 = parse_rat(a.x);
    const std::vector<BigRat> lambdas = parse_lambda_list(a.lambda_list);
    if (a.n > 0 && a.s > a.n - 1) {
        err << "error: requires s <= n-1\n";
        return kExitUsage;
    }

    struct Row {
        BigRat lambda;
        bool pole = false;
        AsymReport rep;
    };
    std::vector<Row> rows;
    for (const auto& lam : lambdas) {
        Row row;
        row.lambda = lam;
        try {
            row.rep = asym_report(a.n, lam, a.s, p, x0);
        } catch (const PoleError&) {
            row.pole = true;
        }
        rows.push_back(std::move(row));
    }

    if (a.format == "csv") {
        out << "lambda,estimate,exact,abs_err,rel_err,rel_err_decimal,in_regime,pole\n";
        for (const auto& r : rows) {
            out << rat_to_string(r.lambda) << ',';
            if (r.pole) {
                out << ",,,,,,1\n";
                continue;
            }
            out << rat_to_string(r.rep.estimate) << ',' << rat_to_string(r.rep.exact) << ','
                << rat_to_string(r.rep.abs_err) << ','
                << (r.rep.rel_err_defined ? rat_to_string(r.rep.rel_err) : "") << ','
                << (r.rep.rel_err_defined ? decimal_string(r.rep.rel_err) : "") << ','
                << (r.rep.in_regime ? 1 : 0) << ",0\n";
        }
        return kExitOk;
    }

    json j;
    j["command"] = "asym";
    j["n"] = a.n;
    j["s"] = a.s;
    j["params"] = params_json(p);
    j["x"] = rat_to_string(x0);
    auto jrows = json::array();
    for (const auto& r : rows) {
        json jr;
        jr["lambda"] = rat_to_string(r.lambda);
        jr["pole"] = r.pole;
        if (r.pole) {
            jr["estimate"] = nullptr;
            jr["exact"] = nullptr;
            jr["abs_err"] = nullptr;
            jr["rel_err"] = nullptr;
            jr["rel_err_decimal"] = nullptr;
            jr["in_regime"] = nullptr;
        } else {
            jr["estimate"] = rat_to_string(r.rep.estimate);
            jr["exact"] = rat_to_string(r.rep.exact);
            jr["abs_err"] = rat_to_string(r.rep.abs_err);
            jr["rel_err"] = r.rep.rel_err_defined ? json(rat_to_string(r.rep.rel_err)) : json(nullptr);
            jr["rel_err_decimal"] =
                r.rep.rel_err_defined ? json(decimal_string(r.rep.rel_err)) : json(nullptr);
            jr["in_regime"] = r.rep.in_regime;
        }
        jrows.push_back(jr);
    }
    j["rows"] = jrows;
    out << j.dump(2) << '\n';
    return kExitOk;
}

inline unsigned env_cap() {
    const char* env = std::getenv("GEOMCOMB_CAP");
    if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v > 31) return kDefaultEnumerationCap;
    return static_cast<unsigned>(v);
}

}  // namespace cli_detail

/// Dispatches the full command-line surface. `args` excludes the program
/// name. Data goes to `out`, diagnostics to `err`.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"Exact computation of generalized Stirling numbers, higher-order "
                 "geometric polynomials, and barred-preferential-arrangement counts",
                 "geomcomb"};
    app.require_subcommand(1);

    StirlingArgs sa;
    auto* st = app.add_subcommand("stirling", "Dump a generalized Stirling triangle");
    st->add_option("--alpha", sa.alpha, "alpha (rational)");
    st->add_option("--beta", sa.beta, "beta (rational)");
    st->add_option("--gamma", sa.gamma, "gamma (rational)");
    st->add_option("--nmax", sa.n_max, "largest row")->required();
    st->add_option("--route", sa.route, "computation route")
        ->check(CLI::IsMember({"recurrence", "explicit"}));
    st->add_option("--format", sa.format)->check(CLI::IsMember({"json", "csv"}));

    TArgs ta;
    auto* tc = app.add_subcommand("t", "Higher-order generalized geometric polynomial");
    tc->add_option("--n", ta.n)->required();
    tc->add_option("--lambda", ta.lambda, "order (>= 1)")->required()->check(CLI::PositiveNumber);
    tc->add_option("--alpha", ta.alpha);
    tc->add_option("--beta", ta.beta);
    tc->add_option("--gamma", ta.gamma);
    tc->add_option("--x", ta.x, "evaluate at rational x (omit for symbolic)");
    tc->add_option("--route", ta.route)
        ->check(CLI::IsMember({"transform", "conv", "oracle", "all"}));
    tc->add_option("--format", ta.format)->check(CLI::IsMember({"json", "csv"}));

    EnumArgs ea;
    ea.cap = env_cap();
    auto* en = app.add_subcommand("enumerate", "Brute-force count of colored barred "
                                               "preferential arrangements (alpha = 0)");
    en->add_option("--n", ea.n)->required();
    en->add_option("--lambda", ea.lambda, "number of block-bearing sections (>= 1)")
        ->check(CLI::PositiveNumber);
    en->add_option("--beta", ea.beta, "element colors outside the special section");
    en->add_option("--gamma", ea.gamma, "element colors in the special section");
    en->add_option("--x", ea.x, "block colors");
    en->add_flag("--list", ea.list, "also list the structures (n <= 4)");
    en->add_option("--cap", ea.cap, "enumeration cap (overrides GEOMCOMB_CAP)");

    AuditArgs aa;
    auto* au = app.add_subcommand("audit", "Machine-check the identity battery");
    au->add_option("--grid-preset", aa.preset)->check(CLI::IsMember({"small", "default", "wide"}));
    au->add_option("--format", aa.format)->check(CLI::IsMember({"json", "text"}));

    AsymArgs ya;
    auto* as = app.add_subcommand("asym", "Truncated expansion vs exact value, per lambda");
    as->add_option("--n", ya.n)->required();
    as->add_option("--lambda-list", ya.lambda_list, "comma-separated lambdas")->required();
    as->add_option("--s", ya.s, "truncation order (<= n-1)")->required();
    as->add_option("--alpha", ya.alpha);
    as->add_option("--beta", ya.beta);
    as->add_option("--gamma", ya.gamma);
    as->add_option("--x", ya.x);
    as->add_option("--format", ya.format)->check(CLI::IsMember({"json", "csv"}));

    std::reverse(args.begin(), args.end());  // CLI11's vector parse wants reversed args
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(st)) return cmd_stirling(sa, out, err);
        if (app.got_subcommand(tc)) return cmd_t(ta, out, err);
        if (app.got_subcommand(en)) return cmd_enumerate(ea, out, err);
        if (app.got_subcommand(au)) return cmd_audit(aa, out, err);
        return cmd_asym(ya, out, err);
    } catch (const BetaZeroError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBetaZero;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace geomcomb
