#pragma once

#include "geomcomb/factorials.hpp"
#include "geomcomb/geometric.hpp"
#include "geomcomb/polynomial.hpp"
#include "geomcomb/series.hpp"
#include "geomcomb/stirling.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geomcomb {

/// Parameter grid for the identity audit: n <= n_max, lambda in 1..lambda_max,
/// alpha/beta/gamma each ranging over `values`, x kept symbolic throughout.
struct GridSpec {
    std::string name = "default";
    unsigned n_max = 6;
    unsigned lambda_max = 3;
    std::vector<BigRat> values{BigRat(0), BigRat(1), BigRat(2), BigRat(3)};

    static GridSpec preset(std::string_view name) {
        if (name == "small")
            return {"small", 4, 2, {BigRat(0), BigRat(1), BigRat(2)}};
        if (name == "default") return {};
        if (name == "wide")
            return {"wide", 7, 4, {BigRat(-1), BigRat(0), BigRat(1), BigRat(2), BigRat(3)}};
        throw std::invalid_argument("unknown grid preset: " + std::string(name));
    }
};

enum class CheckStatus { pass, fail, pass_variant };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "pass-variant";
    }
}

/// First grid point at which a reading of an identity failed. lambda = 0
/// marks checks where lambda plays no role.
struct Counterexample {
    unsigned n = 0;
    unsigned lambda = 0;
    StirlingParams params;

    std::string to_string() const {
        return "n=" + std::to_string(n) + " lambda=" + std::to_string(lambda) + " params=" +
               params.to_string();
    }
};

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::optional<Counterexample> counterexample;
    std::string note;
};

struct AuditReport {
    GridSpec grid;
    std::vector<CheckResult> checks;

    bool all_ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
};

namespace detail {

/// Shared evaluation state for one audit run: a triangle cache plus the grid.
/// All polynomial comparisons are exact; x stays symbolic.
class AuditContext {
  public:
    explicit AuditContext(GridSpec grid) : grid_(std::move(grid)) {}

    const GridSpec& grid() const { return grid_; }

    PolyX T(unsigned n, unsigned lambda, const BigRat& a, const BigRat& b, const BigRat& g) {
        return t_poly(cache_.get({a, b, g}, n), n, lambda);
    }
    PolyX G(unsigned n, const BigRat& a, const BigRat& b, const BigRat& g) {
        return geom_poly(cache_.get({a, b, g}, n), n);
    }
    const StirlingTriangle& triangle(const StirlingParams& p, unsigned n) {
        return cache_.get(p, n);
    }

    /// Highest n for checks that relate index n to n+1.
    unsigned recurrence_n_hi() const { return grid_.n_max == 0 ? 0 : grid_.n_max - 1; }

    /// Sweeps n (outermost), lambda, then alpha/beta/gamma in grid value
    /// order; returns the first point where `holds` is false.
    template <typename Holds>
    std::optional<Counterexample> sweep(unsigned n_hi, bool use_lambda, Holds&& holds) {
        for (unsigned n = 0; n <= n_hi; ++n)
            for (unsigned lam = 1; lam <= (use_lambda ? grid_.lambda_max : 1); ++lam)
                for (const auto& a : grid_.values)
                    for (const auto& b : grid_.values)
                        for (const auto& g : grid_.values)
                            if (!holds(n, lam, a, b, g))
                                return Counterexample{n, use_lambda ? lam : 1u, {a, b, g}};
        return std::nullopt;
    }

  private:
    GridSpec grid_;
    TriangleCache cache_;
};

inline CheckResult single_reading(std::string id, std::optional<Counterexample> fail,
                                  std::string pass_note = "") {
    CheckResult r;
    r.id = std::move(id);
    if (fail) {
        r.status = CheckStatus::fail;
        r.counterexample = fail;
        r.note = "fails first at " + fail->to_string();
    } else {
        r.status = CheckStatus::pass;
        r.note = std::move(pass_note);
    }
    return r;
}

/// Combines a stated reading with an alternative one. Plain pass requires the
/// stated reading to hold; a check that only holds under the alternative is
/// reported as pass-variant, never as plain pass.
inline CheckResult two_readings(std::string id, std::optional<Counterexample> stated_fail,
                                std::optional<Counterexample> variant_fail,
                                std::string_view variant_desc) {
    CheckResult r;
    r.id = std::move(id);
    if (!stated_fail) {
        r.status = CheckStatus::pass;
        if (variant_fail)
            r.note = std::string("stated reading holds; alternative reading (") +
                     std::string(variant_desc) + ") fails first at " + variant_fail->to_string();
        else
            r.note = std::string("stated reading holds; alternative reading (") +
                     std::string(variant_desc) + ") also holds";
    } else if (!variant_fail) {
        r.status = CheckStatus::pass_variant;
        r.counterexample = stated_fail;
        r.note = std::string("holds only under the alternative reading (") +
                 std::string(variant_desc) + "); stated reading fails first at " +
                 stated_fail->to_string();
    } else {
        r.status = CheckStatus::fail;
        r.counterexample = stated_fail;
        r.note = std::string("both readings fail; alternative (") + std::string(variant_desc) +
                 ") fails first at " + variant_fail->to_string();
    }
    return r;
}

// ---- individual checks ------------------------------------------------

inline CheckResult check_stirling_explicit(AuditContext& ctx) {
    std::optional<Counterexample> fail;
    const auto& grid = ctx.grid();
    for (const auto& a : grid.values) {
        for (const auto& b : grid.values) {
            if (b == 0) continue;
            for (const auto& g : grid.values) {
                const StirlingParams p{a, b, g};
                const auto& tri = ctx.triangle(p, grid.n_max);
                for (unsigned n = 0; n <= grid.n_max && !fail; ++n)
                    for (unsigned k = 0; k <= n; ++k)
                        if (stirling_explicit(n, k, p) != tri.at(n, k)) {
                            fail = Counterexample{n, 0, p};
                            break;
                        }
                if (fail) return single_reading("stirling_explicit_vs_recurrence", fail);
            }
        }
    }
    return single_reading(
        "stirling_explicit_vs_recurrence", std::nullopt,
        "alternating sum read with binomial C(k,s), s = 0..k; beta = 0 rows excluded");
}

inline CheckResult check_transform_vs_oracle(AuditContext& ctx) {
    const auto& grid = ctx.grid();
    for (unsigned lam = 1; lam <= grid.lambda_max; ++lam)
        for (const auto& a : grid.values)
            for (const auto& b : grid.values)
                for (const auto& g : grid.values) {
                    const auto seq = oracle_t_sequence(grid.n_max, lam, {a, b, g});
                    for (unsigned n = 0; n <= grid.n_max; ++n)
                        if (seq[n] != ctx.T(n, lam, a, b, g))
                            return single_reading("transform_vs_series_oracle",
                                                  Counterexample{n, lam, {a, b, g}});
                }
    return single_reading("transform_vs_series_oracle", std::nullopt,
                          "covers both the binomial-series and exponential-series branches");
}

inline CheckResult check_onebar_equals_geometric(AuditContext& ctx) {
    const auto& grid = ctx.grid();
    for (const auto& a : grid.values)
        for (const auto& b : grid.values)
            for (const auto& g : grid.values) {
                const auto seq = oracle_t_sequence(grid.n_max, 1, {a, b, g});
                for (unsigned n = 0; n <= grid.n_max; ++n)
                    if (seq[n] != ctx.G(n, a, b, g))
                        return single_reading("onebar_equals_geometric",
                                              Counterexample{n, 1, {a, b, g}});
            }
    return single_reading("onebar_equals_geometric", std::nullopt,
                          "geometric transform equals one-bar series extraction");
}

inline CheckResult check_binomial_convolution(AuditContext& ctx) {
    auto fail = ctx.sweep(ctx.grid().n_max, false,
                          [&](unsigned n, unsigned, const BigRat& a, const BigRat& b,
                              const BigRat& g) {
                              return t_conv_binomial(n, {a, b, g}) == ctx.T(n, 1, a, b, g);
                          });
    return single_reading("binomial_convolution_vs_transform", fail);
}

inline CheckResult check_multinomial_convolution(AuditContext& ctx) {
    auto fail = ctx.sweep(ctx.grid().n_max, true,
                          [&](unsigned n, unsigned lam, const BigRat& a, const BigRat& b,
                              const BigRat& g) {
                              return t_conv_multinomial(n, lam, {a, b, g}) ==
                                     ctx.T(n, lam, a, b, g);
                          });
    return single_reading("multinomial_convolution_vs_transform", fail,
                          "iterated binomial convolution of the EGF coefficient sequences");
}

inline CheckResult check_onebar_split_right(AuditContext& ctx) {
    const unsigned n_hi = ctx.recurrence_n_hi();
    const PolyX x = PolyX::monomial(1);
    auto rhs = [&](unsigned n, const BigRat& a, const BigRat& b, const BigRat& g,
                   bool merged_last_factor) {
        PolyX sum;
        for (unsigned k = 0; k <= n; ++k) {
            const BigRat last_gamma = merged_last_factor ? BigRat(g + b - a) : BigRat(b - a);
            sum += BigRat(binom(n, k)) * (ctx.T(n - k, 1, a, b, g) * ctx.T(k, 1, a, b, last_gamma));
        }
        return g * ctx.T(n, 1, a, b, g - a) + b * (x * sum);
    };
    auto stated = ctx.sweep(n_hi, false,
                            [&](unsigned n, unsigned, const BigRat& a, const BigRat& b,
                                const BigRat& g) {
                                return ctx.T(n + 1, 1, a, b, g) == rhs(n, a, b, g, false);
                            });
    auto variant = ctx.sweep(n_hi, false,
                             [&](unsigned n, unsigned, const BigRat& a, const BigRat& b,
                                 const BigRat& g) {
                                 return ctx.T(n + 1, 1, a, b, g) == rhs(n, a, b, g, true);
                             });
    return two_readings("onebar_recurrence_split_right", stated, variant,
                        "final factor taken at gamma+beta-alpha as in the proof text");
}

inline CheckResult check_onebar_split_left(AuditContext& ctx) {
    const PolyX x = PolyX::monomial(1);
    auto fail = ctx.sweep(
        ctx.recurrence_n_hi(), false,
        [&](unsigned n, unsigned, const BigRat& a, const BigRat& b, const BigRat& g) {
            PolyX sum;
            for (unsigned k = 0; k <= n; ++k)
                sum += BigRat(binom(n, k)) *
                       (ctx.T(k, 1, a, b, g + b - a) * ctx.T(n - k, 1, a, b, BigRat(0)));
            return ctx.T(n + 1, 1, a, b, g) == g * ctx.T(n, 1, a, b, g - a) + b * (x * sum);
        });
    return single_reading("onebar_recurrence_split_left", fail);
}

inline CheckResult check_multibar_merged_unit(AuditContext& ctx) {
    const PolyX x = PolyX::monomial(1);
    auto fail = ctx.sweep(
        ctx.recurrence_n_hi(), true,
        [&](unsigned n, unsigned lam, const BigRat& a, const BigRat& b, const BigRat& g) {
            return ctx.T(n + 1, lam, a, b, g) ==
                   g * ctx.T(n, lam, a, b, g - a) +
                       (BigRat(lam) * b) * (x * ctx.T(n, lam + 1, a, b, g + b - a));
        });
    return single_reading("multibar_recurrence_merged_unit", fail);
}

inline CheckResult check_multibar_special_prefactored(AuditContext& ctx) {
    const PolyX x = PolyX::monomial(1);
    auto fail = ctx.sweep(
        ctx.recurrence_n_hi(), true,
        [&](unsigned n, unsigned lam, const BigRat& a, const BigRat& b, const BigRat& g) {
            PolyX sum;
            for (unsigned s = 0; s <= n; ++s)
                sum += (BigRat(binom(n, s)) * gen_fact(g, a, s)) *
                       ctx.T(n - s, lam + 1, a, b, b - a);
            return ctx.T(n + 1, lam, a, b, g) ==
                   g * ctx.T(n, lam, a, b, g - a) + (BigRat(lam) * b) * (x * sum);
        });
    return single_reading("multibar_recurrence_special_prefactored", fail);
}

inline CheckResult check_empty_section_shift(AuditContext& ctx) {
    const PolyX one_plus_x = PolyX::from_coeffs({BigRat(1), BigRat(1)});
    const PolyX x = PolyX::monomial(1);
    std::optional<Counterexample> fail;
    const auto& grid = ctx.grid();
    for (unsigned n = 0; n <= grid.n_max && !fail; ++n)
        for (unsigned lam = 1; lam <= grid.lambda_max && !fail; ++lam)
            for (const auto& a : grid.values)
                for (const auto& b : grid.values) {
                    if (one_plus_x * ctx.T(n, lam + 1, a, b, BigRat(0)) !=
                        ctx.T(n, lam, a, b, BigRat(0)) + x * ctx.T(n, lam + 1, a, b, b)) {
                        fail = Counterexample{n, lam, {a, b, BigRat(0)}};
                        break;
                    }
                }
    return single_reading("empty_section_shift", fail, "gamma-free identity; gamma fixed at 0");
}

inline CheckResult check_multibar_block_tail(AuditContext& ctx) {
    const PolyX x = PolyX::monomial(1);
    auto fail = ctx.sweep(
        ctx.recurrence_n_hi(), true,
        [&](unsigned n, unsigned lam, const BigRat& a, const BigRat& b, const BigRat& g) {
            PolyX sum;
            for (unsigned k = 0; k <= n; ++k)
                sum += BigRat(binom(n, k)) *
                       (ctx.T(k, lam, a, b, g) * ctx.T(n - k, 1, a, b, b - a));
            return ctx.T(n + 1, lam, a, b, g) ==
                   g * ctx.T(n, lam, a, b, g - a) + (b * BigRat(lam)) * (x * sum);
        });
    return single_reading("multibar_recurrence_block_tail", fail,
                          "tail factor supplied with the statement's full parameter triple");
}

inline CheckResult check_multibar_both_prefactored(AuditContext& ctx) {
    const PolyX x = PolyX::monomial(1);
    auto fail = ctx.sweep(
        ctx.recurrence_n_hi(), true,
        [&](unsigned n, unsigned lam, const BigRat& a, const BigRat& b, const BigRat& g) {
            PolyX first, second;
            for (unsigned k = 0; k <= n; ++k) {
                const BigRat c = BigRat(binom(n, k));
                first += (c * gen_fact(g - a, a, k)) * ctx.T(n - k, lam, a, b, BigRat(0));
                second += (c * gen_fact(g + b - a, a, k)) * ctx.T(n - k, lam + 1, a, b, BigRat(0));
            }
            return ctx.T(n + 1, lam, a, b, g) ==
                   g * first + (BigRat(lam) * b) * (x * second);
        });
    return single_reading("multibar_recurrence_both_prefactored", fail);
}

inline CheckResult check_multibar_special_absorbed(AuditContext& ctx) {
    auto fail = ctx.sweep(
        ctx.recurrence_n_hi(), true,
        [&](unsigned n, unsigned lam, const BigRat& a, const BigRat& b, const BigRat& g) {
            PolyX sum;
            for (unsigned k = 0; k <= n; ++k)
                sum += (BigRat(binom(n, k)) * gen_fact(g, a, k)) *
                       ctx.T(n - k + 1, lam, a, b, BigRat(0));
            return ctx.T(n + 1, lam, a, b, g) == g * ctx.T(n, lam, a, b, g - a) + sum;
        });
    return single_reading("multibar_recurrence_special_absorbed", fail);
}

inline CheckResult check_transform_recurrence_expansion(AuditContext& ctx) {
    const unsigned n_hi = ctx.recurrence_n_hi();
    auto rhs = [&](unsigned n, unsigned lam, const BigRat& a, const BigRat& b, const BigRat& g,
                   unsigned k_top) {
        const StirlingParams p{a, b, g};
        const auto& tri = ctx.triangle(p, n + 1);
        std::vector<BigRat> coeffs(k_top + 1, BigRat(0));
        coeffs[0] = gen_fact(g, a, n + 1);
        BigRat beta_pow = 1;
        BigInt kfact = 1;
        for (unsigned k = 1; k <= k_top; ++k) {
            beta_pow *= b;
            kfact *= k;
            const BigRat bracket =
                tri.at(n, k - 1) +
                (BigRat(k) * b - BigRat(n) * a + g) * (k <= n ? tri.at(n, k) : BigRat(0));
            coeffs[k] = BigRat(binom(lam + k, k)) * bracket * beta_pow * BigRat(kfact);
        }
        return PolyX::from_coeffs(std::move(coeffs));
    };
    auto stated = ctx.sweep(n_hi, true,
                            [&](unsigned n, unsigned lam, const BigRat& a, const BigRat& b,
                                const BigRat& g) {
                                return ctx.T(n + 1, lam + 1, a, b, g) == rhs(n, lam, a, b, g, n);
                            });
    auto variant = ctx.sweep(n_hi, true,
                             [&](unsigned n, unsigned lam, const BigRat& a, const BigRat& b,
                                 const BigRat& g) {
                                 return ctx.T(n + 1, lam + 1, a, b, g) ==
                                        rhs(n, lam, a, b, g, n + 1);
                             });
    return two_readings("transform_recurrence_expansion", stated, variant,
                        "sum extended to k = n+1, supplying the top-degree term");
}

}  // namespace detail

inline std::vector<std::string> audit_check_ids() {
    return {
        "stirling_explicit_vs_recurrence",
        "transform_vs_series_oracle",
        "onebar_equals_geometric",
        "binomial_convolution_vs_transform",
        "multinomial_convolution_vs_transform",
        "onebar_recurrence_split_right",
        "onebar_recurrence_split_left",
        "multibar_recurrence_merged_unit",
        "multibar_recurrence_special_prefactored",
        "empty_section_shift",
        "multibar_recurrence_block_tail",
        "multibar_recurrence_both_prefactored",
        "multibar_recurrence_special_absorbed",
        "transform_recurrence_expansion",
    };
}

/// Runs every check over the grid with symbolic x and exact arithmetic.
/// The report is assembled in fixed check-id order and is deterministic
/// given the grid.
inline AuditReport run_audit(const GridSpec& grid) {
    detail::AuditContext ctx(grid);
    AuditReport report;
    report.grid = grid;
    report.checks.push_back(detail::check_stirling_explicit(ctx));
    report.checks.push_back(detail::check_transform_vs_oracle(ctx));
    report.checks.push_back(detail::check_onebar_equals_geometric(ctx));
    report.checks.push_back(detail::check_binomial_convolution(ctx));
    report.checks.push_back(detail::check_multinomial_convolution(ctx));
    report.checks.push_back(detail::check_onebar_split_right(ctx));
    report.checks.push_back(detail::check_onebar_split_left(ctx));
    report.checks.push_back(detail::check_multibar_merged_unit(ctx));
    report.checks.push_back(detail::check_multibar_special_prefactored(ctx));
    report.checks.push_back(detail::check_empty_section_shift(ctx));
    report.checks.push_back(detail::check_multibar_block_tail(ctx));
    report.checks.push_back(detail::check_multibar_both_prefactored(ctx));
    report.checks.push_back(detail::check_multibar_special_absorbed(ctx));
    report.checks.push_back(detail::check_transform_recurrence_expansion(ctx));
    return report;
}

}  // namespace geomcomb
