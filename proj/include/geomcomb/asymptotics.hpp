#pragma once

#include "geomcomb/errors.hpp"
#include "geomcomb/factorials.hpp"
#include "geomcomb/geometric.hpp"
#include "geomcomb/polynomial.hpp"
#include "geomcomb/series.hpp"
#include "geomcomb/stirling.hpp"

#include <span>
#include <string>
#include <vector>

namespace geomcomb {

/// An integer partition of n encoded by part multiplicities:
/// mult[i] copies of part i, with sum i*mult[i] = n and sum mult[i] = parts().
struct PartitionMultiplicity {
    unsigned n = 0;
    std::vector<unsigned> mult;  // index 0 unused; size n+1

    unsigned parts() const {
        unsigned k = 0;
        for (unsigned i = 1; i < mult.size(); ++i) k += mult[i];
        return k;
    }
    unsigned weighted_sum() const {
        unsigned s = 0;
        for (unsigned i = 1; i < mult.size(); ++i) s += i * mult[i];
        return s;
    }
};

/// All partitions of n with exactly k parts, as multiplicity vectors, in a
/// fixed deterministic order. (0,0) yields the single empty partition.
inline std::vector<PartitionMultiplicity> partitions_with_parts(unsigned n, unsigned k) {
    std::vector<PartitionMultiplicity> out;
    std::vector<unsigned> parts;
    auto rec = [&](auto&& self, unsigned remaining, unsigned left, unsigned max_part) -> void {
        if (left == 0) {
            if (remaining == 0) {
                PartitionMultiplicity pm;
                pm.n = n;
                pm.mult.assign(n + 1, 0);
                for (unsigned p : parts) ++pm.mult[p];
                out.push_back(std::move(pm));
            }
            return;
        }
        if (remaining < left) return;
        unsigned hi = std::min(max_part, remaining - (left - 1));
        for (unsigned p = hi; p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, left - 1, p);
            parts.pop_back();
        }
    };
    rec(rec, n, k, n == 0 ? 1 : n);
    return out;
}

/// Partition sum W(n,j) = sum over partitions of n with n-j parts of
/// prod_i a_i^{k_i} / k_i!, with a[0] = 1 by convention. Requires j < n.
inline PolyX w_general(unsigned n, unsigned j, std::span<const PolyX> a) {
    if (j >= n)
        throw IndexOutOfRangeError("w_general requires j < n, got j=" + std::to_string(j) +
                                   " n=" + std::to_string(n));
    PolyX total;
    for (const auto& pm : partitions_with_parts(n, n - j)) {
        PolyX term(BigRat(1));
        BigRat denom = 1;
        for (unsigned i = 1; i <= n; ++i) {
            for (unsigned c = 0; c < pm.mult[i]; ++c) term *= a[i];
            denom *= BigRat(factorial(pm.mult[i]));
        }
        total += (BigRat(1) / denom) * term;
    }
    return total;
}

/// EGF coefficients of the one-bar series: a_j = G_j^x(alpha,beta,gamma) / j!.
/// Independent of the series-oracle derivation of the same numbers.
inline std::vector<PolyX> a_coeffs(const StirlingParams& params, unsigned up_to) {
    StirlingTriangle tri(params, up_to);
    std::vector<PolyX> a(up_to + 1);
    BigInt jfact = 1;
    for (unsigned j = 0; j <= up_to; ++j) {
        if (j > 0) jfact *= j;
        a[j] = (BigRat(1) / BigRat(jfact)) * geom_poly(tri, j);
    }
    return a;
}

/// Closed forms for the first three partition sums:
///   W(n,0) = a_1^n / n!
///   W(n,1) = a_1^{n-2} a_2 / (n-2)!
///   W(n,2) = a_1^{n-3} a_3 / (n-3)!  [+ a_1^{n-4} a_2^2 / (2 (n-4)!) when n >= 4]
/// Valid for j < n; at n = 3, j = 2 only the single-partition term exists.
inline PolyX w_closed(unsigned n, unsigned j, const StirlingParams& params) {
    if (j > 2) throw DomainError("w_closed supports j in {0,1,2}");
    if (j >= n)
        throw DomainError("w_closed requires j < n, got j=" + std::to_string(j) +
                          " n=" + std::to_string(n));
    const std::vector<PolyX> a = a_coeffs(params, 3);
    switch (j) {
        case 0:
            return (BigRat(1) / BigRat(factorial(n))) * poly_pow(a[1], n);
        case 1:
            return (BigRat(1) / BigRat(factorial(n - 2))) * (poly_pow(a[1], n - 2) * a[2]);
        default: {
            PolyX r = (BigRat(1) / BigRat(factorial(n - 3))) * (poly_pow(a[1], n - 3) * a[3]);
            if (n >= 4)
                r += (BigRat(1) / (BigRat(2) * BigRat(factorial(n - 4)))) *
                     (poly_pow(a[1], n - 4) * (a[2] * a[2]));
            return r;
        }
    }
}

/// Truncated expansion evaluated exactly at x = x0:
///   estimate = (lambda)_n * n! * sum_{j=0}^{s} W(n,j) / (lambda-n+j)_j.
/// lambda is any exact rational away from the poles of the denominators.
/// s = n-1 makes the sum complete and the estimate exactly n! [t^n] phi^lambda.
inline BigRat asym_estimate(unsigned n, const BigRat& lambda, unsigned s,
                            const StirlingParams& params, const BigRat& x0) {
    if (n == 0) return BigRat(1);
    if (s > n - 1)
        throw DomainError("asym_estimate requires s <= n-1, got s=" + std::to_string(s) +
                          " n=" + std::to_string(n));
    const std::vector<PolyX> a_poly = a_coeffs(params, s + 1);
    std::vector<PolyX> a(a_poly.size());
    for (std::size_t i = 0; i < a_poly.size(); ++i) a[i] = PolyX(a_poly[i].eval(x0));

    BigRat sum = 0;
    for (unsigned j = 0; j <= s; ++j) {
        const BigRat denom = falling(lambda - BigRat(n) + BigRat(j), j);
        if (denom == 0)
            throw PoleError("(lambda-n+j)_j vanishes at j=" + std::to_string(j) +
                            " for lambda=" + rat_to_string(lambda));
        sum += w_general(n, j, a).coeff(0) / denom;
    }
    return falling(lambda, n) * BigRat(factorial(n)) * sum;
}

/// One estimate-vs-exact record. The exact side is n! [t^n] phi(t)^lambda at
/// x = x0, so lambda must be an integer >= 1 here (asym_estimate itself takes
/// any rational lambda). rel_err is defined whenever exact != 0.
struct AsymReport {
    unsigned n = 0;
    BigRat lambda;
    unsigned s = 0;
    StirlingParams params;
    BigRat x0;
    BigRat estimate, exact, abs_err, rel_err;
    bool rel_err_defined = false;
    bool in_regime = false;  // lambda > n^2 (the advisory n = o(sqrt(lambda)) label)
};

inline AsymReport asym_report(unsigned n, const BigRat& lambda, unsigned s,
                              const StirlingParams& params, const BigRat& x0) {
    if (!is_integer(lambda) || lambda < 1)
        throw DomainError("asym_report needs integer lambda >= 1, got " + rat_to_string(lambda));
    AsymReport r;
    r.n = n;
    r.lambda = lambda;
    r.s = s;
    r.params = params;
    r.x0 = x0;
    if (n == 0) {
        r.estimate = r.exact = 1;
        r.abs_err = 0;
        r.rel_err = 0;
        r.rel_err_defined = true;
        r.in_regime = lambda > 0;
        return r;
    }
    r.estimate = asym_estimate(n, lambda, s, params, x0);
    const unsigned lam_u = static_cast<unsigned>(num(lambda).convert_to<unsigned long long>());
    r.exact = oracle_phi_pow(n, lam_u, params).eval(x0);
    r.abs_err = r.estimate - r.exact;
    if (r.abs_err < 0) r.abs_err = -r.abs_err;
    if (r.exact != 0) {
        BigRat mag = r.exact < 0 ? BigRat(-r.exact) : r.exact;
        r.rel_err = r.abs_err / mag;
        r.rel_err_defined = true;
    } else {
        r.rel_err = 0;
        r.rel_err_defined = false;
    }
    r.in_regime = lambda > BigRat(n) * BigRat(n);
    return r;
}

}  // namespace geomcomb
