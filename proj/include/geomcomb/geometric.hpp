#pragma once

#include "geomcomb/errors.hpp"
#include "geomcomb/factorials.hpp"
#include "geomcomb/polynomial.hpp"
#include "geomcomb/stirling.hpp"

#include <vector>

namespace geomcomb {

/// Geometric polynomial via the Stirling transform:
///   G_n^x = sum_{k=0}^{n} beta^k k! S(n,k) x^k.
inline PolyX geom_poly(const StirlingTriangle& tri, unsigned n) {
    std::vector<BigRat> coeffs(n + 1, BigRat(0));
    BigRat beta_pow = 1;
    BigInt kfact = 1;
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) {
            beta_pow *= tri.params().beta;
            kfact *= k;
        }
        coeffs[k] = beta_pow * BigRat(kfact) * tri.at(n, k);
    }
    return PolyX::from_coeffs(std::move(coeffs));
}

inline PolyX geom_poly(unsigned n, const StirlingParams& params) {
    return geom_poly(StirlingTriangle(params, n), n);
}

/// Higher-order transform:
///   T_n^{lambda,x} = sum_{k=0}^{n} C(k+lambda-1, k) k! S(n,k) beta^k x^k.
/// lambda >= 1; T_n^{1,x} coincides with geom_poly.
inline PolyX t_poly(const StirlingTriangle& tri, unsigned n, unsigned lambda) {
    if (lambda == 0) throw LambdaZeroError();
    std::vector<BigRat> coeffs(n + 1, BigRat(0));
    BigRat beta_pow = 1;
    BigInt kfact = 1;
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) {
            beta_pow *= tri.params().beta;
            kfact *= k;
        }
        coeffs[k] = BigRat(binom(k + lambda - 1, k)) * BigRat(kfact) * beta_pow * tri.at(n, k);
    }
    return PolyX::from_coeffs(std::move(coeffs));
}

inline PolyX t_poly(unsigned n, unsigned lambda, const StirlingParams& params) {
    return t_poly(StirlingTriangle(params, n), n, lambda);
}

/// One-bar binomial convolution:
///   sum_k C(n,k) G_k^x(alpha,beta,0) (gamma|alpha)_{n-k},
/// which must equal t_poly(n, 1, params).
inline PolyX t_conv_binomial(unsigned n, const StirlingParams& params) {
    StirlingTriangle tri0({params.alpha, params.beta, BigRat(0)}, n);
    PolyX acc;
    for (unsigned k = 0; k <= n; ++k) {
        BigRat scalar = BigRat(binom(n, k)) * gen_fact(params.gamma, params.alpha, n - k);
        if (scalar == 0) continue;
        acc += scalar * geom_poly(tri0, k);
    }
    return acc;
}

/// Multinomial convolution over compositions r_1+...+r_{lambda+1} = n of the
/// EGF coefficient sequences (gamma|alpha)_m and G_m^x(alpha,beta,0), computed
/// as lambda successive binomial convolutions. Must equal t_poly(n, lambda, .).
inline PolyX t_conv_multinomial(unsigned n, unsigned lambda, const StirlingParams& params) {
    if (lambda == 0) throw LambdaZeroError();
    StirlingTriangle tri0({params.alpha, params.beta, BigRat(0)}, n);
    std::vector<PolyX> gseq(n + 1);
    for (unsigned m = 0; m <= n; ++m) gseq[m] = geom_poly(tri0, m);

    std::vector<PolyX> acc(n + 1);
    for (unsigned m = 0; m <= n; ++m)
        acc[m] = PolyX(gen_fact(params.gamma, params.alpha, m));
    for (unsigned round = 0; round < lambda; ++round) {
        std::vector<PolyX> next(n + 1);
        for (unsigned m = 0; m <= n; ++m) {
            PolyX s;
            for (unsigned k = 0; k <= m; ++k) s += BigRat(binom(m, k)) * (acc[k] * gseq[m - k]);
            next[m] = std::move(s);
        }
        acc = std::move(next);
    }
    return acc[n];
}

}  // namespace geomcomb
