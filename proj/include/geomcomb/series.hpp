#pragma once

#include "geomcomb/errors.hpp"
#include "geomcomb/factorials.hpp"
#include "geomcomb/polynomial.hpp"
#include "geomcomb/stirling.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace geomcomb {

/// Truncated formal power series in t, with coefficients that are polynomials
/// in x over the exact rationals. coeff(i) is the coefficient of t^i; all
/// arithmetic truncates at the order. This is the independent verification
/// route for the transform-based polynomials.
class Series {
  public:
    explicit Series(unsigned order) : c_(order + 1) {}

    static Series one(unsigned order) {
        Series s(order);
        s.c_[0] = PolyX(BigRat(1));
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    PolyX& operator[](std::size_t i) { return c_.at(i); }
    const PolyX& operator[](std::size_t i) const { return c_.at(i); }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  private:
    std::vector<PolyX> c_;
};

/// Cauchy product truncated at min(order a, order b).
inline Series series_mul(const Series& a, const Series& b) {
    const unsigned order = std::min(a.order(), b.order());
    Series r(order);
    for (unsigned i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

inline Series series_add(const Series& a, const Series& b) {
    const unsigned order = std::min(a.order(), b.order());
    Series r(order);
    for (unsigned i = 0; i <= order; ++i) r[i] = a[i] + b[i];
    return r;
}

inline Series series_scale(const BigRat& s, const Series& a) {
    Series r(a.order());
    for (unsigned i = 0; i <= a.order(); ++i) r[i] = s * a[i];
    return r;
}

/// a^m by binary exponentiation; a^0 = 1 at the same order.
inline Series series_pow(const Series& a, unsigned m) {
    Series result = Series::one(a.order());
    Series base = a;
    while (m > 0) {
        if (m & 1u) result = series_mul(result, base);
        m >>= 1u;
        if (m > 0) base = series_mul(base, base);
    }
    return result;
}

/// (1 - u)^{-lambda} = sum_j C(lambda+j-1, j) u^j, valid because u has zero
/// constant term (so u^j only feeds t^j and beyond).
inline Series series_geom_inverse(const Series& u, unsigned lambda) {
    if (!u[0].is_zero()) throw NonzeroConstantTermError();
    const unsigned order = u.order();
    Series r = Series::one(order);
    Series upow = Series::one(order);
    for (unsigned j = 1; j <= order; ++j) {
        upow = series_mul(upow, u);
        if (upow.is_zero()) break;
        r = series_add(r, series_scale(BigRat(binom(lambda + j - 1, j)), upow));
    }
    return r;
}

/// (1 + alpha t)^{exponent} = sum_i gen_binom(exponent, i) alpha^i t^i,
/// with rational exponent. alpha must be nonzero (use exp_series otherwise).
inline Series base_binomial_series(const BigRat& exponent, const BigRat& alpha, unsigned order) {
    if (alpha == 0) throw AlphaZeroError();
    Series s(order);
    BigRat alpha_pow = 1;
    for (unsigned i = 0; i <= order; ++i) {
        if (i > 0) alpha_pow *= alpha;
        s[i] = PolyX(gen_binom(exponent, i) * alpha_pow);
    }
    return s;
}

/// e^{ct} = sum_i c^i/i! t^i.
inline Series exp_series(const BigRat& c, unsigned order) {
    Series s(order);
    BigRat term = 1;
    s[0] = PolyX(BigRat(1));
    for (unsigned i = 1; i <= order; ++i) {
        term = term * c / BigRat(i);
        s[i] = PolyX(term);
    }
    return s;
}

namespace detail {

/// Numerator (1+alpha t)^{gamma/alpha} (or e^{gamma t}) of the master series.
inline Series master_numerator(const StirlingParams& p, unsigned order) {
    if (p.alpha == 0) return exp_series(p.gamma, order);
    return base_binomial_series(p.gamma / p.alpha, p.alpha, order);
}

/// u(t) = x * ((1+alpha t)^{beta/alpha} - 1)  (or x * (e^{beta t} - 1)).
inline Series master_u(const StirlingParams& p, unsigned order) {
    Series v = (p.alpha == 0) ? exp_series(p.beta, order)
                              : base_binomial_series(p.beta / p.alpha, p.alpha, order);
    v[0] = v[0] - PolyX(BigRat(1));
    Series u(order);
    for (unsigned i = 0; i <= order; ++i) u[i] = v[i].shifted(1);
    return u;
}

}  // namespace detail

/// Full master series numerator/(1-u)^lambda truncated at `order`.
inline Series master_series(unsigned order, unsigned lambda, const StirlingParams& p) {
    if (lambda == 0) throw LambdaZeroError();
    Series num = detail::master_numerator(p, order);
    Series den = series_geom_inverse(detail::master_u(p, order), lambda);
    return series_mul(num, den);
}

/// T_0 .. T_order extracted from the master series: T_n = n! [t^n].
inline std::vector<PolyX> oracle_t_sequence(unsigned order, unsigned lambda,
                                            const StirlingParams& p) {
    Series f = master_series(order, lambda, p);
    std::vector<PolyX> out(order + 1);
    BigInt nfact = 1;
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0) nfact *= n;
        out[n] = BigRat(nfact) * f[n];
    }
    return out;
}

inline PolyX oracle_t(unsigned n, unsigned lambda, const StirlingParams& p) {
    return oracle_t_sequence(n, lambda, p)[n];
}

/// n! [t^n] phi(t)^lambda where phi is the one-bar master series. For gamma=0
/// this coincides with oracle_t; in general it equals oracle_t with gamma
/// replaced by lambda*gamma (the two exposed targets differ on purpose).
inline std::vector<PolyX> oracle_phi_pow_sequence(unsigned order, unsigned lambda,
                                                  const StirlingParams& p) {
    if (lambda == 0) throw LambdaZeroError();
    Series phi = master_series(order, 1, p);
    Series f = series_pow(phi, lambda);
    std::vector<PolyX> out(order + 1);
    BigInt nfact = 1;
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0) nfact *= n;
        out[n] = BigRat(nfact) * f[n];
    }
    return out;
}

inline PolyX oracle_phi_pow(unsigned n, unsigned lambda, const StirlingParams& p) {
    return oracle_phi_pow_sequence(n, lambda, p)[n];
}

}  // namespace geomcomb
