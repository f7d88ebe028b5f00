#pragma once

#include "geomcomb/rational.hpp"

namespace geomcomb {

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Standard binomial coefficient; 0 when k > n.
inline BigInt binom(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

/// Generalized factorial polynomial (t|alpha)_n = t(t-alpha)...(t-(n-1)alpha); 1 for n = 0.
inline BigRat gen_fact(const BigRat& t, const BigRat& alpha, unsigned n) {
    BigRat r = 1;
    BigRat factor = t;
    for (unsigned k = 0; k < n; ++k) {
        r *= factor;
        if (r == 0) return r;
        factor -= alpha;
    }
    return r;
}

/// Falling factorial (lam)_n = lam(lam-1)...(lam-n+1); equals gen_fact(lam, 1, n).
inline BigRat falling(const BigRat& lam, unsigned n) { return gen_fact(lam, BigRat(1), n); }

/// Generalized binomial coefficient with rational top: (r)_i / i!.
inline BigRat gen_binom(const BigRat& r, unsigned i) {
    return falling(r, i) / BigRat(factorial(i));
}

}  // namespace geomcomb
