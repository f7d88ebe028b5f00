#pragma once

#include "geomcomb/errors.hpp"
#include "geomcomb/factorials.hpp"
#include "geomcomb/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace geomcomb {

/// The (alpha, beta, gamma) triple of the Hsu-Shiue generalized Stirling
/// numbers. Any exact rationals are accepted; operations with stricter
/// domains (beta != 0, nonnegative integers, ...) enforce their own
/// preconditions.
struct StirlingParams {
    BigRat alpha{0}, beta{0}, gamma{0};

    friend bool operator==(const StirlingParams& a, const StirlingParams& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
    }
    friend bool operator<(const StirlingParams& a, const StirlingParams& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.beta != b.beta) return a.beta < b.beta;
        return a.gamma < b.gamma;
    }

    std::string to_string() const {
        return "(" + rat_to_string(alpha) + "," + rat_to_string(beta) + "," +
               rat_to_string(gamma) + ")";
    }
};

/// Memoized triangular table of S(n,k;alpha,beta,gamma), built row by row from
///   S(n+1,k) = S(n,k-1) + (k*beta - n*alpha + gamma) * S(n,k),
/// seeded with S(0,0) = 1 and S(n,k) = 0 outside 0 <= k <= n.
/// Immutable after construction.
class StirlingTriangle {
  public:
    StirlingTriangle(StirlingParams params, unsigned n_max)
        : params_(std::move(params)), rows_(n_max + 1) {
        rows_[0] = {BigRat(1)};
        for (unsigned n = 0; n < n_max; ++n) {
            rows_[n + 1].assign(n + 2, BigRat(0));
            for (unsigned k = 0; k <= n + 1; ++k) {
                BigRat v = (k > 0) ? rows_[n][k - 1] : BigRat(0);
                if (k <= n)
                    v += (BigRat(k) * params_.beta - BigRat(n) * params_.alpha + params_.gamma) *
                         rows_[n][k];
                rows_[n + 1][k] = std::move(v);
            }
        }
    }

    const StirlingParams& params() const { return params_; }
    unsigned n_max() const { return static_cast<unsigned>(rows_.size()) - 1; }

    /// S(n,k); zero for k > n. n must be within the built range.
    const BigRat& at(unsigned n, unsigned k) const {
        static const BigRat zero{};
        if (n >= rows_.size())
            throw std::out_of_range("StirlingTriangle: row " + std::to_string(n) +
                                    " beyond n_max " + std::to_string(n_max()));
        return k < rows_[n].size() ? rows_[n][k] : zero;
    }

    const std::vector<BigRat>& row(unsigned n) const { return rows_.at(n); }

  private:
    StirlingParams params_;
    std::vector<std::vector<BigRat>> rows_;
};

inline StirlingTriangle build_triangle(const StirlingParams& params, unsigned n_max) {
    return StirlingTriangle(params, n_max);
}

/// Explicit alternating-sum route:
///   S(n,k) = (1/(beta^k k!)) * sum_{s=0}^{k} (-1)^{k-s} C(k,s) (beta*s+gamma | alpha)_n.
/// Requires beta != 0. Verification route; the recurrence triangle is the
/// authoritative one (it has no beta restriction). For k > n the k-th finite
/// difference of a degree-n polynomial vanishes, so the result is an exact 0.
inline BigRat stirling_explicit(unsigned n, unsigned k, const StirlingParams& p) {
    if (p.beta == 0) throw BetaZeroError();
    BigRat sum = 0;
    for (unsigned s = 0; s <= k; ++s) {
        BigRat term = BigRat(binom(k, s)) * gen_fact(BigRat(s) * p.beta + p.gamma, p.alpha, n);
        if ((k - s) % 2 == 1) term = -term;
        sum += term;
    }
    BigRat beta_pow = 1;
    for (unsigned i = 0; i < k; ++i) beta_pow *= p.beta;
    return sum / (beta_pow * BigRat(factorial(k)));
}

/// Grow-on-demand cache of triangles keyed by parameter triple. Not
/// thread-safe; concurrent sweeps should each own one.
class TriangleCache {
  public:
    const StirlingTriangle& get(const StirlingParams& p, unsigned n_needed) {
        auto it = map_.find(p);
        if (it != map_.end() && it->second.n_max() >= n_needed) return it->second;
        unsigned target = std::max(n_needed, it == map_.end() ? 8u : 2 * it->second.n_max());
        auto [pos, inserted] = map_.insert_or_assign(p, StirlingTriangle(p, target));
        return pos->second;
    }

  private:
    std::map<StirlingParams, StirlingTriangle> map_;
};

}  // namespace geomcomb
