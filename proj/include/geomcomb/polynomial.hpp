#pragma once

#include "geomcomb/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace geomcomb {

/// Dense polynomial in the color indeterminate x with exact rational
/// coefficients. Coefficient i is the coefficient of x^i; no trailing zero
/// coefficients are stored, so the zero polynomial is the empty vector and
/// degree() is -1 for it. Immutable in spirit: every operation returns a
/// fresh value.
class PolyX {
  public:
    PolyX() = default;
    explicit PolyX(BigRat constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit PolyX(long long constant) : PolyX(BigRat(constant)) {}
    PolyX(std::initializer_list<BigRat> coeffs) : c_(coeffs) { normalize(); }

    static PolyX from_coeffs(std::vector<BigRat> coeffs) {
        PolyX p;
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }
    static PolyX monomial(unsigned degree, BigRat coeff = BigRat(1)) {
        PolyX p;
        if (coeff != 0) {
            p.c_.assign(degree + 1, BigRat(0));
            p.c_[degree] = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigRat& coeff(std::size_t i) const {
        static const BigRat zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<BigRat>& coeffs() const { return c_; }

    BigRat eval(const BigRat& x0) const {
        BigRat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i];
        return acc;
    }

    /// p(x) * x^k
    PolyX shifted(unsigned k) const {
        if (is_zero()) return {};
        PolyX p;
        p.c_.assign(c_.size() + k, BigRat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) p.c_[i + k] = c_[i];
        return p;
    }

    friend bool operator==(const PolyX& a, const PolyX& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyX& a, const PolyX& b) { return !(a == b); }

    friend PolyX operator+(const PolyX& a, const PolyX& b) {
        PolyX r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.normalize();
        return r;
    }
    friend PolyX operator-(const PolyX& a) {
        PolyX r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend PolyX operator-(const PolyX& a, const PolyX& b) { return a + (-b); }
    friend PolyX operator*(const PolyX& a, const PolyX& b) {
        if (a.is_zero() || b.is_zero()) return {};
        PolyX r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }
    friend PolyX operator*(const BigRat& s, const PolyX& p) {
        if (s == 0) return {};
        PolyX r = p;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend PolyX operator*(const PolyX& p, const BigRat& s) { return s * p; }
    PolyX& operator+=(const PolyX& o) { return *this = *this + o; }
    PolyX& operator-=(const PolyX& o) { return *this = *this - o; }
    PolyX& operator*=(const PolyX& o) { return *this = *this * o; }

    /// Low-to-high coefficient strings; ["0"] for the zero polynomial.
    std::vector<std::string> coeff_strings() const {
        if (is_zero()) return {"0"};
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(rat_to_string(c));
        return out;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            if (i == 0) {
                out += rat_to_string(c_[i]);
            } else {
                if (c_[i] != 1) out += rat_to_string(c_[i]) + "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigRat> c_;
};

inline PolyX poly_add(const PolyX& a, const PolyX& b) { return a + b; }
inline PolyX poly_mul(const PolyX& a, const PolyX& b) { return a * b; }
inline PolyX poly_scale(const PolyX& p, const BigRat& s) { return s * p; }
inline BigRat poly_eval(const PolyX& p, const BigRat& x0) { return p.eval(x0); }

inline PolyX poly_pow(const PolyX& base, unsigned e) {
    PolyX r(BigRat(1));
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace geomcomb
