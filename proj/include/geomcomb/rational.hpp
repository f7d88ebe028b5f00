#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace geomcomb {

// Exact arithmetic everywhere: arbitrary-precision integers and normalized
// rationals (lowest terms, positive denominator) via boost::multiprecision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRat& q) { return den(q) == 1; }

/// "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string rat_to_string(const BigRat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

/// Parses "p" or "p/q" (optional sign on either part); the result is
/// normalized with a positive denominator. Throws std::invalid_argument.
inline BigRat parse_rat(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("empty integer token");
        const bool negative = s[0] == '-';
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("sign without digits");
        BigInt v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad rational: " + std::string(s));
            v = v * 10 + (s[i] - '0');
        }
        return negative ? BigInt(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRat(parse_int(text));
    BigInt p = parse_int(text.substr(0, slash));
    BigInt q = parse_int(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return BigRat(p, q);
}

/// Scientific rendering with `sig` significant digits, computed with integer
/// arithmetic only (round half away from zero). Presentation-only; never
/// round-trips back into computations.
inline std::string decimal_string(const BigRat& q, unsigned sig = 6) {
    if (sig == 0) sig = 1;
    if (q == 0) return "0";
    const bool neg = q < 0;
    const BigInt P = neg ? BigInt(-num(q)) : num(q);
    const BigInt Q = den(q);

    auto pow10 = [](long long e) {
        BigInt r = 1;
        for (long long i = 0; i < e; ++i) r *= 10;
        return r;
    };
    // exact e = floor(log10(P/Q)), starting from the digit-count estimate
    long long e = static_cast<long long>(P.str().size()) - static_cast<long long>(Q.str().size());
    auto at_least = [&](long long exp) {  // P/Q >= 10^exp ?
        return exp >= 0 ? P >= Q * pow10(exp) : P * pow10(-exp) >= Q;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;

    // value = m * 10^{e-sig+1} with 10^{sig-1} <= m < 10^{sig}
    const long long k = static_cast<long long>(sig) - 1 - e;
    BigInt a = P, b = Q;
    if (k >= 0)
        a *= pow10(k);
    else
        b *= pow10(-k);
    BigInt m = (2 * a + b) / (2 * b);  // round half away from zero (operands positive)
    if (m == pow10(sig)) {             // rounding carried into a new leading digit
        m = pow10(sig - 1);
        ++e;
    }
    std::string digits = m.str();
    std::string out = neg ? "-" : "";
    out += digits.substr(0, 1);
    if (sig > 1) out += "." + digits.substr(1);
    out += "e";
    out += (e < 0) ? "-" : "+";
    std::string es = std::to_string(e < 0 ? -e : e);
    if (es.size() < 2) es.insert(0, "0");
    return out + es;
}

}  // namespace geomcomb
