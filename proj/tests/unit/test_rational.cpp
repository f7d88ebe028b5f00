#include "geomcomb/factorials.hpp"
#include "geomcomb/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace geomcomb;

namespace {

BigRat random_rat(std::mt19937_64& rng, int num_lo = -9, int num_hi = 9, int den_hi = 9) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return BigRat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("BigRat normalizes to lowest terms with positive denominator") {
    CHECK(BigRat(2, 4) == BigRat(1, 2));
    CHECK(den(parse_rat("1/-2")) == 2);
    CHECK(num(parse_rat("1/-2")) == -1);
    CHECK(den(BigRat(0, 7)) == 1);
    CHECK(num(BigRat(0, 7)) == 0);
    CHECK(is_integer(BigRat(6, 3)));
    // denominators stay positive through arithmetic
    const BigRat q = BigRat(3, 4) - BigRat(5, 2);
    CHECK(den(q) == 4);
    CHECK(num(q) == -7);
}

TEST_CASE("rat_to_string / parse_rat round trip") {
    CHECK(rat_to_string(BigRat(5)) == "5");
    CHECK(rat_to_string(BigRat(-1, 2)) == "-1/2");
    CHECK(rat_to_string(BigRat(6, 4)) == "3/2");
    CHECK(parse_rat("5") == BigRat(5));
    CHECK(parse_rat("-7/3") == BigRat(-7, 3));
    CHECK(parse_rat("+6/4") == BigRat(3, 2));
    CHECK(parse_rat("0") == 0);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);

    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 200; ++i) {
        const BigRat q = random_rat(rng, -999, 999, 999);
        CHECK(parse_rat(rat_to_string(q)) == q);
    }
}

TEST_CASE("decimal rendering uses integer arithmetic only") {
    CHECK(decimal_string(BigRat(0)) == "0");
    CHECK(decimal_string(BigRat(1)) == "1.00000e+00");
    CHECK(decimal_string(BigRat(1, 3)) == "3.33333e-01");
    CHECK(decimal_string(BigRat(1, 8)) == "1.25000e-01");
    CHECK(decimal_string(BigRat(-999999, 1000)) == "-9.99999e+02");
    CHECK(decimal_string(BigRat(2, 3)) == "6.66667e-01");
    CHECK(decimal_string(BigRat(999999999)) == "1.00000e+09");  // rounds up a digit
    CHECK(decimal_string(BigRat(25, 374542)) == "6.67482e-05");
    CHECK(decimal_string(BigRat(1, 2), 1) == "5e-01");
}

TEST_CASE("gen_fact spot values") {
    CHECK(gen_fact(BigRat(5), BigRat(0), 3) == 125);  // (t|0)_n = t^n
    CHECK(gen_fact(BigRat(6), BigRat(2), 3) == 48);   // 6*4*2
    CHECK(gen_fact(BigRat(2), BigRat(1), 4) == 0);    // hits the factor (2 - 2*1)
    CHECK(gen_fact(BigRat(7, 2), BigRat(-1, 3), 0) == 1);
}

TEST_CASE("falling factorial spot values") {
    CHECK(falling(BigRat(5), 2) == 20);
    CHECK(falling(BigRat(3), 5) == 0);
    CHECK(falling(BigRat(-7, 2), 0) == 1);
    CHECK(falling(BigRat(1, 2), 2) == BigRat(-1, 4));
}

TEST_CASE("binom and gen_binom spot values") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(gen_binom(BigRat(1, 2), 2) == BigRat(-1, 8));
    CHECK(gen_binom(BigRat(-17, 5), 0) == 1);
    CHECK(gen_binom(BigRat(4), 2) == 6);
}

TEST_CASE("factorial matches product definition") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(10) == 3628800);
    BigInt acc = 1;
    for (unsigned n = 1; n <= 25; ++n) {
        acc *= n;
        CHECK(factorial(n) == acc);
    }
}

TEST_CASE("gen_fact one-step recurrence") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 50; ++iter) {
        const BigRat t = random_rat(rng);
        const BigRat alpha = random_rat(rng);
        BigRat acc = 1;
        for (unsigned n = 0; n <= 30; ++n) {
            CHECK(gen_fact(t, alpha, n) == acc);
            acc *= t - BigRat(n) * alpha;
        }
    }
}

TEST_CASE("falling equals gen_fact with step 1") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        const BigRat lam = random_rat(rng, -20, 20, 7);
        for (unsigned n = 0; n <= 12; ++n) CHECK(falling(lam, n) == gen_fact(lam, BigRat(1), n));
    }
}

TEST_CASE("gen_binom times i! equals the falling factorial") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        const BigRat r = random_rat(rng, -15, 15, 8);
        for (unsigned i = 0; i <= 10; ++i)
            CHECK(gen_binom(r, i) * BigRat(factorial(i)) == falling(r, i));
    }
}

TEST_CASE("binom matches Pascal recurrence") {
    for (unsigned n = 1; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binom(n, k) == binom(n - 1, k) + (k > 0 ? binom(n - 1, k - 1) : BigInt(0)));
}
