#include "geomcomb/polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace geomcomb;

namespace {

PolyX random_poly(std::mt19937_64& rng, int max_degree = 5) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<BigRat> c(deg(rng) + 1);
    for (auto& x : c) x = BigRat(num(rng), den(rng));
    return PolyX::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial representation") {
    PolyX z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeff(0) == 0);
    CHECK(z.coeff(17) == 0);
    CHECK(z.coeff_strings() == std::vector<std::string>{"0"});
    CHECK(PolyX(BigRat(0)) == z);
    CHECK(PolyX::from_coeffs({BigRat(0), BigRat(0)}) == z);
}

TEST_CASE("normalization strips trailing zeros") {
    PolyX p = PolyX::from_coeffs({BigRat(1), BigRat(2), BigRat(0)});
    CHECK(p.degree() == 1);
    CHECK(p == PolyX::from_coeffs({BigRat(1), BigRat(2)}));
}

TEST_CASE("spot arithmetic") {
    const PolyX x = PolyX::monomial(1);
    const PolyX xp1 = PolyX::from_coeffs({BigRat(1), BigRat(1)});
    CHECK(poly_mul(x, xp1) == PolyX::from_coeffs({BigRat(0), BigRat(1), BigRat(1)}));  // x^2 + x
    CHECK(poly_eval(PolyX::from_coeffs({BigRat(0), BigRat(1), BigRat(2)}), BigRat(1)) == 3);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const PolyX p = random_poly(rng);
        CHECK(poly_add(p, PolyX{}) == p);
        CHECK(p - p == PolyX{});
        CHECK(poly_scale(p, BigRat(0)) == PolyX{});
    }
}

TEST_CASE("ring axioms on randomized instances") {
    std::mt19937_64 rng(0xBEEF);
    for (int i = 0; i < 100; ++i) {
        const PolyX p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(0xABCD);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    for (int i = 0; i < 100; ++i) {
        const PolyX p = random_poly(rng), q = random_poly(rng);
        const BigRat x0(num(rng), den(rng));
        CHECK((p * q).eval(x0) == p.eval(x0) * q.eval(x0));
        CHECK((p + q).eval(x0) == p.eval(x0) + q.eval(x0));
    }
}

TEST_CASE("shifted multiplies by a power of x") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20; ++i) {
        const PolyX p = random_poly(rng);
        CHECK(p.shifted(2) == p * PolyX::monomial(2));
        CHECK(p.shifted(0) == p);
    }
    CHECK(PolyX{}.shifted(3) == PolyX{});
}

TEST_CASE("degree bookkeeping under multiplication") {
    std::mt19937_64 rng(314);
    for (int i = 0; i < 50; ++i) {
        const PolyX p = random_poly(rng), q = random_poly(rng);
        if (p.is_zero() || q.is_zero())
            CHECK((p * q).is_zero());
        else
            CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("string rendering") {
    CHECK(PolyX{}.to_string() == "0");
    CHECK(PolyX(BigRat(3)).to_string() == "3");
    CHECK(PolyX::from_coeffs({BigRat(0), BigRat(1), BigRat(2)}).to_string() == "x + 2*x^2");
    CHECK(PolyX::from_coeffs({BigRat(1, 2), BigRat(-1)}).to_string() == "1/2 + -1*x");
}
