#include "geomcomb/asymptotics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace geomcomb;

namespace {

std::vector<PolyX> generic_a(unsigned up_to, std::mt19937_64& rng) {
    // generic coefficients a_i = c_i x^i with random nonzero rational c_i;
    // distinct monomial degrees keep the partition terms separated
    std::uniform_int_distribution<int> num(1, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<PolyX> a(up_to + 1);
    a[0] = PolyX(BigRat(1));
    for (unsigned i = 1; i <= up_to; ++i)
        a[i] = PolyX::monomial(i, BigRat(num(rng), den(rng)));
    return a;
}

}  // namespace

TEST_CASE("partitions_with_parts") {
    const auto p42 = partitions_with_parts(4, 2);
    REQUIRE(p42.size() == 2);  // 3+1 and 2+2
    CHECK(p42[0].mult == std::vector<unsigned>{0, 1, 0, 1, 0});
    CHECK(p42[1].mult == std::vector<unsigned>{0, 0, 2, 0, 0});

    const auto pnn = partitions_with_parts(6, 6);
    REQUIRE(pnn.size() == 1);
    CHECK(pnn[0].mult[1] == 6);

    const auto p51 = partitions_with_parts(5, 1);
    REQUIRE(p51.size() == 1);
    CHECK(p51[0].mult[5] == 1);

    CHECK(partitions_with_parts(0, 0).size() == 1);
    CHECK(partitions_with_parts(3, 0).empty());

    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 0; k <= n; ++k)
            for (const auto& pm : partitions_with_parts(n, k)) {
                CHECK(pm.weighted_sum() == n);
                CHECK(pm.parts() == k);
            }
}

TEST_CASE("partition counts agree with the two-variable recurrence") {
    // p(n,k) = p(n-1,k-1) + p(n-k,k)
    unsigned p[12][12] = {};
    p[0][0] = 1;
    for (unsigned n = 1; n <= 11; ++n)
        for (unsigned k = 1; k <= n; ++k)
            p[n][k] = p[n - 1][k - 1] + (n >= k ? p[n - k][k] : 0);
    for (unsigned n = 1; n <= 11; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(partitions_with_parts(n, k).size() == p[n][k]);
}

TEST_CASE("w_general on generic coefficients") {
    std::mt19937_64 rng(17);
    const auto a = generic_a(6, rng);

    // single-partition cases
    CHECK(w_general(2, 1, a) == a[2]);
    CHECK(w_general(5, 4, a) == a[5]);

    // j = 0: a_1^n / n!
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(w_general(n, 0, a) ==
              (BigRat(1) / BigRat(factorial(n))) * poly_pow(a[1], n));

    // j = 2 at n = 4: a_1 a_3 + a_2^2/2
    CHECK(w_general(4, 2, a) == a[1] * a[3] + (BigRat(1, 2)) * (a[2] * a[2]));

    CHECK_THROWS_AS(w_general(3, 3, a), IndexOutOfRangeError);
    CHECK_THROWS_AS(w_general(3, 7, a), IndexOutOfRangeError);
}

TEST_CASE("a_coeffs closed forms") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> v(-3, 3);
    for (int iter = 0; iter < 25; ++iter) {
        const BigRat al(v(rng)), be(v(rng)), ga(v(rng));
        const StirlingParams p{al, be, ga};
        const auto a = a_coeffs(p, 3);

        CHECK(a[0] == PolyX(BigRat(1)));
        CHECK(a[1] == PolyX::from_coeffs({ga, be}));

        // 2 a_2 = (gamma|alpha)_2 + beta(beta - alpha + 2 gamma) x + 2 beta^2 x^2
        const PolyX two_a2 = PolyX::from_coeffs(
            {gen_fact(ga, al, 2), be * (be - al + 2 * ga), 2 * be * be});
        CHECK(BigRat(2) * a[2] == two_a2);

        // 6 a_3 = (gamma|alpha)_3 + [(gamma|alpha)_2 + (beta-2alpha+gamma)(beta-alpha+2gamma)] beta x
        //         + 6 (beta-alpha+gamma) beta^2 x^2 + 6 beta^3 x^3
        const PolyX six_a3 = PolyX::from_coeffs(
            {gen_fact(ga, al, 3),
             (gen_fact(ga, al, 2) + (be - 2 * al + ga) * (be - al + 2 * ga)) * be,
             BigRat(6) * (be - al + ga) * be * be, BigRat(6) * be * be * be});
        CHECK(BigRat(6) * a[3] == six_a3);
    }
}

TEST_CASE("a_coeffs equal the one-bar series coefficients") {
    for (int al = 0; al <= 2; ++al)
        for (int be = 0; be <= 2; ++be)
            for (int ga = 0; ga <= 2; ++ga) {
                const StirlingParams p{BigRat(al), BigRat(be), BigRat(ga)};
                const auto a = a_coeffs(p, 5);
                const auto t = oracle_t_sequence(5, 1, p);
                for (unsigned j = 0; j <= 5; ++j)
                    CHECK(BigRat(factorial(j)) * a[j] == t[j]);
            }
}

TEST_CASE("w_closed equals w_general, including the smallest j = 2 case") {
    for (int al = 0; al <= 3; ++al)
        for (int be = 0; be <= 3; ++be)
            for (int ga = 0; ga <= 3; ++ga) {
                const StirlingParams p{BigRat(al), BigRat(be), BigRat(ga)};
                const auto a = a_coeffs(p, 4);
                for (unsigned n = 1; n <= 8; ++n)
                    for (unsigned j = 0; j <= 2 && j < n; ++j)
                        CHECK(w_closed(n, j, p) == w_general(n, j, a));
            }
}

TEST_CASE("w_closed domain errors") {
    const StirlingParams p{BigRat(0), BigRat(1), BigRat(0)};
    CHECK_THROWS_AS(w_closed(5, 3, p), DomainError);
    CHECK_THROWS_AS(w_closed(2, 2, p), DomainError);
    CHECK_THROWS_AS(w_closed(0, 0, p), DomainError);
    CHECK_NOTHROW(w_closed(3, 2, p));
}

TEST_CASE("complete partition sum reproduces the series power exactly") {
    // Both sides are polynomials of degree <= n in lambda, so agreement at
    // lambda = 1..n+1 establishes the identity in lambda; x stays symbolic.
    for (int al = 0; al <= 2; ++al)
        for (int be = 0; be <= 2; ++be)
            for (int ga = 0; ga <= 2; ++ga) {
                const StirlingParams p{BigRat(al), BigRat(be), BigRat(ga)};
                const auto a = a_coeffs(p, 6);
                for (unsigned n = 1; n <= 6; ++n)
                    for (unsigned lam = 1; lam <= n + 1; ++lam) {
                        PolyX lhs;
                        for (unsigned j = 0; j < n; ++j)
                            lhs += falling(BigRat(lam), n - j) * w_general(n, j, a);
                        lhs = BigRat(factorial(n)) * lhs;
                        CHECK(lhs == oracle_phi_pow(n, lam, p));
                    }
            }
}

TEST_CASE("asym_estimate spot values") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> v(-4, 9);
    std::uniform_int_distribution<int> d(1, 3);

    // n = 1, s = 0: lambda (gamma + beta x0), any rational lambda
    for (int iter = 0; iter < 15; ++iter) {
        const BigRat lam(v(rng), d(rng));
        const StirlingParams p{BigRat(v(rng)), BigRat(v(rng)), BigRat(v(rng))};
        const BigRat x0(v(rng), d(rng));
        CHECK(asym_estimate(1, lam, 0, p, x0) == lam * (p.gamma + p.beta * x0));
    }

    // n = 2, s = 1, gamma = 0 (complete sum):
    //   lambda beta (beta - alpha) x0 + lambda (lambda + 1) beta^2 x0^2
    for (int iter = 0; iter < 25; ++iter) {
        const BigRat lam(v(rng), d(rng));
        const BigRat al(v(rng)), be(v(rng));
        const BigRat x0(v(rng), d(rng));
        const StirlingParams p{al, be, BigRat(0)};
        if (lam == 1) continue;  // (lambda-1)_1 pole at j = 1
        const BigRat expected =
            lam * be * (be - al) * x0 + lam * (lam + 1) * be * be * x0 * x0;
        CHECK(asym_estimate(2, lam, 1, p, x0) == expected);
    }

    CHECK(asym_estimate(0, BigRat(7, 2), 0, {BigRat(1), BigRat(2), BigRat(1)}, BigRat(3)) == 1);
    CHECK_THROWS_AS(asym_estimate(3, BigRat(10), 3, {BigRat(0), BigRat(1), BigRat(0)}, BigRat(1)),
                    DomainError);
}

TEST_CASE("poles are detected exactly") {
    // n = 4, s = 2, lambda = 2: (lambda-2)_2 = 0 at j = 2
    CHECK_THROWS_AS(asym_estimate(4, BigRat(2), 2, {BigRat(0), BigRat(1), BigRat(0)}, BigRat(1)),
                    PoleError);
    // integer lambda >= n has no poles
    CHECK_NOTHROW(asym_estimate(4, BigRat(5), 3, {BigRat(0), BigRat(1), BigRat(0)}, BigRat(1)));
}

TEST_CASE("complete truncation gives zero error") {
    for (int be = 1; be <= 2; ++be)
        for (int ga = 0; ga <= 2; ++ga)
            for (unsigned n = 1; n <= 5; ++n)
                for (unsigned lam : {10u, 100u}) {
                    const StirlingParams p{BigRat(1), BigRat(be), BigRat(ga)};
                    const auto rep = asym_report(n, BigRat(lam), n - 1, p, BigRat(1));
                    CHECK(rep.abs_err == 0);
                    CHECK(rep.estimate == rep.exact);
                }
}

TEST_CASE("report fields and regime label") {
    const StirlingParams p{BigRat(0), BigRat(1), BigRat(0)};
    const auto rep = asym_report(4, BigRat(100), 2, p, BigRat(1));
    CHECK(rep.exact == 112362600);
    CHECK(rep.estimate == 112355100);
    CHECK(rep.abs_err == 7500);
    CHECK(rep.rel_err_defined);
    CHECK(rep.rel_err == BigRat(25, 374542));
    CHECK(rep.in_regime);  // 100 > 16

    const auto tight = asym_report(4, BigRat(10), 2, p, BigRat(1));
    CHECK_FALSE(tight.in_regime);  // 10 < 16

    const auto trivial = asym_report(0, BigRat(5), 0, p, BigRat(1));
    CHECK(trivial.estimate == 1);
    CHECK(trivial.exact == 1);

    CHECK_THROWS_AS(asym_report(3, BigRat(5, 2), 1, p, BigRat(1)), DomainError);
    CHECK_THROWS_AS(asym_report(3, BigRat(0), 1, p, BigRat(1)), DomainError);
}

TEST_CASE("truncation error decays in lambda") {
    const StirlingParams p{BigRat(0), BigRat(1), BigRat(0)};
    const auto r100 = asym_report(4, BigRat(100), 2, p, BigRat(1));
    const auto r1000 = asym_report(4, BigRat(1000), 2, p, BigRat(1));
    const auto r10000 = asym_report(4, BigRat(10000), 2, p, BigRat(1));
    CHECK(r1000.rel_err < r100.rel_err);
    CHECK(r10000.rel_err < r1000.rel_err);
}
