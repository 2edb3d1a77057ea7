#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "aglpoly/numtheory.hpp"

using namespace aglpoly;

TEST_CASE("prime power validation and 2-adic bookkeeping") {
    const PrimePower q5 = PrimePower::make(5, 1);
    CHECK(q5.q == 5);
    CHECK(q5.e == 2);
    CHECK(q5.qprime == 1);
    CHECK(q5.r == 2);

    const PrimePower q9 = PrimePower::make(3, 2);
    CHECK(q9.q == 9);
    CHECK(q9.e == 3);
    CHECK(q9.qprime == 1);
    CHECK(q9.r == 4);

    const PrimePower q11 = PrimePower::make(11, 1);
    CHECK(q11.e == 1);
    CHECK(q11.qprime == 5);
    CHECK(q11.r == 5);
}

TEST_CASE("prime power rejections") {
    CHECK_THROWS_AS(PrimePower::make(2, 3), Error);
    CHECK_THROWS_AS(PrimePower::make(9, 1), Error);
    CHECK_THROWS_AS(PrimePower::make(15, 1), Error);
    CHECK_THROWS_AS(PrimePower::make(7, 0), Error);
    CHECK_THROWS_AS(PrimePower::make(3, 50), Error);  // overflow

    try {
        PrimePower::make(2, 3);
    } catch (const Error& e) {
        CHECK(e.code() == errc::even_characteristic);
    }
    try {
        PrimePower::make(9, 1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_prime);
    }
    try {
        PrimePower::make(3, 50);
    } catch (const Error& e) {
        CHECK(e.code() == errc::overflow);
    }
}

TEST_CASE("e parity tracks q mod 4") {
    for (const PrimePower& pp : odd_prime_powers_up_to(400)) {
        CHECK((pp.e >= 2) == (pp.q % 4 == 1));
        CHECK((pp.e == 1) == (pp.q % 4 == 3));
        CHECK(pp.q - 1 == (std::uint64_t{1} << pp.e) * pp.qprime);
        CHECK(pp.qprime % 2 == 1);
        CHECK(2 * pp.r == pp.q - 1);
    }
}

TEST_CASE("two-adic valuation") {
    CHECK(two_adic_valuation(7) == 0);
    CHECK(two_adic_valuation(12) == 2);
    CHECK(two_adic_valuation(8) == 3);
    CHECK_THROWS_AS(two_adic_valuation(0), Error);
}

TEST_CASE("factorize and divisors") {
    const auto f360 = factorize(360);
    REQUIRE(f360.size() == 3);
    CHECK(f360[0] == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(f360[1] == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(f360[2] == std::pair<std::uint64_t, unsigned>{5, 1});

    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("odd prime power enumeration") {
    std::vector<std::uint64_t> qs;
    for (const PrimePower& pp : odd_prime_powers_up_to(30)) qs.push_back(pp.q);
    CHECK(qs == std::vector<std::uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
}

TEST_CASE("ceil_log") {
    CHECK(ceil_log(3, 1) == 0);
    CHECK(ceil_log(3, 3) == 1);
    CHECK(ceil_log(3, 4) == 2);
    CHECK(ceil_log(5, 25) == 2);
    CHECK(ceil_log(5, 26) == 3);
}

TEST_CASE("gcd shift rule for odd half (examples)") {
    CHECK(shifted_gcd_odd(5, 3) == std::gcd(10, 8));
    CHECK(shifted_gcd_odd(5, 4) == std::gcd(10, 9));
    CHECK_THROWS_AS(shifted_gcd_odd(4, 1), Error);  // u even
}

TEST_CASE("gcd shift rule for odd half agrees with direct gcd") {
    for (std::uint64_t u = 1; u <= 99; u += 2)
        for (std::uint64_t v = 1; v <= 2 * u; ++v)
            CHECK(shifted_gcd_odd(u, v) == std::gcd(2 * u, u + v));
}

TEST_CASE("shifted gcd case rule (examples over q = 13)") {
    const PrimePower pp = PrimePower::make(13, 1);
    CHECK(shifted_gcd(pp, 1) == 1);  // t(m)=0 <= e-2
    CHECK(shifted_gcd(pp, 2) == 4);  // t(m)=e-1 doubles gcd(12,2)
    CHECK(shifted_gcd(pp, 4) == 2);  // t(m)>=e halves gcd(12,4)
    CHECK_THROWS_AS(shifted_gcd(pp, 0), Error);
    CHECK_THROWS_AS(shifted_gcd(pp, 13), Error);
}

TEST_CASE("shifted gcd case rule agrees with direct gcd") {
    for (const PrimePower& pp : odd_prime_powers_up_to(100))
        for (std::uint64_t m = 1; m <= pp.q - 1; ++m)
            CHECK(shifted_gcd(pp, m) == std::gcd(pp.q - 1, pp.r + m));
}

TEST_CASE("order of -gamma^{-m} (examples)") {
    CHECK(neg_inverse_order(PrimePower::make(13, 1), 1) == 12);  // order preserved
    CHECK(neg_inverse_order(PrimePower::make(11, 1), 1) == 5);   // halved
    CHECK(neg_inverse_order(PrimePower::make(11, 1), 2) == 10);  // doubled
    CHECK_THROWS_AS(neg_inverse_order(PrimePower::make(11, 1), 0), Error);
}

TEST_CASE("order shift rule is consistent with the gcd shift rule") {
    // o(-gamma^{-m}) = (q-1)/gcd(q-1, r+n) with n = q-1-m, through the
    // identity -gamma^{-m} = gamma^{r+n}.
    for (const PrimePower& pp : odd_prime_powers_up_to(100))
        for (std::uint64_t m = 1; m <= pp.q - 1; ++m) {
            const std::uint64_t n = pp.q - 1 - m;
            // gcd(q-1, 0) = q-1 covers r+n = 0 mod q-1, where the element is 1
            const std::uint64_t g = std::gcd(pp.q - 1, (pp.r + n) % (pp.q - 1));
            CHECK(neg_inverse_order(pp, m) == (pp.q - 1) / g);
        }
}
