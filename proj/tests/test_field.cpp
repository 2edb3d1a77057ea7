#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "aglpoly/field.hpp"
#include "helpers.hpp"

using namespace aglpoly;
using aglpoly::testing::brute_force_order;

TEST_CASE("prime field construction") {
    const Field f(5);
    CHECK(f.q() == 5);
    CHECK(f.modulus() == std::vector<std::uint64_t>{0, 1});  // modulus is x itself
    CHECK(f.gamma().enc() == 2);
    CHECK(f.gamma().order() == 4);
}

TEST_CASE("GF(9) gets modulus x^2+1 and gamma = x+1") {
    const Field f(3, 2);
    CHECK(f.q() == 9);
    CHECK(f.modulus() == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(f.gamma().enc() == 4);  // x + 1

    // (1+x)^2 = 2x, (1+x)^4 = 2, (1+x)^8 = 1: order exactly 8
    const Fq g = f.gamma();
    CHECK((g * g).enc() == 6);
    CHECK(g.pow(4).enc() == 2);
    CHECK(g.pow(8) == f.one());
    CHECK(g.order() == 8);
}

TEST_CASE("even characteristic and composite p are rejected") {
    CHECK_THROWS_AS(Field(2, 3), Error);
    CHECK_THROWS_AS(Field(15), Error);
}

TEST_CASE("arithmetic examples") {
    const Field f5(5);
    CHECK(f5.elem(2).inv() == f5.elem(3));

    const Field f9(3, 2);
    const Fq x = f9.elem(3);
    CHECK((x * x).enc() == 2);              // x^2 = -1 = 2
    CHECK(f9.elem(8).inv() == f9.elem(7));  // (2+2x)^{-1} = 1+2x
    CHECK(f9.elem(8) * f9.elem(7) == f9.one());
}

TEST_CASE("division by zero and zero-element errors") {
    const Field f(5);
    CHECK_THROWS_AS(f.zero().inv(), Error);
    CHECK_THROWS_AS(f.order(f.zero()), Error);
    CHECK_THROWS_AS(f.dlog(f.zero()), Error);
    try {
        f.zero().inv();
    } catch (const Error& e) {
        CHECK(e.code() == errc::division_by_zero);
    }
    try {
        f.order(f.zero());
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_element);
    }
}

TEST_CASE("encodings round-trip and out-of-range is rejected") {
    const Field f(3, 2);
    for (std::uint64_t e = 0; e < f.q(); ++e) CHECK(f.elem(e).enc() == e);
    CHECK_THROWS_AS(f.elem(9), Error);
    CHECK(f.from_int(-1) == -f.one());
    CHECK(f.from_int(3) == f.zero());
}

TEST_CASE("frobenius examples over GF(9)") {
    const Field f(3, 2);
    const Fq x = f.elem(3);
    CHECK(x.frobenius(1).enc() == 6);  // x^3 = -x = 2x
    CHECK(x.frobenius(0) == x);
    const Fq y = f.elem(4);  // 1 + x
    CHECK(y.frobenius(1).frobenius(1) == y);
    CHECK(y.bar() == y.frobenius(1));
}

TEST_CASE("bar map requires even extension degree") {
    const Field f(5);
    CHECK_THROWS_AS(f.one().bar(), Error);
}

TEST_CASE("frobenius is a field automorphism") {
    for (const auto& [p, l] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {3, 2}, {5, 2}, {3, 3}}) {
        const Field f(p, l);
        for (std::uint64_t j = 0; j < l; ++j)
            for (std::uint64_t xe = 0; xe < f.q(); ++xe)
                for (std::uint64_t ye = 0; ye < f.q(); ye += 3) {
                    const Fq x = f.elem(xe), y = f.elem(ye);
                    CHECK((x + y).frobenius(j) == x.frobenius(j) + y.frobenius(j));
                    CHECK((x * y).frobenius(j) == x.frobenius(j) * y.frobenius(j));
                }
        for (std::uint64_t xe = 0; xe < f.q(); ++xe)
            CHECK(f.elem(xe).frobenius(l) == f.elem(xe));
    }
}

TEST_CASE("multiplicative order examples") {
    const Field f5(5);
    CHECK(f5.elem(4).order() == 2);
    CHECK(f5.elem(2).order() == 4);
    const Field f9(3, 2);
    CHECK(f9.elem(4).order() == 8);
}

TEST_CASE("order agrees with brute force") {
    for (const auto& [p, l] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {5, 1}, {3, 2}, {13, 1}, {5, 2}, {3, 3}}) {
        const Field f(p, l);
        for (std::uint64_t e = 1; e < f.q(); ++e) {
            const Fq x = f.elem(e);
            CHECK(x.order() == brute_force_order(x));
            CHECK((f.q() - 1) % x.order() == 0);
        }
    }
}

TEST_CASE("order of gamma powers follows the gcd formula") {
    for (const PrimePower& pp : odd_prime_powers_up_to(200)) {
        const Field f(pp.p, pp.l);
        const Fq g = f.gamma();
        for (std::uint64_t m = 1; m <= pp.q - 1; ++m)
            CHECK(g.pow(m).order() == (pp.q - 1) / std::gcd(pp.q - 1, m));
    }
}

TEST_CASE("order of -gamma^{-m} matches the case rule, against the real element") {
    for (const PrimePower& pp : odd_prime_powers_up_to(100)) {
        const Field f(pp.p, pp.l);
        const Fq g = f.gamma();
        for (std::uint64_t m = 1; m <= pp.q - 1; ++m)
            CHECK((-g.pow(m).inv()).order() == neg_inverse_order(pp, m));
    }
}

TEST_CASE("discrete log examples over GF(5)") {
    const Field f(5);
    CHECK(f.dlog(f.one()) == 0);
    CHECK(f.dlog(f.elem(3)) == 3);  // 2^3 = 8 = 3
    CHECK(f.dlog(f.elem(4)) == 2);
}

TEST_CASE("discrete log inverts exponentiation") {
    for (const auto& [p, l] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {5, 1}, {3, 2}, {13, 1}, {5, 2}, {3, 3}, {7, 2}}) {
        const Field f(p, l);
        for (std::uint64_t m = 0; m < f.q() - 1; ++m)
            CHECK(f.dlog(f.gamma().pow(m)) == m);
    }
}

TEST_CASE("mixed field contexts are rejected") {
    const Field f1(5), f2(5);
    CHECK_THROWS_AS(f1.elem(2) * f2.elem(2), Error);
    CHECK(f1.elem(2) != f2.elem(2));  // distinct contexts are never equal
    try {
        f1.elem(1) + f2.elem(1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::mixed_contexts);
    }
}

TEST_CASE("caller-supplied modulus") {
    // x^2 + x + 2 is irreducible over F_3 (no roots)
    const Field f(3, 2, {2, 1, 1});
    CHECK(f.modulus() == std::vector<std::uint64_t>{2, 1, 1});
    CHECK(f.gamma().order() == 8);
    // x * x = -x - 2 = 2x + 1 under this modulus
    const Fq x = f.elem(3);
    CHECK(x * x == f.elem(7));

    // x^2 + 2 = (x-1)(x+1) is reducible
    CHECK_THROWS_AS(Field(3, 2, std::vector<std::uint64_t>{2, 0, 1}), Error);
    // non-monic is rejected
    CHECK_THROWS_AS(Field(3, 2, std::vector<std::uint64_t>{1, 1, 2}), Error);
    // wrong length is rejected
    CHECK_THROWS_AS(Field(3, 2, std::vector<std::uint64_t>{1, 0, 0, 1}), Error);
}

TEST_CASE("pow edge cases") {
    const Field f(7);
    CHECK(f.elem(3).pow(0) == f.one());
    CHECK(f.zero().pow(0) == f.one());
    CHECK(f.zero().pow(5) == f.zero());
    CHECK(f.elem(3).pow(6) == f.one());
}

TEST_CASE("degree-4 extension builds and has consistent arithmetic") {
    const Field f(3, 4);  // q = 81, needs quadratic trial divisors
    CHECK(f.q() == 81);
    CHECK(f.gamma().order() == 80);
    const Fq x = f.elem(3);
    CHECK(x.pow(4) == x * x * x * x);
    CHECK(x.frobenius(4) == x);
}
