#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "exdio/arith.hpp"
#include "test_util.hpp"

using namespace exdio::arith;

TEST_CASE("isqrt on small values and edges") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(2) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(isqrt(17) == 4);
    CHECK_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("isqrt sandwich property and GMP agreement") {
    testutil::Rng rng(20240801);
    for (int i = 0; i < 10000; ++i) {
        const unsigned long width = 1 + rng.index(512);
        const mpz_class n = rng.bits(width);
        const mpz_class r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
        CHECK(r == testutil::gmp_sqrt(n));
    }
}

TEST_CASE("perfect square detection with examples") {
    CHECK(is_perfect_square(0).value() == 0);
    CHECK(is_perfect_square(1).value() == 1);
    CHECK(!is_perfect_square(2));
    CHECK(!is_perfect_square(3));
    CHECK(is_perfect_square(196).value() == 14);
    CHECK(is_perfect_square(14161).value() == 119);
    CHECK(!is_perfect_square(46));
    CHECK(!is_perfect_square(-4));
}

TEST_CASE("perfect square round trip and near misses") {
    testutil::Rng rng(77);
    for (int i = 0; i < 5000; ++i) {
        const mpz_class r = rng.bits(1 + rng.index(256)) + 1;
        CHECK(is_perfect_square(r * r).value() == r);
        CHECK(!is_perfect_square(r * r + 1));
        CHECK(!is_perfect_square(r * r + 2 * r));  // largest non-square below (r+1)^2
    }
}

TEST_CASE("perfect square agrees with GMP on random words") {
    testutil::Rng rng(31415);
    for (int i = 0; i < 20000; ++i) {
        const mpz_class n = rng.bits(1 + rng.index(64));
        CHECK(is_perfect_square(n).has_value() == testutil::gmp_is_square(n));
    }
}

TEST_CASE("2-adic valuation") {
    CHECK(v2(8) == 3);
    CHECK(v2(12) == 2);
    CHECK(v2(14) == 1);
    CHECK(v2(7) == 0);
    CHECK(v2(-24) == 3);
    CHECK_THROWS_AS(v2(0), std::invalid_argument);
    testutil::Rng rng(99);
    for (int i = 0; i < 2000; ++i) {
        const mpz_class odd = rng.bits(1 + rng.index(128)) * 2 + 1;
        const unsigned long k = rng.index(200);
        CHECK(v2(odd << k) == k);
    }
}

TEST_CASE("jacobi examples and domain checks") {
    CHECK(jacobi(3, 5) == -1);
    CHECK(jacobi(4, 5) == 1);
    CHECK(jacobi(10, 5) == 0);
    CHECK(jacobi(2, 9) == 1);
    CHECK(jacobi(-1, 7) == -1);  // 7 = 3 (mod 4)
    CHECK(jacobi(-1, 13) == 1);
    CHECK_THROWS_AS(jacobi(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, -7), std::invalid_argument);
}

TEST_CASE("jacobi matches Euler's criterion at odd primes") {
    for (const unsigned long p : testutil::primes_below(100)) {
        if (p == 2) continue;
        const mpz_class pz(p);
        for (long a = -static_cast<long>(p); a <= static_cast<long>(2 * p); ++a)
            CHECK(jacobi(a, pz) == testutil::legendre_euler(a, pz));
    }
}

TEST_CASE("jacobi matches GMP on random inputs") {
    testutil::Rng rng(271828);
    for (int i = 0; i < 5000; ++i) {
        const mpz_class n = rng.bits(1 + rng.index(128)) * 2 + 3;
        mpz_class a = rng.bits(1 + rng.index(160));
        if (rng.index(2)) a = -a;
        CHECK(jacobi(a, n) == mpz_jacobi(a.get_mpz_t(), n.get_mpz_t()));
    }
}

TEST_CASE("small prime test") {
    CHECK(!is_small_prime(0));
    CHECK(!is_small_prime(1));
    CHECK(is_small_prime(2));
    CHECK(is_small_prime(3));
    CHECK(!is_small_prime(4));
    CHECK(is_small_prime(97));
    CHECK(!is_small_prime(1ul << 20));
    CHECK(is_small_prime(mpz_class("1099511627689")));  // largest prime below 2^40
    CHECK_THROWS_AS(is_small_prime(mpz_class(1) << 40), std::domain_error);
    CHECK_THROWS_AS(is_small_prime(-7), std::domain_error);
}

TEST_CASE("multiplicative order examples") {
    CHECK(mult_order(2, 7) == 3);
    CHECK(mult_order(3, 7) == 6);
    CHECK(mult_order(10, 7) == 6);
    CHECK(mult_order(1, 13) == 1);
    CHECK(mult_order(2, 3) == 2);
    CHECK_THROWS_AS(mult_order(7, 7), std::invalid_argument);
    CHECK_THROWS_AS(mult_order(2, 8), std::invalid_argument);
    CHECK_THROWS_AS(mult_order(2, mpz_class(1) << 41), std::domain_error);
}

TEST_CASE("multiplicative order is minimal and divides p-1") {
    for (const unsigned long p : testutil::primes_below(60)) {
        if (p < 3) continue;
        const mpz_class pz(p);
        for (unsigned long a = 1; a < p; ++a) {
            const unsigned long e = mpz_get_ui(mult_order(a, pz).get_mpz_t());
            CHECK((p - 1) % e == 0);
            // naive minimality scan
            mpz_class acc = 1;
            unsigned long naive = 0;
            for (unsigned long i = 1; i <= p - 1; ++i) {
                acc = acc * a % pz;
                if (acc == 1) {
                    naive = i;
                    break;
                }
            }
            CHECK(e == naive);
        }
    }
}
