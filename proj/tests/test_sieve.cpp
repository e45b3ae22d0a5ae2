#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exdio/sieve.hpp"
#include "test_util.hpp"

using namespace exdio::sieve;

namespace {

struct KnownSolution {
    unsigned long a, b, m, n;
};

constexpr KnownSolution kKnown[] = {
    {2, 5, 2, 3},   {2, 10, 1, 2}, {2, 10, 1, 6},  {2, 58, 1, 2},
    {3, 45, 1, 2},  {4, 100, 1, 3}, {10, 58, 1, 2},
};

}  // namespace

TEST_CASE("classifier pinned verdicts") {
    CHECK(classify_exclusion(2, 5, 1, 2).rule == ExclusionRule::T9_I);
    CHECK(classify_exclusion(3, 5, 1, 2).rule == ExclusionRule::T7);
    // 5 mod 3 == 2 and 3 | 3, so the mixed-parity rule fires without swapping roles.
    CHECK(classify_exclusion(5, 3, 1, 2).rule == ExclusionRule::T13_I);
    CHECK(classify_exclusion(2, 10, 1, 2).rule == ExclusionRule::NONE);
    CHECK(!classify_exclusion(2, 10, 1, 2).excluded);
    CHECK(!classify_exclusion(2, 10, 1, 3).excluded);  // no rule applies; the sieve decides
    CHECK(!classify_exclusion(2, 5, 2, 3).excluded);   // the x=22 solution must survive
    CHECK(classify_exclusion(4, 6, 1, 2).rule == ExclusionRule::T11);
    CHECK(classify_exclusion(2, 8, 1, 3).rule == ExclusionRule::T12);
    CHECK(classify_exclusion(4, 16, 1, 3).rule == ExclusionRule::T12);
    CHECK(classify_exclusion(8, 9, 2, 4).rule == ExclusionRule::T9_II);
    CHECK(classify_exclusion(12, 3, 2, 4).rule == ExclusionRule::T9_II);
    CHECK(classify_exclusion(2, 5, 2, 5).rule == ExclusionRule::T9_III);
    CHECK(classify_exclusion(2, 15, 2, 3).rule == ExclusionRule::T9_IV);
    CHECK(classify_exclusion(2, 7, 2, 3).rule == ExclusionRule::T9_IV);
    CHECK(classify_exclusion(2, 6, 2, 4).rule == ExclusionRule::T13_II);
    const auto first = classify_exclusion(5, 3, 1, 2);
    CHECK(first.excluded);
    CHECK(first.detail.find("roles swapped") == std::string::npos);
    const auto swapped = classify_exclusion(5, 4, 2, 4);
    CHECK(swapped.rule == ExclusionRule::T9_II);
    CHECK(swapped.detail.find("roles swapped") != std::string::npos);
}

TEST_CASE("classifier preconditions") {
    CHECK_THROWS_AS(classify_exclusion(1, 5, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify_exclusion(5, 5, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify_exclusion(2, 5, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify_exclusion(2, 5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify_exclusion(2, 5, 3, 2), std::invalid_argument);
}

TEST_CASE("classifier soundness: every excluded cell is a non-square, exhaustively") {
    unsigned long excluded_cells = 0;
    for (unsigned long a = 2; a <= 30; ++a)
        for (unsigned long b = a + 1; b <= 30; ++b)
            for (unsigned long n = 2; n <= 30; ++n)
                for (unsigned long m = 1; m < n; ++m) {
                    const auto verdict = classify_exclusion(a, b, m, n);
                    CHECK(verdict.rule == classify_rule(a, b, m, n));
                    if (!verdict.excluded) continue;
                    ++excluded_cells;
                    REQUIRE(!testutil::cell_is_square(a, b, m, n));
                }
    CHECK(excluded_cells > 100000);  // the rules carry real weight on this box
}

TEST_CASE("known solutions are never excluded by classifier or sieve") {
    for (const auto& sol : kKnown) {
        CAPTURE(sol.a);
        CAPTURE(sol.b);
        CHECK(testutil::cell_is_square(sol.a, sol.b, sol.m, sol.n));
        CHECK(classify_rule(sol.a, sol.b, sol.m, sol.n) == ExclusionRule::NONE);
        for (const std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 31ull}) {
            const auto set = qr_excluded_classes(sol.a, sol.b, sol.m, p);
            CHECK(!set.contains(sol.n));
        }
    }
}

TEST_CASE("excluded residue classes: pinned sets") {
    const auto set1 = qr_excluded_classes(2, 10, 1, 5);
    CHECK(set1.modulus == 4);
    CHECK(set1.residues == std::vector<std::uint64_t>({0, 3}));
    const auto set2 = qr_excluded_classes(10, 58, 1, 5);
    CHECK(set2.modulus == 4);
    CHECK(set2.residues == std::vector<std::uint64_t>({0, 1}));
    const auto set3 = qr_excluded_classes(3, 45, 1, 5);
    CHECK(set3.modulus == 4);
    CHECK(set3.residues == std::vector<std::uint64_t>({0, 1}));
    CHECK(set1.contains(4));
    CHECK(set1.contains(7));
    CHECK(!set1.contains(2));
    CHECK_THROWS_AS(qr_excluded_classes(2, 10, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(qr_excluded_classes(2, 10, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(qr_excluded_classes(2, 10, 0, 5), std::invalid_argument);
}

TEST_CASE("excluded residue classes match Euler's criterion by definition") {
    const std::uint64_t primes[] = {3, 5, 7, 11, 13, 31};
    for (unsigned long a = 2; a <= 12; ++a)
        for (unsigned long b = a + 1; b <= 13; ++b)
            for (unsigned long m = 1; m <= 3; ++m)
                for (const std::uint64_t p : primes) {
                    const auto set = qr_excluded_classes(a, b, m, p);
                    const mpz_class pz(static_cast<unsigned long>(p));
                    for (std::uint64_t c = 0; c < set.modulus; ++c) {
                        // representative exponent >= 1 for the class c
                        const unsigned long n = static_cast<unsigned long>(c + set.modulus);
                        const mpz_class value =
                            (testutil::pow_mpz(a, n) - testutil::pow2_mpz(m)) *
                            (testutil::pow_mpz(b, n) - testutil::pow2_mpz(m));
                        mpz_class residue;
                        mpz_mod(residue.get_mpz_t(), value.get_mpz_t(), pz.get_mpz_t());
                        const bool non_residue =
                            residue != 0 && testutil::legendre_euler(residue, pz) == -1;
                        CHECK(set.contains(c) == non_residue);
                    }
                }
}

TEST_CASE("excluded classes really kill every exponent in the class") {
    const auto set = qr_excluded_classes(2, 10, 1, 5);
    for (unsigned long n = 1; n <= 60; ++n)
        if (set.contains(n)) CHECK(!testutil::cell_is_square(2, 10, 1, n > 1 ? n : 2));
}

TEST_CASE("residual classes: intersection across primes") {
    const auto set = residual_classes(3, 45, 1, {5, 13}, 1000000);
    CHECK(set.modulus == 12);
    CHECK(set.residues == std::vector<std::uint64_t>({2, 6}));
    const auto empty = residual_classes(3, 45, 1, {}, 10);
    CHECK(empty.modulus == 1);
    CHECK(empty.residues == std::vector<std::uint64_t>({0}));
    CHECK_THROWS_AS(residual_classes(3, 45, 1, {5, 13}, 5), std::domain_error);
    CHECK_THROWS_AS(residual_classes(3, 45, 1, {5, 13}, 0), std::invalid_argument);
    CHECK_THROWS_AS(residual_classes(3, 45, 1, {6}, 100), std::invalid_argument);
}

TEST_CASE("residual classes agree with testing each prime directly") {
    const std::vector<std::uint64_t> primes{5, 7, 13};
    for (unsigned long a = 2; a <= 6; ++a)
        for (unsigned long b = a + 1; b <= 7; ++b) {
            const auto survivors = residual_classes(a, b, 1, primes, 1000000);
            std::vector<ResidueClassSet> sets;
            for (const auto p : primes) sets.push_back(qr_excluded_classes(a, b, 1, p));
            for (std::uint64_t c = 0; c < survivors.modulus; ++c) {
                bool killed = false;
                for (const auto& set : sets) killed = killed || set.contains(c);
                CHECK(survivors.contains(c) == !killed);
            }
        }
}
