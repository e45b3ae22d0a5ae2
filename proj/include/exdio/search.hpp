#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace exdio::search {

// One verified solution of (a^n - 2^m)(b^n - 2^m) = x^2.
struct SearchHit {
    mpz_class a;
    mpz_class b;
    unsigned long m = 0;
    unsigned long n = 0;
    mpz_class x;

    friend bool operator==(const SearchHit& lhs, const SearchHit& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.m == rhs.m && lhs.n == rhs.n &&
               lhs.x == rhs.x;
    }
};

// canonical output order: ascending (a, b, n, m)
bool hit_less(const SearchHit& lhs, const SearchHit& rhs);

// Exponent policy for the inner loop: a fixed m, or every m in [1, n-1].
struct MPolicy {
    enum class Kind { fixed, all_below_n };
    Kind kind = Kind::fixed;
    unsigned long m = 1;

    static MPolicy fixed(unsigned long m);
    static MPolicy all_below_n();
};

struct SearchQuery {
    mpz_class a_lo, a_hi;  // pairs satisfy a < b within these boxes
    mpz_class b_lo, b_hi;
    unsigned long n_lo = 2;
    unsigned long n_hi = 2;
    MPolicy m_policy;
    std::vector<std::uint64_t> sieve_primes;  // quadratic-residue sieve, may be empty
    bool use_classifier = true;               // structural non-existence rules
};

// Per-pair accounting reported through SweepOptions::on_pair_done.
struct PairStats {
    mpz_class a;
    mpz_class b;
    std::uint64_t candidates = 0;            // cells (m, n) considered
    std::uint64_t excluded_by_classifier = 0;
    std::uint64_t excluded_by_sieve = 0;
    std::uint64_t tested = 0;                // big-integer squareness tests
    double seconds = 0.0;
    std::vector<SearchHit> hits;
};

struct SweepOptions {
    unsigned jobs = 1;
    // return true to skip a pair entirely (checkpoint resume)
    std::function<bool(const mpz_class&, const mpz_class&)> skip_pair;
    // invoked after each pair completes; calls are serialized
    std::function<void(const PairStats&)> on_pair_done;
};

// Test a single cell: the root x >= 1 when (a^n - 2^m)(b^n - 2^m) is a
// positive perfect square, nothing otherwise.  Requires a, b >= 2, a != b,
// 0 < m < n.
std::optional<mpz_class> check_instance(const mpz_class& a, const mpz_class& b, unsigned long m,
                                        unsigned long n);

// Exhaustive scan of every pair a < b in the query box.  Each pair runs the
// classifier, then the per-prime residue sieves, and only surviving (m, n)
// cells reach big-integer arithmetic (incrementally maintained powers, then
// the square-residue prefilter, then isqrt).  The result is independent of
// job count and of sieve settings, and sorted ascending by (a, b, n, m).
std::vector<SearchHit> sweep(const SearchQuery& query, const SweepOptions& options = {});

// For each odd k >= 3: scan a = 2, b = 2 U_k(2,1), m = 1, 2 <= n <= n_max.
// (x for the n = 2 hit equals V_k(2,1).)
std::vector<SearchHit> conjecture1_probe(const std::vector<unsigned long>& k_values,
                                         unsigned long n_max);

struct Conjecture2Result {
    unsigned long max_n = 0;  // largest n over all hits, 0 when none
    std::vector<SearchHit> hits;
};

// Scan all 2 < a < b <= limits with m = 1, 2 <= n <= n_max.
Conjecture2Result conjecture2_probe(const mpz_class& limit_a, const mpz_class& limit_b,
                                    unsigned long n_max);

// All (m, z) with 1 <= m <= m_max, z >= 1 and (z + 1)(2z - 1)^2 = 10^(2m):
// 2z - 1 must be an odd square divisor 5^j of 10^(2m), leaving a finite
// check per m.
std::vector<std::pair<unsigned long, mpz_class>> solve_c1(unsigned long m_max);

// Exact big-integer evaluation of one of two power inequalities for each m
// in [m_lo, m_hi]:
//   five_powers:   5^m  > 2^(2m+1) - 3
//   three_powers:  2 * 3^(4m-3) > 5^m + 1   (needs m >= 1)
enum class Inequality { five_powers, three_powers };

std::vector<std::pair<unsigned long, bool>> verify_inequality(Inequality which,
                                                              unsigned long m_lo,
                                                              unsigned long m_hi);

}  // namespace exdio::search
