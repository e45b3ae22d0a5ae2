#pragma once

// Independent oracles for the test suites: naive recurrences, literal
// enumeration, GMP's own number-theory routines.  Nothing here may call into
// the code paths under test.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace testutil {

// plain double recurrence x_{k+1} = P x_k + Q x_{k-1} from (0,1) and (2,P)
inline std::pair<mpz_class, mpz_class> lucas_naive(const mpz_class& p, const mpz_class& q,
                                                   unsigned long n) {
    mpz_class u0 = 0, u1 = 1, v0 = 2, v1 = p;
    if (n == 0) return {u0, v0};
    for (unsigned long i = 1; i < n; ++i) {
        mpz_class u2 = p * u1 + q * u0;
        u0 = u1;
        u1 = u2;
        mpz_class v2 = p * v1 + q * v0;
        v0 = v1;
        v1 = v2;
    }
    return {u1, v1};
}

inline bool gmp_is_square(const mpz_class& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline mpz_class gmp_sqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Euler's criterion, the oracle for Legendre/Jacobi values at odd primes
inline int legendre_euler(const mpz_class& a, const mpz_class& p) {
    mpz_class base = a % p;
    if (base < 0) base += p;
    mpz_class e = (p - 1) / 2, r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

// increasing-y enumeration of x^2 - d y^2 = norm, capped at y_cap
inline std::vector<std::pair<mpz_class, mpz_class>> pell_brute(const mpz_class& d,
                                                               const mpz_class& norm,
                                                               std::size_t count,
                                                               unsigned long y_cap) {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    for (mpz_class y = 1; y <= y_cap && out.size() < count; ++y) {
        mpz_class t = d * y * y + norm;
        if (t < 1) continue;
        if (gmp_is_square(t)) out.emplace_back(gmp_sqrt(t), y);
    }
    return out;
}

inline std::vector<unsigned long> primes_below(unsigned long limit) {
    std::vector<unsigned long> out;
    for (unsigned long n = 2; n < limit; ++n) {
        bool prime = n >= 2;
        for (unsigned long q = 2; q * q <= n; ++q)
            if (n % q == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

inline mpz_class pow_mpz(const mpz_class& base, unsigned long exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline mpz_class pow2_mpz(unsigned long exp) {
    mpz_class out = 0;
    mpz_setbit(out.get_mpz_t(), exp);
    return out;
}

// is (a^n - 2^m)(b^n - 2^m) a positive perfect square? — by plain powering
inline bool cell_is_square(const mpz_class& a, const mpz_class& b, unsigned long m,
                           unsigned long n) {
    const mpz_class fa = pow_mpz(a, n) - pow2_mpz(m);
    const mpz_class fb = pow_mpz(b, n) - pow2_mpz(m);
    if (fa <= 0 || fb <= 0) return false;
    return gmp_is_square(fa * fb);
}

struct Rng {
    gmp_randclass gen{gmp_randinit_default};

    explicit Rng(unsigned long seed) { gen.seed(seed); }

    // uniform in [0, 2^bits)
    mpz_class bits(unsigned long count) { return gen.get_z_bits(count); }

    // uniform in [0, n)
    mpz_class below(const mpz_class& n) { return gen.get_z_range(n); }

    unsigned long index(unsigned long n) {
        return mpz_get_ui(below(mpz_class(n)).get_mpz_t());
    }
};

}  // namespace testutil
