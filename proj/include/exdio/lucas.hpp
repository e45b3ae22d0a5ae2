#pragma once

#include <gmpxx.h>

#include <utility>

namespace exdio::lucas {

// Coefficients of the paired recurrences
//   U_0 = 0, U_1 = 1, U_{k+1} = P U_k + Q U_{k-1}
//   V_0 = 2, V_1 = P, V_{k+1} = P V_k + Q V_{k-1}
// Validated on construction: (P,Q) != (0,0), gcd(P,Q) = 1, P^2 + 4Q > 0.
// Note the sign convention: Q = -1 here corresponds to the classical
// "Q = +1" parameterization (Fibonacci is (1,1), Pell is (2,1)).
struct LucasParams {
    mpz_class p;
    mpz_class q;
    LucasParams(mpz_class p_value, mpz_class q_value);
};

struct LucasPair {
    unsigned long n = 0;
    mpz_class u;
    mpz_class v;
};

// (U_n, V_n) by binary fast doubling; O(log n) big-integer multiplications.
LucasPair lucas_pair(const LucasParams& params, unsigned long n);

// (U_n mod modulus, V_n mod modulus), Q fixed at -1, modulus >= 2.
// Residues are reduced into [0, modulus).
std::pair<mpz_class, mpz_class> lucas_mod(const LucasParams& params, unsigned long n,
                                          const mpz_class& modulus);

// 2-adic valuation of V_n(P,-1) for even nonzero P and n >= 1:
// v2(P) when n is odd, exactly 1 when n is even.
unsigned long v2_of_v(const mpz_class& p, unsigned long n);

// Whether q divides U_n(P,-1), for q in {3,5}, decided by residue of P alone:
//   q=3: 3|P and 2|n, or 3 does not divide P and 3|n
//        (the second branch covers both odd residues of P, since the period
//        mod 3 depends only on P^2)
//   q=5: 5|P and 2|n; P^2=1 (mod 5) and 3|n; P^2=4 (mod 5) and 5|n
bool divides_criterion(const mpz_class& p, unsigned long n, unsigned q);

// Whether a divides U_n(P,-1) - U_{n-1}(P,-1), valid when P = 1 (mod a),
// a >= 2, n >= 1: true exactly for n = 2 or 5 (mod 6).
bool diff_divides(const mpz_class& a, const mpz_class& p, unsigned long n);

}  // namespace exdio::lucas
