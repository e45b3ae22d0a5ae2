#pragma once

#include <gmpxx.h>

#include <optional>

namespace exdio::arith {

// Floor of the square root of n >= 0.  Newton iteration from a power-of-two
// over-estimate; the result r satisfies r^2 <= n < (r+1)^2.
mpz_class isqrt(const mpz_class& n);

// The nonnegative root when n is a perfect square, nothing otherwise.
// Candidates are rejected early by square-residue tables mod 64, 63, 65 and
// 11 (about 0.8% of uniform non-squares survive to the isqrt round trip).
std::optional<mpz_class> is_perfect_square(const mpz_class& n);

// Exponent of the highest power of 2 dividing |n|.  n must be nonzero.
unsigned long v2(const mpz_class& n);

// Jacobi symbol (a/n) for odd n >= 3; -1, 0 or +1.  Negative a is folded in
// through the (-1/n) factor.
int jacobi(const mpz_class& a, const mpz_class& n);

// Deterministic primality by trial division.  Supported for 0 <= n < 2^40;
// larger inputs are rejected rather than answered probabilistically.
bool is_small_prime(const mpz_class& n);

// Least e >= 1 with a^e = 1 (mod p).  p must pass is_small_prime and a must
// not be divisible by p.
mpz_class mult_order(const mpz_class& a, const mpz_class& p);

}  // namespace exdio::arith
