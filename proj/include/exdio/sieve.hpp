#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace exdio::sieve {

// Identifiers of the non-existence rules applied by classify_exclusion, in
// the order they are tried.  Writing a = 2^t r, b = 2^l s with r, s odd:
//
//   T9_I     a even, b odd, m odd
//   T9_II    a even, b odd, m even, n even
//   T9_III   a even, b odd, m even, n odd, b = 1 (mod 4),
//            and n - m > 1 or (n - m = 1 and t > 1)
//   T9_IV    a even, b odd, m even, n odd, b = 3 (mod 4), n t - m = 1
//   T13_I    a = 2 (mod 3), 3 | b, m + n odd
//   T13_II   a = 2 (mod 3), 3 | b, both even, 2 | m, 2 | n
//   T11      a, b even, t != l, 2 | n
//   T12      a, b even, t != l, t = l (mod 2), r = s, n odd
//   COR_C14  b = 2^k a with k >= 2 even (subsumed by T11/T12 under this
//            order, so never actually returned; kept for completeness)
//   COR_MOD6 a = 2 (mod 6), b = 3 (mod 6) (every such cell is already
//            caught by T9_I/T9_II/T13_I, so likewise never returned)
//   T7       m = 1, n even, gcd(a, b) = 1
//
// Each rule is tried on (a, b) as given; if none fires, the whole order is
// retried with the roles swapped.  Which label is reported depends on the
// orientation, the excluded/kept answer does not.
enum class ExclusionRule {
    T9_I,
    T9_II,
    T9_III,
    T9_IV,
    T13_I,
    T13_II,
    T11,
    T12,
    COR_C14,
    COR_MOD6,
    T7,
    NONE,
};

const char* rule_name(ExclusionRule rule);

struct ExclusionVerdict {
    bool excluded = false;
    ExclusionRule rule = ExclusionRule::NONE;
    std::string detail;  // derived quantities (t, l, odd parts, orientation)
};

// Decide whether (a^n - 2^m)(b^n - 2^m) = x^2 is impossible for structural
// reasons, without computing the product.  Requires a, b >= 2, a != b,
// 0 < m < n.  Every excluded cell is genuinely non-square; kept cells carry
// no guarantee either way.
ExclusionVerdict classify_exclusion(const mpz_class& a, const mpz_class& b, unsigned long m,
                                    unsigned long n);

// classify_exclusion without the detail text; used in search inner loops.
ExclusionRule classify_rule(const mpz_class& a, const mpz_class& b, unsigned long m,
                            unsigned long n);

// Residue classes of n modulo `modulus`.
struct ResidueClassSet {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> residues;  // sorted, unique, in [0, modulus)

    bool contains(std::uint64_t n) const;
};

// Classes of n (mod lcm of the orders of a and b mod p) for which
// (a^n - 2^m)(b^n - 2^m) is a quadratic non-residue mod the odd prime p, so
// no n >= 1 in those classes can yield a square.  A power with p | base is
// 0 mod p for every n >= 1, giving that base period 1.  Classes where the
// product is 0 mod p are kept (conservative).  All arithmetic is
// machine-word; p must pass the deterministic primality check.
ResidueClassSet qr_excluded_classes(const mpz_class& a, const mpz_class& b, unsigned long m,
                                    std::uint64_t p);

// Intersection of the per-prime sieves: the classes of n modulo
// lcm of all per-prime moduli that *survive* every prime in `primes`.
// Throws std::domain_error if the combined modulus would exceed `cap`.
ResidueClassSet residual_classes(const mpz_class& a, const mpz_class& b, unsigned long m,
                                 const std::vector<std::uint64_t>& primes, std::uint64_t cap);

}  // namespace exdio::sieve
