#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace exdio::pell {

// Continued fraction of sqrt(d) for non-square d >= 2: the integer part a0
// and one full period of partial quotients (the last term is always 2*a0).
struct CfSqrt {
    mpz_class a0;
    std::vector<mpz_class> period;
};

// One solution of the quadratic it was produced for; generators verify the
// defining identity exactly before emitting and throw std::logic_error on
// any violation, so a returned solution is always genuine.
struct PellSolution {
    mpz_class x;
    mpz_class y;
    friend bool operator==(const PellSolution& lhs, const PellSolution& rhs) {
        return lhs.x == rhs.x && lhs.y == rhs.y;
    }
};

// Least positive solution of x^2 - d y^2 = N for N = 1 or 2.
struct FundamentalPair {
    enum class Norm { one, two };
    Norm norm = Norm::one;
    mpz_class x;
    mpz_class y;
    friend bool operator==(const FundamentalPair& lhs, const FundamentalPair& rhs) {
        return lhs.norm == rhs.norm && lhs.x == rhs.x && lhs.y == rhs.y;
    }
};

// Periodic continued fraction expansion of sqrt(d).  Rejects d < 2 and
// perfect squares.
CfSqrt cf_sqrt(const mpz_class& d);

// Fundamental solution of x^2 - d y^2 = 1 read off the convergent at the end
// of the continued fraction period (one extra period when the length is odd).
FundamentalPair fundamental_n1(const mpz_class& d);

// Least solution of x^2 - d y^2 = 2, or nothing when the equation has no
// solution.  Solvability is decided exactly from the N=1 fundamental
// (x1, y1): a solution exists iff x1 + 1 = k^2 with k | y1 and
// k^2 - d (y1/k)^2 = 2, in which case (k, y1/k) is least.  (The map
// (k,t) -> ((k^2 + d t^2)/2, k t) sends solutions of N=2 to solutions of
// N=1 strictly monotonically, so the preimage of the fundamental is minimal;
// a direct bounded scan is kept in the test suite as an oracle.)
std::optional<FundamentalPair> fundamental_n2(const mpz_class& d);

// Compose an N=2 solution with itself: ((k^2 + d t^2)/2, k t) solves N=1.
// Applied to the least N=2 solution this lands exactly on the N=1
// fundamental.
FundamentalPair n1_from_n2(const FundamentalPair& pair, const mpz_class& d);

// First `count` solutions of x^2 - d y^2 = 1 in increasing order, from the
// closed form x_n = V_n(2 x1, -1) / 2, y_n = y1 U_n(2 x1, -1) (n >= 1).
std::vector<PellSolution> gen_n1(const mpz_class& d, std::size_t count);

// First `count` solutions of x^2 - d y^2 = 2 in increasing order (the least
// solution is term 0):
//   x_n = k1 (U_{n+1} - U_n),  y_n = t1 (U_{n+1} + U_n),  U = U(2 x1, -1).
// Nothing when the equation is insolvable.
std::optional<std::vector<PellSolution>> gen_n2(const mpz_class& d, std::size_t count);

// First `count` solutions of a x^2 - b y^2 = 1 for non-square a >= 2 and
// b >= 1 (term 0 is the least solution):
//   x_n = u1 (U_{n+1} - U_n),  y_n = v1 (U_{n+1} + U_n),
// where U = U(4 a u1^2 - 2, -1) and (u1, v1) is the least solution, found by
// scanning u = 1 ... x1(ab) (u = 1 alone when ab is a perfect square, since
// (a u - c y)(a u + c y) = a with c^2 = ab forces u = 1).  Nothing when no
// solution exists within that provable bound.
std::optional<std::vector<PellSolution>> gen_ratio(const mpz_class& a, const mpz_class& b,
                                                   std::size_t count);

// First `count` solutions of u^2 - 5 v^2 = -4^k for k >= 1, via
// (u, v) = (2^(k-1) L_{2m+1}, 2^(k-1) F_{2m+1}), m = 0, 1, ... with F, L the
// Fibonacci and Lucas numbers.
std::vector<PellSolution> solve_neg4k(unsigned long k, std::size_t count);

}  // namespace exdio::pell
