#include "exdio/lucas.hpp"

#include <stdexcept>

namespace exdio::lucas {

namespace {

// (U_k, U_{k+1}) by fast doubling:
//   U_{2k}   = U_k (2 U_{k+1} - P U_k)
//   U_{2k+1} = U_{k+1}^2 + Q U_k^2
void u_pair(const mpz_class& p, const mpz_class& q, unsigned long n, mpz_class& u,
            mpz_class& u_next) {
    if (n == 0) {
        u = 0;
        u_next = 1;
        return;
    }
    u_pair(p, q, n >> 1, u, u_next);
    mpz_class even = u * (2 * u_next - p * u);
    mpz_class odd = u_next * u_next + q * u * u;
    if (n & 1) {
        u_next = p * odd + q * even;
        u = std::move(odd);
    } else {
        u = std::move(even);
        u_next = std::move(odd);
    }
}

// same ladder with every intermediate reduced into [0, m)
void u_pair_mod(const mpz_class& p, const mpz_class& q, unsigned long n, const mpz_class& m,
                mpz_class& u, mpz_class& u_next) {
    if (n == 0) {
        u = 0;
        u_next = mpz_class(1) % m;
        return;
    }
    u_pair_mod(p, q, n >> 1, m, u, u_next);
    mpz_class even = u * (2 * u_next - p * u);
    mpz_class odd = u_next * u_next + q * u * u;
    mpz_mod(even.get_mpz_t(), even.get_mpz_t(), m.get_mpz_t());
    mpz_mod(odd.get_mpz_t(), odd.get_mpz_t(), m.get_mpz_t());
    if (n & 1) {
        u_next = p * odd + q * even;
        mpz_mod(u_next.get_mpz_t(), u_next.get_mpz_t(), m.get_mpz_t());
        u = std::move(odd);
    } else {
        u = std::move(even);
        u_next = std::move(odd);
    }
}

}  // namespace

LucasParams::LucasParams(mpz_class p_value, mpz_class q_value)
    : p(std::move(p_value)), q(std::move(q_value)) {
    if (p == 0 && q == 0) throw std::invalid_argument("LucasParams: P and Q cannot both be zero");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw std::invalid_argument("LucasParams: P and Q must be coprime");
    if (p * p + 4 * q <= 0)
        throw std::invalid_argument("LucasParams: discriminant P^2 + 4Q must be positive");
}

LucasPair lucas_pair(const LucasParams& params, unsigned long n) {
    LucasPair out;
    out.n = n;
    mpz_class u_next;
    u_pair(params.p, params.q, n, out.u, u_next);
    out.v = 2 * u_next - params.p * out.u;
    return out;
}

std::pair<mpz_class, mpz_class> lucas_mod(const LucasParams& params, unsigned long n,
                                          const mpz_class& modulus) {
    if (params.q != -1) throw std::invalid_argument("lucas_mod: requires Q = -1");
    if (modulus < 2) throw std::invalid_argument("lucas_mod: modulus must be >= 2");
    mpz_class u, u_next;
    u_pair_mod(params.p, params.q, n, modulus, u, u_next);
    mpz_class v = 2 * u_next - params.p * u;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return {std::move(u), std::move(v)};
}

unsigned long v2_of_v(const mpz_class& p, unsigned long n) {
    if (p == 0 || mpz_odd_p(p.get_mpz_t()))
        throw std::invalid_argument("v2_of_v: P must be even and nonzero");
    if (n == 0) throw std::invalid_argument("v2_of_v: n must be >= 1");
    return (n % 2 == 1) ? mpz_scan1(p.get_mpz_t(), 0) : 1ul;
}

bool divides_criterion(const mpz_class& p, unsigned long n, unsigned q) {
    if (q != 3 && q != 5) throw std::invalid_argument("divides_criterion: q must be 3 or 5");
    const unsigned long pm = mpz_fdiv_ui(p.get_mpz_t(), q);
    if (pm == 0) return n % 2 == 0;
    if (q == 3) return n % 3 == 0;
    return (pm * pm % 5 == 1) ? n % 3 == 0 : n % 5 == 0;
}

bool diff_divides(const mpz_class& a, const mpz_class& p, unsigned long n) {
    if (a < 2) throw std::invalid_argument("diff_divides: a must be >= 2");
    if (n == 0) throw std::invalid_argument("diff_divides: n must be >= 1");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    if (r != 1) throw std::invalid_argument("diff_divides: requires P = 1 (mod a)");
    const unsigned long c = n % 6;
    return c == 2 || c == 5;
}

}  // namespace exdio::lucas
