#include "exdio/arith.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace exdio::arith {

namespace {

template <std::size_t Mod>
consteval std::array<bool, Mod> square_residue_table() {
    std::array<bool, Mod> table{};
    for (std::size_t i = 0; i < Mod; ++i) table[i * i % Mod] = true;
    return table;
}

constexpr auto kSquares64 = square_residue_table<64>();
constexpr auto kSquares63 = square_residue_table<63>();
constexpr auto kSquares65 = square_residue_table<65>();
constexpr auto kSquares11 = square_residue_table<11>();

std::uint64_t mulmod_ul(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t powmod_ul(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_ul(acc, base, m);
        base = mulmod_ul(base, base, m);
        exp >>= 1;
    }
    return acc;
}

}  // namespace

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    if (n < 2) return n;
    // 2^ceil(bits/2) >= sqrt(n); Newton from above is monotonically decreasing
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    mpz_class x = 0;
    mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
    for (;;) {
        mpz_class y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

std::optional<mpz_class> is_perfect_square(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return mpz_class(0);
    if (!kSquares64[mpz_getlimbn(n.get_mpz_t(), 0) & 63]) return std::nullopt;
    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 63ul * 65ul * 11ul);
    if (!kSquares63[r % 63] || !kSquares65[r % 65] || !kSquares11[r % 11]) return std::nullopt;
    mpz_class root = isqrt(n);
    if (root * root == n) return root;
    return std::nullopt;
}

unsigned long v2(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("v2: zero has no 2-adic valuation");
    return mpz_scan1(n.get_mpz_t(), 0);
}

int jacobi(const mpz_class& a_in, const mpz_class& n_in) {
    if (n_in < 3 || mpz_even_p(n_in.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and >= 3");
    mpz_class a = a_in, n = n_in;
    int sign = 1;
    if (a < 0) {
        a = -a;
        if (mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) sign = -sign;
    }
    a %= n;
    while (a != 0) {
        const unsigned long s = mpz_scan1(a.get_mpz_t(), 0);
        if (s & 1) {
            const unsigned long nm8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        a >>= s;
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
            sign = -sign;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? sign : 0;
}

bool is_small_prime(const mpz_class& n) {
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 40 || !mpz_fits_ulong_p(n.get_mpz_t()) || n < 0)
        throw std::domain_error("is_small_prime: input outside deterministic range [0, 2^40)");
    const std::uint64_t v = mpz_get_ui(n.get_mpz_t());
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t q = 3; q * q <= v; q += 2)
        if (v % q == 0) return false;
    return true;
}

mpz_class mult_order(const mpz_class& a, const mpz_class& p) {
    if (!is_small_prime(p)) throw std::invalid_argument("mult_order: modulus must be prime");
    const std::uint64_t pu = mpz_get_ui(p.get_mpz_t());
    const std::uint64_t r = mpz_fdiv_ui(a.get_mpz_t(), pu);
    if (r == 0) throw std::invalid_argument("mult_order: base divisible by the modulus");
    // the order divides p-1: strip each prime factor of p-1 while a^(e/q) stays 1
    std::uint64_t order = pu - 1;
    std::uint64_t rem = pu - 1;
    for (std::uint64_t q = 2; rem > 1 && q * q <= rem; q += (q == 2 ? 1 : 2)) {
        if (rem % q) continue;
        while (rem % q == 0) rem /= q;
        while (order % q == 0 && powmod_ul(r, order / q, pu) == 1) order /= q;
    }
    if (rem > 1)
        while (order % rem == 0 && powmod_ul(r, order / rem, pu) == 1) order /= rem;
    return mpz_class(static_cast<unsigned long>(order));
}

}  // namespace exdio::arith
