#include "exdio/sieve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "exdio/arith.hpp"

namespace exdio::sieve {

namespace {

struct Oriented {
    const mpz_class& a;
    const mpz_class& b;
    bool swapped;
};

// derived shape of one side: x = 2^t * r with r odd
struct Shape {
    bool even;
    unsigned long t;
    mpz_class r;
};

Shape shape_of(const mpz_class& x) {
    Shape s;
    s.even = mpz_even_p(x.get_mpz_t()) != 0;
    s.t = s.even ? mpz_scan1(x.get_mpz_t(), 0) : 0;
    s.r = s.even ? mpz_class(x >> s.t) : x;
    return s;
}

ExclusionRule try_orientation(const mpz_class& a, const mpz_class& b, unsigned long m,
                              unsigned long n) {
    const Shape sa = shape_of(a);
    const Shape sb = shape_of(b);

    if (sa.even && !sb.even) {
        if (m % 2 == 1) return ExclusionRule::T9_I;
        if (n % 2 == 0) return ExclusionRule::T9_II;
        // m even, n odd from here on
        const unsigned long b4 = mpz_fdiv_ui(b.get_mpz_t(), 4);
        if (b4 == 1 && (n - m > 1 || sa.t > 1)) return ExclusionRule::T9_III;
        // n t - m = 1 forces t = 1 and n - m = 1 (t >= 2 gives n t - m >= n + 1)
        if (b4 == 3 && sa.t == 1 && n - m == 1) return ExclusionRule::T9_IV;
    }

    if (mpz_fdiv_ui(a.get_mpz_t(), 3) == 2 && mpz_divisible_ui_p(b.get_mpz_t(), 3)) {
        if ((m + n) % 2 == 1) return ExclusionRule::T13_I;
        if (n % 2 == 0 && m % 2 == 0 && sa.even && sb.even) return ExclusionRule::T13_II;
    }

    if (sa.even && sb.even) {
        if (sa.t != sb.t && n % 2 == 0) return ExclusionRule::T11;
        if (sa.t != sb.t && sa.t % 2 == sb.t % 2 && sa.r == sb.r && n % 2 == 1)
            return ExclusionRule::T12;
        if (sa.r == sb.r && sb.t > sa.t && sa.t % 2 == sb.t % 2) return ExclusionRule::COR_C14;
    }

    if (mpz_fdiv_ui(a.get_mpz_t(), 6) == 2 && mpz_fdiv_ui(b.get_mpz_t(), 6) == 3)
        return ExclusionRule::COR_MOD6;

    if (m == 1 && n % 2 == 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g == 1) return ExclusionRule::T7;
    }

    return ExclusionRule::NONE;
}

void require_cell(const mpz_class& a, const mpz_class& b, unsigned long m, unsigned long n) {
    if (a < 2 || b < 2) throw std::invalid_argument("classify_exclusion: a and b must be >= 2");
    if (a == b) throw std::invalid_argument("classify_exclusion: a and b must differ");
    if (m == 0 || m >= n) throw std::invalid_argument("classify_exclusion: requires 0 < m < n");
}

std::string detail_text(const mpz_class& a, const mpz_class& b, unsigned long m, unsigned long n,
                        bool swapped) {
    const Shape sa = shape_of(a);
    const Shape sb = shape_of(b);
    std::ostringstream out;
    if (swapped) out << "(roles swapped) ";
    out << "a=2^" << sa.t << "*" << sa.r.get_str() << ", b=2^" << sb.t << "*" << sb.r.get_str()
        << ", a mod 6=" << mpz_fdiv_ui(a.get_mpz_t(), 6) << ", b mod 6="
        << mpz_fdiv_ui(b.get_mpz_t(), 6) << ", m=" << m << ", n=" << n;
    return out.str();
}

std::uint64_t order_ul(std::uint64_t x, std::uint64_t p) {
    return mpz_get_ui(arith::mult_order(mpz_class(static_cast<unsigned long>(x)),
                                        mpz_class(static_cast<unsigned long>(p)))
                          .get_mpz_t());
}

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

const char* rule_name(ExclusionRule rule) {
    switch (rule) {
        case ExclusionRule::T9_I: return "T9_I";
        case ExclusionRule::T9_II: return "T9_II";
        case ExclusionRule::T9_III: return "T9_III";
        case ExclusionRule::T9_IV: return "T9_IV";
        case ExclusionRule::T13_I: return "T13_I";
        case ExclusionRule::T13_II: return "T13_II";
        case ExclusionRule::T11: return "T11";
        case ExclusionRule::T12: return "T12";
        case ExclusionRule::COR_C14: return "COR_C14";
        case ExclusionRule::COR_MOD6: return "COR_MOD6";
        case ExclusionRule::T7: return "T7";
        case ExclusionRule::NONE: return "NONE";
    }
    return "NONE";
}

ExclusionRule classify_rule(const mpz_class& a, const mpz_class& b, unsigned long m,
                            unsigned long n) {
    require_cell(a, b, m, n);
    ExclusionRule rule = try_orientation(a, b, m, n);
    if (rule != ExclusionRule::NONE) return rule;
    return try_orientation(b, a, m, n);
}

ExclusionVerdict classify_exclusion(const mpz_class& a, const mpz_class& b, unsigned long m,
                                    unsigned long n) {
    require_cell(a, b, m, n);
    ExclusionVerdict verdict;
    ExclusionRule rule = try_orientation(a, b, m, n);
    bool swapped = false;
    if (rule == ExclusionRule::NONE) {
        rule = try_orientation(b, a, m, n);
        swapped = rule != ExclusionRule::NONE;
    }
    verdict.rule = rule;
    verdict.excluded = rule != ExclusionRule::NONE;
    if (verdict.excluded)
        verdict.detail = swapped ? detail_text(b, a, m, n, true) : detail_text(a, b, m, n, false);
    return verdict;
}

bool ResidueClassSet::contains(std::uint64_t n) const {
    return std::binary_search(residues.begin(), residues.end(), n % modulus);
}

ResidueClassSet qr_excluded_classes(const mpz_class& a, const mpz_class& b, unsigned long m,
                                    std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !arith::is_small_prime(mpz_class(static_cast<unsigned long>(p))))
        throw std::invalid_argument("qr_excluded_classes: p must be an odd prime");
    if (m == 0) throw std::invalid_argument("qr_excluded_classes: m must be >= 1");

    const std::uint64_t ar = mpz_fdiv_ui(a.get_mpz_t(), p);
    const std::uint64_t br = mpz_fdiv_ui(b.get_mpz_t(), p);
    const std::uint64_t la = ar == 0 ? 1 : order_ul(ar, p);
    const std::uint64_t lb = br == 0 ? 1 : order_ul(br, p);
    const std::uint64_t period = std::lcm(la, lb);
    const std::uint64_t shift = powmod_ul(2 % p, m, p);
    const mpz_class pz(static_cast<unsigned long>(p));

    ResidueClassSet out;
    out.modulus = period;
    std::uint64_t apow = 1 % p, bpow = 1 % p;
    for (std::uint64_t c = 0; c < period; ++c) {
        const std::uint64_t va = ar == 0 ? 0 : apow;
        const std::uint64_t vb = br == 0 ? 0 : bpow;
        const std::uint64_t value = mulmod_ul((va + p - shift) % p, (vb + p - shift) % p, p);
        if (value != 0 &&
            arith::jacobi(mpz_class(static_cast<unsigned long>(value)), pz) == -1)
            out.residues.push_back(c);
        if (ar != 0) apow = mulmod_ul(apow, ar, p);
        if (br != 0) bpow = mulmod_ul(bpow, br, p);
    }
    return out;
}

ResidueClassSet residual_classes(const mpz_class& a, const mpz_class& b, unsigned long m,
                                 const std::vector<std::uint64_t>& primes, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("residual_classes: cap must be >= 1");
    std::vector<ResidueClassSet> excluded;
    excluded.reserve(primes.size());
    std::uint64_t combined = 1;
    for (const std::uint64_t p : primes) {
        excluded.push_back(qr_excluded_classes(a, b, m, p));
        const std::uint64_t mod = excluded.back().modulus;
        const std::uint64_t g = std::gcd(combined, mod);
        const unsigned __int128 next = static_cast<unsigned __int128>(combined / g) * mod;
        if (next > cap) throw std::domain_error("residual_classes: combined modulus exceeds cap");
        combined = static_cast<std::uint64_t>(next);
    }
    ResidueClassSet out;
    out.modulus = combined;
    for (std::uint64_t c = 0; c < combined; ++c) {
        bool keep = true;
        for (const auto& set : excluded)
            if (set.contains(c)) {
                keep = false;
                break;
            }
        if (keep) out.residues.push_back(c);
    }
    return out;
}

}  // namespace exdio::sieve
