#include "exdio/pell.hpp"

#include <stdexcept>
#include <utility>

#include "exdio/arith.hpp"
#include "exdio/lucas.hpp"

namespace exdio::pell {

namespace {

void require_valid_d(const mpz_class& d) {
    if (d < 2) throw std::domain_error("pell: d must be >= 2");
    mpz_class r = arith::isqrt(d);
    if (r * r == d) throw std::domain_error("pell: d must not be a perfect square");
}

void check_norm(const mpz_class& x, const mpz_class& y, const mpz_class& d,
                const mpz_class& norm) {
    if (x * x - d * y * y != norm)
        throw std::logic_error("pell: generated solution fails its defining identity");
}

// U_{n+1} recovered from (U_n, V_n): 2 U_{n+1} = P U_n + V_n
mpz_class u_next_of(const lucas::LucasParams& params, const lucas::LucasPair& lp) {
    return (params.p * lp.u + lp.v) / 2;
}

}  // namespace

CfSqrt cf_sqrt(const mpz_class& d) {
    require_valid_d(d);
    CfSqrt out;
    out.a0 = arith::isqrt(d);
    // classical P-Q recursion: m <- a q - m, q <- (d - m^2)/q, a <- (a0+m)/q;
    // the period closes exactly when q returns to 1
    mpz_class m = 0, q = 1, a = out.a0;
    do {
        m = a * q - m;
        q = (d - m * m) / q;
        a = (out.a0 + m) / q;
        out.period.push_back(a);
    } while (q != 1);
    return out;
}

FundamentalPair fundamental_n1(const mpz_class& d) {
    const CfSqrt cf = cf_sqrt(d);
    const std::size_t ell = cf.period.size();
    const std::size_t steps = (ell % 2 == 0) ? ell : 2 * ell;
    // convergent h_{steps-1}/k_{steps-1} of [a0; a1, a2, ...]
    mpz_class h_prev = 1, h = cf.a0, k_prev = 0, k = 1;
    for (std::size_t i = 1; i < steps; ++i) {
        const mpz_class& ai = cf.period[(i - 1) % ell];
        mpz_class h_new = ai * h + h_prev;
        mpz_class k_new = ai * k + k_prev;
        h_prev = std::move(h);
        h = std::move(h_new);
        k_prev = std::move(k);
        k = std::move(k_new);
    }
    check_norm(h, k, d, 1);
    return {FundamentalPair::Norm::one, std::move(h), std::move(k)};
}

std::optional<FundamentalPair> fundamental_n2(const mpz_class& d) {
    const FundamentalPair n1 = fundamental_n1(d);
    const auto k = arith::is_perfect_square(n1.x + 1);
    if (!k) return std::nullopt;
    if (!mpz_divisible_p(n1.y.get_mpz_t(), k->get_mpz_t())) return std::nullopt;
    mpz_class t = n1.y / *k;
    if ((*k) * (*k) - d * t * t != 2) return std::nullopt;
    return FundamentalPair{FundamentalPair::Norm::two, *k, std::move(t)};
}

FundamentalPair n1_from_n2(const FundamentalPair& pair, const mpz_class& d) {
    require_valid_d(d);
    if (pair.norm != FundamentalPair::Norm::two || pair.x * pair.x - d * pair.y * pair.y != 2)
        throw std::invalid_argument("n1_from_n2: input must solve x^2 - d y^2 = 2");
    FundamentalPair out;
    out.norm = FundamentalPair::Norm::one;
    out.x = (pair.x * pair.x + d * pair.y * pair.y) / 2;
    out.y = pair.x * pair.y;
    check_norm(out.x, out.y, d, 1);
    return out;
}

std::vector<PellSolution> gen_n1(const mpz_class& d, std::size_t count) {
    const FundamentalPair fund = fundamental_n1(d);
    const lucas::LucasParams params(2 * fund.x, -1);
    std::vector<PellSolution> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        const lucas::LucasPair lp = lucas::lucas_pair(params, static_cast<unsigned long>(i));
        PellSolution sol{lp.v / 2, fund.y * lp.u};
        check_norm(sol.x, sol.y, d, 1);
        out.push_back(std::move(sol));
    }
    return out;
}

std::optional<std::vector<PellSolution>> gen_n2(const mpz_class& d, std::size_t count) {
    const auto fund2 = fundamental_n2(d);
    if (!fund2) return std::nullopt;
    const FundamentalPair fund1 = fundamental_n1(d);
    const lucas::LucasParams params(2 * fund1.x, -1);
    std::vector<PellSolution> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const lucas::LucasPair lp = lucas::lucas_pair(params, static_cast<unsigned long>(i));
        const mpz_class u_next = u_next_of(params, lp);
        PellSolution sol{fund2->x * (u_next - lp.u), fund2->y * (u_next + lp.u)};
        check_norm(sol.x, sol.y, d, 2);
        out.push_back(std::move(sol));
    }
    return out;
}

std::optional<std::vector<PellSolution>> gen_ratio(const mpz_class& a, const mpz_class& b,
                                                   std::size_t count) {
    if (a < 2) throw std::invalid_argument("gen_ratio: a must be >= 2");
    if (b < 1) throw std::invalid_argument("gen_ratio: b must be >= 1");
    {
        mpz_class r = arith::isqrt(a);
        if (r * r == a) throw std::invalid_argument("gen_ratio: a must not be a perfect square");
    }
    // least solution scan; if one exists its x is at most x1(ab) because
    // (sqrt(a) x + sqrt(b) y)^2 expands to a solution of X^2 - ab Y^2 = 1
    const mpz_class ab = a * b;
    mpz_class bound = 1;
    if (!arith::is_perfect_square(ab)) bound = fundamental_n1(ab).x;
    std::optional<PellSolution> least;
    for (mpz_class u = 1; u <= bound; ++u) {
        mpz_class t = a * u * u - 1;
        if (!mpz_divisible_p(t.get_mpz_t(), b.get_mpz_t())) continue;
        if (auto v = arith::is_perfect_square(t / b)) {
            least = PellSolution{u, *v};
            break;
        }
    }
    if (!least) return std::nullopt;
    const lucas::LucasParams params(4 * a * least->x * least->x - 2, -1);
    std::vector<PellSolution> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const lucas::LucasPair lp = lucas::lucas_pair(params, static_cast<unsigned long>(i));
        const mpz_class u_next = u_next_of(params, lp);
        PellSolution sol{least->x * (u_next - lp.u), least->y * (u_next + lp.u)};
        if (a * sol.x * sol.x - b * sol.y * sol.y != 1)
            throw std::logic_error("gen_ratio: generated solution fails its defining identity");
        out.push_back(std::move(sol));
    }
    return out;
}

std::vector<PellSolution> solve_neg4k(unsigned long k, std::size_t count) {
    if (k == 0) throw std::invalid_argument("solve_neg4k: k must be >= 1");
    mpz_class scale = 0;
    mpz_setbit(scale.get_mpz_t(), k - 1);
    mpz_class target = 0;  // -4^k
    mpz_setbit(target.get_mpz_t(), 2 * k);
    target = -target;
    const lucas::LucasParams fib(1, 1);
    std::vector<PellSolution> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const lucas::LucasPair lp = lucas::lucas_pair(fib, 2 * static_cast<unsigned long>(i) + 1);
        PellSolution sol{scale * lp.v, scale * lp.u};
        check_norm(sol.x, sol.y, 5, target);
        out.push_back(std::move(sol));
    }
    return out;
}

}  // namespace exdio::pell
