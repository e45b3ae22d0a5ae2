#include "exdio/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "exdio/arith.hpp"
#include "exdio/lucas.hpp"
#include "exdio/sieve.hpp"

namespace exdio::search {

namespace {

mpz_class pow2(unsigned long m) {
    mpz_class out = 0;
    mpz_setbit(out.get_mpz_t(), m);
    return out;
}

// per-prime sieve state for one (a, b) pair; the excluded-class table only
// depends on m through 2^m mod p, so tables are cached by m mod ord_p(2)
struct PrimeSieveState {
    std::uint64_t p = 0;
    std::uint64_t two_period = 1;
    std::map<std::uint64_t, sieve::ResidueClassSet> tables;  // key: m mod two_period
};

class PairScanner {
  public:
    PairScanner(const SearchQuery& query, const mpz_class& a, const mpz_class& b)
        : query_(query), a_(a), b_(b) {
        for (const std::uint64_t p : query.sieve_primes) {
            PrimeSieveState state;
            state.p = p;
            state.two_period = mpz_get_ui(
                arith::mult_order(2, mpz_class(static_cast<unsigned long>(p))).get_mpz_t());
            states_.push_back(std::move(state));
        }
    }

    PairStats run() {
        const auto start = std::chrono::steady_clock::now();
        PairStats stats;
        stats.a = a_;
        stats.b = b_;

        std::vector<std::pair<unsigned long, unsigned long>> survivors;  // (n, m), n ascending
        const auto consider = [&](unsigned long m, unsigned long n) {
            ++stats.candidates;
            if (query_.use_classifier &&
                sieve::classify_rule(a_, b_, m, n) != sieve::ExclusionRule::NONE) {
                ++stats.excluded_by_classifier;
                return;
            }
            for (auto& state : states_)
                if (table_for(state, m).contains(n)) {
                    ++stats.excluded_by_sieve;
                    return;
                }
            survivors.emplace_back(n, m);
        };

        if (query_.m_policy.kind == MPolicy::Kind::fixed) {
            const unsigned long m = query_.m_policy.m;
            for (unsigned long n = std::max(query_.n_lo, m + 1); n <= query_.n_hi; ++n)
                consider(m, n);
        } else {
            for (unsigned long n = query_.n_lo; n <= query_.n_hi; ++n)
                for (unsigned long m = 1; m < n; ++m) consider(m, n);
        }

        test_survivors(survivors, stats);
        stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
        return stats;
    }

  private:
    const sieve::ResidueClassSet& table_for(PrimeSieveState& state, unsigned long m) {
        const std::uint64_t key = m % state.two_period;
        auto it = state.tables.find(key);
        if (it == state.tables.end())
            it = state.tables.emplace(key, sieve::qr_excluded_classes(a_, b_, m, state.p)).first;
        return it->second;
    }

    void test_survivors(const std::vector<std::pair<unsigned long, unsigned long>>& survivors,
                        PairStats& stats) {
        mpz_class apow, bpow;
        unsigned long at = 0;
        bool have_powers = false;
        std::size_t i = 0;
        while (i < survivors.size()) {
            const unsigned long n = survivors[i].first;
            if (!have_powers || n - at > 64) {
                mpz_pow_ui(apow.get_mpz_t(), a_.get_mpz_t(), n);
                mpz_pow_ui(bpow.get_mpz_t(), b_.get_mpz_t(), n);
                at = n;
                have_powers = true;
            } else {
                while (at < n) {
                    apow *= a_;
                    bpow *= b_;
                    ++at;
                }
            }
            for (; i < survivors.size() && survivors[i].first == n; ++i) {
                const unsigned long m = survivors[i].second;
                ++stats.tested;
                const mpz_class shift = pow2(m);
                const mpz_class fa = apow - shift;
                const mpz_class fb = bpow - shift;
                if (fa <= 0 || fb <= 0) continue;
                if (auto root = arith::is_perfect_square(fa * fb); root && *root >= 1)
                    stats.hits.push_back(SearchHit{a_, b_, m, n, std::move(*root)});
            }
        }
    }

    const SearchQuery& query_;
    const mpz_class& a_;
    const mpz_class& b_;
    std::vector<PrimeSieveState> states_;
};

void validate_query(const SearchQuery& query) {
    const bool a_nonempty = query.a_lo <= query.a_hi;
    const bool b_nonempty = query.b_lo <= query.b_hi;
    if (a_nonempty && query.a_lo < 2) throw std::invalid_argument("sweep: bases must be >= 2");
    if (b_nonempty && query.b_lo < 2) throw std::invalid_argument("sweep: bases must be >= 2");
    if (query.n_lo < 2) throw std::invalid_argument("sweep: n must be >= 2");
    if (query.m_policy.kind == MPolicy::Kind::fixed && query.m_policy.m == 0)
        throw std::invalid_argument("sweep: fixed m must be >= 1");
}

}  // namespace

bool hit_less(const SearchHit& lhs, const SearchHit& rhs) {
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    if (lhs.n != rhs.n) return lhs.n < rhs.n;
    if (lhs.m != rhs.m) return lhs.m < rhs.m;
    return lhs.x < rhs.x;
}

MPolicy MPolicy::fixed(unsigned long m) { return MPolicy{Kind::fixed, m}; }

MPolicy MPolicy::all_below_n() { return MPolicy{Kind::all_below_n, 0}; }

std::optional<mpz_class> check_instance(const mpz_class& a, const mpz_class& b, unsigned long m,
                                        unsigned long n) {
    if (a < 2 || b < 2) throw std::invalid_argument("check_instance: a and b must be >= 2");
    if (a == b) throw std::invalid_argument("check_instance: a and b must differ");
    if (m == 0 || m >= n) throw std::invalid_argument("check_instance: requires 0 < m < n");
    mpz_class apow, bpow;
    mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), n);
    mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), n);
    const mpz_class shift = pow2(m);
    const mpz_class fa = apow - shift;
    const mpz_class fb = bpow - shift;
    if (fa <= 0 || fb <= 0) return std::nullopt;
    auto root = arith::is_perfect_square(fa * fb);
    if (root && *root >= 1) return root;
    return std::nullopt;
}

std::vector<SearchHit> sweep(const SearchQuery& query, const SweepOptions& options) {
    validate_query(query);

    std::vector<std::pair<mpz_class, mpz_class>> pairs;
    for (mpz_class a = query.a_lo; a <= query.a_hi; ++a) {
        mpz_class b_start = query.b_lo > a + 1 ? query.b_lo : mpz_class(a + 1);
        for (mpz_class b = b_start; b <= query.b_hi; ++b)
            if (!options.skip_pair || !options.skip_pair(a, b)) pairs.emplace_back(a, b);
    }

    std::vector<std::vector<SearchHit>> per_pair(pairs.size());
    std::atomic<std::size_t> next{0};
    std::mutex done_mutex;
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            PairStats stats = PairScanner(query, pairs[i].first, pairs[i].second).run();
            per_pair[i] = stats.hits;
            if (options.on_pair_done) {
                std::lock_guard<std::mutex> lock(done_mutex);
                options.on_pair_done(stats);
            }
        }
    };

    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1 || pairs.size() <= 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    }

    std::vector<SearchHit> out;
    for (auto& hits : per_pair)
        for (auto& hit : hits) out.push_back(std::move(hit));
    std::sort(out.begin(), out.end(), hit_less);
    return out;
}

std::vector<SearchHit> conjecture1_probe(const std::vector<unsigned long>& k_values,
                                         unsigned long n_max) {
    const lucas::LucasParams pell_params(2, 1);
    std::vector<SearchHit> out;
    for (const unsigned long k : k_values) {
        if (k < 3 || k % 2 == 0)
            throw std::invalid_argument("conjecture1_probe: k must be odd and >= 3");
        const mpz_class b = 2 * lucas::lucas_pair(pell_params, k).u;
        SearchQuery query;
        query.a_lo = query.a_hi = 2;
        query.b_lo = query.b_hi = b;
        query.n_lo = 2;
        query.n_hi = n_max;
        query.m_policy = MPolicy::fixed(1);
        query.sieve_primes = {5, 7, 11, 13, 31};
        auto hits = sweep(query);
        out.insert(out.end(), std::make_move_iterator(hits.begin()),
                   std::make_move_iterator(hits.end()));
    }
    return out;
}

Conjecture2Result conjecture2_probe(const mpz_class& limit_a, const mpz_class& limit_b,
                                    unsigned long n_max) {
    if (limit_a < 3 || limit_b < 3)
        throw std::invalid_argument("conjecture2_probe: limits must be >= 3");
    SearchQuery query;
    query.a_lo = 3;
    query.a_hi = limit_a;
    query.b_lo = 3;
    query.b_hi = limit_b;
    query.n_lo = 2;
    query.n_hi = n_max;
    query.m_policy = MPolicy::fixed(1);
    query.sieve_primes = {5, 7, 11, 13, 31};
    Conjecture2Result result;
    result.hits = sweep(query);
    for (const auto& hit : result.hits) result.max_n = std::max(result.max_n, hit.n);
    return result;
}

std::vector<std::pair<unsigned long, mpz_class>> solve_c1(unsigned long m_max) {
    if (m_max == 0) throw std::invalid_argument("solve_c1: m_max must be >= 1");
    std::vector<std::pair<unsigned long, mpz_class>> out;
    for (unsigned long m = 1; m <= m_max; ++m) {
        mpz_class target;
        mpz_ui_pow_ui(target.get_mpz_t(), 10, 2 * m);
        for (unsigned long j = 0; j <= m; ++j) {
            mpz_class divisor;  // odd square-root divisor candidate 5^j
            mpz_ui_pow_ui(divisor.get_mpz_t(), 5, j);
            const mpz_class z = (divisor + 1) / 2;
            if ((z + 1) * divisor * divisor == target) out.emplace_back(m, z);
        }
    }
    return out;
}

std::vector<std::pair<unsigned long, bool>> verify_inequality(Inequality which,
                                                              unsigned long m_lo,
                                                              unsigned long m_hi) {
    if (which == Inequality::three_powers && m_lo == 0)
        throw std::invalid_argument("verify_inequality: three_powers needs m >= 1");
    std::vector<std::pair<unsigned long, bool>> out;
    for (unsigned long m = m_lo; m <= m_hi; ++m) {
        mpz_class lhs, rhs;
        if (which == Inequality::five_powers) {
            mpz_ui_pow_ui(lhs.get_mpz_t(), 5, m);
            rhs = pow2(2 * m + 1) - 3;
        } else {
            mpz_ui_pow_ui(lhs.get_mpz_t(), 3, 4 * m - 3);
            lhs *= 2;
            mpz_ui_pow_ui(rhs.get_mpz_t(), 5, m);
            rhs += 1;
        }
        out.emplace_back(m, lhs > rhs);
    }
    return out;
}

}  // namespace exdio::search
