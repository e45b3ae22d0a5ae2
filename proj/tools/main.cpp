// exdio — command-line front end for the (a^n - 2^m)(b^n - 2^m) = x^2 toolkit.
//
// Output protocol: one JSON object per line on stdout (all numeric payloads
// are decimal strings), or bare CSV rows for `sweep --format csv`.  Progress
// and notes go to stderr.  Exit codes: 0 success (including "no solution"
// and "insolvable" answers, which are values), 1 usage or precondition
// error, 2 internal inconsistency (a result failed its own re-verification).

#include <gmpxx.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exdio/arith.hpp"
#include "exdio/lucas.hpp"
#include "exdio/pell.hpp"
#include "exdio/search.hpp"
#include "exdio/sieve.hpp"

namespace {

using nlohmann::ordered_json;
using exdio::search::SearchHit;

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mpz_class parse_mpz(const std::string& text) {
    std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (i == text.size())
        throw std::invalid_argument("expected an integer, got '" + text + "'");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("expected an integer, got '" + text + "'");
    return mpz_class(text, 10);
}

std::string dec(const mpz_class& value) { return value.get_str(); }

void emit(const ordered_json& record) { std::cout << record.dump() << "\n"; }

ordered_json hit_record(const SearchHit& hit) {
    return ordered_json{{"kind", "hit"}, {"a", dec(hit.a)},          {"b", dec(hit.b)},
                        {"m", std::to_string(hit.m)},                {"n", std::to_string(hit.n)},
                        {"x", dec(hit.x)}};
}

std::string hit_csv(const SearchHit& hit) {
    return dec(hit.a) + "," + dec(hit.b) + "," + std::to_string(hit.m) + "," +
           std::to_string(hit.n) + "," + dec(hit.x);
}

// Re-verify every reported hit along an independent route (plain powering,
// subtraction, multiplication, and a big-integer square compare) before
// anything is printed.  A failure here means the toolkit itself is broken.
void verify_hits(const std::vector<SearchHit>& hits) {
    for (const SearchHit& hit : hits) {
        bool ok = hit.a >= 2 && hit.b >= 2 && hit.m >= 1 && hit.m < hit.n && hit.x >= 1;
        if (ok) {
            mpz_class apow, bpow, shift = 0;
            mpz_pow_ui(apow.get_mpz_t(), hit.a.get_mpz_t(), hit.n);
            mpz_pow_ui(bpow.get_mpz_t(), hit.b.get_mpz_t(), hit.n);
            mpz_setbit(shift.get_mpz_t(), hit.m);
            ok = (apow - shift) * (bpow - shift) == hit.x * hit.x;
        }
        if (!ok)
            throw InternalError("hit self-check failed at a=" + dec(hit.a) + " b=" + dec(hit.b) +
                                " m=" + std::to_string(hit.m) + " n=" + std::to_string(hit.n) +
                                ": recorded x does not square to the product");
    }
}

// ---------------------------------------------------------------------------
// checkpointing for long sweeps
//
// Plain text, one line per completed (a, b) pair with its hits inline, a
// query-signature line so a checkpoint cannot be resumed against a different
// request, and a trailing FNV-1a-64 digest of everything above it.  The file
// is rewritten atomically (temp file + rename) after each pair.  On resume
// the last recorded pair is dropped and recomputed as a spot check.

constexpr const char* kCheckpointMagic = "exdio-checkpoint 1";

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (const char c : data) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string digest_line(const std::string& body) {
    std::ostringstream out;
    out << "digest " << std::hex << std::setw(16) << std::setfill('0') << fnv1a(body);
    return out.str();
}

class Checkpoint {
  public:
    Checkpoint(std::string path, std::string signature)
        : path_(std::move(path)), signature_(std::move(signature)) {}

    // Load an existing file: validate magic, signature and digest, then keep
    // every completed pair except the last one (which gets recomputed).
    // Returns false when the file does not exist.
    bool load() {
        std::ifstream in(path_);
        if (!in.is_open()) return false;
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        if (lines.size() < 3 || lines.front() != kCheckpointMagic)
            throw std::invalid_argument("checkpoint: unrecognized file " + path_);
        std::string body;
        for (std::size_t i = 0; i + 1 < lines.size(); ++i) body += lines[i] + "\n";
        if (lines.back() != digest_line(body))
            throw std::invalid_argument("checkpoint: digest mismatch in " + path_ +
                                        " (file is corrupt or truncated)");
        if (lines[1] != "query " + signature_)
            throw std::invalid_argument(
                "checkpoint: " + path_ + " was written by a different query; refusing to resume");
        for (std::size_t i = 2; i + 1 < lines.size(); ++i) parse_pair_line(lines[i]);
        if (!records_.empty()) records_.pop_back();  // recompute the last pair
        return true;
    }

    bool is_completed(const mpz_class& a, const mpz_class& b) const {
        for (const auto& rec : records_)
            if (rec.a == a && rec.b == b) return true;
        return false;
    }

    std::vector<SearchHit> stored_hits() const {
        std::vector<SearchHit> out;
        for (const auto& rec : records_)
            out.insert(out.end(), rec.hits.begin(), rec.hits.end());
        return out;
    }

    void record(const exdio::search::PairStats& stats) {
        PairRecord rec;
        rec.a = stats.a;
        rec.b = stats.b;
        rec.hits = stats.hits;
        records_.push_back(std::move(rec));
        rewrite();
    }

    void rewrite() const {
        std::string body = std::string(kCheckpointMagic) + "\n" + "query " + signature_ + "\n";
        for (const auto& rec : records_) {
            body += "pair " + dec(rec.a) + " " + dec(rec.b) + " " +
                    std::to_string(rec.hits.size());
            for (const auto& hit : rec.hits)
                body += " " + std::to_string(hit.m) + " " + std::to_string(hit.n) + " " +
                        dec(hit.x);
            body += "\n";
        }
        const std::string tmp = path_ + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out.is_open())
                throw std::invalid_argument("checkpoint: cannot write " + tmp);
            out << body << digest_line(body) << "\n";
        }
        if (std::rename(tmp.c_str(), path_.c_str()) != 0)
            throw std::invalid_argument("checkpoint: cannot replace " + path_);
    }

  private:
    struct PairRecord {
        mpz_class a;
        mpz_class b;
        std::vector<SearchHit> hits;
    };

    void parse_pair_line(const std::string& line) {
        std::istringstream in(line);
        std::string tag, a_text, b_text;
        std::size_t count = 0;
        if (!(in >> tag >> a_text >> b_text >> count) || tag != "pair")
            throw std::invalid_argument("checkpoint: malformed pair line '" + line + "'");
        PairRecord rec;
        rec.a = parse_mpz(a_text);
        rec.b = parse_mpz(b_text);
        for (std::size_t i = 0; i < count; ++i) {
            unsigned long m = 0, n = 0;
            std::string x_text;
            if (!(in >> m >> n >> x_text))
                throw std::invalid_argument("checkpoint: malformed pair line '" + line + "'");
            rec.hits.push_back(SearchHit{rec.a, rec.b, m, n, parse_mpz(x_text)});
        }
        records_.push_back(std::move(rec));
    }

    std::string path_;
    std::string signature_;
    std::vector<PairRecord> records_;
};

// ---------------------------------------------------------------------------
// subcommand state and runners

struct SweepArgs {
    std::string a_min, a_max, b_min, b_max;
    unsigned long n_min = 2, n_max = 2;
    unsigned long m = 1;
    bool m_all = false;
    std::vector<std::uint64_t> primes{5, 7, 11, 13, 31};
    bool no_sieve = false;
    unsigned jobs = 1;
    std::string format = "json";
    std::string checkpoint_path;
    bool quiet = false;
    bool inject_fault = false;  // hidden: corrupt one result to exercise exit code 2
};

std::string sweep_signature(const exdio::search::SearchQuery& query) {
    std::string primes;
    for (const auto p : query.sieve_primes)
        primes += (primes.empty() ? "" : ",") + std::to_string(p);
    if (primes.empty()) primes = "none";
    std::string m = query.m_policy.kind == exdio::search::MPolicy::Kind::fixed
                        ? std::to_string(query.m_policy.m)
                        : "all";
    return "a=" + dec(query.a_lo) + ".." + dec(query.a_hi) + " b=" + dec(query.b_lo) + ".." +
           dec(query.b_hi) + " n=" + std::to_string(query.n_lo) + ".." +
           std::to_string(query.n_hi) + " m=" + m +
           " classifier=" + (query.use_classifier ? "1" : "0") + " primes=" + primes;
}

void run_sweep(const SweepArgs& args) {
    exdio::search::SearchQuery query;
    query.a_lo = parse_mpz(args.a_min);
    query.a_hi = parse_mpz(args.a_max);
    query.b_lo = parse_mpz(args.b_min);
    query.b_hi = parse_mpz(args.b_max);
    query.n_lo = args.n_min;
    query.n_hi = args.n_max;
    query.m_policy = args.m_all ? exdio::search::MPolicy::all_below_n()
                                : exdio::search::MPolicy::fixed(args.m);
    if (args.no_sieve) {
        query.use_classifier = false;
        query.sieve_primes.clear();
    } else {
        query.sieve_primes = args.primes;
    }
    if (args.format != "json" && args.format != "csv")
        throw std::invalid_argument("sweep: --format must be json or csv");

    std::optional<Checkpoint> checkpoint;
    std::vector<SearchHit> hits;
    if (!args.checkpoint_path.empty()) {
        checkpoint.emplace(args.checkpoint_path, sweep_signature(query));
        if (checkpoint->load()) {
            hits = checkpoint->stored_hits();
            if (!args.quiet)
                std::cerr << "checkpoint: resuming " << args.checkpoint_path << "\n";
        } else {
            checkpoint->rewrite();  // leave a valid empty checkpoint behind
        }
    }

    exdio::search::SweepOptions options;
    options.jobs = args.jobs;
    if (checkpoint)
        options.skip_pair = [&](const mpz_class& a, const mpz_class& b) {
            return checkpoint->is_completed(a, b);
        };
    options.on_pair_done = [&](const exdio::search::PairStats& stats) {
        if (!args.quiet) {
            std::ostringstream line;
            line << "pair a=" << dec(stats.a) << " b=" << dec(stats.b) << " elapsed_ms="
                 << std::fixed << std::setprecision(2) << stats.seconds * 1e3
                 << " candidates=" << stats.candidates
                 << " sieved=" << stats.excluded_by_classifier + stats.excluded_by_sieve
                 << " tested=" << stats.tested << " hits=" << stats.hits.size();
            std::cerr << line.str() << "\n";
        }
        if (checkpoint) checkpoint->record(stats);
    };

    std::vector<SearchHit> fresh = exdio::search::sweep(query, options);
    hits.insert(hits.end(), std::make_move_iterator(fresh.begin()),
                std::make_move_iterator(fresh.end()));
    std::sort(hits.begin(), hits.end(), exdio::search::hit_less);

    if (args.inject_fault) {
        if (!hits.empty())
            hits.front().x += 1;
        else
            hits.push_back(SearchHit{2, 3, 1, 2, 1});
    }

    verify_hits(hits);
    for (const SearchHit& hit : hits) {
        if (args.format == "csv")
            std::cout << hit_csv(hit) << "\n";
        else
            emit(hit_record(hit));
    }
}

void run_check(const std::string& a_text, const std::string& b_text, unsigned long m,
               unsigned long n) {
    const mpz_class a = parse_mpz(a_text), b = parse_mpz(b_text);
    const auto root = exdio::search::check_instance(a, b, m, n);
    if (!root) {
        std::cerr << "no solution: the product is not a positive perfect square\n";
        return;
    }
    const SearchHit hit{a, b, m, n, *root};
    verify_hits({hit});
    emit(hit_record(hit));
}

void emit_pell(const ordered_json& base, std::size_t index, const exdio::pell::PellSolution& sol,
               const char* x_name = "x", const char* y_name = "y") {
    ordered_json record = base;
    record["index"] = std::to_string(index);
    record[x_name] = dec(sol.x);
    record[y_name] = dec(sol.y);
    emit(record);
}

void run_verify_family(const char* name, exdio::search::Inequality which, unsigned long m_lo,
                       unsigned long m_hi) {
    for (const auto& [m, holds] : exdio::search::verify_inequality(which, m_lo, m_hi))
        emit(ordered_json{{"kind", "inequality"},
                          {"name", name},
                          {"m", std::to_string(m)},
                          {"holds", holds}});
}

ordered_json class_set_record(const char* sense, const exdio::sieve::ResidueClassSet& set) {
    ordered_json residues = ordered_json::array();
    for (const auto r : set.residues) residues.push_back(std::to_string(r));
    return ordered_json{{"kind", "class_set"},
                        {"sense", sense},
                        {"modulus", std::to_string(set.modulus)},
                        {"residues", residues}};
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{"search and certification toolkit for (a^n - 2^m)(b^n - 2^m) = x^2"};
    app.require_subcommand(1);

    // ---- check -------------------------------------------------------------
    std::string check_a, check_b;
    unsigned long check_m = 0, check_n = 0;
    auto* check = app.add_subcommand("check", "test one (a, b, m, n) cell for a square product");
    check->add_option("a", check_a, "first base (>= 2)")->required();
    check->add_option("b", check_b, "second base (>= 2, != a)")->required();
    check->add_option("m", check_m, "power-of-two exponent (>= 1)")->required();
    check->add_option("n", check_n, "base exponent (> m)")->required();
    check->callback([&] { run_check(check_a, check_b, check_m, check_n); });

    // ---- sweep -------------------------------------------------------------
    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "exhaustive scan over a box of pairs a < b");
    sweep->add_option("--a-min", sweep_args.a_min, "smallest a")->required();
    sweep->add_option("--a-max", sweep_args.a_max, "largest a")->required();
    sweep->add_option("--b-min", sweep_args.b_min, "smallest b")->required();
    sweep->add_option("--b-max", sweep_args.b_max, "largest b")->required();
    sweep->add_option("--n-min", sweep_args.n_min, "smallest n (default 2)");
    sweep->add_option("--n-max", sweep_args.n_max, "largest n")->required();
    auto* m_opt = sweep->add_option("--m", sweep_args.m, "fixed power-of-two exponent (default 1)");
    auto* m_all = sweep->add_flag("--m-all", sweep_args.m_all, "scan every m in [1, n-1]");
    m_opt->excludes(m_all);
    m_all->excludes(m_opt);
    sweep->add_option("--primes", sweep_args.primes,
                      "residue-sieve primes (default 5,7,11,13,31)")
        ->delimiter(',');
    sweep->add_flag("--no-sieve", sweep_args.no_sieve,
                    "disable the classifier and the residue sieve (results are identical)");
    sweep->add_option("--jobs", sweep_args.jobs, "worker threads (default 1)");
    sweep->add_option("--format", sweep_args.format, "output format: json or csv");
    sweep->add_option("--checkpoint", sweep_args.checkpoint_path,
                      "checkpoint file for interrupt/resume");
    sweep->add_flag("--quiet", sweep_args.quiet, "suppress per-pair progress on stderr");
    sweep->add_flag("--inject-fault", sweep_args.inject_fault)->group("");  // test hook
    sweep->callback([&] { run_sweep(sweep_args); });

    // ---- pell --------------------------------------------------------------
    auto* pell = app.add_subcommand("pell", "Pell-type equation solvers");
    pell->require_subcommand(1);
    std::string pell_d, ratio_a, ratio_b;
    unsigned long pell_count = 0, neg4k_k = 1;
    bool fund_n2 = false;

    auto* fund = pell->add_subcommand("fund", "fundamental solution of x^2 - d y^2 = 1 (or 2)");
    fund->add_option("d", pell_d, "non-square d >= 2")->required();
    fund->add_flag("--n2", fund_n2, "solve x^2 - d y^2 = 2 instead");
    fund->callback([&] {
        const mpz_class d = parse_mpz(pell_d);
        if (fund_n2) {
            const auto f = exdio::pell::fundamental_n2(d);
            if (!f) {
                std::cerr << "insolvable: x^2 - " << dec(d) << " y^2 = 2 has no solution\n";
                return;
            }
            emit(ordered_json{{"kind", "pell_solution"}, {"d", dec(d)}, {"norm", "2"},
                              {"x", dec(f->x)}, {"y", dec(f->y)}});
            return;
        }
        const auto f = exdio::pell::fundamental_n1(d);
        emit(ordered_json{{"kind", "pell_solution"}, {"d", dec(d)}, {"norm", "1"},
                          {"x", dec(f.x)}, {"y", dec(f.y)}});
    });

    auto* gen = pell->add_subcommand("gen", "first solutions of x^2 - d y^2 = 1");
    gen->add_option("d", pell_d, "non-square d >= 2")->required();
    gen->add_option("count", pell_count, "number of solutions")->required();
    gen->callback([&] {
        const mpz_class d = parse_mpz(pell_d);
        const auto sols = exdio::pell::gen_n1(d, pell_count);
        const ordered_json base{{"kind", "pell_solution"}, {"d", dec(d)}, {"norm", "1"}};
        for (std::size_t i = 0; i < sols.size(); ++i) emit_pell(base, i + 1, sols[i]);
    });

    auto* gen2 = pell->add_subcommand("gen2", "first solutions of x^2 - d y^2 = 2");
    gen2->add_option("d", pell_d, "non-square d >= 2")->required();
    gen2->add_option("count", pell_count, "number of solutions")->required();
    gen2->callback([&] {
        const mpz_class d = parse_mpz(pell_d);
        const auto sols = exdio::pell::gen_n2(d, pell_count);
        if (!sols) {
            std::cerr << "insolvable: x^2 - " << dec(d) << " y^2 = 2 has no solution\n";
            return;
        }
        const ordered_json base{{"kind", "pell_solution"}, {"d", dec(d)}, {"norm", "2"}};
        for (std::size_t i = 0; i < sols->size(); ++i) emit_pell(base, i + 1, (*sols)[i]);
    });

    auto* ratio = pell->add_subcommand("ratio", "first solutions of a x^2 - b y^2 = 1");
    ratio->add_option("a", ratio_a, "non-square a >= 2")->required();
    ratio->add_option("b", ratio_b, "b >= 1")->required();
    ratio->add_option("count", pell_count, "number of solutions")->required();
    ratio->callback([&] {
        const mpz_class a = parse_mpz(ratio_a), b = parse_mpz(ratio_b);
        const auto sols = exdio::pell::gen_ratio(a, b, pell_count);
        if (!sols) {
            std::cerr << "insolvable: " << dec(a) << " x^2 - " << dec(b)
                      << " y^2 = 1 has no solution\n";
            return;
        }
        const ordered_json base{
            {"kind", "pell_solution"}, {"a", dec(a)}, {"b", dec(b)}, {"norm", "1"}};
        for (std::size_t i = 0; i < sols->size(); ++i) emit_pell(base, i + 1, (*sols)[i]);
    });

    auto* neg4k = pell->add_subcommand("neg4k", "first solutions of u^2 - 5 v^2 = -4^k");
    neg4k->add_option("k", neg4k_k, "exponent k >= 1")->required();
    neg4k->add_option("count", pell_count, "number of solutions")->required();
    neg4k->callback([&] {
        const auto sols = exdio::pell::solve_neg4k(neg4k_k, pell_count);
        const ordered_json base{{"kind", "pell_solution"},
                                {"k", std::to_string(neg4k_k)},
                                {"norm", "-4^" + std::to_string(neg4k_k)}};
        for (std::size_t i = 0; i < sols.size(); ++i) emit_pell(base, i + 1, sols[i], "u", "v");
    });

    // ---- lucas -------------------------------------------------------------
    auto* lucas_cmd = app.add_subcommand("lucas", "Lucas sequence terms U_n, V_n");
    lucas_cmd->require_subcommand(1);
    std::string lucas_p, lucas_q;
    unsigned long lucas_n = 0;
    const auto add_lucas_sub = [&](const char* name, const char* help, bool with_u, bool with_v) {
        auto* sub = lucas_cmd->add_subcommand(name, help);
        sub->add_option("P", lucas_p, "recurrence coefficient P")->required();
        sub->add_option("Q", lucas_q, "recurrence coefficient Q")->required();
        sub->add_option("n", lucas_n, "term index")->required();
        sub->callback([&, with_u, with_v] {
            const exdio::lucas::LucasParams params(parse_mpz(lucas_p), parse_mpz(lucas_q));
            const auto pair = exdio::lucas::lucas_pair(params, lucas_n);
            ordered_json record{{"kind", "lucas_value"},
                                {"p", dec(params.p)},
                                {"q", dec(params.q)},
                                {"n", std::to_string(lucas_n)}};
            if (with_u) record["u"] = dec(pair.u);
            if (with_v) record["v"] = dec(pair.v);
            emit(record);
        });
    };
    add_lucas_sub("u", "print U_n", true, false);
    add_lucas_sub("v", "print V_n", false, true);
    add_lucas_sub("pair", "print U_n and V_n", true, true);

    // ---- sieve -------------------------------------------------------------
    auto* sieve_cmd = app.add_subcommand("sieve", "non-existence classifier and residue sieves");
    sieve_cmd->require_subcommand(1);
    std::string sieve_a, sieve_b;
    unsigned long sieve_m = 0, sieve_n = 0;
    std::uint64_t sieve_p = 0, sieve_cap = 1000000;
    std::vector<std::uint64_t> sieve_primes;

    auto* classify = sieve_cmd->add_subcommand("classify", "structural non-existence verdict");
    classify->add_option("a", sieve_a)->required();
    classify->add_option("b", sieve_b)->required();
    classify->add_option("m", sieve_m)->required();
    classify->add_option("n", sieve_n)->required();
    classify->callback([&] {
        const auto verdict = exdio::sieve::classify_exclusion(parse_mpz(sieve_a),
                                                              parse_mpz(sieve_b), sieve_m, sieve_n);
        emit(ordered_json{{"kind", "verdict"},
                          {"a", sieve_a},
                          {"b", sieve_b},
                          {"m", std::to_string(sieve_m)},
                          {"n", std::to_string(sieve_n)},
                          {"excluded", verdict.excluded},
                          {"rule", exdio::sieve::rule_name(verdict.rule)},
                          {"detail", verdict.detail}});
    });

    auto* classes = sieve_cmd->add_subcommand("classes", "excluded classes of n for one prime");
    classes->add_option("a", sieve_a)->required();
    classes->add_option("b", sieve_b)->required();
    classes->add_option("m", sieve_m)->required();
    classes->add_option("p", sieve_p, "odd prime")->required();
    classes->callback([&] {
        const auto set = exdio::sieve::qr_excluded_classes(parse_mpz(sieve_a), parse_mpz(sieve_b),
                                                           sieve_m, sieve_p);
        ordered_json record = class_set_record("excluded", set);
        record["a"] = sieve_a;
        record["b"] = sieve_b;
        record["m"] = std::to_string(sieve_m);
        record["p"] = std::to_string(sieve_p);
        emit(record);
    });

    auto* residual = sieve_cmd->add_subcommand("residual", "classes of n surviving every prime");
    residual->add_option("a", sieve_a)->required();
    residual->add_option("b", sieve_b)->required();
    residual->add_option("m", sieve_m)->required();
    residual->add_option("--primes", sieve_primes, "comma-separated odd primes")
        ->delimiter(',')
        ->required();
    residual->add_option("--cap", sieve_cap, "largest allowed combined modulus (default 10^6)");
    residual->callback([&] {
        const auto set = exdio::sieve::residual_classes(parse_mpz(sieve_a), parse_mpz(sieve_b),
                                                        sieve_m, sieve_primes, sieve_cap);
        ordered_json record = class_set_record("surviving", set);
        record["a"] = sieve_a;
        record["b"] = sieve_b;
        record["m"] = std::to_string(sieve_m);
        ordered_json primes = ordered_json::array();
        for (const auto p : sieve_primes) primes.push_back(std::to_string(p));
        record["primes"] = primes;
        emit(record);
    });

    // ---- conjecture --------------------------------------------------------
    auto* conjecture = app.add_subcommand("conjecture", "targeted scans behind the two conjectures");
    conjecture->require_subcommand(1);
    std::vector<unsigned long> conj_k;
    unsigned long conj_n_max = 2;
    std::string conj_limit_a, conj_limit_b;

    auto* conj_one = conjecture->add_subcommand(
        "one", "scan a = 2, b = 2 U_k(2,1) for odd k with m = 1");
    conj_one->add_option("--k", conj_k, "odd k values (comma-separated)")
        ->delimiter(',')
        ->required();
    conj_one->add_option("--n-max", conj_n_max, "largest n")->required();
    conj_one->callback([&] {
        const auto hits = exdio::search::conjecture1_probe(conj_k, conj_n_max);
        verify_hits(hits);
        for (const auto& hit : hits) emit(hit_record(hit));
    });

    auto* conj_two = conjecture->add_subcommand("two", "scan all 2 < a < b <= limits with m = 1");
    conj_two->add_option("--limit-a", conj_limit_a, "largest a")->required();
    conj_two->add_option("--limit-b", conj_limit_b, "largest b")->required();
    conj_two->add_option("--n-max", conj_n_max, "largest n")->required();
    conj_two->callback([&] {
        const auto result = exdio::search::conjecture2_probe(parse_mpz(conj_limit_a),
                                                             parse_mpz(conj_limit_b), conj_n_max);
        verify_hits(result.hits);
        for (const auto& hit : result.hits) emit(hit_record(hit));
        std::cerr << "max n over all hits: " << result.max_n << "\n";
    });

    // ---- verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "exact checks of auxiliary inequalities");
    verify->require_subcommand(1);
    unsigned long verify_m_min = 1, verify_m_max = 1;

    auto* v_l9 = verify->add_subcommand("l9", "5^m > 2^(2m+1) - 3 on an m range");
    v_l9->add_option("--m-min", verify_m_min)->required();
    v_l9->add_option("--m-max", verify_m_max)->required();
    v_l9->callback([&] {
        run_verify_family("l9", exdio::search::Inequality::five_powers, verify_m_min,
                          verify_m_max);
    });

    auto* v_l11 = verify->add_subcommand("l11", "2*3^(4m-3) > 5^m + 1 on an m range");
    v_l11->add_option("--m-min", verify_m_min)->required();
    v_l11->add_option("--m-max", verify_m_max)->required();
    v_l11->callback([&] {
        run_verify_family("l11", exdio::search::Inequality::three_powers, verify_m_min,
                          verify_m_max);
    });

    auto* v_c1 = verify->add_subcommand("c1", "solutions of (z+1)(2z-1)^2 = 10^(2m)");
    v_c1->add_option("--m-max", verify_m_max)->required();
    v_c1->callback([&] {
        for (const auto& [m, z] : exdio::search::solve_c1(verify_m_max))
            emit(ordered_json{{"kind", "inequality"},
                              {"name", "c1"},
                              {"m", std::to_string(m)},
                              {"z", dec(z)},
                              {"holds", true}});
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
