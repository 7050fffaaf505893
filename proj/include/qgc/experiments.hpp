#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qgc/decomposition.hpp"
#include "qgc/dihedral.hpp"
#include "qgc/entropy.hpp"
#include "qgc/linear_code.hpp"
#include "qgc/quasi.hpp"
#include "qgc/report.hpp"
#include "qgc/rng.hpp"
#include "qgc/selfdual.hpp"

namespace qgc {

struct ExperimentConfig {
    std::string field = "2^1";
    std::string group;                  // quasi ensembles: the abelian coindex group
    std::vector<std::uint32_t> n_grid;  // linear / index2 / selfdual / selforth / dihedral
    std::vector<std::uint32_t> t_grid;  // quasi
    double r = 0.5;
    double delta = 0.1;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::uint64_t budget = default_enumeration_budget();
};

namespace detail {

// Fan trials out over workers; each trial owns substream(seed, base + trial)
// and writes integer counters only, so aggregation is order-independent and
// the worker count cannot change any result.
template <class Fn>
inline std::vector<std::uint64_t> run_trials(const ExperimentConfig& cfg, std::uint64_t trial_base,
                                             std::size_t n_counters, Fn per_trial) {
    if (cfg.trials == 0) throw std::invalid_argument("experiment needs at least one trial");
    unsigned workers = std::max(1u, cfg.workers);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n_counters, 0));
    auto body = [&](unsigned w) {
        for (std::uint64_t t = w; t < cfg.trials; t += workers) {
            RngStream rng = RngStream::substream(cfg.seed, trial_base + t);
            per_trial(rng, partial[w]);
        }
    };
    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> total(n_counters, 0);
    for (const auto& part : partial)
        for (std::size_t i = 0; i < n_counters; ++i) total[i] += part[i];
    return total;
}

// enumerate all nonzero messages b over the given (not necessarily
// independent) rows, visiting bA each time; digit bumps step by the
// canonical-index difference, which matters in extension fields
template <class Fn>
inline void for_each_message(const Fq& F, const std::vector<Word>& rows, std::uint64_t budget, Fn fn) {
    std::size_t k = rows.size(), n = rows[0].size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= F.q;
        if (total > budget) throw BudgetExceeded("message-space enumeration exceeds budget");
    }
    Word w(n, 0);
    std::vector<std::uint32_t> digit(k, 0);
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t j = 0;
        while (true) {
            std::uint32_t d = digit[j];
            std::uint32_t next = d + 1 < F.q ? d + 1 : 0;
            word_add_scaled_inplace(F, w, rows[j], F.sub(static_cast<Fel>(next), static_cast<Fel>(d)));
            digit[j] = next;
            if (next) break;
            ++j;
        }
        fn(static_cast<const Word&>(w));
    }
}

inline double binom_se(std::uint64_t hits, std::uint64_t trials) {
    double p = static_cast<double>(hits) / static_cast<double>(trials);
    return std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

inline void echo_common(ExperimentReport& rep, const ExperimentConfig& cfg) {
    rep.config.emplace_back("field", JVal::of(cfg.field));
    if (!cfg.group.empty()) rep.config.emplace_back("group", JVal::of(cfg.group));
    rep.config.emplace_back("r", JVal::of(cfg.r));
    rep.config.emplace_back("delta", JVal::of(cfg.delta));
    rep.config.emplace_back("trials", JVal::of(cfg.trials));
    rep.config.emplace_back("seed", JVal::of(cfg.seed));
    rep.config.emplace_back("budget", JVal::of(cfg.budget));
}

}  // namespace detail

// Random linear ensemble C_M: Pr(Delta > delta), Monte Carlo E(X) against the
// exact finite-n first moment, and the rank-deficiency rate.
inline ExperimentReport exp_random_linear(const ExperimentConfig& cfg) {
    Fq F = parse_field(cfg.field);
    ExperimentReport rep;
    rep.experiment = "linear";
    detail::echo_common(rep, cfg);
    rep.columns = {"n",     "k",     "delta_gt_count", "pr_delta_gt", "pr_se",         "ex_exact",
                   "ex_exact_frac", "ex_mc", "ex_se",   "rank_def_count", "rank_def_rate", "rank_def_bound"};

    std::uint64_t trial_base = 0;
    for (std::uint32_t n : cfg.n_grid) {
        std::size_t k = static_cast<std::size_t>(cfg.r * n);
        if (k < 1) throw std::invalid_argument("degenerate point: floor(r n) = 0");
        if (k > n) throw std::invalid_argument("degenerate point: k > n");
        std::size_t t = ball_radius(n, cfg.delta);

        enum { cDeltaGt, cX, cX2, cRankDef, nCnt };
        auto totals = detail::run_trials(cfg, trial_base, nCnt, [&](RngStream& rng, std::vector<std::uint64_t>& c) {
            Group trivial = Group::abelian({});
            QuasiMatrix A = sample_quasi_matrix(F, trivial, k, n, rng);
            std::vector<Word> rows(k, Word(n, 0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < n; ++j) rows[i][j] = A.at(i, j).c[0];
            std::uint64_t X = 0;
            detail::for_each_message(F, rows, cfg.budget, [&](const Word& w) {
                int wt = weight(w);
                if (wt > 0 && static_cast<std::size_t>(wt) <= t) ++X;
            });
            if (X == 0) ++c[cDeltaGt];
            c[cX] += X;
            c[cX2] += X * X;
            if (row_space(F, rows).rank() < k) ++c[cRankDef];
        });
        trial_base += cfg.trials;

        BigUint ball = ball_size(F.q, n, cfg.delta);
        BigUint num = ball;
        num.sub_small(1);
        std::uint64_t qk = 1;
        for (std::size_t i = 0; i < k; ++i) qk *= F.q;
        num.mul_small(qk - 1);
        BigUint den = big_pow(F.q, n);
        double ex_exact = static_cast<double>(num.to_ldouble() / den.to_ldouble());
        double mean = static_cast<double>(totals[cX]) / static_cast<double>(cfg.trials);
        double var = static_cast<double>(totals[cX2]) / static_cast<double>(cfg.trials) - mean * mean;
        double ex_se = std::sqrt(std::max(0.0, var) / static_cast<double>(cfg.trials));

        rep.rows.push_back({JVal::of(static_cast<std::uint64_t>(n)), JVal::of(static_cast<std::uint64_t>(k)),
                            JVal::of(totals[cDeltaGt]),
                            JVal::of(static_cast<double>(totals[cDeltaGt]) / cfg.trials),
                            JVal::of(detail::binom_se(totals[cDeltaGt], cfg.trials)), JVal::of(ex_exact),
                            JVal::of(num.to_string() + "/" + den.to_string()), JVal::of(mean), JVal::of(ex_se),
                            JVal::of(totals[cRankDef]),
                            JVal::of(static_cast<double>(totals[cRankDef]) / cfg.trials),
                            JVal::of(std::pow(static_cast<double>(F.q), static_cast<double>(k) - static_cast<double>(n)))});
    }
    return rep;
}

// Quasi-abelian ensemble C_A over (F G)^{k x t}: Pr(Delta > delta) along a
// t-grid plus the empirical full-rank rate against its product lower bound.
inline ExperimentReport exp_quasi_abelian(const ExperimentConfig& cfg) {
    Fq F = parse_field(cfg.field);
    Group G = parse_group(cfg.group.empty() ? "c:1" : cfg.group);
    if (!G.is_abelian()) throw std::invalid_argument("quasi ensemble needs an abelian group");
    Decomposition dec = primitive_idempotents(F, G);
    std::uint32_t n = G.order;

    ExperimentReport rep;
    rep.experiment = "quasi";
    detail::echo_common(rep, cfg);
    rep.columns = {"t",     "k",     "length",         "delta_gt_count",       "pr_delta_gt",
                   "pr_se", "full_rank_count", "full_rank_rate", "full_rank_lower_bound"};

    std::uint64_t trial_base = 0;
    for (std::uint32_t t : cfg.t_grid) {
        std::size_t k = static_cast<std::size_t>(cfg.r * t);
        if (k < 1 || k > t) throw std::invalid_argument("degenerate point: k outside [1, t]");
        std::size_t radius = ball_radius(static_cast<std::size_t>(n) * t, cfg.delta);

        enum { cDeltaGt, cFullRank, nCnt };
        auto totals = detail::run_trials(cfg, trial_base, nCnt, [&](RngStream& rng, std::vector<std::uint64_t>& c) {
            QuasiMatrix A = sample_quasi_matrix(F, G, k, t, rng);
            std::vector<Word> rows;
            rows.reserve(k * n);
            for (std::size_t i = 0; i < k; ++i)
                for (Gel x = 0; x < n; ++x) {
                    Word row;
                    row.reserve(static_cast<std::size_t>(n) * t);
                    for (std::size_t j = 0; j < t; ++j) {
                        Word part = ga_translate(A.at(i, j), x).c;
                        row.insert(row.end(), part.begin(), part.end());
                    }
                    rows.push_back(std::move(row));
                }
            std::uint64_t X = 0;
            detail::for_each_message(F, rows, cfg.budget, [&](const Word& w) {
                int wt = weight(w);
                if (wt > 0 && static_cast<std::size_t>(wt) <= radius) ++X;
            });
            if (X == 0) ++c[cDeltaGt];
            if (full_rank(A, dec)) ++c[cFullRank];
        });
        trial_base += cfg.trials;

        double lower = 1.0;
        for (auto d : dec.dims)
            lower *= 1.0 - std::pow(static_cast<double>(F.q),
                                    static_cast<double>(d) * (static_cast<double>(k) - static_cast<double>(t)));

        rep.rows.push_back({JVal::of(static_cast<std::uint64_t>(t)), JVal::of(static_cast<std::uint64_t>(k)),
                            JVal::of(static_cast<std::uint64_t>(n) * t), JVal::of(totals[cDeltaGt]),
                            JVal::of(static_cast<double>(totals[cDeltaGt]) / cfg.trials),
                            JVal::of(detail::binom_se(totals[cDeltaGt], cfg.trials)), JVal::of(totals[cFullRank]),
                            JVal::of(static_cast<double>(totals[cFullRank]) / cfg.trials), JVal::of(lower)});
    }
    return rep;
}

// Index-2 ensemble C_{a,a'} over an n-grid of cyclic coindexes: empirical
// Pr(R = 1/2) against the two-sided bound, plus Pr(Delta > delta).
inline ExperimentReport exp_index2(const ExperimentConfig& cfg) {
    Fq F = parse_field(cfg.field);
    ExperimentReport rep;
    rep.experiment = "index2";
    detail::echo_common(rep, cfg);
    rep.columns = {"n",       "mu",      "rate_half_count",  "pr_rate_half",   "rate_se",
                   "rate_lower_bound", "rate_upper_bound", "delta_gt_count", "pr_delta_gt",
                   "delta_se", "delta_status"};

    std::uint64_t trial_base = 0;
    for (std::uint32_t n : cfg.n_grid) {
        Group G = Group::cyclic(n);
        std::uint32_t mu_n = mu(n, F.q);
        std::size_t radius = ball_radius(2ull * n, cfg.delta);
        bool delta_ok = static_cast<double>(n) * std::log2(static_cast<double>(F.q)) <=
                        std::log2(static_cast<double>(cfg.budget));

        enum { cRateHalf, cDeltaGt, nCnt };
        auto totals = detail::run_trials(cfg, trial_base, nCnt, [&](RngStream& rng, std::vector<std::uint64_t>& c) {
            GaElem a = sample_ga(F, G, rng);
            GaElem a2 = sample_ga(F, G, rng);
            LinearCode C = index2_code(a, a2);
            if (2 * C.dim() == static_cast<std::size_t>(2) * n) ++c[cRateHalf];
            if (delta_ok) {
                bool small_word = false;
                if (C.dim() > 0)
                    C.for_each_nonzero_codeword(
                        [&](const Word& w) {
                            int wt = weight(w);
                            if (wt > 0 && static_cast<std::size_t>(wt) <= radius) small_word = true;
                        },
                        cfg.budget);
                if (!small_word) ++c[cDeltaGt];
            }
        });
        trial_base += cfg.trials;

        double upper = 1.0 - std::pow(static_cast<double>(F.q), -2.0);
        double lower =
            upper * std::pow(static_cast<double>(F.q),
                             -2.0 * n / std::pow(static_cast<double>(F.q), 2.0 * mu_n));

        std::vector<JVal> row{JVal::of(static_cast<std::uint64_t>(n)),
                              JVal::of(static_cast<std::uint64_t>(mu_n)), JVal::of(totals[cRateHalf]),
                              JVal::of(static_cast<double>(totals[cRateHalf]) / cfg.trials),
                              JVal::of(detail::binom_se(totals[cRateHalf], cfg.trials)), JVal::of(lower),
                              JVal::of(upper)};
        if (delta_ok) {
            row.push_back(JVal::of(totals[cDeltaGt]));
            row.push_back(JVal::of(static_cast<double>(totals[cDeltaGt]) / cfg.trials));
            row.push_back(JVal::of(detail::binom_se(totals[cDeltaGt], cfg.trials)));
            row.push_back(JVal::of("ok"));
        } else {
            row.push_back(JVal::null());
            row.push_back(JVal::null());
            row.push_back(JVal::null());
            row.push_back(JVal::of("skipped: budget"));
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

namespace detail {

struct SelfdualPointChecks {
    bool dagger = false;
};

}  // namespace detail

// Self-dual (or, with dagger, self-orthogonal) index-2 ensembles over odd
// cyclic coindexes: every sampled code is property-checked, and Pr(Delta >
// delta) is estimated.
inline ExperimentReport exp_selfdual_like(const ExperimentConfig& cfg, bool dagger) {
    Fq F = parse_field(cfg.field);
    if (!dagger && !selfdual_exists(F.q))
        throw std::invalid_argument("hypothesis failed: q = 3 (mod 4) admits no self-dual codes");

    ExperimentReport rep;
    rep.experiment = dagger ? "selforth" : "selfdual";
    detail::echo_common(rep, cfg);
    rep.columns = {"n",        "D_size",     "dim",      "property_failures", "delta_gt_count",
                   "pr_delta_gt", "delta_se", "delta_status"};

    std::uint64_t trial_base = 0;
    for (std::uint32_t n : cfg.n_grid) {
        Group G = Group::cyclic(n);
        Decomposition dec = primitive_idempotents(F, G);
        bar_pairing(dec);
        UnitarySolutionSet sols = solve_unitary(dec);
        BigUint dsize = dagger ? count_D_dagger(dec) : count_D(dec);
        std::size_t expect_dim = dagger ? n - 1 : n;
        std::size_t radius = ball_radius(2ull * n, cfg.delta);
        bool delta_ok = static_cast<double>(expect_dim) * std::log2(static_cast<double>(F.q)) <=
                        std::log2(static_cast<double>(cfg.budget));

        enum { cFail, cDeltaGt, nCnt };
        auto totals = detail::run_trials(cfg, trial_base, nCnt, [&](RngStream& rng, std::vector<std::uint64_t>& c) {
            GaElem b = dagger ? sample_D_dagger(sols, rng) : sample_D(sols, rng);
            LinearCode C = dagger ? code_C1dag(b, dec) : code_C1b(b);
            bool good = C.dim() == expect_dim;
            if (good) good = dagger ? is_self_orthogonal(C) : is_self_dual(C);
            if (!good) ++c[cFail];
            if (delta_ok) {
                bool small_word = false;
                C.for_each_nonzero_codeword(
                    [&](const Word& w) {
                        if (static_cast<std::size_t>(weight(w)) <= radius) small_word = true;
                    },
                    cfg.budget);
                if (!small_word) ++c[cDeltaGt];
            }
        });
        trial_base += cfg.trials;

        std::vector<JVal> row{JVal::of(static_cast<std::uint64_t>(n)), JVal::of(dsize.to_string()),
                              JVal::of(static_cast<std::uint64_t>(expect_dim)), JVal::of(totals[cFail])};
        if (delta_ok) {
            row.push_back(JVal::of(totals[cDeltaGt]));
            row.push_back(JVal::of(static_cast<double>(totals[cDeltaGt]) / cfg.trials));
            row.push_back(JVal::of(detail::binom_se(totals[cDeltaGt], cfg.trials)));
            row.push_back(JVal::of("ok"));
        } else {
            row.push_back(JVal::null());
            row.push_back(JVal::null());
            row.push_back(JVal::null());
            row.push_back(JVal::of("skipped: budget"));
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

inline ExperimentReport exp_selfdual(const ExperimentConfig& cfg) { return exp_selfdual_like(cfg, false); }
inline ExperimentReport exp_selforth(const ExperimentConfig& cfg) { return exp_selfdual_like(cfg, true); }

// Random dihedral codes C_{alpha,beta} over admissible odd n: property checks
// (self-dual for even q, LCD for odd q) and Pr(Delta > delta).
inline ExperimentReport exp_dihedral(const ExperimentConfig& cfg) {
    Fq F = parse_field(cfg.field);
    ExperimentReport rep;
    rep.experiment = "dihedral";
    detail::echo_common(rep, cfg);
    rep.columns = {"n",           "r",        "dim",        "property",   "property_failures",
                   "delta_gt_count", "pr_delta_gt", "delta_se", "min_d_seen", "max_d_seen", "delta_status"};

    std::uint64_t trial_base = 0;
    for (std::uint32_t n : cfg.n_grid) {
        DihedralDecomposition dec = dihedral_decompose(F, n);
        for (std::size_t i = 1; i <= dec.r(); ++i) m2_iso(dec, i);
        DihedralCodeFamily fam = build_C(dec);
        bool even_q = F.q % 2 == 0;
        bool delta_ok =
            static_cast<double>(n) * std::log2(static_cast<double>(F.q)) <= std::log2(static_cast<double>(cfg.budget));

        // a histogram of observed minimum weights keeps the aggregation a pure
        // sum, so the worker count cannot perturb the report
        enum { cFail, cDeltaGt, cHist0 };
        std::size_t n_counters = cHist0 + 2ull * n + 1;
        auto totals = detail::run_trials(cfg, trial_base, n_counters, [&](RngStream& rng, std::vector<std::uint64_t>& c) {
            GaElem alpha = sample_Kstar(dec, rng);
            GaElem beta = sample_Kstar(dec, rng);
            LinearCode C = code_alpha_beta(dec, fam, alpha, beta);
            bool good = even_q ? is_self_dual(C) : is_lcd(C);
            if (!good) ++c[cFail];
            if (delta_ok) {
                int d = C.min_weight(cfg.budget);
                if (static_cast<double>(d) > cfg.delta * 2.0 * n) ++c[cDeltaGt];
                ++c[cHist0 + d];
            }
        });
        trial_base += cfg.trials;

        std::uint64_t min_d = 0, max_d = 0;
        for (std::size_t d = 0; d <= 2ull * n; ++d)
            if (totals[cHist0 + d]) {
                if (!min_d) min_d = d;
                max_d = d;
            }

        std::vector<JVal> row{JVal::of(static_cast<std::uint64_t>(n)),
                              JVal::of(static_cast<std::uint64_t>(dec.r())),
                              JVal::of(static_cast<std::uint64_t>(fam.C.rank())),
                              JVal::of(even_q ? "self_dual" : "lcd"), JVal::of(totals[cFail])};
        if (delta_ok) {
            row.push_back(JVal::of(totals[cDeltaGt]));
            row.push_back(JVal::of(static_cast<double>(totals[cDeltaGt]) / cfg.trials));
            row.push_back(JVal::of(detail::binom_se(totals[cDeltaGt], cfg.trials)));
            row.push_back(JVal::of(min_d));
            row.push_back(JVal::of(max_d));
            row.push_back(JVal::of("ok"));
        } else {
            for (int i = 0; i < 5; ++i) row.push_back(JVal::null());
            row.push_back(JVal::of("skipped: budget"));
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace qgc
