#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qgc/report.hpp"

namespace qgc {

struct SearchOpts {
    bool require_minus_one = false;
    bool prime_only = false;
    bool odd_only = false;
    bool gv_filter = false;  // keep only mu_q(n) > 2 log_q n
    double min_mu = 0;       // keep only mu_q(n) >= min_mu
};

struct GoodN {
    std::uint32_t n = 0;
    std::uint32_t mu = 0;
    double logq_n = 0;
    double ratio = 0;  // log_q n / mu_q(n)
    bool minus_one = false;
    bool is_prime = false;
    bool gv_ok = false;  // mu_q(n) > 2 log_q n
};

namespace detail {

inline std::uint64_t modpow_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// Scan n = 2..limit, computing mu_q(n) from prime-divisor orders and the
// -1 in <q>_n membership from ord_n(q); deterministic ascending output.
inline std::vector<GoodN> search_good_n(std::uint64_t q, std::uint32_t limit, const SearchOpts& opts) {
    if (limit > 1000000u) throw std::invalid_argument("search limit exceeds 10^6");
    if (q < 2) throw std::invalid_argument("q must be at least 2");

    // smallest-prime-factor sieve
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf[i]) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (!spf[j]) spf[j] = i;
    }

    std::vector<std::uint32_t> ord_prime(limit + 1, 0);  // ord_p(q) for primes p
    auto prime_order = [&](std::uint32_t p) -> std::uint32_t {
        if (ord_prime[p]) return ord_prime[p];
        std::uint64_t t = p - 1;
        std::uint32_t rest = p - 1;
        while (rest > 1) {
            std::uint32_t f = spf[rest];
            while (t % f == 0 && detail::modpow_u64(q, t / f, p) == 1) t /= f;
            while (rest % f == 0) rest /= f;
        }
        return ord_prime[p] = static_cast<std::uint32_t>(t);
    };

    double lq = std::log(static_cast<double>(q));
    std::vector<GoodN> out;
    for (std::uint32_t n = 2; n <= limit; ++n) {
        if (std::gcd<std::uint64_t>(n, q) != 1) continue;
        if (opts.odd_only && n % 2 == 0) continue;
        bool prime = spf[n] == n;
        if (opts.prime_only && !prime) continue;

        // mu and ord_n(q) from the prime-power factorisation
        std::uint32_t mu_n = n;
        std::uint64_t ord_n = 1;
        std::uint32_t rest = n;
        while (rest > 1) {
            std::uint32_t p = spf[rest];
            std::uint32_t pe = 1;
            while (rest % p == 0) {
                rest /= p;
                pe *= p;
            }
            std::uint32_t op = prime_order(p);
            mu_n = std::min(mu_n, op);
            std::uint64_t ope = op, cur = p;
            while (cur < pe) {
                cur *= p;
                if (detail::modpow_u64(q, ope, cur) != 1) ope *= p;
            }
            ord_n = std::lcm(ord_n, ope);
        }
        if (static_cast<double>(mu_n) < opts.min_mu) continue;

        // -1 is the unique involution of the cyclic group <q>_n; for n <= 2 it
        // coincides with the identity
        bool minus_one =
            n <= 2 || (ord_n % 2 == 0 && detail::modpow_u64(q, ord_n / 2, n) == n - 1);
        if (opts.require_minus_one && !minus_one) continue;

        double logq_n = std::log(static_cast<double>(n)) / lq;
        bool gv_ok = static_cast<double>(mu_n) > 2.0 * logq_n;
        if (opts.gv_filter && !gv_ok) continue;

        out.push_back({n, mu_n, logq_n, logq_n / mu_n, minus_one, prime, gv_ok});
    }
    return out;
}

inline ExperimentReport search_report(std::uint64_t q, std::uint32_t limit, const SearchOpts& opts) {
    ExperimentReport rep;
    rep.experiment = "search-n";
    rep.config.emplace_back("q", JVal::of(q));
    rep.config.emplace_back("limit", JVal::of(static_cast<std::uint64_t>(limit)));
    rep.config.emplace_back("require_minus_one", JVal::of(opts.require_minus_one));
    rep.config.emplace_back("prime_only", JVal::of(opts.prime_only));
    rep.config.emplace_back("odd_only", JVal::of(opts.odd_only));
    rep.config.emplace_back("gv_filter", JVal::of(opts.gv_filter));
    rep.config.emplace_back("min_mu", JVal::of(opts.min_mu));
    rep.columns = {"n", "mu", "logq_n", "ratio", "minus_one", "prime", "gv_ok"};
    for (const auto& g : search_good_n(q, limit, opts))
        rep.rows.push_back({JVal::of(static_cast<std::uint64_t>(g.n)), JVal::of(static_cast<std::uint64_t>(g.mu)),
                            JVal::of(g.logq_n), JVal::of(g.ratio), JVal::of(g.minus_one), JVal::of(g.is_prime),
                            JVal::of(g.gv_ok)});
    return rep;
}

}  // namespace qgc
