#include <doctest.h>

#include <json.hpp>

#include "qgc/experiments.hpp"
#include "qgc/search_n.hpp"

using namespace qgc;

namespace {

ExperimentConfig small_linear_cfg() {
    ExperimentConfig cfg;
    cfg.field = "2^1";
    cfg.n_grid = {10};
    cfg.r = 0.3;
    cfg.delta = 0.3;
    cfg.trials = 500;
    cfg.seed = 7;
    return cfg;
}

// independent orbit-size oracle for mu at primes
std::uint32_t orbit_size_of_one(std::uint32_t p, std::uint64_t q) {
    std::uint64_t x = q % p;
    std::uint32_t len = 1;
    while (x != 1) {
        x = x * (q % p) % p;
        ++len;
    }
    return len;
}

}  // namespace

TEST_CASE("identical config and seed reproduce identical bytes") {
    ExperimentConfig cfg = small_linear_cfg();
    std::string a = emit_report(exp_random_linear(cfg), "json");
    std::string b = emit_report(exp_random_linear(cfg), "json");
    CHECK(a == b);

    cfg.workers = 3;
    std::string c = emit_report(exp_random_linear(cfg), "json");
    CHECK(a == c);  // worker count cannot leak into the report

    cfg.workers = 1;
    cfg.seed = 8;
    CHECK(emit_report(exp_random_linear(cfg), "json") != a);
}

TEST_CASE("trivial coindex quasi ensemble reproduces the linear ensemble") {
    ExperimentConfig lin = small_linear_cfg();
    ExperimentConfig qua = lin;
    qua.group = "c:1";
    qua.t_grid = lin.n_grid;
    ExperimentReport rl = exp_random_linear(lin);
    ExperimentReport rq = exp_quasi_abelian(qua);
    // same sampled matrices stream-for-stream, so identical estimates
    auto col = [](const ExperimentReport& r, const char* name) {
        for (std::size_t c = 0; c < r.columns.size(); ++c)
            if (r.columns[c] == name) return r.rows[0][c].text;
        return std::string{};
    };
    CHECK(col(rl, "pr_delta_gt") == col(rq, "pr_delta_gt"));
    // rank deficiency and full rank are complementary counts
    double def = std::stod(col(rl, "rank_def_rate"));
    double full = std::stod(col(rq, "full_rank_rate"));
    CHECK(def + full == doctest::Approx(1.0));
}

TEST_CASE("exact first moment at (2,10,3,0.3)") {
    ExperimentConfig cfg = small_linear_cfg();
    ExperimentReport rep = exp_random_linear(cfg);
    REQUIRE(rep.rows.size() == 1);
    std::size_t frac_col = 0, exact_col = 0;
    for (std::size_t c = 0; c < rep.columns.size(); ++c) {
        if (rep.columns[c] == "ex_exact_frac") frac_col = c;
        if (rep.columns[c] == "ex_exact") exact_col = c;
    }
    CHECK(rep.rows[0][frac_col].text == "1225/1024");
    CHECK(std::stod(rep.rows[0][exact_col].text) == doctest::Approx(1225.0 / 1024.0));
}

TEST_CASE("degenerate grid points are rejected") {
    ExperimentConfig cfg = small_linear_cfg();
    cfg.r = 0.05;  // floor(0.05 * 10) = 0
    CHECK_THROWS_AS(exp_random_linear(cfg), std::invalid_argument);
}

TEST_CASE("report emission") {
    ExperimentReport rep;
    rep.experiment = "demo";
    rep.config.emplace_back("seed", JVal::of(std::uint64_t{5}));
    rep.columns = {"a", "b"};

    // empty grid: header-only CSV
    CHECK(emit_report(rep, "csv") == "a,b\n");

    rep.rows.push_back({JVal::of(1.5), JVal::of("x y")});
    rep.rows.push_back({JVal::of(std::uint64_t{7}), JVal::null()});
    std::string csv = emit_report(rep, "csv");
    CHECK(csv == "a,b\n1.5,x y\n7,\n");

    std::string js = emit_report(rep, "json");
    auto parsed = nlohmann::json::parse(js);
    CHECK(parsed["experiment"] == "demo");
    CHECK(parsed["config"]["seed"] == 5);
    REQUIRE(parsed["points"].size() == 2);
    CHECK(parsed["points"][0]["a"] == 1.5);
    CHECK(parsed["points"][0]["b"] == "x y");
    CHECK(parsed["points"][1]["b"].is_null());

    CHECK_THROWS_AS(emit_report(rep, "xml"), std::invalid_argument);

    // doubles carry 17 significant digits
    ExperimentReport prec;
    prec.experiment = "p";
    prec.columns = {"v"};
    prec.rows.push_back({JVal::of(1.0 / 3.0)});
    CHECK(emit_report(prec, "csv") == "v\n0.33333333333333331\n");
}

TEST_CASE("index-2 experiment respects the rate-probability bounds") {
    ExperimentConfig cfg;
    cfg.field = "2^1";
    cfg.n_grid = {5, 9};
    cfg.delta = 0.05;
    cfg.trials = 800;
    cfg.seed = 3;
    ExperimentReport rep = exp_index2(cfg);
    auto col = [&](std::size_t row, const char* name) {
        for (std::size_t c = 0; c < rep.columns.size(); ++c)
            if (rep.columns[c] == name) return std::stod(rep.rows[row][c].text);
        throw std::logic_error("missing column");
    };
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        double pr = col(i, "pr_rate_half");
        double lo = col(i, "rate_lower_bound"), hi = col(i, "rate_upper_bound");
        double se = col(i, "rate_se");
        CHECK(pr >= lo - 3 * se);
        CHECK(pr <= hi + 3 * se);
    }
}

TEST_CASE("search for good n") {
    SearchOpts none;
    auto rows = search_good_n(2, 100, none);
    // ascending, coprime to q, mu matches the direct orbit computation at primes
    std::uint32_t prev = 0;
    for (const auto& g : rows) {
        CHECK(g.n > prev);
        prev = g.n;
        CHECK(g.n % 2 == 1);  // q = 2: coprime means odd
        if (g.is_prime) CHECK(g.mu == orbit_size_of_one(g.n, 2));
    }

    // first primes with mu_2(p) >= (log_2 p)^2
    SearchOpts primes;
    primes.prime_only = true;
    std::vector<std::uint32_t> winners;
    for (const auto& g : search_good_n(2, 200, primes))
        if (static_cast<double>(g.mu) >= g.logq_n * g.logq_n) winners.push_back(g.n);
    REQUIRE(winners.size() >= 3);
    CHECK(winners[0] == 29);  // ord_29(2) = 28 >= (log_2 29)^2 ~ 23.6
    for (auto p : winners) {
        double l = std::log2(static_cast<double>(p));
        CHECK(static_cast<double>(orbit_size_of_one(p, 2)) >= l * l);
    }

    // require_minus_one keeps 5 and 9 but drops 7
    SearchOpts m1;
    m1.require_minus_one = true;
    auto sel = search_good_n(2, 10, m1);
    bool has5 = false, has7 = false, has9 = false;
    for (const auto& g : sel) {
        has5 |= g.n == 5;
        has7 |= g.n == 7;
        has9 |= g.n == 9;
    }
    CHECK(has5);
    CHECK(has9);
    CHECK_FALSE(has7);

    // even n have mu = 1 and never pass a threshold above 1
    SearchOpts thr;
    thr.min_mu = 1.5;
    for (const auto& g : search_good_n(3, 60, thr)) CHECK(g.n % 2 == 1);

    // n = 2: -1 coincides with 1, so membership holds trivially
    SearchOpts m2;
    m2.require_minus_one = true;
    auto q3 = search_good_n(3, 10, m2);
    CHECK(q3.front().n == 2);
    CHECK(q3.front().minus_one);

    CHECK_THROWS_AS(search_good_n(2, 2000000, none), std::invalid_argument);
}

TEST_CASE("budget override through the environment") {
    CHECK(default_enumeration_budget() == (1ull << 24));
    setenv("QGC_BUDGET", "4096", 1);
    CHECK(default_enumeration_budget() == 4096);
    unsetenv("QGC_BUDGET");
    CHECK(default_enumeration_budget() == (1ull << 24));
}

TEST_CASE("selfdual experiment hypothesis check") {
    ExperimentConfig cfg;
    cfg.field = "3";
    cfg.n_grid = {5};
    cfg.trials = 10;
    CHECK_THROWS_AS(exp_selfdual(cfg), std::invalid_argument);
    // the dagger family exists for every q
    ExperimentReport rep = exp_selforth(cfg);
    std::size_t fail_col = 0;
    for (std::size_t c = 0; c < rep.columns.size(); ++c)
        if (rep.columns[c] == "property_failures") fail_col = c;
    CHECK(rep.rows[0][fail_col].text == "0");
}
