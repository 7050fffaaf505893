#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qgc {

struct FiniteSpace {
    std::vector<double> p;

    explicit FiniteSpace(std::vector<double> probs) : p(std::move(probs)) {
        double s = 0;
        for (double x : p) {
            if (x < 0) throw std::invalid_argument("negative sample probability");
            s += x;
        }
        if (std::fabs(s - 1.0) > 1e-12) throw std::invalid_argument("sample probabilities must sum to 1");
    }

    std::size_t size() const { return p.size(); }
};

struct RandomVar {
    const FiniteSpace* space = nullptr;
    std::vector<double> value;

    RandomVar(const FiniteSpace& s, std::vector<double> v) : space(&s), value(std::move(v)) {
        if (value.size() != s.size()) throw std::invalid_argument("value vector length must match the space");
    }
};

using Event = std::vector<bool>;

inline double probability(const FiniteSpace& s, const Event& e) {
    double r = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (e[i]) r += s.p[i];
    return r;
}

inline double expectation(const RandomVar& x) {
    double r = 0;
    for (std::size_t i = 0; i < x.space->size(); ++i) r += x.space->p[i] * x.value[i];
    return r;
}

inline double conditional_expectation(const RandomVar& x, const Event& e) {
    double pe = probability(*x.space, e);
    if (pe <= 0) throw std::domain_error("conditioning on a zero-probability event");
    double r = 0;
    for (std::size_t i = 0; i < x.space->size(); ++i)
        if (e[i]) r += x.space->p[i] * x.value[i];
    return r / pe;
}

// Pr(X >= a) <= E(X) / a for nonnegative X
inline bool markov_check(const RandomVar& x, double a) {
    if (a <= 0) throw std::invalid_argument("Markov needs a > 0");
    for (double v : x.value)
        if (v < 0) throw std::invalid_argument("Markov needs a nonnegative variable");
    double pr = 0;
    for (std::size_t i = 0; i < x.space->size(); ++i)
        if (x.value[i] >= a) pr += x.space->p[i];
    return pr <= expectation(x) / a + 1e-9;
}

struct SecondMomentResult {
    double lhs = 0;  // Pr(X >= 1)
    double rhs = 0;  // sum E(X_i) / E(X | X_i = 1)
    bool holds = false;
};

// Pr(X >= 1) >= sum_i E(X_i) / E(X | X_i = 1) for 0-1 summands X_i.
// A summand with Pr(X_i = 1) = 0 contributes 0.
inline SecondMomentResult second_moment_bound(const std::vector<RandomVar>& indicators) {
    if (indicators.empty()) throw std::invalid_argument("second moment bound needs summands");
    const FiniteSpace& S = *indicators[0].space;
    for (const auto& xi : indicators) {
        if (xi.space != &S) throw std::invalid_argument("summands live on different spaces");
        for (double v : xi.value)
            if (v != 0 && v != 1) throw std::invalid_argument("summands must be 0-1 variables");
    }
    std::vector<double> xsum(S.size(), 0);
    for (const auto& xi : indicators)
        for (std::size_t s = 0; s < S.size(); ++s) xsum[s] += xi.value[s];

    SecondMomentResult res;
    for (std::size_t s = 0; s < S.size(); ++s)
        if (xsum[s] >= 1) res.lhs += S.p[s];

    RandomVar X(S, xsum);
    for (const auto& xi : indicators) {
        double exi = expectation(xi);
        if (exi <= 0) continue;  // vacuous indicator
        Event ei(S.size());
        for (std::size_t s = 0; s < S.size(); ++s) ei[s] = xi.value[s] == 1;
        res.rhs += exi / conditional_expectation(X, ei);
    }
    res.holds = res.lhs >= res.rhs - 1e-9;
    return res;
}

// E(f(X)) >= f(E(X)) for f convex on [lo, hi]; midpoint convexity is checked
// on a grid over the domain first.
inline bool jensen_check(const std::function<double(double)>& f, const RandomVar& x, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("empty domain");
    for (double v : x.value)
        if (v < lo - 1e-12 || v > hi + 1e-12) throw std::invalid_argument("variable leaves the domain of f");
    const int grid = 64;
    for (int i = 0; i < grid; ++i)
        for (int j = i + 1; j < grid; ++j) {
            double a = lo + (hi - lo) * i / (grid - 1);
            double b = lo + (hi - lo) * j / (grid - 1);
            if ((f(a) + f(b)) / 2 < f((a + b) / 2) - 1e-9)
                throw std::invalid_argument("callable is not convex on the tested grid");
        }
    std::vector<double> fx(x.value.size());
    for (std::size_t i = 0; i < fx.size(); ++i) fx[i] = f(x.value[i]);
    RandomVar fX(*x.space, std::move(fx));
    return expectation(fX) >= f(expectation(x)) - 1e-9;
}

}  // namespace qgc
