#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qgc/bigint.hpp"

namespace qgc {

// q-entropy h_q(delta) on [0, 1 - 1/q], with the 0 log 0 = 0 convention
inline double h_q(std::uint64_t q, double delta) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    double top = 1.0 - 1.0 / static_cast<double>(q);
    if (delta < 0 || delta > top + 1e-15) throw std::invalid_argument("delta outside [0, 1 - 1/q]");
    double lq = std::log(static_cast<double>(q));
    double h = delta * std::log(static_cast<double>(q - 1)) / lq;
    if (delta > 0) h -= delta * std::log(delta) / lq;
    if (delta < 1) h -= (1 - delta) * std::log(1 - delta) / lq;
    return h;
}

inline double g_q(std::uint64_t q, double delta) { return 1.0 - h_q(q, delta); }

// inverse of the decreasing g_q on [0, 1 - 1/q], by bisection to 1e-12
inline double g_q_inverse(std::uint64_t q, double r) {
    if (r < 0 || r > 1) throw std::invalid_argument("rate outside [0, 1]");
    double lo = 0.0, hi = 1.0 - 1.0 / static_cast<double>(q);
    if (std::fabs(r - 1.0) <= 1e-12) return lo;
    if (std::fabs(r) <= 1e-12) return hi;
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        double g = g_q(q, mid);
        if (std::fabs(g - r) <= 1e-12) return mid;
        if (g > r) lo = mid;
        else hi = mid;
    }
    return mid;
}

inline std::size_t ball_radius(std::size_t n, double delta) {
    double t = std::floor(delta * static_cast<double>(n) + 1e-12);
    if (t < 0) return 0;
    if (t > static_cast<double>(n)) return n;
    return static_cast<std::size_t>(t);
}

// |(F^n)^{<= delta}| = sum_{i=0}^{floor(delta n)} C(n,i) (q-1)^i, exactly
inline BigUint ball_size(std::uint64_t q, std::size_t n, double delta) {
    if (n == 0) throw std::invalid_argument("ball_size needs n >= 1");
    std::size_t t = ball_radius(n, delta);
    BigUint total{1};
    BigUint term{1};  // C(n,i) (q-1)^i
    for (std::size_t i = 0; i < t; ++i) {
        term.mul_small(n - i);
        term.mul_small(q - 1);
        term.div_small(i + 1);
        total += term;
    }
    return total;
}

// Two-sided entropy bounds on the exact ball size, compared in log domain.
// The lower bound is the one the max-term argument proves: it reads the
// entropy at the integer radius fraction t/n, t = floor(delta n).
inline bool ball_bounds_check(std::uint64_t q, std::size_t n, double delta) {
    double top = 1.0 - 1.0 / static_cast<double>(q);
    if (!(delta > 0 && delta < top)) throw std::invalid_argument("ball bounds need 0 < delta < 1 - 1/q");
    long double lnq = std::log(static_cast<long double>(q));
    long double ln_ball = ball_size(q, n, delta).log();
    long double upper = static_cast<long double>(n) * h_q(q, delta) * lnq;
    std::size_t t = ball_radius(n, delta);
    long double lower = static_cast<long double>(n) * h_q(q, static_cast<double>(t) / n) * lnq -
                        std::log(static_cast<long double>(n + 1));
    const long double eps = 1e-9;
    return ln_ball <= upper + eps && ln_ball >= lower - eps;
}

// Plotkin predicate 1/M >= (Delta - (1 - 1/q)) / Delta for Delta > 1 - 1/q
inline bool plotkin_check(std::uint64_t q, std::size_t n, std::uint64_t M, std::size_t d) {
    if (M == 0 || n == 0) throw std::invalid_argument("plotkin_check needs a nonempty code");
    double Delta = static_cast<double>(d) / static_cast<double>(n);
    double top = 1.0 - 1.0 / static_cast<double>(q);
    if (!(Delta > top)) throw std::invalid_argument("Plotkin bound needs Delta > 1 - 1/q");
    return 1.0 / static_cast<double>(M) >= (Delta - top) / Delta - 1e-12;
}

// ---------------------------------------------------------------------------
// information entropy

struct Distribution {
    std::vector<double> p;

    explicit Distribution(std::vector<double> probs) : p(std::move(probs)) {
        double s = 0;
        for (double x : p) {
            if (x < 0) throw std::invalid_argument("negative probability");
            s += x;
        }
        if (std::fabs(s - 1.0) > 1e-12) throw std::invalid_argument("probabilities must sum to 1");
    }
};

inline double info_entropy(const Distribution& d, double gamma) {
    if (gamma <= 1) throw std::invalid_argument("entropy base must exceed 1");
    double lg = std::log(gamma), h = 0;
    for (double x : d.p)
        if (x > 0) h -= x * std::log(x) / lg;
    return h;
}

struct JointDistribution {
    std::vector<std::vector<double>> p;  // p[i][j]

    explicit JointDistribution(std::vector<std::vector<double>> probs) : p(std::move(probs)) {
        double s = 0;
        for (const auto& row : p)
            for (double x : row) {
                if (x < 0) throw std::invalid_argument("negative probability");
                s += x;
            }
        if (std::fabs(s - 1.0) > 1e-12) throw std::invalid_argument("probabilities must sum to 1");
    }

    Distribution marginal_x() const {
        std::vector<double> m(p.size(), 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (double x : p[i]) m[i] += x;
        return Distribution(std::move(m));
    }
    Distribution marginal_y() const {
        std::vector<double> m(p.empty() ? 0 : p[0].size(), 0);
        for (const auto& row : p)
            for (std::size_t j = 0; j < row.size(); ++j) m[j] += row[j];
        return Distribution(std::move(m));
    }
};

inline double joint_entropy(const JointDistribution& d, double gamma) {
    double lg = std::log(gamma), h = 0;
    for (const auto& row : d.p)
        for (double x : row)
            if (x > 0) h -= x * std::log(x) / lg;
    return h;
}

// H(Y|X) = sum -p_ij log(p_ij / p_i)
inline double conditional_entropy(const JointDistribution& d, double gamma) {
    double lg = std::log(gamma), h = 0;
    Distribution px = d.marginal_x();
    for (std::size_t i = 0; i < d.p.size(); ++i)
        for (double x : d.p[i])
            if (x > 0) h -= x * std::log(x / px.p[i]) / lg;
    return h;
}

// I(X;Y) = sum p_ij log(p_ij / (p_i p'_j))
inline double mutual_information(const JointDistribution& d, double gamma) {
    double lg = std::log(gamma), s = 0;
    Distribution px = d.marginal_x(), py = d.marginal_y();
    for (std::size_t i = 0; i < d.p.size(); ++i)
        for (std::size_t j = 0; j < d.p[i].size(); ++j) {
            double x = d.p[i][j];
            if (x > 0) s += x * std::log(x / (px.p[i] * py.p[j])) / lg;
        }
    return s;
}

}  // namespace qgc
