#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qgc/bigint.hpp"
#include "qgc/field.hpp"

namespace qgc {

constexpr unsigned kMaxSplittingDegree = 32;

inline std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d) continue;
        ps.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// multiplicative order of a modulo n (gcd(a, n) = 1)
inline std::uint32_t mul_order_mod(std::uint64_t a, std::uint32_t n) {
    a %= n;
    if (n == 1) return 1;
    if (std::gcd(a, static_cast<std::uint64_t>(n)) != 1)
        throw std::invalid_argument("order undefined: arguments not coprime");
    std::uint64_t x = a % n;
    std::uint32_t ord = 1;
    while (x != 1) {
        x = x * a % n;
        ++ord;
    }
    return ord;
}

// K = F[Y]/(modulus), the splitting-field level above an Fq.  Elements are
// reduced polynomials over the base; base-field scalars are the constants.
struct ExtField {
    const Fq* base;
    Poly modulus;
    unsigned deg;
    BigUint units;  // q^deg - 1

    ExtField(const Fq& F, Poly mod) : base(&F), modulus(std::move(mod)) {
        deg = static_cast<unsigned>(poly_deg(modulus));
        units = big_pow(F.q, deg);
        units.sub_small(1);
    }

    Poly zero() const { return {}; }
    Poly one() const { return {1}; }
    Poly from_scalar(Fel a) const { return a ? Poly{a} : Poly{}; }

    Poly from_u64(std::uint64_t v) const {
        Poly e;
        while (v) {
            e.push_back(static_cast<Fel>(v % base->q));
            v /= base->q;
        }
        return poly_mod(*base, std::move(e), modulus);
    }

    Poly add(const Poly& a, const Poly& b) const { return poly_add(*base, a, b); }
    Poly sub(const Poly& a, const Poly& b) const { return poly_sub(*base, a, b); }
    Poly mul(const Poly& a, const Poly& b) const { return poly_mul_mod(*base, a, b, modulus); }
    Poly pow(const Poly& a, const BigUint& k) const { return poly_pow_mod(*base, a, k, modulus); }
    Poly pow(const Poly& a, std::uint64_t k) const { return poly_pow_mod(*base, a, k, modulus); }

    Poly inv(const Poly& a) const {
        auto [g, u] = poly_half_ext_gcd(*base, a, modulus);
        if (poly_deg(g) != 0) throw std::domain_error("extension-field inversion of zero");
        return poly_mod(*base, poly_scale(*base, u, base->inv(g[0])), modulus);
    }

    std::optional<Fel> as_scalar(const Poly& a) const {
        if (a.empty()) return Fel{0};
        if (poly_deg(a) == 0) return a[0];
        return std::nullopt;
    }
};

inline ExtField make_splitting_field(const Fq& F, unsigned m) {
    if (m > kMaxSplittingDegree) throw std::invalid_argument("splitting-field degree exceeds cap");
    return ExtField(F, find_irreducible(F, m));
}

// deterministic element of multiplicative order exactly n in K
inline Poly find_root_of_unity(const ExtField& K, std::uint32_t n) {
    BigUint exp = K.units;
    if (exp.div_small(n) != 0) throw std::logic_error("root-of-unity order does not divide |K^x|");
    auto primes = distinct_prime_factors(n);
    for (std::uint64_t cand = 1;; ++cand) {
        Poly u = K.from_u64(cand);
        if (u.empty()) continue;
        Poly z = K.pow(u, exp);
        if (poly_deg(z) == 0 && z[0] == 1 && n > 1) continue;
        bool primitive = true;
        for (auto l : primes) {
            Poly t = K.pow(z, static_cast<std::uint64_t>(n / l));
            if (poly_deg(t) == 0 && t[0] == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return z;
    }
}

// Monic irreducible factors of X^n - 1 over F, one per q-coset of Z_n,
// sorted by (degree, coefficient value).  Requires gcd(n, char F) = 1.
inline std::vector<Poly> factor_xn_minus_1(const Fq& F, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (std::gcd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(F.p)) != 1)
        throw std::invalid_argument("n must be coprime to the characteristic");
    unsigned m = mul_order_mod(F.q, n);
    ExtField K = make_splitting_field(F, m);
    Poly zeta = find_root_of_unity(K, n);

    // zeta^k table
    std::vector<Poly> zp(n);
    zp[0] = K.one();
    for (std::uint32_t k = 1; k < n; ++k) zp[k] = K.mul(zp[k - 1], zeta);

    // q-orbits of Z_n, by minimal representative
    std::vector<bool> seen(n, false);
    std::uint64_t qmod = F.q % n;
    std::vector<Poly> factors;
    for (std::uint32_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::vector<std::uint32_t> orbit;
        std::uint64_t c = a;
        do {
            seen[c] = true;
            orbit.push_back(static_cast<std::uint32_t>(c));
            c = c * qmod % n;
        } while (c != a);
        // f = prod_{k in orbit} (X - zeta^k), computed in K[X]
        std::vector<Poly> f{K.one()};
        for (auto k : orbit) {
            std::vector<Poly> g(f.size() + 1, K.zero());
            for (std::size_t i = 0; i < f.size(); ++i) {
                g[i + 1] = K.add(g[i + 1], f[i]);
                g[i] = K.sub(g[i], K.mul(f[i], zp[k]));
            }
            f = std::move(g);
        }
        Poly out(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto s = K.as_scalar(f[i]);
            if (!s) throw std::logic_error("cyclotomic factor coefficient escaped the base field");
            out[i] = *s;
        }
        poly_trim(out);
        factors.push_back(std::move(out));
    }

    auto value_less = [&](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    std::sort(factors.begin(), factors.end(), value_less);
    return factors;
}

}  // namespace qgc
