#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qgc/group_algebra.hpp"
#include "qgc/splitting.hpp"

namespace qgc {

struct QCosetPartition {
    std::uint32_t n;
    std::uint64_t q;
    std::vector<std::vector<std::uint32_t>> orbits;  // sorted members, ordered by min representative
};

inline QCosetPartition q_cosets(std::uint32_t n, std::uint64_t q) {
    if (n < 2) throw std::invalid_argument("q-cosets need n > 1");
    if (std::gcd(static_cast<std::uint64_t>(n), q) != 1)
        throw std::invalid_argument("q-cosets need gcd(n, q) = 1");
    std::uint64_t qm = q % n;
    std::vector<bool> seen(n, false);
    QCosetPartition part{n, q, {}};
    for (std::uint32_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::vector<std::uint32_t> orbit;
        std::uint64_t c = a;
        do {
            seen[c] = true;
            orbit.push_back(static_cast<std::uint32_t>(c));
            c = c * qm % n;
        } while (c != a);
        std::sort(orbit.begin(), orbit.end());
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

// minimal size of a nontrivial q-coset, cross-validated against
// min over prime divisors p | n of ord_p(q)
inline std::uint32_t mu(std::uint32_t n, std::uint64_t q) {
    auto part = q_cosets(n, q);
    std::uint32_t m = n;
    for (const auto& orbit : part.orbits) {
        if (orbit.size() == 1 && orbit[0] == 0) continue;
        m = std::min<std::uint32_t>(m, static_cast<std::uint32_t>(orbit.size()));
    }
    std::uint32_t check = n;
    for (auto p : distinct_prime_factors(n)) check = std::min(check, mul_order_mod(q % p, p));
    if (m != check) throw std::logic_error("mu mismatch between orbit scan and prime-divisor formula");
    return m;
}

struct Decomposition {
    const Fq* F = nullptr;
    const Group* G = nullptr;
    std::vector<GaElem> idem;        // e_0 first, then by (dim, coefficient vector)
    std::vector<std::uint32_t> dims; // dim F G e_i
    std::uint32_t mu_value = 0;      // mu_q(|G|); 0 for the trivial group

    bool pairing_done = false;
    std::vector<std::size_t> bar_fixed;                      // indices i >= 1 with bar(e_i) = e_i
    std::vector<std::pair<std::size_t, std::size_t>> bar_pairs;  // (j, j') swapped pairs, j < j'
    std::vector<GaElem> hatE;        // e_0, fixed e_i, then e_j + bar(e_j)
    std::vector<std::uint32_t> hat_k;  // k_e for hatE[i+1]

    std::size_t m_plus_1() const { return idem.size(); }
};

namespace detail {

inline void verify_idempotent_system(const Decomposition& dec) {
    const Fq& F = *dec.F;
    const Group& G = *dec.G;
    GaElem sum(F, G);
    for (const auto& e : dec.idem) sum = ga_add(sum, e);
    if (!(sum == ga_one(F, G))) throw std::logic_error("idempotents do not sum to 1");
    for (std::size_t i = 0; i < dec.idem.size(); ++i)
        for (std::size_t j = i; j < dec.idem.size(); ++j) {
            GaElem p = ga_mul(dec.idem[i], dec.idem[j]);
            if (i == j ? !(p == dec.idem[i]) : !p.is_zero())
                throw std::logic_error("idempotent orthogonality failed");
        }
    std::uint64_t total = 0;
    for (auto d : dec.dims) total += d;
    if (total != G.order) throw std::logic_error("component dimensions do not sum to |G|");
}

}  // namespace detail

// Primitive idempotents of F G for abelian G with gcd(|G|, q) = 1, by
// character-orbit sums in the splitting field.  The decomposition keeps
// pointers into both arguments; temporaries are rejected.
Decomposition primitive_idempotents(const Fq& F, Group&& G) = delete;
Decomposition primitive_idempotents(Fq&& F, const Group& G) = delete;
inline Decomposition primitive_idempotents(const Fq& F, const Group& G) {
    if (!G.is_abelian()) throw std::invalid_argument("primitive_idempotents needs an abelian group");
    std::uint32_t n = G.order;
    if (std::gcd(static_cast<std::uint64_t>(n), F.q) != 1)
        throw std::invalid_argument("group order must be coprime to q (semisimple case only)");

    Decomposition dec;
    dec.F = &F;
    dec.G = &G;

    if (n == 1) {
        dec.idem.push_back(ga_one(F, G));
        dec.dims.push_back(1);
        dec.mu_value = 0;
        return dec;
    }

    std::uint32_t lambda = G.exponent();
    unsigned m = mul_order_mod(F.q % lambda, lambda);
    ExtField K = make_splitting_field(F, m);
    Poly zeta = find_root_of_unity(K, lambda);
    std::vector<Poly> zp(lambda);
    zp[0] = K.one();
    for (std::uint32_t k = 1; k < lambda; ++k) zp[k] = K.mul(zp[k - 1], zeta);

    // <u, x> = sum_j (lambda / n_j) u_j x_j  (mod lambda)
    const auto& fs = G.factors;
    auto pairing = [&](Gel u, Gel x) {
        std::uint64_t s = 0;
        std::uint64_t uu = u, xx = x;
        for (auto f : fs) {
            std::uint64_t uj = uu % f, xj = xx % f;
            uu /= f;
            xx /= f;
            s = (s + (lambda / f) * uj % lambda * xj) % lambda;
        }
        return static_cast<std::uint32_t>(s);
    };

    // orbits of the character index u under u -> q u (componentwise)
    std::uint64_t qmod = F.q;
    auto step = [&](Gel u) {
        std::vector<std::uint32_t> d = G.decode(u);
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = static_cast<std::uint32_t>(qmod % fs[j] * d[j] % fs[j]);
        return G.encode(d);
    };

    Fel inv_n = F.inv(static_cast<Fel>(n % F.p));
    std::vector<bool> seen(n, false);
    for (Gel u0 = 0; u0 < n; ++u0) {
        if (seen[u0]) continue;
        std::vector<Gel> orbit;
        Gel u = u0;
        do {
            seen[u] = true;
            orbit.push_back(u);
            u = step(u);
        } while (u != u0);

        GaElem e(F, G);
        for (Gel x = 0; x < n; ++x) {
            Poly s = K.zero();
            for (Gel v : orbit) s = K.add(s, zp[(lambda - pairing(v, x)) % lambda]);
            auto scalar = K.as_scalar(s);
            if (!scalar) throw std::logic_error("idempotent coefficient escaped the base field");
            e.c[x] = F.mul(inv_n, *scalar);
        }
        dec.idem.push_back(std::move(e));
        dec.dims.push_back(static_cast<std::uint32_t>(orbit.size()));
    }

    // move e_0 (the orbit of u = 0) first, sort the rest by (dim, coefficients)
    std::vector<std::size_t> order(dec.idem.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        bool a0 = dec.dims[a] == 1 && dec.idem[a].c == Word(n, dec.idem[a].c[0]) && dec.idem[a].c[0] == inv_n;
        bool b0 = dec.dims[b] == 1 && dec.idem[b].c == Word(n, dec.idem[b].c[0]) && dec.idem[b].c[0] == inv_n;
        if (a0 != b0) return a0;
        if (dec.dims[a] != dec.dims[b]) return dec.dims[a] < dec.dims[b];
        return dec.idem[a].c < dec.idem[b].c;
    });
    std::vector<GaElem> idem;
    std::vector<std::uint32_t> dims;
    for (auto i : order) {
        idem.push_back(std::move(dec.idem[i]));
        dims.push_back(dec.dims[i]);
    }
    dec.idem = std::move(idem);
    dec.dims = std::move(dims);

    // each dim must equal the rank of the ideal F G e_i
    for (std::size_t i = 0; i < dec.idem.size(); ++i) {
        Basis b = row_space(F, ga_regular_rows(dec.idem[i]));
        if (b.rank() != dec.dims[i]) throw std::logic_error("character-orbit size disagrees with ideal rank");
    }

    dec.mu_value = mu(n, F.q);
    std::uint32_t min_nontrivial = n;
    for (std::size_t i = 1; i < dec.dims.size(); ++i) min_nontrivial = std::min(min_nontrivial, dec.dims[i]);
    if (dec.dims.size() > 1 && min_nontrivial != dec.mu_value)
        throw std::logic_error("minimal nontrivial component dimension is not mu_q(n)");

    detail::verify_idempotent_system(dec);
    return dec;
}

// Classify the idempotents under the bar map; requires odd |G|.
inline Decomposition& bar_pairing(Decomposition& dec) {
    const Fq& F = *dec.F;
    const Group& G = *dec.G;
    if (G.order % 2 == 0) throw std::invalid_argument("bar pairing needs odd group order");
    dec.bar_fixed.clear();
    dec.bar_pairs.clear();
    dec.hatE.clear();
    dec.hat_k.clear();

    std::vector<bool> used(dec.idem.size(), false);
    std::vector<std::size_t> fixed;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i < dec.idem.size(); ++i) {
        if (used[i]) continue;
        GaElem bi = bar(dec.idem[i]);
        std::size_t j = 0;
        for (; j < dec.idem.size(); ++j)
            if (bi == dec.idem[j]) break;
        if (j == dec.idem.size()) throw std::logic_error("bar image is not a primitive idempotent");
        if (j == i) {
            if (dec.dims[i] % 2) throw std::logic_error("bar-fixed nontrivial component has odd dimension");
            fixed.push_back(i);
            used[i] = true;
        } else {
            if (dec.dims[i] != dec.dims[j]) throw std::logic_error("swapped components differ in dimension");
            used[i] = used[j] = true;
            pairs.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::sort(pairs.begin(), pairs.end());

    dec.hatE.push_back(dec.idem[0]);
    for (auto i : fixed) {
        dec.hatE.push_back(dec.idem[i]);
        dec.hat_k.push_back(dec.dims[i] / 2);
    }
    for (auto [j, j2] : pairs) {
        dec.hatE.push_back(ga_add(dec.idem[j], dec.idem[j2]));
        dec.hat_k.push_back(dec.dims[j]);
    }
    dec.bar_fixed = std::move(fixed);
    dec.bar_pairs = std::move(pairs);

    if (1 + dec.bar_fixed.size() + 2 * dec.bar_pairs.size() != dec.idem.size())
        throw std::logic_error("bar pairing does not partition the idempotents");
    std::uint64_t ksum = 0;
    for (auto k : dec.hat_k) ksum += k;
    if (ksum != (G.order - 1) / 2) throw std::logic_error("sum of k_e is not (n-1)/2");

    // hat-E system: sums to 1, bar-stable, orthogonal idempotents
    GaElem sum(F, G);
    for (const auto& e : dec.hatE) {
        sum = ga_add(sum, e);
        if (!(bar(e) == e)) throw std::logic_error("hat-E element not bar-fixed");
        if (!(ga_mul(e, e) == e)) throw std::logic_error("hat-E element not idempotent");
    }
    if (!(sum == ga_one(F, G))) throw std::logic_error("hat-E does not sum to 1");

    dec.pairing_done = true;
    return dec;
}

inline GaElem component(const GaElem& a, const GaElem& e) { return ga_mul(a, e); }

struct SupportEll {
    std::vector<std::size_t> hat_indices;  // indices into hatE (>= 1)
    std::uint32_t ell = 0;
};

inline SupportEll support_ell(const GaElem& a, const Decomposition& dec) {
    if (!dec.pairing_done) throw std::logic_error("support_ell needs bar_pairing");
    SupportEll s;
    for (std::size_t i = 1; i < dec.hatE.size(); ++i) {
        if (!ga_mul(a, dec.hatE[i]).is_zero()) {
            s.hat_indices.push_back(i);
            s.ell += dec.hat_k[i - 1];
        }
    }
    return s;
}

// ideal generated by a tuple, with its dimension
inline std::pair<Basis, std::size_t> ideal_of(const std::vector<GaElem>& gens) {
    if (gens.empty()) throw std::invalid_argument("ideal_of needs at least one generator");
    std::vector<Word> rows;
    for (const auto& g : gens) {
        auto r = ga_regular_rows(g);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    Basis b = row_space(*gens[0].F, std::move(rows));
    std::size_t d = b.rank();
    return {std::move(b), d};
}

// I_b = F G iff every primitive idempotent survives on some generator
inline bool ideal_is_full(const std::vector<GaElem>& gens, const Decomposition& dec) {
    for (const auto& e : dec.idem) {
        bool hit = false;
        for (const auto& g : gens)
            if (!ga_mul(g, e).is_zero()) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

}  // namespace qgc
