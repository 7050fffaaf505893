#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qgc/bigint.hpp"
#include "qgc/decomposition.hpp"
#include "qgc/linear_code.hpp"
#include "qgc/quasi.hpp"
#include "qgc/rng.hpp"

namespace qgc {

// number of solutions of X^2 = -1 in F_q
inline int s0(std::uint64_t q) {
    if (q % 2 == 0) return 1;
    return q % 4 == 1 ? 2 : 0;
}

inline bool selfdual_exists(std::uint64_t q) { return s0(q) >= 1; }

// Per-component solution lists of b_e bar(b_e) = -e, indexed by hat-E.
struct UnitarySolutionSet {
    const Decomposition* dec = nullptr;
    std::vector<std::vector<GaElem>> solutions;  // aligned with dec->hatE
};

namespace detail {

// all elements of the ideal spanned by `rows`, including zero; digit bumps
// step by the canonical-index difference so extension fields enumerate fully
template <class Fn>
inline void for_each_ideal_element(const Fq& F, const GaElem& model, const Basis& basis, Fn&& fn) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.rank(); ++i) {
        total *= F.q;
        if (total > kMaxFieldOrder)
            throw BudgetExceeded("component too large to enumerate");
    }
    GaElem v = model;  // zero template with correct specs
    std::fill(v.c.begin(), v.c.end(), 0);
    std::vector<std::uint32_t> digit(basis.rank(), 0);
    fn(static_cast<const GaElem&>(v));
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t j = 0;
        while (true) {
            std::uint32_t d = digit[j];
            std::uint32_t next = d + 1 < F.q ? d + 1 : 0;
            word_add_scaled_inplace(F, v.c, basis.rows[j], F.sub(static_cast<Fel>(next), static_cast<Fel>(d)));
            digit[j] = next;
            if (next) break;
            ++j;
        }
        fn(static_cast<const GaElem&>(v));
    }
}

}  // namespace detail

// Solve b bar(b) = -1 component by component over hat-E.  The e_0 case is a
// scalar equation, fixed components are enumerated, paired components come
// from (a, -a^{-1}) through iota(u, v) = u + bar(v).
inline UnitarySolutionSet solve_unitary(const Decomposition& dec) {
    if (!dec.pairing_done) throw std::invalid_argument("solve_unitary needs bar_pairing");
    const Fq& F = *dec.F;
    const Group& G = *dec.G;
    if (G.order % 2 == 0) throw std::invalid_argument("solve_unitary needs odd group order");

    UnitarySolutionSet out;
    out.dec = &dec;
    out.solutions.resize(dec.hatE.size());

    // e_0: lambda e_0 with lambda^2 = -1 in F
    Fel minus_one = F.neg(1);
    for (std::uint64_t lam = 0; lam < F.q; ++lam) {
        if (F.mul(static_cast<Fel>(lam), static_cast<Fel>(lam)) == minus_one)
            out.solutions[0].push_back(ga_scale(dec.idem[0], static_cast<Fel>(lam)));
    }
    if (out.solutions[0].size() != static_cast<std::size_t>(s0(F.q)))
        throw std::logic_error("s0 count mismatch at the e_0 component");

    std::size_t hat_pos = 1;
    for (std::size_t fi = 0; fi < dec.bar_fixed.size(); ++fi, ++hat_pos) {
        const GaElem& e = dec.hatE[hat_pos];
        GaElem target = ga_neg(e);
        Basis basis = row_space(F, ga_regular_rows(e));
        std::vector<GaElem>& sols = out.solutions[hat_pos];
        detail::for_each_ideal_element(F, e, basis, [&](const GaElem& v) {
            if (ga_mul(v, bar(v)) == target) sols.push_back(v);
        });
        std::uint64_t expect = 1;
        for (std::uint32_t i = 0; i < dec.hat_k[hat_pos - 1]; ++i) expect *= F.q;
        if (sols.size() != expect + 1)
            throw std::logic_error("fixed-component solution count is not q^k + 1");
    }

    for (std::size_t pi = 0; pi < dec.bar_pairs.size(); ++pi, ++hat_pos) {
        auto [j, j2] = dec.bar_pairs[pi];
        const GaElem& ej = dec.idem[j];
        GaElem target = ga_neg(dec.hatE[hat_pos]);
        Basis basis = row_space(F, ga_regular_rows(ej));
        std::vector<GaElem>& sols = out.solutions[hat_pos];
        detail::for_each_ideal_element(F, ej, basis, [&](const GaElem& u) {
            if (u.is_zero()) return;
            // component inverse of u in the field F G e_j: u w = e_j
            std::vector<Word> rows;
            for (const auto& r : basis.rows) rows.push_back(ga_mul(u, GaElem(F, *dec.G, r)).c);
            auto coeffs = solve_combination(F, rows, ej.c);
            if (!coeffs) throw std::logic_error("nonzero component element has no inverse");
            GaElem w(F, *dec.G);
            for (std::size_t m = 0; m < basis.rows.size(); ++m)
                word_add_scaled_inplace(F, w.c, basis.rows[m], (*coeffs)[m]);
            GaElem b = ga_sub(u, bar(w));  // iota(u, -u^{-1})
            if (!(ga_mul(b, bar(b)) == target))
                throw std::logic_error("paired-component candidate fails b bar(b) = -e");
            sols.push_back(std::move(b));
        });
        std::uint64_t expect = 1;
        for (std::uint32_t i = 0; i < dec.hat_k[hat_pos - 1]; ++i) expect *= F.q;
        if (sols.size() != expect - 1)
            throw std::logic_error("paired-component solution count is not q^k - 1");
    }
    return out;
}

// |D| = s_0 prod (q^{k_i} + 1) prod (q^{k_{r+j}} - 1), exactly
inline BigUint count_D(const Decomposition& dec) {
    if (!dec.pairing_done) throw std::invalid_argument("count_D needs bar_pairing");
    if (dec.G->order % 2 == 0) throw std::invalid_argument("count_D needs odd group order");
    const std::uint64_t q = dec.F->q;
    BigUint total{static_cast<std::uint64_t>(s0(q))};
    std::size_t hat_pos = 1;
    for (std::size_t fi = 0; fi < dec.bar_fixed.size(); ++fi, ++hat_pos) {
        BigUint f = big_pow(q, dec.hat_k[hat_pos - 1]);
        f += BigUint{1};
        total *= f;
    }
    for (std::size_t pi = 0; pi < dec.bar_pairs.size(); ++pi, ++hat_pos) {
        BigUint f = big_pow(q, dec.hat_k[hat_pos - 1]);
        f.sub_small(1);
        total *= f;
    }

    // bounds s_0 q^{(n-1)/2 - 2} <= |D| <= q^{(n-1)/2 + 3} whenever s_0 >= 1
    if (s0(q) >= 1) {
        std::uint32_t half = (dec.G->order - 1) / 2;
        BigUint upper = big_pow(q, half + 3);
        if (!(total <= upper)) throw std::logic_error("|D| exceeds its upper bound");
        BigUint lhs = total;
        BigUint rhs{static_cast<std::uint64_t>(s0(q))};
        if (half >= 2) rhs *= big_pow(q, half - 2);
        else lhs *= big_pow(q, 2 - half);
        if (lhs < rhs) throw std::logic_error("|D| violates its lower bound");
    }
    return total;
}

// |D^dag|: same product without the s_0 factor
inline BigUint count_D_dagger(const Decomposition& dec) {
    if (!dec.pairing_done) throw std::invalid_argument("count_D_dagger needs bar_pairing");
    if (dec.G->order % 2 == 0) throw std::invalid_argument("count_D_dagger needs odd group order");
    const std::uint64_t q = dec.F->q;
    BigUint total{1};
    std::size_t hat_pos = 1;
    for (std::size_t fi = 0; fi < dec.bar_fixed.size(); ++fi, ++hat_pos) {
        BigUint f = big_pow(q, dec.hat_k[hat_pos - 1]);
        f += BigUint{1};
        total *= f;
    }
    for (std::size_t pi = 0; pi < dec.bar_pairs.size(); ++pi, ++hat_pos) {
        BigUint f = big_pow(q, dec.hat_k[hat_pos - 1]);
        f.sub_small(1);
        total *= f;
    }
    return total;
}

// uniform b with b bar(b) = -1, one independent choice per component
inline GaElem sample_D(const UnitarySolutionSet& sols, RngStream& rng) {
    const Decomposition& dec = *sols.dec;
    if (sols.solutions[0].empty())
        throw std::domain_error("D is empty: q = 3 (mod 4) has no self-dual solutions");
    GaElem b(*dec.F, *dec.G);
    for (const auto& list : sols.solutions) {
        const GaElem& pick = list[rng.below(static_cast<std::uint32_t>(list.size()))];
        b = ga_add(b, pick);
    }
    if (!(ga_mul(b, bar(b)) == ga_neg(ga_one(*dec.F, *dec.G))))
        throw std::logic_error("sampled b fails b bar(b) = -1");
    return b;
}

// dagger variant: skip the e_0 component
inline GaElem sample_D_dagger(const UnitarySolutionSet& sols, RngStream& rng) {
    const Decomposition& dec = *sols.dec;
    GaElem b(*dec.F, *dec.G);
    for (std::size_t i = 1; i < sols.solutions.size(); ++i) {
        const auto& list = sols.solutions[i];
        const GaElem& pick = list[rng.below(static_cast<std::uint32_t>(list.size()))];
        b = ga_add(b, pick);
    }
    return b;
}

// C_{1,b} = {(a, ab)}: length 2n, dimension n, self-dual for b in D
inline LinearCode code_C1b(const GaElem& b) {
    return index2_code(ga_one(*b.F, *b.G), b);
}

// C_{1-dagger, b-dagger} = {(a-dagger, a-dagger b)}: dimension n - 1, self-orthogonal
inline LinearCode code_C1dag(const GaElem& bdag, const Decomposition& dec) {
    const Fq& F = *dec.F;
    GaElem one_dag = ga_sub(ga_one(F, *dec.G), dec.idem[0]);
    Basis ideal = row_space(F, ga_regular_rows(one_dag));
    std::vector<Word> gens;
    for (const auto& r : ideal.rows) {
        GaElem v(F, *dec.G, r);
        Word row = v.c;
        Word right = ga_mul(v, bdag).c;
        row.insert(row.end(), right.begin(), right.end());
        gens.push_back(std::move(row));
    }
    return LinearCode(F, 2 * dec.G->order, std::move(gens));
}

}  // namespace qgc
