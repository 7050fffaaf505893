#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qgc/decomposition.hpp"
#include "qgc/group_algebra.hpp"
#include "qgc/linear_code.hpp"
#include "qgc/rng.hpp"

namespace qgc {

// Uniform algebra element; coefficients drawn in canonical group order.
inline GaElem sample_ga(const Fq& F, const Group& G, RngStream& rng) {
    GaElem a(F, G);
    for (Gel x = 0; x < G.order; ++x) a.c[x] = rng.below(static_cast<std::uint32_t>(F.q));
    return a;
}

struct QuasiMatrix {
    const Fq* F = nullptr;
    const Group* G = nullptr;
    std::size_t k = 0, t = 0;
    std::vector<GaElem> entries;  // row-major

    QuasiMatrix(const Fq& field, const Group& group, std::size_t k_, std::size_t t_)
        : F(&field), G(&group), k(k_), t(t_), entries(k_ * t_, GaElem(field, group)) {}

    GaElem& at(std::size_t i, std::size_t j) { return entries[i * t + j]; }
    const GaElem& at(std::size_t i, std::size_t j) const { return entries[i * t + j]; }
};

// entries sampled row-major, coefficients in canonical order within an entry
inline QuasiMatrix sample_quasi_matrix(const Fq& F, const Group& G, std::size_t k, std::size_t t,
                                       RngStream& rng) {
    QuasiMatrix A(F, G, k, t);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < t; ++j) A.at(i, j) = sample_ga(F, G, rng);
    return A;
}

// C_A = { bA : b in (F G)^k } as an F-linear code of length n t: each algebra
// row expands into |G| field rows under the basis action.
inline LinearCode quasi_code(const QuasiMatrix& A) {
    const Fq& F = *A.F;
    const Group& G = *A.G;
    std::size_t n = G.order;
    std::vector<Word> gens;
    gens.reserve(A.k * n);
    for (std::size_t i = 0; i < A.k; ++i) {
        for (Gel x = 0; x < n; ++x) {
            Word row;
            row.reserve(n * A.t);
            for (std::size_t j = 0; j < A.t; ++j) {
                Word part = ga_translate(A.at(i, j), x).c;
                row.insert(row.end(), part.begin(), part.end());
            }
            gens.push_back(std::move(row));
        }
    }
    return LinearCode(F, n * A.t, std::move(gens));
}

// Random linear code ensemble: row space of a uniform k x n matrix.  Shares
// the sampling path with the quasi ensemble over the trivial group so the two
// coincide stream-for-stream.
inline LinearCode random_linear_code(const Fq& F, std::size_t n, std::size_t k, RngStream& rng) {
    if (k < 1 || k > n) throw std::invalid_argument("random_linear_code needs 1 <= k <= n");
    Group trivial = Group::abelian({});
    QuasiMatrix A = sample_quasi_matrix(F, trivial, k, n, rng);
    std::vector<Word> rows(k, Word(n, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = A.at(i, j).c[0];
    return LinearCode(F, n, std::move(rows));
}

// A has full rank iff every component matrix over F G e has full rank k;
// per component that is rank_F {x a_{ij} e} = dim(F G e) * k.
inline bool full_rank(const QuasiMatrix& A, const Decomposition& dec) {
    if (A.k > A.t) throw std::invalid_argument("full_rank needs k <= t");
    const Fq& F = *A.F;
    const Group& G = *A.G;
    std::size_t n = G.order;
    for (std::size_t ei = 0; ei < dec.idem.size(); ++ei) {
        std::vector<Word> rows;
        for (std::size_t i = 0; i < A.k; ++i) {
            std::vector<GaElem> comp(A.t, GaElem(F, G));
            for (std::size_t j = 0; j < A.t; ++j) comp[j] = ga_mul(A.at(i, j), dec.idem[ei]);
            for (Gel x = 0; x < n; ++x) {
                Word row;
                row.reserve(n * A.t);
                for (std::size_t j = 0; j < A.t; ++j) {
                    Word part = ga_translate(comp[j], x).c;
                    row.insert(row.end(), part.begin(), part.end());
                }
                rows.push_back(std::move(row));
            }
        }
        std::size_t rank = row_space(F, std::move(rows)).rank();
        if (rank != static_cast<std::size_t>(dec.dims[ei]) * A.k) return false;
    }
    return true;
}

// C_{a,a'} = { (ba, ba') : b in F G }
inline LinearCode index2_code(const GaElem& a, const GaElem& a2) {
    ga_check_specs(a, a2);
    QuasiMatrix A(*a.F, *a.G, 1, 2);
    A.at(0, 0) = a;
    A.at(0, 1) = a2;
    return quasi_code(A);
}

// Ann_{F G}(a, b) = { d : da = db = 0 }, as a basis of coefficient vectors
inline std::pair<Basis, std::size_t> annihilator(const GaElem& a, const GaElem& b) {
    ga_check_specs(a, b);
    const Fq& F = *a.F;
    std::size_t n = a.G->order;
    auto ra = ga_regular_rows(a), rb = ga_regular_rows(b);
    // d = sum d_x x kills (a, b) iff sum_x d_x (x a | x b) = 0
    std::vector<Word> cols(2 * n, Word(n, 0));  // transpose of [ra | rb]
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t j = 0; j < n; ++j) {
            cols[j][x] = ra[x][j];
            cols[n + j][x] = rb[x][j];
        }
    }
    std::vector<Word> kernel = null_space(F, std::move(cols), n);
    if (kernel.empty()) kernel.push_back(Word(n, 0));
    Basis bs = row_space(F, std::move(kernel));
    std::size_t d = bs.rank();
    return {std::move(bs), d};
}

// phi-tilde: a(x) -> a(x~) (1 + x~^n + ... + x~^{n(alpha-1)}), the alpha-fold
// block repetition; target group must be cyclic of order alpha * n.
inline GaElem fractional_phi(const GaElem& a, unsigned alpha, const Group& Gbig) {
    if (alpha < 1) throw std::invalid_argument("fractional index needs alpha >= 1");
    const Group& G = *a.G;
    if (!G.is_abelian() || G.factors.size() > 1)
        throw std::invalid_argument("fractional_phi needs a cyclic source group");
    if (std::gcd<std::uint64_t>(G.order, a.F->q) != 1)
        throw std::invalid_argument("fractional_phi needs gcd(n, q) = 1");
    if (!Gbig.is_abelian() || Gbig.factors.size() != 1 || Gbig.order != alpha * G.order)
        throw std::invalid_argument("target group must be cyclic of order alpha * n");
    GaElem out(*a.F, Gbig);
    std::size_t n = G.order;
    for (unsigned j = 0; j < alpha; ++j)
        for (std::size_t i = 0; i < n; ++i) out.c[j * n + i] = a.c[i];
    return out;
}

// C~ = Phi(C_{a,a'}) inside F C_{alpha n} x F C_n, of length (alpha + 1) n
inline LinearCode fractional_code(const GaElem& a, const GaElem& a2, unsigned alpha, const Group& Gbig) {
    ga_check_specs(a, a2);
    const Fq& F = *a.F;
    const Group& G = *a.G;
    std::size_t n = G.order;
    std::vector<Word> gens;
    gens.reserve(n);
    for (Gel x = 0; x < n; ++x) {
        GaElem left = fractional_phi(ga_translate(a, x), alpha, Gbig);
        Word row = left.c;
        Word right = ga_translate(a2, x).c;
        row.insert(row.end(), right.begin(), right.end());
        gens.push_back(std::move(row));
    }
    return LinearCode(F, (alpha + 1) * n, std::move(gens));
}

}  // namespace qgc
