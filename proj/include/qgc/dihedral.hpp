#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qgc/bigint.hpp"
#include "qgc/decomposition.hpp"
#include "qgc/group_algebra.hpp"
#include "qgc/linear_code.hpp"
#include "qgc/rng.hpp"

namespace qgc {

inline bool minus_one_in_qgroup(std::uint32_t n, std::uint64_t q) {
    if (n < 2) throw std::invalid_argument("membership test needs n > 1");
    if (std::gcd(static_cast<std::uint64_t>(n), q) != 1)
        throw std::invalid_argument("membership test needs gcd(n, q) = 1");
    std::uint64_t x = q % n;
    std::uint64_t start = x;
    do {
        if (x == n - 1) return true;
        x = x * (q % n) % n;
    } while (x != start);
    return false;
}

struct Mat2 {
    GaElem a, b, c, d;  // [[a, b], [c, d]]
};

inline Mat2 mat_mul(const Mat2& m, const Mat2& n) {
    return {ga_add(ga_mul(m.a, n.a), ga_mul(m.b, n.c)), ga_add(ga_mul(m.a, n.b), ga_mul(m.b, n.d)),
            ga_add(ga_mul(m.c, n.a), ga_mul(m.d, n.c)), ga_add(ga_mul(m.c, n.b), ga_mul(m.d, n.d))};
}

inline Mat2 mat_add(const Mat2& m, const Mat2& n) {
    return {ga_add(m.a, n.a), ga_add(m.b, n.b), ga_add(m.c, n.c), ga_add(m.d, n.d)};
}

inline Mat2 mat_scale(const Mat2& m, const GaElem& z) {
    return {ga_mul(z, m.a), ga_mul(z, m.b), ga_mul(z, m.c), ga_mul(z, m.d)};
}

inline bool mat_eq(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}

// The explicit A_i ~ M_2(F_i-flat) isomorphism data for one component.
struct M2Iso {
    std::size_t comp = 0;
    GaElem g;                        // minimal polynomial X^2 + g X + 1 of x e_i over Z_i
    std::vector<GaElem> z_basis;     // basis of Z_i = F_i-flat
    std::array<GaElem, 4> u_basis;   // e_i, x e_i, y e_i, x y e_i
    Mat2 eps, eta, nu, etanu;
    std::vector<Word> coord_rows;    // z_m u_s rows, s-major, for coordinates
    bool verified = false;
};

struct A0Structure {
    GaElem e00;
    std::optional<GaElem> e01;  // odd q only
    Basis C0;
};

struct DihedralDecomposition {
    const Fq* F = nullptr;
    std::shared_ptr<const Group> dih;  // order 2n
    std::shared_ptr<const Group> cyc;  // order n
    Decomposition cyc_dec;             // bar pairing done; s = 0
    std::vector<GaElem> idem;          // central idempotents lifted into F G~
    std::vector<std::uint32_t> k;      // k_i for i >= 1
    std::vector<Basis> A;              // component bases A_i inside F^{2n}
    std::vector<Basis> Fi;             // bases of the fields F_i = F G e_i, i >= 1 (lifted)
    GaElem e00;

    std::size_t r() const { return idem.size() - 1; }
    std::uint32_t n() const { return cyc ? cyc->order : 0; }
};

namespace detail {

inline GaElem lift_to_dihedral(const Fq& F, const Group& dih, const GaElem& a) {
    GaElem out(F, dih);
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
    return out;
}

}  // namespace detail

// Decomposition of F G~ for the dihedral group of order 2n under the
// hypothesis -1 in <q>_n (so every cyclic idempotent is bar-fixed and lifts
// to a central idempotent of F G~).
inline DihedralDecomposition dihedral_decompose(const Fq& F, std::uint32_t n) {
    if (n < 2 || n % 2 == 0) throw std::invalid_argument("dihedral construction needs odd n > 1");
    if (std::gcd(static_cast<std::uint64_t>(n), F.q) != 1)
        throw std::invalid_argument("dihedral construction needs gcd(n, q) = 1");
    if (!minus_one_in_qgroup(n, F.q))
        throw std::invalid_argument("hypothesis failed: -1 not in <q>_n (s > 0 unsupported)");

    DihedralDecomposition dec;
    dec.F = &F;
    dec.cyc = std::make_shared<const Group>(Group::cyclic(n));
    dec.dih = std::make_shared<const Group>(Group::dihedral(n));

    dec.cyc_dec = primitive_idempotents(F, *dec.cyc);
    bar_pairing(dec.cyc_dec);
    if (!dec.cyc_dec.bar_pairs.empty())
        throw std::logic_error("swapped idempotent pair found although -1 lies in <q>_n");
    dec.k = dec.cyc_dec.hat_k;

    const Group& Gd = *dec.dih;
    GaElem ylift = ga_basis(F, Gd, n);  // x^0 y
    for (const auto& e : dec.cyc_dec.idem) {
        GaElem lifted = detail::lift_to_dihedral(F, Gd, e);
        if (!(ga_mul(ylift, lifted) == ga_mul(lifted, ylift)))
            throw std::logic_error("lifted idempotent is not central in F G~");
        dec.idem.push_back(std::move(lifted));
    }

    for (std::size_t i = 0; i < dec.idem.size(); ++i) {
        Basis b = row_space(F, ga_regular_rows(dec.idem[i]));
        std::size_t expect = i == 0 ? 2 : 4ull * dec.k[i - 1];
        if (b.rank() != expect) throw std::logic_error("dihedral component dimension mismatch");
        dec.A.push_back(std::move(b));
    }

    // orthogonal direct sum
    for (std::size_t i = 0; i < dec.A.size(); ++i)
        for (std::size_t j = i + 1; j < dec.A.size(); ++j)
            for (const auto& u : dec.A[i].rows)
                for (const auto& v : dec.A[j].rows)
                    if (word_dot(F, u, v) != 0)
                        throw std::logic_error("component sum is not orthogonal");

    for (std::size_t i = 1; i < dec.idem.size(); ++i) {
        std::vector<Word> rows;
        for (Gel x = 0; x < n; ++x) rows.push_back(ga_translate(dec.idem[i], x).c);
        Basis b = row_space(F, std::move(rows));
        if (b.rank() != 2ull * dec.k[i - 1]) throw std::logic_error("field component dimension mismatch");
        dec.Fi.push_back(std::move(b));
    }

    dec.e00 = ga_add(dec.idem[0], ga_mul(ylift, dec.idem[0]));
    return dec;
}

// e_00 = e_0 + e_0 y and its span C_0; behaviour splits on the parity of q.
inline A0Structure a0_structure(const DihedralDecomposition& dec) {
    const Fq& F = *dec.F;
    const Group& Gd = *dec.dih;
    A0Structure out{dec.e00, std::nullopt, row_space(F, {dec.e00.c})};
    if (out.C0.rank() != 1) throw std::logic_error("C_0 is not one-dimensional");

    GaElem ylift = ga_basis(F, Gd, dec.n());
    if (F.p == 2) {
        if (!ga_mul(dec.e00, dec.e00).is_zero()) throw std::logic_error("e_00^2 != 0 in characteristic 2");
        if (ga_inner(dec.e00, dec.e00) != 0) throw std::logic_error("<C_0, C_0> != 0 in characteristic 2");
        return out;
    }
    Fel half = F.inv(F.add(1, 1));
    GaElem h00 = ga_scale(dec.e00, half);
    if (!(ga_mul(h00, h00) == h00)) throw std::logic_error("(1/2) e_00 is not idempotent");
    Fel two_over_n = F.mul(F.add(1, 1), F.inv(static_cast<Fel>(dec.n() % F.p)));
    if (ga_inner(dec.e00, dec.e00) != two_over_n || two_over_n == 0)
        throw std::logic_error("<e_00, e_00> != 2/n");
    GaElem e01 = ga_sub(dec.idem[0], ga_mul(ylift, dec.idem[0]));
    if (!(ga_mul(ylift, e01) == ga_neg(e01))) throw std::logic_error("y e_01 != -e_01");
    std::vector<Word> both{dec.e00.c, e01.c};
    if (row_space(F, both).rank() != 2) throw std::logic_error("F e_00 + F e_01 does not fill A_0");
    out.e01 = std::move(e01);
    return out;
}

// A_i ~ M_2(Z_i): fixed field, minimal polynomial, and the basis map, all
// verified multiplicatively.
inline M2Iso m2_iso(const DihedralDecomposition& dec, std::size_t i) {
    if (i < 1 || i >= dec.idem.size()) throw std::invalid_argument("component index out of range");
    const Fq& F = *dec.F;
    const Group& Gd = *dec.dih;
    std::uint32_t n = dec.n();
    const GaElem& e = dec.idem[i];
    GaElem xe = ga_translate(e, 1);
    GaElem ye = ga_mul(ga_basis(F, Gd, n), e);
    GaElem xye = ga_translate(ye, 1);

    M2Iso iso;
    iso.comp = i;
    iso.u_basis = {e, xe, ye, xye};

    // Z_i: fixed points of bar on the field component F_i
    const Basis& fib = dec.Fi[i - 1];
    std::vector<Word> diff_rows;
    for (const auto& r : fib.rows) {
        GaElem v(F, Gd, r);
        diff_rows.push_back(ga_sub(bar(v), v).c);
    }
    // coefficient vectors c with sum c_m (bar(B_m) - B_m) = 0
    std::size_t m = fib.rows.size();
    std::vector<Word> cols(2 * n, Word(m, 0));
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t col = 0; col < 2 * n; ++col) cols[col][row] = diff_rows[row][col];
    for (const auto& cvec : null_space(F, std::move(cols), m)) {
        GaElem z(F, Gd);
        for (std::size_t j = 0; j < m; ++j) word_add_scaled_inplace(F, z.c, fib.rows[j], cvec[j]);
        iso.z_basis.push_back(std::move(z));
    }
    if (iso.z_basis.size() != dec.k[i - 1]) throw std::logic_error("fixed subfield has wrong dimension");

    // g from (x e)^2 + g (x e) + e = 0 with g in Z_i
    std::vector<Word> g_rows;
    for (const auto& z : iso.z_basis) g_rows.push_back(ga_mul(z, xe).c);
    GaElem rhs = ga_neg(ga_add(ga_mul(xe, xe), e));
    auto gamma = solve_combination(F, g_rows, rhs.c);
    if (!gamma) throw std::logic_error("minimal polynomial of x e_i is not quadratic over Z_i");
    iso.g = GaElem(F, Gd);
    for (std::size_t j = 0; j < iso.z_basis.size(); ++j)
        iso.g = ga_add(iso.g, ga_scale(iso.z_basis[j], (*gamma)[j]));
    if (!ga_add(ga_add(ga_mul(xe, xe), ga_mul(iso.g, xe)), e).is_zero())
        throw std::logic_error("x e_i does not satisfy X^2 + g X + 1");
    if (iso.g.is_zero() && F.p == 2) throw std::logic_error("g and 2 are both zero");

    // coordinates: the 4 k_i products z_m u_s must be independent
    for (const auto& u : iso.u_basis)
        for (const auto& z : iso.z_basis) iso.coord_rows.push_back(ga_mul(z, u).c);
    if (row_space(F, iso.coord_rows).rank() != 4ull * dec.k[i - 1])
        throw std::logic_error("Z_i-basis of A_i is not independent");

    GaElem zero(F, Gd);
    GaElem ng = ga_neg(iso.g), ne = ga_neg(e);
    iso.eps = {e, zero, zero, e};
    iso.eta = {zero, ne, e, ng};
    iso.nu = {ne, zero, ng, e};
    iso.etanu = mat_mul(iso.eta, iso.nu);

    auto phi = [&](const GaElem& w) {
        auto coeff = solve_combination(F, iso.coord_rows, w.c);
        if (!coeff) throw std::logic_error("element outside A_i handed to the basis map");
        std::size_t kk = iso.z_basis.size();
        std::array<GaElem, 4> zc{zero, zero, zero, zero};
        for (std::size_t s = 0; s < 4; ++s)
            for (std::size_t j = 0; j < kk; ++j)
                zc[s] = ga_add(zc[s], ga_scale(iso.z_basis[j], (*coeff)[s * kk + j]));
        Mat2 out = mat_scale(iso.eps, zc[0]);
        out = mat_add(out, mat_scale(iso.eta, zc[1]));
        out = mat_add(out, mat_scale(iso.nu, zc[2]));
        out = mat_add(out, mat_scale(iso.etanu, zc[3]));
        return out;
    };

    // eta's characteristic polynomial, nu^2 = eps, nu eta = eta^{-1} nu
    Mat2 char_poly = mat_add(mat_add(mat_mul(iso.eta, iso.eta), mat_scale(iso.eta, iso.g)), iso.eps);
    if (!(char_poly.a.is_zero() && char_poly.b.is_zero() && char_poly.c.is_zero() && char_poly.d.is_zero()))
        throw std::logic_error("eta does not satisfy X^2 + g X + 1");
    if (!mat_eq(mat_mul(iso.nu, iso.nu), iso.eps)) throw std::logic_error("nu^2 != eps");
    // eta^{-1} = -(eta + g eps), from the characteristic polynomial
    Mat2 eta_inv = mat_add(iso.eta, mat_scale(iso.eps, iso.g));
    eta_inv = {ga_neg(eta_inv.a), ga_neg(eta_inv.b), ga_neg(eta_inv.c), ga_neg(eta_inv.d)};
    if (!mat_eq(mat_mul(iso.nu, iso.eta), mat_mul(eta_inv, iso.nu)))
        throw std::logic_error("nu eta nu^{-1} != eta^{-1}");

    // multiplicative on all 16 basis products
    for (const auto& u : iso.u_basis)
        for (const auto& v : iso.u_basis) {
            if (!mat_eq(phi(ga_mul(u, v)), mat_mul(phi(u), phi(v))))
                throw std::logic_error("basis map is not multiplicative");
        }

    // image spans M_2(Z_i): z_m * {eps, eta, nu, eta nu} flattens to rank 4 k_i
    std::vector<Word> flat;
    for (const Mat2& B : {iso.eps, iso.eta, iso.nu, iso.etanu})
        for (const auto& z : iso.z_basis) {
            Mat2 zB = mat_scale(B, z);
            Word w = zB.a.c;
            w.insert(w.end(), zB.b.c.begin(), zB.b.c.end());
            w.insert(w.end(), zB.c.c.begin(), zB.c.c.end());
            w.insert(w.end(), zB.d.c.begin(), zB.d.c.end());
            flat.push_back(std::move(w));
        }
    if (row_space(F, std::move(flat)).rank() != 4ull * dec.k[i - 1])
        throw std::logic_error("image does not span M_2(Z_i)");

    iso.verified = true;
    return iso;
}

struct DihedralCodeFamily {
    std::vector<Basis> Ci;  // C_0 = span e_00, C_i = A_i (e_i - y e_i)
    Basis C;                // direct sum, dim n
    BigUint kstar_size;
};

inline DihedralCodeFamily build_C(const DihedralDecomposition& dec) {
    const Fq& F = *dec.F;
    const Group& Gd = *dec.dih;
    GaElem ylift = ga_basis(F, Gd, dec.n());

    DihedralCodeFamily fam;
    fam.Ci.push_back(row_space(F, {dec.e00.c}));
    if (fam.Ci[0].rank() != 1) throw std::logic_error("dim C_0 != 1");

    for (std::size_t i = 1; i < dec.idem.size(); ++i) {
        GaElem gen = ga_sub(dec.idem[i], ga_mul(ylift, dec.idem[i]));
        std::vector<Word> rows;
        for (const auto& r : dec.A[i].rows) rows.push_back(ga_mul(GaElem(F, Gd, r), gen).c);
        Basis b = row_space(F, std::move(rows));
        if (b.rank() != 2ull * dec.k[i - 1]) throw std::logic_error("dim C_i != 2 k_i");
        fam.Ci.push_back(std::move(b));
    }

    std::vector<Word> all;
    for (const auto& b : fam.Ci) all.insert(all.end(), b.rows.begin(), b.rows.end());
    fam.C = row_space(F, std::move(all));
    if (fam.C.rank() != dec.n()) throw std::logic_error("dim C != n");

    fam.kstar_size = BigUint{1};
    for (std::size_t i = 1; i < dec.idem.size(); ++i) {
        BigUint f = big_pow(F.q, 2 * dec.k[i - 1]);
        f.sub_small(1);
        fam.kstar_size *= f;
    }
    return fam;
}

// K^* = {e_0} x F_1^x x ... x F_r^x, sampled componentwise
inline GaElem sample_Kstar(const DihedralDecomposition& dec, RngStream& rng) {
    const Fq& F = *dec.F;
    GaElem alpha = dec.idem[0];
    for (std::size_t i = 1; i < dec.idem.size(); ++i) {
        const Basis& fib = dec.Fi[i - 1];
        GaElem u(F, *dec.dih);
        do {
            std::fill(u.c.begin(), u.c.end(), 0);
            for (const auto& row : fib.rows)
                word_add_scaled_inplace(F, u.c, row, rng.below(static_cast<std::uint32_t>(F.q)));
        } while (u.is_zero());
        alpha = ga_add(alpha, u);
    }
    return alpha;
}

inline bool in_Kstar(const DihedralDecomposition& dec, const GaElem& a) {
    if (!(ga_mul(a, dec.idem[0]) == dec.idem[0])) return false;
    for (std::size_t i = 1; i < dec.idem.size(); ++i) {
        GaElem comp = ga_mul(a, dec.idem[i]);
        if (comp.is_zero()) return false;
        if (!basis_contains(*dec.F, dec.Fi[i - 1], comp.c)) return false;
    }
    return true;
}

// C_{alpha,beta} = alpha C beta; equals C beta as a subspace, rate exactly 1/2
inline LinearCode code_alpha_beta(const DihedralDecomposition& dec, const DihedralCodeFamily& fam,
                                  const GaElem& alpha, const GaElem& beta) {
    const Fq& F = *dec.F;
    const Group& Gd = *dec.dih;
    if (!in_Kstar(dec, alpha) || !in_Kstar(dec, beta))
        throw std::invalid_argument("alpha and beta must be componentwise units in K^*");
    std::vector<Word> rows, rows_right;
    for (const auto& r : fam.C.rows) {
        GaElem c(F, Gd, r);
        rows.push_back(ga_mul(ga_mul(alpha, c), beta).c);
        rows_right.push_back(ga_mul(c, beta).c);
    }
    LinearCode code(F, 2 * dec.n(), std::move(rows));
    if (code.dim() != dec.n()) throw std::logic_error("alpha C beta does not have rate 1/2");
    if (!same_row_space(code.basis(), row_space(F, std::move(rows_right))))
        throw std::logic_error("alpha C beta differs from C beta as a subspace");
    return code;
}

}  // namespace qgc
