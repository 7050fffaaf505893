#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qgc/field.hpp"
#include "qgc/group.hpp"
#include "qgc/matrix.hpp"

namespace qgc {

// Element of the group algebra F G: dense coefficient vector indexed by the
// canonical group-element order.
struct GaElem {
    const Fq* F = nullptr;
    const Group* G = nullptr;
    Word c;

    GaElem() = default;
    GaElem(const Fq& field, const Group& group) : F(&field), G(&group), c(group.order, 0) {}
    GaElem(const Fq& field, const Group& group, Word coeffs) : F(&field), G(&group), c(std::move(coeffs)) {
        if (c.size() != group.order) throw std::invalid_argument("coefficient vector length must equal |G|");
    }

    bool is_zero() const { return weight(c) == 0; }
    bool operator==(const GaElem& o) const { return c == o.c; }
};

inline void ga_check_specs(const GaElem& a, const GaElem& b) {
    if (!a.F->same(*b.F) || !a.G->same(*b.G))
        throw std::invalid_argument("group algebra elements live over different specs");
}

inline GaElem ga_zero(const Fq& F, const Group& G) { return GaElem(F, G); }

inline GaElem ga_one(const Fq& F, const Group& G) {
    GaElem e(F, G);
    e.c[0] = 1;
    return e;
}

// the basis vector for a single group element
inline GaElem ga_basis(const Fq& F, const Group& G, Gel g) {
    GaElem e(F, G);
    e.c.at(g) = 1;
    return e;
}

inline GaElem ga_add(const GaElem& a, const GaElem& b) {
    ga_check_specs(a, b);
    GaElem r(*a.F, *a.G);
    r.c = word_add(*a.F, a.c, b.c);
    return r;
}

inline GaElem ga_sub(const GaElem& a, const GaElem& b) {
    ga_check_specs(a, b);
    GaElem r(*a.F, *a.G);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.F->sub(a.c[i], b.c[i]);
    return r;
}

inline GaElem ga_scale(const GaElem& a, Fel s) {
    GaElem r(*a.F, *a.G);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.F->mul(a.c[i], s);
    return r;
}

inline GaElem ga_neg(const GaElem& a) {
    GaElem r(*a.F, *a.G);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.F->neg(a.c[i]);
    return r;
}

// convolution over the group multiplication table
inline GaElem ga_mul(const GaElem& a, const GaElem& b) {
    ga_check_specs(a, b);
    const Fq& F = *a.F;
    const Group& G = *a.G;
    GaElem r(F, G);
    for (Gel x = 0; x < G.order; ++x) {
        if (!a.c[x]) continue;
        for (Gel y = 0; y < G.order; ++y) {
            if (!b.c[y]) continue;
            Gel z = G.mul(x, y);
            r.c[z] = F.add(r.c[z], F.mul(a.c[x], b.c[y]));
        }
    }
    return r;
}

// bar map: coefficient of x moves to x^{-1}
inline GaElem bar(const GaElem& a) {
    GaElem r(*a.F, *a.G);
    for (Gel x = 0; x < a.G->order; ++x) r.c[a.G->inv(x)] = a.c[x];
    return r;
}

// sigma: the coefficient at the group identity
inline Fel sigma(const GaElem& a) { return a.c[0]; }

inline Fel ga_inner(const GaElem& a, const GaElem& b) {
    ga_check_specs(a, b);
    return word_dot(*a.F, a.c, b.c);
}

inline int ga_weight(const GaElem& a) { return weight(a.c); }

// left-multiplication by g permutes coefficients by the Cayley permutation
inline GaElem ga_translate(const GaElem& a, Gel g) {
    GaElem r(*a.F, *a.G);
    for (Gel j = 0; j < a.G->order; ++j) r.c[a.G->mul(g, j)] = a.c[j];
    return r;
}

// rows of the left-regular representation of a: row j = vec(x_j * a)
inline std::vector<Word> ga_regular_rows(const GaElem& a) {
    std::vector<Word> rows;
    rows.reserve(a.G->order);
    for (Gel j = 0; j < a.G->order; ++j) rows.push_back(ga_translate(a, j).c);
    return rows;
}

// Invert via the regular representation: solve sum_j b_j (x_j a) = 1.
// A non-unit is a signalled outcome, not an error.
inline std::optional<GaElem> ga_invert(const GaElem& a) {
    const Group& G = *a.G;
    Word one(G.order, 0);
    one[0] = 1;
    // b * a with b = sum b_j x_j has coefficients sum_j b_j (x_j a)
    auto coeffs = solve_combination(*a.F, ga_regular_rows(a), one);
    if (!coeffs) return std::nullopt;
    GaElem b(*a.F, *a.G, std::move(*coeffs));
    return b;
}

inline std::string ga_to_string(const GaElem& a) {
    std::string s;
    for (Gel j = 0; j < a.G->order; ++j) {
        if (j && a.F->e == 1 && a.F->q > 10) s += ' ';
        s += a.F->to_string(a.c[j]);
    }
    return s;
}

}  // namespace qgc
