#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qgc/field.hpp"

namespace qgc {

using Word = std::vector<Fel>;

inline int weight(const Word& w) {
    int c = 0;
    for (Fel x : w)
        if (x) ++c;
    return c;
}

inline Word word_add(const Fq& F, const Word& a, const Word& b) {
    Word r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

inline void word_add_scaled_inplace(const Fq& F, Word& a, const Word& b, Fel s) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = F.add(a[i], F.mul(b[i], s));
}

inline Fel word_dot(const Fq& F, const Word& a, const Word& b) {
    Fel r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r = F.add(r, F.mul(a[i], b[i]));
    return r;
}

// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(const Fq& F, std::vector<Word>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    std::size_t ncols = rows[0].size(), r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Fel inv = F.inv(rows[r][c]);
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] = F.mul(rows[r][j], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Fel f = F.neg(rows[i][c]);
            word_add_scaled_inplace(F, rows[i], rows[r], f);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r, Word(ncols, 0));
    return pivots;
}

struct Basis {
    std::vector<Word> rows;            // reduced echelon basis
    std::vector<std::size_t> pivots;   // pivot columns, one per row
    std::size_t rank() const { return rows.size(); }
};

inline Basis row_space(const Fq& F, std::vector<Word> rows) {
    Basis b;
    b.pivots = rref(F, rows);
    b.rows = std::move(rows);
    return b;
}

inline bool basis_contains(const Fq& F, const Basis& b, Word w) {
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
        Fel c = w[b.pivots[i]];
        if (c) word_add_scaled_inplace(F, w, b.rows[i], F.neg(c));
    }
    return weight(w) == 0;
}

// Null space of the row set (right kernel): all v with rows * v^T = 0.
inline std::vector<Word> null_space(const Fq& F, std::vector<Word> rows, std::size_t ncols) {
    std::vector<std::size_t> pivots = rref(F, rows);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Word> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Word v(ncols, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = F.neg(rows[i][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A^T ... : find coefficient vector c with sum_i c_i rows[i] = target.
inline std::optional<Word> solve_combination(const Fq& F, const std::vector<Word>& rows, const Word& target) {
    if (rows.empty()) return weight(target) == 0 ? std::optional<Word>(Word{}) : std::nullopt;
    std::size_t n = rows[0].size(), m = rows.size();
    // augmented system over columns: unknowns c_0..c_{m-1}
    std::vector<Word> aug(n, Word(m + 1, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) aug[j][i] = rows[i][j];
        aug[j][m] = target[j];
    }
    std::vector<std::size_t> pivots = rref(F, aug);
    Word c(m, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m) return std::nullopt;  // inconsistent
        c[pivots[i]] = aug[i][m];
    }
    return c;
}

inline bool same_row_space(const Basis& a, const Basis& b) {
    return a.rows == b.rows;  // rref is canonical
}

}  // namespace qgc
